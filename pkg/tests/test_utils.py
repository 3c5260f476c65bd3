import numpy as np
import pytest

import latticeqm as lqm


def test_phase_fix_makes_pivot_real():
    vectors = np.array([[1j, 0.6], [0.0, -0.8j]])
    fixed = lqm.phase_fix(vectors)
    np.testing.assert_allclose(fixed[:, 0], [1, 0])
    np.testing.assert_allclose(fixed[:, 1], [0.6j, 0.8])


def test_phase_fix_tie_takes_first():
    vectors = np.array([[-1j], [1.0]]) / np.sqrt(2)
    fixed = lqm.phase_fix(vectors)
    np.testing.assert_allclose(fixed[:, 0], np.array([1, 1j]) / np.sqrt(2))


def test_match_labels():
    dim = lqm.Dim(3)
    values = np.exp(2j * np.pi * np.array([1, -1, 0]) / 3)
    np.testing.assert_allclose(lqm.match_labels(values, dim), [1, -1, 0])
    np.testing.assert_allclose(lqm.match_labels(values, dim, sign=-1), [-1, 1, 0])
    with pytest.raises(lqm.DomainError):
        lqm.match_labels(values * np.exp(0.1j), dim)
    with pytest.raises(lqm.DomainError):
        lqm.match_labels(np.ones(3), dim)


def test_spectrum_deviation_ignores_order():
    a = np.array([1, 1j, -1])
    assert lqm.spectrum_deviation(a, a[::-1]) == 0
    assert abs(lqm.spectrum_deviation(a, a + 1e-3) - 1e-3) < 1e-12
