"""
Test the eta basis of TB, the unbiasedness reports and the quadratic-phase DFT identities
"""
import cmath
import math
import numpy as np
import pytest

import latticeqm as lqm
from . import TOL


def test_TB_examples():
    tb = lqm.build_TB(lqm.Dim(2))
    np.testing.assert_allclose(tb.entries, [[0, -1j], [-1j, 0]], atol=1e-15)
    wrapped = tb.apply(lqm.State.basis_vector(lqm.Dim(2), 0.5))
    np.testing.assert_allclose(wrapped.amp, [-1j, 0], atol=1e-15)


@pytest.mark.parametrize("n", [2, 3, 4, 7, 10])
def test_TB_shift(n):
    dim = lqm.Dim(n)
    tb = lqm.build_TB(dim)
    labels = dim.labels
    for x in labels[:-1]:
        moved = tb.apply(lqm.State.basis_vector(dim, x))
        expected = lqm.omega_pow(dim, x) * lqm.State.basis_vector(dim, x + 1).amp
        np.testing.assert_allclose(moved.amp, expected, atol=1e-12)
    j = labels[-1]
    wrapped = tb.apply(lqm.State.basis_vector(dim, j))
    expected = lqm.omega_pow(dim, -2 * j ** 2) * lqm.State.basis_vector(dim, -j).amp
    np.testing.assert_allclose(wrapped.amp, expected, atol=1e-12)


def test_eta_example():
    eta = lqm.eta_basis_position(lqm.Dim(2))
    np.testing.assert_allclose(eta[-0.5].amp, cmath.exp(1j * math.pi / 8) * np.ones(2) / math.sqrt(2), atol=1e-14)


@pytest.mark.parametrize("n", range(2, 17))
def test_eta_eigenvectors(n):
    dim = lqm.Dim(n)
    tb = lqm.build_TB(dim)
    for basis in (lqm.eta_basis_position(dim), lqm.eta_basis_momentum(dim)):
        assert basis.orthonormality_error() <= TOL
        np.testing.assert_allclose(np.abs(basis.matrix), 1 / math.sqrt(n), atol=1e-12)
        for s in dim.labels:
            eta_s = basis[s]
            residual = np.linalg.norm(tb.apply(eta_s).amp - lqm.omega_pow(dim, s) * eta_s.amp)
            assert residual <= 1e-12


def test_eta_phase_ratios_two_sites():
    ratios = lqm.eta_phase_ratios(lqm.Dim(2))
    np.testing.assert_allclose(ratios, [cmath.exp(1j * math.pi / 4), cmath.exp(-1j * math.pi / 4)], atol=1e-12)


@pytest.mark.parametrize("n", [3, 6, 11])
def test_eta_phase_ratios_are_phases(n):
    np.testing.assert_allclose(np.abs(lqm.eta_phase_ratios(lqm.Dim(n))), 1, atol=1e-12)


@pytest.mark.parametrize("n", range(2, 33))
def test_triple_unbiasedness(n):
    for pair, report in lqm.triple_unbiasedness(lqm.Dim(n)).items():
        assert report.max_deviation <= TOL, pair
        assert report.completeness_error <= TOL, pair


def test_unbiasedness_same_basis():
    pos = lqm.build_position_basis(lqm.Dim(4))
    report = lqm.unbiasedness(pos, pos)
    np.testing.assert_allclose(report.grid, np.eye(4))
    assert abs(report.max_deviation - 0.5) <= 1e-15
    with pytest.raises(lqm.DimensionMismatchError):
        lqm.unbiasedness(pos, lqm.build_position_basis(lqm.Dim(3)))


def test_gauss_identity_two_sites():
    report = lqm.gauss_identity_check(lqm.Dim(2), 0)
    assert abs(report.phase - cmath.exp(1j * math.pi / 4)) <= 1e-12
    assert report.residual <= 1e-12


@pytest.mark.parametrize("n", range(2, 17))
def test_gauss_identity_all_b(n):
    dim = lqm.Dim(n)
    for b in lqm.valid_b(dim):
        report = lqm.gauss_identity_check(dim, b)
        assert abs(abs(report.phase) - 1) <= 1e-12
        assert report.residual <= TOL


@pytest.mark.parametrize("n", range(2, 9))
def test_gauss_identity_asymmetric(n):
    dim = lqm.Dim(n)
    for b in range(-n, n + 1):
        assert lqm.gauss_identity_check(dim, b, form="asymmetric").residual <= TOL


def test_gauss_identity_parity():
    with pytest.raises(lqm.DomainError):
        lqm.gauss_identity_check(lqm.Dim(2), 0.5)
    with pytest.raises(lqm.DomainError):
        lqm.gauss_identity_check(lqm.Dim(3), 1)
    with pytest.raises(lqm.DomainError):
        lqm.gauss_identity_check(lqm.Dim(3), 0.5, form="asymmetric")
    assert lqm.gauss_identity_check(lqm.Dim(3), 0.5).residual <= TOL


def test_gauss_phase_agrees_with_eta_ratio():
    dim = lqm.Dim(5)
    ratios = lqm.eta_phase_ratios(dim)
    for s in dim.labels:
        report = lqm.gauss_identity_check(dim, s + 0.5)
        assert abs(report.phase - ratios[dim.offset(s)]) <= 1e-10


@pytest.mark.parametrize("n", range(2, 33))
def test_S_reconstructs_TB(n):
    dim = lqm.Dim(n)
    scales = lqm.LatticeScales.default(dim)
    s_op = lqm.build_S(dim, scales)
    assert s_op.hermitian
    assert abs(s_op.trace()) <= 1e-12
    assert lqm.s_reconstruction_deviation(dim, scales) <= TOL


def test_S_spectrum_three_sites():
    dim = lqm.Dim(3)
    values = lqm.eig_normal(lqm.build_S(dim, lqm.LatticeScales.default(dim))).values.real
    np.testing.assert_allclose(np.sort(values), [-2 * math.pi / 3, 0, 2 * math.pi / 3], atol=1e-12)


def test_weyl_swap():
    assert lqm.weyl_swap_check(lqm.build_canonical_set(lqm.Dim(2))) <= 1e-12
    for n in range(3, 17):
        assert lqm.weyl_swap_check(lqm.build_canonical_set(lqm.Dim(n))) <= 1e-11
    dim = lqm.Dim(5)
    tb = lqm.build_TB(dim)
    b_t = lqm.build_B(dim).adjoint() @ lqm.build_T(dim).adjoint()
    assert tb.adjoint().max_deviation(b_t) <= 1e-14


@pytest.mark.parametrize("n", [2, 4, 7])
def test_xp_difference_is_biased(n):
    against_position, against_momentum = lqm.xp_difference_unbiasedness(lqm.build_canonical_set(lqm.Dim(n)))
    assert against_position.max_deviation > lqm.XP_BIAS_THRESHOLD
    assert not against_position.degenerate
    assert abs(against_position.max_deviation - against_momentum.max_deviation) <= 1e-9
    assert abs(against_position.min_deviation - against_momentum.min_deviation) <= 1e-9
    assert against_position.completeness_error <= TOL


def test_xp_difference_trend():
    small, _ = lqm.xp_difference_unbiasedness(lqm.build_canonical_set(lqm.Dim(8)))
    large, _ = lqm.xp_difference_unbiasedness(lqm.build_canonical_set(lqm.Dim(32)))
    assert large.max_deviation < small.max_deviation
    assert large.rms_deviation < small.rms_deviation
    assert not small.degenerate and not large.degenerate


@pytest.mark.parametrize("n", [2, 3, 8, 13])
def test_eta_eigensolver_crosscheck(n):
    assert lqm.eta_eigensolver_crosscheck(lqm.Dim(n)) <= lqm.EIG_RESIDUAL_TOL


def test_reports_serialize():
    report = lqm.triple_unbiasedness(lqm.Dim(3))["position-eta"]
    d = report.to_dict()
    assert d["bases"] == ["position", "eta"]
    assert len(d["grid"]) == 3 and len(d["grid"][0]) == 3
    phase = lqm.gauss_identity_check(lqm.Dim(2), 0).to_dict()
    assert phase["form"] == "symmetric" and len(phase["phase"]) == 2
