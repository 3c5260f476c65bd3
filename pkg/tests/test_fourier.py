"""
Test the DFT and the closed-form lattice sums against direct summation
"""
import math
import numpy as np
import pytest

import latticeqm as lqm
from . import TOL


def random_state(dim, rng):
    return lqm.State.normalized_from(dim, rng.normal(size=dim.n) + 1j * rng.normal(size=dim.n))


@pytest.mark.parametrize("n", [2, 3, 8, 13, 64])
def test_dft_unitary(n):
    dim = lqm.Dim(n)
    f = lqm.dft_matrix(dim)
    np.testing.assert_allclose(f @ f.conj().T, np.eye(n), atol=1e-12)
    rng = np.random.default_rng(n)
    c, e = random_state(dim, rng), random_state(dim, rng)
    d = lqm.dft_forward(c)
    assert abs(d.norm() - c.norm()) <= 1e-12
    assert abs(lqm.inner(d, lqm.dft_forward(e)) - lqm.inner(c, e)) <= 1e-12
    np.testing.assert_allclose(lqm.dft_inverse(d).amp, c.amp, atol=1e-12)
    np.testing.assert_allclose(lqm.dft_forward(lqm.dft_inverse(c)).amp, c.amp, atol=1e-12)


def test_dft_is_cached_and_read_only():
    dim = lqm.Dim(5)
    assert lqm.dft_matrix(dim) is lqm.dft_matrix(lqm.Dim(5))
    assert not lqm.dft_matrix(dim).flags.writeable


def test_dft_examples():
    dim = lqm.Dim(2)
    delta = lqm.State.basis_vector(dim, -0.5)
    d = lqm.dft_forward(delta)
    np.testing.assert_allclose(np.abs(d.amp), 1 / math.sqrt(2))
    np.testing.assert_allclose(d.amp, np.exp(1j * np.pi * np.array([-1, 1]) / 4) / math.sqrt(2), atol=1e-14)


def test_dft_matches_momentum_basis():
    dim = lqm.Dim(6)
    mom = lqm.build_momentum_basis(dim)
    np.testing.assert_allclose(lqm.dft_matrix(dim), mom.matrix.conj().T, atol=1e-13)


def test_geometric_sum_examples():
    assert lqm.geometric_sum(1, lqm.Dim(5)) == 5
    assert abs(lqm.geometric_sum(2, lqm.Dim(3)) - 3.5) <= 1e-12
    assert abs(lqm.geometric_sum(-1, lqm.Dim(3)) + 1) <= 1e-12
    with pytest.raises(lqm.DomainError):
        lqm.geometric_sum(0, lqm.Dim(3))


@pytest.mark.parametrize("n", [2, 3, 4, 7])
@pytest.mark.parametrize("z", [0.5, 2.0, -3.0, 1j, 0.3 - 1.2j, np.exp(0.7j), 1 + 1e-12])
def test_geometric_sum_matches_direct(n, z):
    dim = lqm.Dim(n)
    closed = lqm.geometric_sum(z, dim)
    brute = lqm.brute_geometric_sum(z, dim)
    assert abs(closed - brute) <= 1e-9 * max(1.0, abs(brute))


def test_finite_geometric_sum():
    assert lqm.finite_geometric_sum(1, 4) == 4
    assert abs(lqm.finite_geometric_sum(2, 4) - 15) <= 1e-12
    assert abs(lqm.finite_geometric_sum(np.exp(2j * np.pi / 5), 5)) <= 1e-12


def test_omega_sum_examples():
    assert abs(lqm.omega_sum(lqm.Dim(4), 0) - 4) <= 1e-12
    assert abs(lqm.omega_sum(lqm.Dim(3), 3) - 3) <= 1e-12
    assert abs(lqm.omega_sum(lqm.Dim(2), 2) + 2) <= 1e-12
    assert abs(lqm.omega_sum(lqm.Dim(5), 2)) <= 1e-12


@pytest.mark.parametrize("n", [2, 3, 4, 5, 8, 16])
def test_omega_sum_cases_match_direct(n):
    dim = lqm.Dim(n)
    for r in np.arange(-2 * n, 2 * n + 1):
        assert abs(lqm.omega_sum_cases(dim, r) - lqm.brute_omega_sum(dim, r)) <= TOL
        assert abs(lqm.omega_sum(dim, r) - lqm.brute_omega_sum(dim, r)) <= TOL
    for r in np.arange(-2 * n, 2 * n) + 0.5:
        assert abs(lqm.omega_sum_cases(dim, r) - lqm.brute_omega_sum(dim, r)) <= TOL


def test_omega_sum_cases_half_odd_branch():
    assert abs(lqm.omega_sum_cases(lqm.Dim(2), 0.5) - math.sqrt(2)) <= 1e-12


def test_omega_sum_cases_rejects_generic_r():
    with pytest.raises(lqm.DomainError):
        lqm.omega_sum_cases(lqm.Dim(3), 0.3)


def test_k_weighted_examples():
    assert lqm.k_weighted_sum(lqm.Dim(4), 0) == 0
    assert abs(lqm.k_weighted_sum(lqm.Dim(3), 1) - 1j * math.sqrt(3)) <= 1e-12
    with pytest.raises(lqm.SingularSumError):
        lqm.k_weighted_sum(lqm.Dim(3), 3)


@pytest.mark.parametrize("n", range(2, 17))
def test_random_reals_match_direct(n):
    dim = lqm.Dim(n)
    grid = lqm.r_grid(dim, n_random=lqm.N_RANDOM_R, seed=n)
    assert len(grid["random"]) == 100
    for r in grid["random"]:
        assert abs(math.sin(math.pi * r / n)) > lqm.RANDOM_R_BAND
        assert abs(lqm.omega_sum(dim, r) - lqm.brute_omega_sum(dim, r)) <= 1e-9
        assert abs(lqm.k_weighted_sum(dim, r) - lqm.brute_k_weighted_sum(dim, r)) <= 1e-9


def test_sum_query_dispatch():
    dim = lqm.Dim(4)
    for variant in lqm.SUM_VARIANTS:
        query = lqm.SumQuery(dim, 1.5, variant)
        assert query.residual() <= 1e-10
    assert lqm.SumQuery(dim, 0, "geometric", z=2.0).ratio == 2.0
    with pytest.raises(lqm.DomainError):
        lqm.SumQuery(dim, 1, "cubic")


@pytest.mark.parametrize("n", range(2, 17))
def test_verify_sums(n):
    rows = lqm.verify_sums(lqm.Dim(n))
    statuses = {row["status"] for row in rows}
    assert "skipped: exact-case route" in statuses
    assert "skipped: singular" in statuses
    assert lqm.max_sum_residual(rows) <= 1e-9
    half = [row for row in rows if row["r"] == 0.5 and row["variant"] == "omega_cases"]
    assert len(half) == 1 and half[0]["residual"] <= TOL
