"""
Test the free evolution in both representations and the exact revivals
"""
import numpy as np
import pytest

import latticeqm as lqm
from . import TOL


def random_state(dim, rng):
    return lqm.State.normalized_from(dim, rng.normal(size=dim.n) + 1j * rng.normal(size=dim.n))


def test_config():
    dim = lqm.Dim(4)
    scales = lqm.LatticeScales.from_a(dim, 0.5)
    cfg = lqm.EvolutionConfig(dim, scales, mass=2.0)
    assert abs(cfg.tau - 2 * 2.0 * 0.5 / scales.g) <= 1e-12
    with pytest.raises(lqm.DomainError):
        lqm.EvolutionConfig(dim, scales, mass=0)


def test_free_hamiltonian_three_sites():
    dim = lqm.Dim(3)
    cfg = lqm.EvolutionConfig(dim, lqm.LatticeScales.from_g(dim, 1.0), mass=1.0)
    h = lqm.free_hamiltonian(cfg)
    assert h.hermitian
    np.testing.assert_allclose(np.sort(lqm.eig_normal(h).values.real), [0, 0.5, 0.5], atol=1e-12)
    p = lqm.build_momentum(dim, cfg.scales)
    assert lqm.commutator(h, p).max_deviation(np.zeros((3, 3))) <= 1e-12


def test_propagator_properties():
    dim = lqm.Dim(5)
    cfg = lqm.EvolutionConfig(dim)
    h = lqm.free_hamiltonian(cfg)
    assert lqm.propagator(h, 0).max_deviation(lqm.Op.identity(dim)) <= 1e-12
    u1, u2 = lqm.propagator(h, 0.3), lqm.propagator(h, 1.1)
    assert (u1 @ u2).max_deviation(lqm.propagator(h, 1.4)) <= TOL
    with pytest.raises(lqm.ContractViolationError):
        lqm.propagator(lqm.build_T(dim), 1.0)


@pytest.mark.parametrize("n", [2, 3, 6, 9])
def test_momentum_route_matches_propagator(n):
    dim = lqm.Dim(n)
    cfg = lqm.EvolutionConfig(dim)
    rng = np.random.default_rng(n)
    psi = random_state(dim, rng)
    for t in (0.0, 0.37 * cfg.tau, cfg.tau, 5.2 * cfg.tau):
        by_propagator = lqm.propagator(lqm.free_hamiltonian(cfg), t).apply(psi)
        by_phases = lqm.evolve_momentum(cfg, lqm.dft_forward(psi), t)
        np.testing.assert_allclose(lqm.dft_forward(by_propagator).amp, by_phases.amp, atol=1e-11)
        np.testing.assert_allclose(np.abs(by_phases.amp), np.abs(lqm.dft_forward(psi).amp), atol=1e-12)


def test_one_tau_phase():
    dim = lqm.Dim(4)
    cfg = lqm.EvolutionConfig(dim)
    d0 = lqm.State.normalized_from(dim, np.ones(4))
    d1 = lqm.evolve_momentum(cfg, d0, cfg.tau)
    np.testing.assert_allclose(d1.amp, d0.amp * lqm.omega_pow(dim, -dim.labels ** 2), atol=1e-12)


@pytest.mark.parametrize("n", range(2, 17))
def test_position_route_matches_momentum_route(n):
    dim = lqm.Dim(n)
    cfg = lqm.EvolutionConfig(dim)
    rng = np.random.default_rng(100 + n)
    psi = random_state(dim, rng)
    np.testing.assert_allclose(lqm.evolve_position(cfg, psi, 0).amp, psi.amp, atol=1e-12)
    for t in (0.1 * cfg.tau, cfg.tau, 2.7 * cfg.tau):
        by_position = lqm.evolve_position(cfg, psi, t)
        by_momentum = lqm.evolve(cfg, psi, t)
        assert np.linalg.norm(by_position.amp - by_momentum.amp) <= TOL
        assert abs(by_momentum.norm() - 1) <= 1e-11


def test_delta_three_sites():
    dim = lqm.Dim(3)
    cfg = lqm.EvolutionConfig(dim)
    delta = lqm.State.basis_vector(dim, 0)
    expected = np.array([sum(lqm.omega_pow(dim, p * r - p ** 2) for p in (-1, 0, 1)) / 3 for r in (-1, 0, 1)])
    np.testing.assert_allclose(lqm.evolve_position(cfg, delta, cfg.tau).amp, expected, atol=1e-12)
    np.testing.assert_allclose(lqm.evolve(cfg, delta, cfg.tau).amp, expected, atol=1e-12)


def test_revival_period_examples():
    for n, factor in ((3, 3), (2, 8), (5, 5), (4, 16)):
        cfg = lqm.EvolutionConfig(lqm.Dim(n))
        assert abs(lqm.revival_period(cfg) - factor * cfg.tau) <= 1e-12


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_exact_revival(n):
    dim = lqm.Dim(n)
    cfg = lqm.EvolutionConfig(dim, mass=1.3)
    rng = np.random.default_rng(n)
    for _ in range(20):
        assert lqm.revival_deviation(cfg, random_state(dim, rng)) <= 1e-9


@pytest.mark.parametrize("n", [3, 5, 7])
def test_no_earlier_revival_for_odd_n(n):
    dim = lqm.Dim(n)
    cfg = lqm.EvolutionConfig(dim)
    psi = random_state(dim, np.random.default_rng(7))
    for k in range(1, n):
        assert lqm.revival_deviation(cfg, psi, period=k * cfg.tau) > 1e-3


def test_time_series():
    dim = lqm.Dim(3)
    cfg = lqm.EvolutionConfig(dim)
    delta = lqm.State.basis_vector(dim, 0)
    series = lqm.time_series(cfg, delta, [0.0, cfg.tau, lqm.revival_period(cfg)])
    assert series.shape == (3, 3)
    np.testing.assert_allclose(series.sum(axis=1), 1, atol=1e-12)
    np.testing.assert_allclose(series[0], series[-1], atol=1e-9)
