import logging
import math
from typing import *
import numpy as np
from .constants import DEFAULT_MASS
from .exceptions import DomainError, ContractViolationError
from .fourier import dft_forward, dft_inverse
from .linalg import Dim, LatticeScales, State, Op, omega_pow, op_exp
from .operators import build_momentum_basis


class EvolutionConfig:
    """Free particle of mass m on the lattice

    Arguments
    ---------
    dim: Dim
    scales: LatticeScales, optional
        defaults to a = g = sqrt(2*pi/N)
    mass: float, default=DEFAULT_MASS
        strictly positive
    """
    __slots__ = ["dim", "scales", "mass"]

    def __init__(self, dim: Dim, scales: Optional[LatticeScales]=None, mass: float=DEFAULT_MASS) -> None:
        if scales is None:
            scales = LatticeScales.default(dim)
        dim.check_same(scales.dim)
        mass = float(mass)
        if not math.isfinite(mass) or mass <= 0:
            raise DomainError(f"mass must be positive and finite, got {mass}")
        self.dim = dim
        self.scales = scales
        self.mass = mass

    @property
    def tau(self) -> float:
        """Time scale 2 m a / g, momentum p acquires the phase omega**(-p**2) after one tau"""
        return 2 * self.mass * self.scales.a / self.scales.g

    def __repr__(self) -> str:
        return f"EvolutionConfig(n={self.dim.n}, mass={self.mass}, tau={self.tau:.6g})"


def free_hamiltonian(cfg: EvolutionConfig) -> Op:
    """P**2 / 2m built on the momentum basis, eigenvalues (g p)**2 / 2m"""
    energies = (cfg.scales.g * cfg.dim.labels) ** 2 / (2 * cfg.mass)
    return Op.spectral(build_momentum_basis(cfg.dim), energies, hermitian=True)


def propagator(h: Op, t: float) -> Op:
    """U_t = exp(-i H t) for a hermitian H"""
    if not h.is_hermitian():
        raise ContractViolationError(f"propagator needs a hermitian generator, deviation {h.hermiticity_error():.3g}")
    u = op_exp(h, -1j * float(t))
    return Op(h.dim, u.entries, unitary=True, tol=1e-10)


def evolve_momentum(cfg: EvolutionConfig, d0: State, t: float) -> State:
    """d_p(t) = d_p(0) omega**(-p**2 t / tau)"""
    cfg.dim.check_same(d0.dim)
    phases = omega_pow(cfg.dim, -cfg.dim.labels ** 2 * (float(t) / cfg.tau))
    return State(cfg.dim, d0.amp * phases, normalized=d0.normalized)


def position_kernel(cfg: EvolutionConfig, t: float) -> np.ndarray:
    """K[r, x] = (1/N) sum_p omega**(p (r - x) - p**2 t / tau), depending on r - x only"""
    n = cfg.dim.n
    labels = cfg.dim.labels
    weights = omega_pow(cfg.dim, -labels ** 2 * (float(t) / cfg.tau))
    deltas = np.arange(-(n - 1), n)
    by_delta = omega_pow(cfg.dim, np.outer(deltas, labels)) @ weights / n
    rows, cols = np.indices((n, n))
    return by_delta[rows - cols + n - 1]


def evolve_position(cfg: EvolutionConfig, c0: State, t: float) -> State:
    """Position amplitudes at time t from the double sum over momenta and initial positions

    Arguments
    ---------
    cfg: EvolutionConfig
    c0: State
        position amplitudes at t = 0
    t: float

    Returns
    -------
    State
        c_r(t) = sum_x K[r, x] c_x(0), see ``position_kernel``
    """
    cfg.dim.check_same(c0.dim)
    return State(cfg.dim, position_kernel(cfg, t) @ c0.amp, normalized=c0.normalized)


def evolve(cfg: EvolutionConfig, c0: State, t: float) -> State:
    """Position amplitudes at time t through the momentum representation"""
    return dft_inverse(evolve_momentum(cfg, dft_forward(c0), t))


def revival_period(cfg: EvolutionConfig) -> float:
    """N tau for odd N, 4 N tau for even N"""
    n = cfg.dim.n
    return (4 * n if cfg.dim.is_even else n) * cfg.tau


def time_series(cfg: EvolutionConfig, c0: State, times: Sequence[float]) -> np.ndarray:
    """Position probabilities |c_x(t)|**2, one row per time"""
    d0 = dft_forward(c0)
    rows = [dft_inverse(evolve_momentum(cfg, d0, t)).probabilities() for t in times]
    logging.debug(f"Evolved {len(rows)} snapshots at N={cfg.dim.n}")
    return np.array(rows).reshape(len(rows), cfg.dim.n)


def revival_deviation(cfg: EvolutionConfig, c0: State, period: Optional[float]=None) -> float:
    """||Psi(T) - Psi(0)|| without any global phase allowance"""
    if period is None:
        period = revival_period(cfg)
    return float(np.linalg.norm(evolve(cfg, c0, period).amp - c0.amp))
