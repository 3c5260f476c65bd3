"""Pauli's question for a two-site lattice: do the position and momentum distributions fix the state?"""
import logging
import math
from typing import *
import numpy as np
from .constants import COMPATIBILITY_TOL, DEFAULT_TOL
from .exceptions import DomainError
from .fourier import dft_forward
from .linalg import Dim, State, inner

SINE_SNAP = 1e-12  # |sin(alpha)| this close to 1 is a single solution

TWO_SITES = Dim(2)


class PauliData:
    """Probabilities of the lower site phi_- in the position basis (rho_sq) and in the momentum basis (varpi_sq)"""
    __slots__ = ["rho_sq", "varpi_sq"]

    def __init__(self, rho_sq: float, varpi_sq: float) -> None:
        values = []
        for name, value in (("rho_sq", rho_sq), ("varpi_sq", varpi_sq)):
            value = float(value)
            if not math.isfinite(value) or value < -COMPATIBILITY_TOL or value > 1 + COMPATIBILITY_TOL:
                raise DomainError(f"{name} must lie in [0, 1], got {value}")
            values.append(min(max(value, 0.0), 1.0))
        self.rho_sq, self.varpi_sq = values

    def __repr__(self) -> str:
        return f"PauliData(rho_sq={self.rho_sq!r}, varpi_sq={self.varpi_sq!r})"


class Reconstruction:
    """Phases alpha compatible with a PauliData

    Attributes
    ----------
    compatible: bool
        whether the data lie inside the uncertainty disk
    alpha_solutions: Tuple[float, ...]
        zero, one or two angles in [0, 2pi); two solutions satisfy alpha2 = pi - alpha1 mod 2pi
    residual: float
        largest distance between the data and the forward data of the reconstructed states
    phase_observable: bool
        False when rho_sq is 0 or 1 and the phase drops out of the state
    """
    __slots__ = ["compatible", "alpha_solutions", "residual", "phase_observable"]

    def __init__(self, compatible: bool, alpha_solutions: Tuple[float, ...], residual: float, phase_observable: bool=True) -> None:
        self.compatible = compatible
        self.alpha_solutions = tuple(alpha_solutions)
        self.residual = residual
        self.phase_observable = phase_observable

    def contains(self, alpha: float, tol: float=1e-9) -> bool:
        return any(_angle_distance(a, alpha) <= tol for a in self.alpha_solutions)

    def to_dict(self) -> Dict[str, Any]:
        """Plain JSON types, a missing residual (incompatible data) becomes None"""
        residual = self.residual if math.isfinite(self.residual) else None
        return {"compatible": self.compatible, "alpha_solutions": list(self.alpha_solutions),
                "residual": residual, "phase_observable": self.phase_observable}

    def __repr__(self) -> str:
        return f"Reconstruction(compatible={self.compatible}, alpha_solutions={self.alpha_solutions})"


def _angle_distance(a: float, b: float) -> float:
    return abs((a - b + math.pi) % (2 * math.pi) - math.pi)


def state_from_params(rho: float, alpha: float) -> State:
    """rho exp(i alpha) phi_- + sqrt(1 - rho**2) phi_+ on the two-site lattice"""
    rho, alpha = float(rho), float(alpha)
    if not 0 <= rho <= 1:
        raise DomainError(f"rho must lie in [0, 1], got {rho}")
    if not math.isfinite(alpha):
        raise DomainError("alpha must be finite")
    return State(TWO_SITES, [rho * np.exp(1j * alpha), math.sqrt(1 - rho ** 2)])


def distributions(psi: State) -> Tuple[np.ndarray, np.ndarray]:
    """Position and momentum probability distributions of a state of any dimension"""
    return psi.probabilities(), dft_forward(psi).probabilities()


def forward_data(psi: State) -> PauliData:
    """(rho_sq, varpi_sq) of a two-site state"""
    if psi.dim.n != 2:
        raise DomainError(f"the Pauli data are defined for N=2, got N={psi.dim.n}")
    position, momentum = distributions(psi)
    return PauliData(min(position[0], 1.0), min(momentum[0], 1.0))


def compatible(data: PauliData, tol: float=COMPATIBILITY_TOL) -> bool:
    """(varpi_sq - 1/2)**2 + (rho_sq - 1/2)**2 <= 1/4 within an additive tolerance"""
    return (data.varpi_sq - 0.5) ** 2 + (data.rho_sq - 0.5) ** 2 <= 0.25 + tol


def reconstruct(data: PauliData, tol: float=COMPATIBILITY_TOL) -> Reconstruction:
    """Solve sin(alpha) = (varpi_sq - 1/2) / (rho sqrt(1 - rho**2)) for the phase

    Arguments
    ---------
    data: PauliData
    tol: float, default=COMPATIBILITY_TOL
        additive tolerance of the compatibility disk, also the margin within which rho_sq counts as 0 or 1

    Returns
    -------
    Reconstruction
        no solution when the data are incompatible or when rho_sq is 0 or 1 (phase unobservable),
        one solution when sin(alpha) = +-1, otherwise alpha and pi - alpha
    """
    if not compatible(data, tol):
        logging.info(f"{data} lies outside the uncertainty disk")
        return Reconstruction(False, (), float("nan"))
    if data.rho_sq <= tol or data.rho_sq >= 1 - tol:
        logging.info(f"{data}: the phase is unobservable when one site carries all the weight")
        return Reconstruction(True, (), abs(data.varpi_sq - 0.5), phase_observable=False)
    rho = math.sqrt(data.rho_sq)
    sine = (data.varpi_sq - 0.5) / math.sqrt(data.rho_sq * (1 - data.rho_sq))
    if abs(sine) >= 1 - SINE_SNAP:
        sine = math.copysign(1.0, sine)
    first = math.asin(sine) % (2 * math.pi)
    second = (math.pi - first) % (2 * math.pi)
    solutions = (first,) if _angle_distance(first, second) < 1e-12 else tuple(sorted((first, second)))
    residual = 0.0
    for alpha in solutions:
        again = forward_data(state_from_params(rho, alpha))
        residual = max(residual, abs(again.rho_sq - data.rho_sq), abs(again.varpi_sq - data.varpi_sq))
    return Reconstruction(True, solutions, residual)


def partner_params(rho: float, alpha: float) -> Tuple[float, float]:
    """The parameters of the state sharing both distributions with state_from_params(rho, alpha)"""
    return rho, (math.pi - alpha) % (2 * math.pi)


def is_pauli_partner(psi: State, phi: State, tol: float=DEFAULT_TOL) -> bool:
    """Same position and momentum distributions but different rays"""
    psi.dim.check_same(phi.dim)
    for a, b in zip(distributions(psi), distributions(phi)):
        if np.abs(a - b).max() > tol:
            return False
    return abs(inner(psi, phi)) < 1 - tol


def compatibility_grid(k: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """K x K sample of the unit square (rho_sq, varpi_sq) flagged by compatibility, for drawing the disk"""
    if k < 2:
        raise DomainError(f"the grid needs at least 2 points per side, got {k}")
    axis = np.linspace(0, 1, k)
    rho_sq, varpi_sq = np.meshgrid(axis, axis, indexing="ij")
    inside = (varpi_sq - 0.5) ** 2 + (rho_sq - 0.5) ** 2 <= 0.25 + COMPATIBILITY_TOL
    return rho_sq.ravel(), varpi_sq.ravel(), inside.ravel()
