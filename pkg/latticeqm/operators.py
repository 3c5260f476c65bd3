import logging
import math
from typing import *
import numpy as np
from .constants import UNITARY_TOL, DEFAULT_TOL, ROUNDING_FLOOR
from .exceptions import ContractViolationError
from .fourier import k_weighted_sum
from .linalg import Dim, LatticeScales, State, Op, Basis, omega_pow, inner, eig_normal, op_exp
from .utils import spectrum_deviation, max_abs


class CanonicalSet:
    """Position and momentum operators of one lattice together with their exponentials and eigenbases

    Attributes
    ----------
    dim: Dim
    scales: LatticeScales
    x_op: Op
        X = a * diag(labels), hermitian
    p_op: Op
        P with eigenvectors the momentum basis and eigenvalues g * labels, hermitian
    t_op: Op
        unit translation with the (-1)**(N-1) wrap-around sign, unitary
    b_op: Op
        momentum boost diag(omega**x), unitary
    pos_basis: Basis
        the standard basis phi_x
    mom_basis: Basis
        the momentum basis with position components omega**(p x) / sqrt(N)
    """
    __slots__ = ["dim", "scales", "x_op", "p_op", "t_op", "b_op", "pos_basis", "mom_basis"]

    def __init__(self, dim: Dim, scales: LatticeScales, x_op: Op, p_op: Op, t_op: Op, b_op: Op,
                 pos_basis: Basis, mom_basis: Basis) -> None:
        self.dim = dim
        self.scales = scales
        self.x_op = x_op
        self.p_op = p_op
        self.t_op = t_op
        self.b_op = b_op
        self.pos_basis = pos_basis
        self.mom_basis = mom_basis

    def __repr__(self) -> str:
        return f"CanonicalSet({self.scales!r})"


def build_position_basis(dim: Dim) -> Basis:
    return Basis(dim, np.eye(dim.n), name="position")


def position_momentum_overlap(dim: Dim) -> np.ndarray:
    """<phi_x, phi_p> = omega**(p x) / sqrt(N), rows indexed by x and columns by p"""
    labels = dim.labels
    return omega_pow(dim, np.outer(labels, labels)) / math.sqrt(dim.n)


def build_momentum_basis(dim: Dim) -> Basis:
    return Basis(dim, position_momentum_overlap(dim), name="momentum")


def build_position(dim: Dim, scales: LatticeScales) -> Op:
    return Op(dim, np.diag(scales.a * dim.labels), hermitian=True)


def build_momentum(dim: Dim, scales: LatticeScales, mom_basis: Optional[Basis]=None) -> Op:
    if mom_basis is None:
        mom_basis = build_momentum_basis(dim)
    return Op.spectral(mom_basis, scales.g * dim.labels, hermitian=True)


def build_T(dim: Dim) -> Op:
    """Translation phi_x -> phi_{x+1}, with phi_j -> (-1)**(N-1) phi_{-j}"""
    n = dim.n
    entries = np.zeros((n, n), dtype=complex)
    entries[np.arange(1, n), np.arange(n - 1)] = 1.0
    entries[0, n - 1] = (-1) ** (n - 1)
    return Op(dim, entries, unitary=True)


def build_B(dim: Dim) -> Op:
    """Boost phi_x -> omega**x phi_x"""
    return Op(dim, np.diag(omega_pow(dim, dim.labels)), unitary=True)


def build_canonical_set(dim: Dim, scales: Optional[LatticeScales]=None) -> CanonicalSet:
    """Build X, P, T, B and the two bases for a lattice

    Arguments
    ---------
    dim: Dim
    scales: LatticeScales, optional
        defaults to the symmetric choice a = g = sqrt(2*pi/N)

    Returns
    -------
    CanonicalSet
    """
    if scales is None:
        scales = LatticeScales.default(dim)
    dim.check_same(scales.dim)
    logging.debug(f"Building canonical operators for {scales}")
    mom_basis = build_momentum_basis(dim)
    return CanonicalSet(dim, scales,
                        x_op=build_position(dim, scales),
                        p_op=build_momentum(dim, scales, mom_basis),
                        t_op=build_T(dim),
                        b_op=build_B(dim),
                        pos_basis=build_position_basis(dim),
                        mom_basis=mom_basis)


def check_exponential_forms(cset: CanonicalSet) -> float:
    """Largest deviation of exp(-i 2pi/(Ng) P) from T and of exp(i 2pi/(Na) X) from B"""
    n, a, g = cset.dim.n, cset.scales.a, cset.scales.g
    t_dev = op_exp(cset.p_op, -2j * math.pi / (n * g)).max_deviation(cset.t_op)
    b_dev = op_exp(cset.x_op, 2j * math.pi / (n * a)).max_deviation(cset.b_op)
    logging.debug(f"Exponential forms: T deviates by {t_dev:.3g}, B deviates by {b_dev:.3g}")
    return max(t_dev, b_dev)


def commutator(a: Op, b: Op) -> Op:
    return a @ b - b @ a


def commutator_matrix_elements(cset: CanonicalSet) -> Op:
    """[X, P] from its closed form: entry (s, r) is a*g*(s - r)/N * sum_k k omega**(k(s - r)), zero on the diagonal"""
    n = cset.dim.n
    ag = cset.scales.hbar_step
    entries = np.zeros((n, n), dtype=complex)
    for delta in range(1, n):
        weighted = k_weighted_sum(cset.dim, delta)
        for sign in (1, -1):
            idx = np.arange(max(0, -sign * delta), min(n, n - sign * delta))
            entries[idx + sign * delta, idx] = ag * sign * delta * (weighted if sign > 0 else -weighted) / n
    return Op(cset.dim, entries)


def gaussian_probe(dim: Dim) -> State:
    """Normalized c_x proportional to exp(-pi x**2 / N), self-dual under the DFT up to rounding of the periodization"""
    return State.normalized_from(dim, np.exp(-math.pi * dim.labels ** 2 / dim.n))


def commutator_expectation(cset: CanonicalSet, psi: State) -> complex:
    """<psi, [X, P] psi>"""
    if not psi.normalized:
        raise ContractViolationError("commutator expectation needs a normalized state")
    return inner(psi, commutator(cset.x_op, cset.p_op).apply(psi))


def probe_deviation(dim: Dim) -> float:
    """|<[X, P]> - i| on the Gaussian probe with the symmetric scales"""
    cset = build_canonical_set(dim)
    return abs(commutator_expectation(cset, gaussian_probe(dim)) - 1j)


def decrease_violation(deviations: Sequence[float], floor: float=ROUNDING_FLOOR) -> float:
    """Largest step up along a sweep of probe deviations, negative when the sweep strictly decreases

    Once a deviation is at the rounding floor the next one only has to stay at or below it,
    a step inside the floor counts as -floor
    """
    steps = []
    for a, b in zip(deviations[:-1], deviations[1:]):
        if a <= floor:
            steps.append(-floor if b <= floor else b - floor)
        else:
            steps.append(b - a)
    return max(steps)


def dft_consistency(dim: Dim) -> float:
    """Max deviation from the identity of both compositions of the position and momentum expansions"""
    f = position_momentum_overlap(dim)
    eye = np.eye(dim.n)
    return max(max_abs(f @ f.conj().T - eye), max_abs(f.conj().T @ f - eye))


def check_canonical_set(cset: CanonicalSet) -> Dict[str, float]:
    """All numerical deviations characterizing a CanonicalSet, to be compared against thresholds

    Returns
    -------
    dict mapping check name to deviation: unitarity of T and B, hermiticity of X and P, spectra of
    T and B against {omega**-p} and {omega**x}, the exponential forms, the DFT consistency, the trace
    of [X, P] and the distance of [X, P] from its closed form, both scaled by max(1, max|[X,P]|)
    """
    labels = cset.dim.labels
    n = cset.dim.n
    comm = commutator(cset.x_op, cset.p_op)
    scale = max(1.0, max_abs(comm.entries))
    t_values = eig_normal(cset.t_op).values
    b_values = eig_normal(cset.b_op).values
    deviations = {
        "unitarity_T": cset.t_op.unitarity_error(),
        "unitarity_B": cset.b_op.unitarity_error(),
        "hermiticity_X": cset.x_op.hermiticity_error(),
        "hermiticity_P": cset.p_op.hermiticity_error(),
        "spectrum_T": spectrum_deviation(t_values, omega_pow(cset.dim, -labels)),
        "spectrum_B": spectrum_deviation(b_values, omega_pow(cset.dim, labels)),
        "exponential_forms": check_exponential_forms(cset),
        "dft_consistency": dft_consistency(cset.dim),
        "commutator_trace": abs(comm.trace()) / scale,
        "commutator_closed_form": comm.max_deviation(commutator_matrix_elements(cset)) / scale,
    }
    logging.debug(f"N={n} canonical set deviations: {deviations}")
    return deviations


CANONICAL_THRESHOLDS = {
    "unitarity_T": UNITARY_TOL,
    "unitarity_B": UNITARY_TOL,
    "hermiticity_X": UNITARY_TOL,
    "hermiticity_P": UNITARY_TOL,
    "spectrum_T": DEFAULT_TOL,
    "spectrum_B": DEFAULT_TOL,
    "exponential_forms": 1e-11,
    "dft_consistency": UNITARY_TOL,
    "commutator_trace": DEFAULT_TOL,
    "commutator_closed_form": 1e-9,
}
