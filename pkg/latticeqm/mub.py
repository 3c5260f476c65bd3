import logging
import math
from typing import *
import numpy as np
from .constants import DEGENERACY_TOL
from .exceptions import DomainError
from .linalg import Dim, LatticeScales, Op, Basis, omega_pow, eig_normal, op_exp
from .operators import CanonicalSet, build_T, build_B, build_position_basis, build_momentum_basis
from .utils import match_labels


class UnbiasednessReport:
    """Overlap magnitudes between two orthonormal bases compared with 1/sqrt(N)

    Attributes
    ----------
    n: int
        the dimension N
    names: Tuple[str, str]
        names of the two bases
    grid: np.ndarray (N, N)
        |<u_r, v_s>|, rows indexed by the first basis
    max_deviation, min_deviation, rms_deviation: float
        statistics of |grid - 1/sqrt(N)|
    completeness_error: float
        largest deviation from 1 of the row and column sums of grid**2
    degenerate: bool
        set when the second basis comes from a degenerate spectrum and is not unique
    """
    __slots__ = ["n", "names", "grid", "max_deviation", "min_deviation", "rms_deviation", "completeness_error", "degenerate"]

    def __init__(self, n: int, names: Tuple[str, str], grid: np.ndarray, degenerate: bool=False) -> None:
        self.n = n
        self.names = tuple(names)
        self.grid = np.asarray(grid, dtype=float)
        dev = np.abs(self.grid - 1 / math.sqrt(n))
        self.max_deviation = float(dev.max())
        self.min_deviation = float(dev.min())
        self.rms_deviation = float(np.sqrt(np.mean(dev ** 2)))
        sq = self.grid ** 2
        self.completeness_error = float(max(np.abs(sq.sum(0) - 1).max(), np.abs(sq.sum(1) - 1).max()))
        self.degenerate = degenerate

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "bases": list(self.names), "grid": self.grid.tolist(),
                "max_deviation": self.max_deviation, "min_deviation": self.min_deviation,
                "rms_deviation": self.rms_deviation, "completeness_error": self.completeness_error,
                "degenerate": self.degenerate}

    def __repr__(self) -> str:
        return f"UnbiasednessReport({self.names[0]} vs {self.names[1]}, n={self.n}, max_deviation={self.max_deviation:.3g})"


class PhaseIdentityReport:
    """Outcome of checking a quadratic-phase DFT identity up to one fitted unit phase"""
    __slots__ = ["n", "b", "form", "phase", "residual"]

    def __init__(self, n: int, b: float, form: str, phase: complex, residual: float) -> None:
        self.n = n
        self.b = b
        self.form = form
        self.phase = phase
        self.residual = residual

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "b": self.b, "form": self.form,
                "phase": [self.phase.real, self.phase.imag], "residual": self.residual}

    def __repr__(self) -> str:
        return f"PhaseIdentityReport(n={self.n}, b={self.b}, form={self.form!r}, residual={self.residual:.3g})"


def build_TB(dim: Dim) -> Op:
    """The product T B, shifting both the position and the momentum basis

    Note
    ----
    TB phi_x = omega**x phi_{x+1} for x != j and TB phi_j = omega**(-2 j**2) phi_{-j}
    """
    return Op(dim, (build_T(dim) @ build_B(dim)).entries, unitary=True)


def _eta_position_matrix(dim: Dim) -> np.ndarray:
    labels = dim.labels
    x, s = labels[:, None], labels[None, :]
    return omega_pow(dim, x ** 2 / 2 - (s + 0.5) * x) / math.sqrt(dim.n)


def eta_basis_position(dim: Dim) -> Basis:
    """Eigenbasis of TB from its position components omega**(x**2/2 - (s + 1/2) x) / sqrt(N)

    Arguments
    ---------
    dim: Dim

    Returns
    -------
    Basis
        column s + j is eta_s, with TB eta_s = omega**s eta_s
    """
    return Basis(dim, _eta_position_matrix(dim), name="eta")


def eta_basis_momentum(dim: Dim) -> Basis:
    """Eigenbasis of TB built from its momentum coefficients omega**(-p**2/2 - (s + 1/2) p) / sqrt(N)

    Note
    ----
    The vectors are returned in position components. Each eta_s differs from the one of
    ``eta_basis_position`` by a unit phase that depends on s, see ``eta_phase_ratios``
    """
    labels = dim.labels
    p, s = labels[:, None], labels[None, :]
    coefficients = omega_pow(dim, -p ** 2 / 2 - (s + 0.5) * p) / math.sqrt(dim.n)
    return Basis(dim, build_momentum_basis(dim).matrix @ coefficients, name="eta (momentum form)")


def eta_phase_ratios(dim: Dim) -> np.ndarray:
    """<eta_s(momentum form), eta_s(position form)> for every s, unit complex numbers"""
    return np.einsum("ij,ij->j", eta_basis_momentum(dim).matrix.conj(), eta_basis_position(dim).matrix)


def unbiasedness(u: Basis, v: Basis, degenerate: bool=False) -> UnbiasednessReport:
    """Compare every overlap magnitude |<u_r, v_s>| with 1/sqrt(N)"""
    u.dim.check_same(v.dim)
    return UnbiasednessReport(u.dim.n, (u.name, v.name), np.abs(u.overlap(v)), degenerate=degenerate)


def triple_unbiasedness(dim: Dim) -> Dict[str, UnbiasednessReport]:
    """Pairwise reports for the position, momentum and eta bases"""
    pos, mom, eta = build_position_basis(dim), build_momentum_basis(dim), eta_basis_position(dim)
    return {"position-momentum": unbiasedness(pos, mom),
            "position-eta": unbiasedness(pos, eta),
            "momentum-eta": unbiasedness(mom, eta)}


def valid_b(dim: Dim, form: str="symmetric") -> np.ndarray:
    """Parameters b in [-N, N] admitted by an identity form: integers for even N or for the asymmetric
    form, half-odd integers for odd N in the symmetric form"""
    n = dim.n
    if form == "asymmetric" or dim.is_even:
        return np.arange(-n, n + 1, dtype=float)
    return np.arange(-n, n, dtype=float) + 0.5


def _fit_phase(lhs: np.ndarray, rhs: np.ndarray) -> Tuple[complex, float]:
    proj = np.vdot(rhs, lhs)
    phase = proj / abs(proj) if abs(proj) > 0 else 1.0 + 0j
    return complex(phase), float(np.abs(lhs - phase * rhs).max())


def gauss_identity_check(dim: Dim, b: float, form: str="symmetric") -> PhaseIdentityReport:
    """Check a quadratic-phase DFT identity for all momenta up to one fitted unit phase

    Arguments
    ---------
    dim: Dim
    b: float
        integer for even N, half-odd for odd N in the symmetric form; integer for the asymmetric form
    form: str, default="symmetric"
        "symmetric": sum over x = -j..j of omega**(x**2/2 - b x - p x) / sqrt(N) against omega**(-p**2/2 - b p)
        "asymmetric": sum over n = 0..N-1 of (-1)**n omega**(n**2/2 - b n - m n) / sqrt(N) against (-1)**m omega**(-m**2/2 - b m)

    Returns
    -------
    PhaseIdentityReport
        the phase c maximizing Re<c rhs, lhs> and max_p |lhs(p) - c rhs(p)|
    """
    b = float(b)
    if form == "symmetric":
        parity_ok = abs(b - round(b)) < 1e-12 if dim.is_even else abs(b - 0.5 - round(b - 0.5)) < 1e-12
        if not parity_ok:
            raise DomainError(f"b={b} is not admitted for N={dim.n}, need {'integer' if dim.is_even else 'half-odd'} b")
        idx = dim.labels
        signs_in = signs_out = np.ones(dim.n)
    elif form == "asymmetric":
        if abs(b - round(b)) >= 1e-12:
            raise DomainError(f"the asymmetric form needs integer b, got {b}")
        idx = np.arange(dim.n, dtype=float)
        signs_in = signs_out = (-1.0) ** np.arange(dim.n)
    else:
        raise DomainError(f"unknown identity form {form!r}")
    x, p = idx[None, :], idx[:, None]
    terms = signs_in[None, :] * omega_pow(dim, x ** 2 / 2 - b * x - p * x)
    lhs = terms.sum(axis=1) / math.sqrt(dim.n)
    rhs = signs_out * omega_pow(dim, -idx ** 2 / 2 - b * idx)
    phase, residual = _fit_phase(lhs, rhs)
    logging.debug(f"N={dim.n} b={b} {form} identity: phase {phase:.6f}, residual {residual:.3g}")
    return PhaseIdentityReport(dim.n, b, form, phase, residual)


def build_S(dim: Dim, scales: LatticeScales) -> Op:
    """Hermitian S with eigenvectors eta_s and eigenvalues a*g*s, so that exp(iS) = TB"""
    dim.check_same(scales.dim)
    return Op.spectral(eta_basis_position(dim), scales.hbar_step * dim.labels, hermitian=True)


def weyl_swap_check(cset: CanonicalSet) -> float:
    """Largest deviation of exp(-iaP) exp(igX) from TB and of exp(-igX) exp(iaP) from (TB)^dagger"""
    a, g = cset.scales.a, cset.scales.g
    tb = build_TB(cset.dim)
    forward = op_exp(cset.p_op, -1j * a) @ op_exp(cset.x_op, 1j * g)
    backward = op_exp(cset.x_op, -1j * g) @ op_exp(cset.p_op, 1j * a)
    return max(forward.max_deviation(tb), backward.max_deviation(tb.adjoint()))


def xp_difference_unbiasedness(cset: CanonicalSet, gap_tol: float=DEGENERACY_TOL) -> Tuple[UnbiasednessReport, UnbiasednessReport]:
    """Overlaps of the eigenbasis of gX - aP with the position and with the momentum basis

    Returns
    -------
    (against position, against momentum); both flagged degenerate when two eigenvalues of gX - aP are closer than gap_tol
    """
    a, g = cset.scales.a, cset.scales.g
    h = Op(cset.dim, (g * cset.x_op - a * cset.p_op).entries, hermitian=True)
    es = eig_normal(h)
    values = np.sort(es.values.real)
    degenerate = bool(np.any(np.diff(values) < gap_tol * max(1.0, np.abs(values).max())))
    if degenerate:
        logging.warning(f"gX - aP has a degenerate spectrum at N={cset.dim.n}, its eigenbasis is not unique")
    basis = es.basis(name="gX-aP eigenbasis")
    return (unbiasedness(cset.pos_basis, basis, degenerate=degenerate),
            unbiasedness(cset.mom_basis, basis, degenerate=degenerate))


def eta_eigensolver_crosscheck(dim: Dim) -> float:
    """Largest 1 - |<eta_s, v_s>| between the explicit eta vectors and the numerical eigenvectors of TB matched by label"""
    es = eig_normal(build_TB(dim))
    labels = match_labels(es.values, dim, sign=1)
    eta = _eta_position_matrix(dim)
    worst = 0.0
    for column, s in enumerate(labels):
        overlap = abs(np.vdot(eta[:, dim.offset(s)], es.vectors[:, column]))
        worst = max(worst, 1 - overlap)
    return worst


def s_reconstruction_deviation(dim: Dim, scales: LatticeScales) -> float:
    """Max deviation of exp(iS) from TB"""
    return op_exp(build_S(dim, scales), 1j).max_deviation(build_TB(dim))
