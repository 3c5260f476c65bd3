"""Finite-dimensional complex linear algebra on the symmetric lattice labeling -j..j"""
import logging
import math
from numbers import Number
from typing import *
import numpy as np
import scipy.linalg
from .constants import NORM_TOL, UNITARY_TOL, SCALES_TOL, ORTHONORMAL_TOL, NORMALITY_TOL, TWO_PI
from .exceptions import DomainError, DimensionMismatchError, ContractViolationError
from .utils import phase_fix, principal_arg, max_abs


class Dim:
    """Dimension N = 2j + 1 of the lattice Hilbert space, with sites labeled -j, -j+1, ..., j"""
    __slots__ = ["n", "j"]

    def __init__(self, n: int) -> None:
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise DomainError(f"N must be an integer, got {n!r}")
        if n < 2:
            raise DomainError(f"N={n} is not a valid dimension, at least 2 lattice sites are needed")
        self.n = int(n)
        self.j = (self.n - 1) / 2

    @property
    def labels(self) -> np.ndarray:
        """Symmetric labels -j..j in storage order (half-odd integers for even N)"""
        return np.arange(self.n) - self.j

    @property
    def is_even(self) -> bool:
        return self.n % 2 == 0

    def offset(self, k: float) -> int:
        """Storage index k + j of the label k"""
        o = k + self.j
        io = int(round(o))
        if abs(o - io) > 1e-9 or not 0 <= io < self.n:
            raise DomainError(f"{k} is not a label of the N={self.n} lattice")
        return io

    def label(self, offset: int) -> float:
        if not 0 <= offset < self.n:
            raise DomainError(f"offset {offset} out of range for N={self.n}")
        return offset - self.j

    def check_same(self, other: "Dim") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"N={self.n} and N={other.n} cannot be combined")

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Dim) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("Dim", self.n))

    def __repr__(self) -> str:
        return f"Dim(n={self.n})"


class SymIndex:
    """A label k of the lattice, validated against its Dim"""
    __slots__ = ["k", "dim"]

    def __init__(self, k: float, dim: Dim) -> None:
        dim.offset(k)
        self.k = float(k)
        self.dim = dim

    @property
    def offset(self) -> int:
        return self.dim.offset(self.k)

    def __repr__(self) -> str:
        return f"SymIndex(k={self.k}, n={self.dim.n})"


class LatticeScales:
    """Position step a and momentum step g tied by a * g * N = 2 * pi

    Arguments
    ---------
    dim: Dim
        the lattice dimension
    a: float
        position step, strictly positive
    g: float
        momentum step, strictly positive
    """
    __slots__ = ["dim", "a", "g"]

    def __init__(self, dim: Dim, a: float, g: float) -> None:
        a, g = float(a), float(g)
        if not (math.isfinite(a) and math.isfinite(g)) or a <= 0 or g <= 0:
            raise DomainError(f"lattice steps must be positive and finite, got a={a}, g={g}")
        if abs(a * g * dim.n - TWO_PI) > SCALES_TOL:
            raise DomainError(f"a*g*N = {a * g * dim.n!r} differs from 2*pi")
        self.dim = dim
        self.a = a
        self.g = g

    @classmethod
    def default(cls, dim: Dim) -> "LatticeScales":
        """Symmetric choice a = g = sqrt(2*pi/N)"""
        step = math.sqrt(TWO_PI / dim.n)
        return cls(dim, step, step)

    @classmethod
    def from_a(cls, dim: Dim, a: float) -> "LatticeScales":
        if not math.isfinite(a) or a <= 0:
            raise DomainError(f"position step must be positive and finite, got {a}")
        return cls(dim, a, TWO_PI / (dim.n * a))

    @classmethod
    def from_g(cls, dim: Dim, g: float) -> "LatticeScales":
        if not math.isfinite(g) or g <= 0:
            raise DomainError(f"momentum step must be positive and finite, got {g}")
        return cls(dim, TWO_PI / (dim.n * g), g)

    @property
    def hbar_step(self) -> float:
        """The product a * g, the quantum of phase-space area per site"""
        return self.a * self.g

    def to_dict(self) -> Dict[str, float]:
        return {"n": self.dim.n, "a": self.a, "g": self.g}

    def __repr__(self) -> str:
        return f"LatticeScales(n={self.dim.n}, a={self.a:.6g}, g={self.g:.6g})"


class State:
    """A vector of C^N stored in storage order (offset k + j)

    Arguments
    ---------
    dim: Dim
        the lattice dimension
    amp: array-like of complex, length N
        the amplitudes, copied and made read-only
    normalized: bool, default=True
        if True the unit norm is checked within NORM_TOL
    """
    __slots__ = ["dim", "amp", "normalized"]

    def __init__(self, dim: Dim, amp: Any, normalized: bool=True) -> None:
        amp = np.array(amp, dtype=complex).reshape(-1)
        if amp.shape != (dim.n,):
            raise DimensionMismatchError(f"expected {dim.n} amplitudes, got {amp.shape[0]}")
        if not np.all(np.isfinite(amp)):
            raise DomainError("amplitudes must be finite")
        if normalized:
            norm = np.linalg.norm(amp)
            if abs(norm - 1) > NORM_TOL:
                raise ContractViolationError(f"state flagged normalized has norm {norm!r}")
        amp.flags.writeable = False
        self.dim = dim
        self.amp = amp
        self.normalized = normalized

    @classmethod
    def normalized_from(cls, dim: Dim, amp: Any) -> "State":
        """Scale arbitrary nonzero amplitudes to unit norm"""
        amp = np.array(amp, dtype=complex).reshape(-1)
        norm = np.linalg.norm(amp)
        if not np.isfinite(norm) or norm == 0:
            raise DomainError("cannot normalize a zero or non-finite vector")
        return cls(dim, amp / norm, normalized=True)

    @classmethod
    def basis_vector(cls, dim: Dim, k: float) -> "State":
        """Position eigenvector phi_k"""
        amp = np.zeros(dim.n, dtype=complex)
        amp[dim.offset(k)] = 1.0
        return cls(dim, amp)

    def component(self, k: float) -> complex:
        return complex(self.amp[self.dim.offset(k)])

    def norm(self) -> float:
        return float(np.linalg.norm(self.amp))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amp) ** 2

    def __repr__(self) -> str:
        return f"State(n={self.dim.n}, normalized={self.normalized})"


class Op:
    """A dense complex N x N operator in storage order

    Arguments
    ---------
    dim: Dim
        the lattice dimension
    entries: array-like (N, N)
        the matrix, copied and made read-only
    hermitian: bool, default=False
        flag checked on construction
    unitary: bool, default=False
        flag checked on construction
    tol: float, default=UNITARY_TOL
        tolerance used for the flag checks, relative to max(1, max|entries|)
    """
    __slots__ = ["dim", "entries", "hermitian", "unitary"]

    def __init__(self, dim: Dim, entries: Any, hermitian: bool=False, unitary: bool=False, tol: float=UNITARY_TOL) -> None:
        entries = np.array(entries, dtype=complex)
        if entries.shape != (dim.n, dim.n):
            raise DimensionMismatchError(f"expected a {dim.n}x{dim.n} matrix, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise DomainError("operator entries must be finite")
        entries.flags.writeable = False
        self.dim = dim
        self.entries = entries
        self.hermitian = hermitian
        self.unitary = unitary
        if hermitian and not self.is_hermitian(tol):
            raise ContractViolationError(f"operator flagged hermitian deviates by {self.hermiticity_error():.3g}")
        if unitary and not self.is_unitary(tol):
            raise ContractViolationError(f"operator flagged unitary deviates by {self.unitarity_error():.3g}")

    @classmethod
    def identity(cls, dim: Dim) -> "Op":
        return cls(dim, np.eye(dim.n), hermitian=True, unitary=True)

    @classmethod
    def spectral(cls, basis: "Basis", values: Any, hermitian: bool=False) -> "Op":
        """Build sum_k values[k] |v_k><v_k| from an orthonormal basis"""
        values = np.asarray(values, dtype=complex)
        if values.shape != (basis.dim.n,):
            raise DimensionMismatchError(f"expected {basis.dim.n} eigenvalues, got {values.shape}")
        m = basis.matrix
        entries = (m * values[None, :]) @ m.conj().T
        if hermitian:
            entries = (entries + entries.conj().T) / 2
        return cls(basis.dim, entries, hermitian=hermitian)

    def _scale(self) -> float:
        return max(1.0, max_abs(self.entries))

    def hermiticity_error(self) -> float:
        return max_abs(self.entries - self.entries.conj().T)

    def unitarity_error(self) -> float:
        return max_abs(self.entries.conj().T @ self.entries - np.eye(self.dim.n))

    def normality_error(self) -> float:
        adj = self.entries.conj().T
        return max_abs(self.entries @ adj - adj @ self.entries)

    def is_hermitian(self, tol: float=UNITARY_TOL) -> bool:
        return self.hermiticity_error() <= tol * self._scale()

    def is_unitary(self, tol: float=UNITARY_TOL) -> bool:
        return self.unitarity_error() <= tol

    def is_normal(self, tol: float=NORMALITY_TOL) -> bool:
        return self.normality_error() <= tol * self._scale() ** 2

    def adjoint(self) -> "Op":
        return Op(self.dim, self.entries.conj().T, hermitian=self.hermitian, unitary=self.unitary)

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def max_deviation(self, other: Union["Op", np.ndarray]) -> float:
        """Largest entrywise modulus of self - other"""
        if isinstance(other, Op):
            self.dim.check_same(other.dim)
            other = other.entries
        other = np.asarray(other, dtype=complex)
        if other.shape != self.entries.shape:
            raise DimensionMismatchError(f"cannot compare shapes {self.entries.shape} and {other.shape}")
        return max_abs(self.entries - other)

    def apply(self, psi: State) -> State:
        """Act on a state, normalization is carried only through unitary operators"""
        self.dim.check_same(psi.dim)
        normalized = psi.normalized and self.unitary
        return State(self.dim, self.entries @ psi.amp, normalized=normalized)

    def __matmul__(self, other: Union["Op", State]) -> Union["Op", State]:
        if isinstance(other, State):
            return self.apply(other)
        if isinstance(other, Op):
            self.dim.check_same(other.dim)
            return Op(self.dim, self.entries @ other.entries)
        return NotImplemented

    def __add__(self, other: "Op") -> "Op":
        if not isinstance(other, Op):
            return NotImplemented
        self.dim.check_same(other.dim)
        return Op(self.dim, self.entries + other.entries)

    def __sub__(self, other: "Op") -> "Op":
        if not isinstance(other, Op):
            return NotImplemented
        self.dim.check_same(other.dim)
        return Op(self.dim, self.entries - other.entries)

    def __mul__(self, scalar: Number) -> "Op":
        if not isinstance(scalar, Number):
            return NotImplemented
        return Op(self.dim, complex(scalar) * self.entries)

    __rmul__ = __mul__

    def __neg__(self) -> "Op":
        return Op(self.dim, -self.entries, hermitian=self.hermitian, unitary=self.unitary)

    def __repr__(self) -> str:
        return f"Op(n={self.dim.n}, hermitian={self.hermitian}, unitary={self.unitary})"


class Basis:
    """An ordered orthonormal basis stored as the columns of a unitary matrix

    Arguments
    ---------
    dim: Dim
        the lattice dimension
    matrix: array-like (N, N)
        column k is the k-th basis vector in position components
    name: str
        used in logs and reports
    """
    __slots__ = ["dim", "matrix", "name"]

    def __init__(self, dim: Dim, matrix: Any, name: str="", tol: float=ORTHONORMAL_TOL) -> None:
        matrix = np.array(matrix, dtype=complex)
        if matrix.shape != (dim.n, dim.n):
            raise DimensionMismatchError(f"expected {dim.n} vectors of length {dim.n}, got shape {matrix.shape}")
        matrix.flags.writeable = False
        self.dim = dim
        self.matrix = matrix
        self.name = name
        err = self.orthonormality_error()
        if err > tol:
            raise ContractViolationError(f"basis {name!r} is not orthonormal, deviation {err:.3g}")

    @classmethod
    def from_states(cls, states: Sequence[State], name: str="") -> "Basis":
        if len(states) == 0:
            raise DomainError("a basis needs at least one vector")
        dim = states[0].dim
        for s in states:
            dim.check_same(s.dim)
        return cls(dim, np.column_stack([s.amp for s in states]), name=name)

    @property
    def vecs(self) -> List[State]:
        return [State(self.dim, self.matrix[:, k], normalized=True) for k in range(self.dim.n)]

    def __getitem__(self, k: float) -> State:
        """Basis vector with symmetric label k"""
        return State(self.dim, self.matrix[:, self.dim.offset(k)], normalized=True)

    def __len__(self) -> int:
        return self.dim.n

    def orthonormality_error(self) -> float:
        return max_abs(self.matrix.conj().T @ self.matrix - np.eye(self.dim.n))

    def is_orthonormal(self, tol: float=ORTHONORMAL_TOL) -> bool:
        return self.orthonormality_error() <= tol

    def overlap(self, other: "Basis") -> np.ndarray:
        """Matrix of inner products <u_r, v_s>, rows indexed by self and columns by other"""
        self.dim.check_same(other.dim)
        return self.matrix.conj().T @ other.matrix

    def coefficients(self, psi: State) -> np.ndarray:
        """Expansion coefficients <u_k, psi>"""
        self.dim.check_same(psi.dim)
        return self.matrix.conj().T @ psi.amp

    def __repr__(self) -> str:
        return f"Basis(name={self.name!r}, n={self.dim.n})"


class EigenSystem:
    """Eigenvalues and column eigenvectors sorted by argument then modulus"""
    __slots__ = ["dim", "values", "vectors"]

    def __init__(self, dim: Dim, values: np.ndarray, vectors: np.ndarray) -> None:
        self.dim = dim
        self.values = np.asarray(values, dtype=complex)
        self.vectors = np.asarray(vectors, dtype=complex)

    @property
    def pairs(self) -> List[Tuple[complex, State]]:
        return [(complex(self.values[k]), State(self.dim, self.vectors[:, k])) for k in range(self.dim.n)]

    def basis(self, name: str="eigenbasis") -> Basis:
        return Basis(self.dim, self.vectors, name=name)

    def residual(self, a: Op) -> float:
        """Largest ||A v - lambda v|| over all pairs"""
        self.dim.check_same(a.dim)
        diff = a.entries @ self.vectors - self.vectors * self.values[None, :]
        return float(np.linalg.norm(diff, axis=0).max())


def omega_pow(dim: Dim, t: Any) -> Union[complex, np.ndarray]:
    """exp(2*pi*i*t/N) for real t, the argument reduced modulo N before exponentiation

    Arguments
    ---------
    dim: Dim
        fixes N
    t: float or np.ndarray of float
        real exponent(s)

    Returns
    -------
    complex or np.ndarray of complex
        the principal value, exactly 1 for t a multiple of N
    """
    t_arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t_arr)):
        raise DomainError("omega exponent must be finite")
    value = np.exp(2j * np.pi * np.fmod(t_arr, dim.n) / dim.n)
    if value.ndim == 0:
        return complex(value)
    return value


def inner(u: State, v: State) -> complex:
    """<u, v>, antilinear in the first argument"""
    u.dim.check_same(v.dim)
    return complex(np.vdot(u.amp, v.amp))


def eig_normal(a: Op, tol: float=NORMALITY_TOL) -> EigenSystem:
    """Eigendecomposition of a normal operator with a unitary eigenvector matrix

    Arguments
    ---------
    a: Op
        a normal operator, checked within tol * max(1, max|A|)**2
    tol: float, default=NORMALITY_TOL

    Returns
    -------
    EigenSystem
        eigenvalues sorted by argument in (-pi, pi] then modulus, each eigenvector
        phase-fixed so that its largest component is real positive

    Note
    ----
    Hermitian input goes through ``scipy.linalg.eigh``, any other normal input through
    the complex Schur form whose triangular factor is diagonal for normal matrices
    """
    if not a.is_normal(tol):
        raise ContractViolationError(f"operator is not normal, ||AA* - A*A|| = {a.normality_error():.3g}")
    if a.hermitian or a.is_hermitian(tol):
        real_values, vectors = scipy.linalg.eigh(a.entries)
        values = real_values.astype(complex)
    else:
        tri, vectors = scipy.linalg.schur(a.entries, output="complex")
        values = np.diag(tri).copy()
    vectors = phase_fix(vectors)
    order = np.lexsort((np.abs(values), principal_arg(values)))
    logging.debug(f"Eigendecomposition of N={a.dim.n} operator done")
    return EigenSystem(a.dim, values[order], vectors[:, order])


def op_exp(a: Op, scale: complex) -> Op:
    """exp(scale * A) for a normal operator A computed through its spectral decomposition"""
    es = eig_normal(a)
    factors = np.exp(complex(scale) * es.values)
    entries = (es.vectors * factors[None, :]) @ es.vectors.conj().T
    return Op(a.dim, entries)
