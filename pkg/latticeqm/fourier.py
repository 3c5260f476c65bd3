import cmath
import logging
import math
from functools import lru_cache
from typing import *
import numpy as np
from numba import jit
from .constants import SINGULAR_GUARD, RANDOM_R_BAND, N_RANDOM_R, DEFAULT_SEED
from .exceptions import DomainError, SingularSumError
from .linalg import Dim, State, omega_pow

SUM_VARIANTS = ("geometric", "omega", "omega_cases", "k_weighted")


@lru_cache(maxsize=64)
def _dft_entries(n: int) -> np.ndarray:
    labels = np.arange(n) - (n - 1) / 2
    entries = np.exp(-2j * np.pi * np.fmod(np.outer(labels, labels), n) / n) / np.sqrt(n)
    entries.flags.writeable = False
    return entries


def dft_matrix(dim: Dim) -> np.ndarray:
    """Unitary matrix mapping position amplitudes to momentum amplitudes, entry [p, x] = omega**(-p*x) / sqrt(N)

    Note
    ----
    The array is cached per N and read-only
    """
    return _dft_entries(dim.n)


def dft_forward(c: State) -> State:
    """Momentum amplitudes d_p = sum_x omega**(-p*x) c_x / sqrt(N)"""
    return State(c.dim, dft_matrix(c.dim) @ c.amp, normalized=c.normalized)


def dft_inverse(d: State) -> State:
    """Position amplitudes c_x = sum_p omega**(p*x) d_p / sqrt(N)"""
    return State(d.dim, dft_matrix(d.dim).conj().T @ d.amp, normalized=d.normalized)


# Brute force oracles, plain loops over the symmetric labels


@jit(nopython=True)
def _symmetric_power_sum(w: complex, n: int) -> complex:
    """Sum of w**(2k) for k = -j..j, accumulated by repeated multiplication"""
    ww = w * w
    term = 1.0 + 0.0j
    for _ in range(n - 1):
        term = term / w
    total = 0.0 + 0.0j
    for _ in range(n):
        total += term
        term = term * ww
    return total


@jit(nopython=True)
def _omega_power_sum(n: int, r: float, weighted: bool) -> complex:
    """Sum of (k if weighted else 1) * exp(2*pi*i*k*r/N) for k = -j..j"""
    j = (n - 1) / 2
    total = 0.0 + 0.0j
    for m in range(n):
        k = m - j
        term = cmath.exp(1j * (2.0 * np.pi * k * r / n))
        if weighted:
            term = term * k
        total += term
    return total


def brute_geometric_sum(z: complex, dim: Dim) -> complex:
    """Direct evaluation of sum_k z**k with z**k read as w**(2k), w the principal square root of z"""
    z = complex(z)
    if z == 0 or not cmath.isfinite(z):
        raise DomainError(f"geometric sum is defined for finite nonzero z, got {z}")
    return complex(_symmetric_power_sum(cmath.sqrt(z), dim.n))


def brute_omega_sum(dim: Dim, r: float) -> complex:
    return complex(_omega_power_sum(dim.n, float(r), False))


def brute_k_weighted_sum(dim: Dim, r: float) -> complex:
    return complex(_omega_power_sum(dim.n, float(r), True))


def _check_real(r: float) -> float:
    r = float(r)
    if not math.isfinite(r):
        raise DomainError("sum parameter must be finite")
    return r


def _is_integer(r: float, tol: float=1e-12) -> bool:
    return abs(r - round(r)) <= tol


def _is_half_odd(r: float, tol: float=1e-12) -> bool:
    return _is_integer(r - 0.5, tol)


def _alias_value(n: int, m: int) -> float:
    """Value of sum_k omega**(k r) at r = m*N"""
    return float((-1) ** ((m * (n - 1)) % 2) * n)


def geometric_sum(z: complex, dim: Dim) -> complex:
    """Closed form of sum_{k=-j..j} z**k

    Arguments
    ---------
    z: complex
        nonzero ratio, for even N the half-integer powers use the principal square root
    dim: Dim

    Returns
    -------
    complex
        (w**N - w**-N) / (w - 1/w) with w = sqrt(z), N for z = 1

    Note
    ----
    When |w - 1/w| falls below SINGULAR_GUARD (z numerically at 1) the direct sum is returned instead
    """
    z = complex(z)
    if z == 0 or not cmath.isfinite(z):
        raise DomainError(f"geometric sum is defined for finite nonzero z, got {z}")
    if z == 1:
        return complex(dim.n)
    w = cmath.sqrt(z)
    denom = w - 1 / w
    if abs(denom) < SINGULAR_GUARD:
        logging.debug(f"z={z} is within the singular guard, summing directly")
        return brute_geometric_sum(z, dim)
    return (w ** dim.n - w ** (-dim.n)) / denom


def finite_geometric_sum(z: complex, n: int) -> complex:
    """sum_{k=0}^{n-1} z**k = (1 - z**n) / (1 - z), n for z = 1"""
    z = complex(z)
    if n < 1:
        raise DomainError(f"number of terms must be positive, got {n}")
    if z == 1:
        return complex(n)
    return (1 - z ** n) / (1 - z)


def omega_sum(dim: Dim, r: float) -> complex:
    """sum_{k=-j..j} omega**(k r) = sin(pi r) / sin(pi r / N) for real r

    Note
    ----
    Near r = m*N the quotient is replaced by its limit (-1)**(m(N-1)) * N
    """
    r = _check_real(r)
    n = dim.n
    denom = math.sin(math.pi * r / n)
    numer = math.sin(math.pi * r)
    if abs(denom) < SINGULAR_GUARD:
        if abs(numer) > 2 * n * SINGULAR_GUARD:
            raise SingularSumError(f"sin(pi r/N) vanishes at r={r} while sin(pi r) does not")
        m = int(round(r / n))
        logging.debug(f"r={r} routed to the exact value at r={m}*N")
        return complex(_alias_value(n, m))
    return complex(numer / denom)


def omega_sum_cases(dim: Dim, r: float) -> complex:
    """Case form of sum_{k=-j..j} omega**(k r) for integer and half-odd r

    Returns
    -------
    complex
        (-1)**(m(N-1)) * N for r = m*N, 0 for any other integer r,
        for half-odd r the value 2 * omega**(r/2) * (-i sin(pi r)) / (1 - omega**r)

    Note
    ----
    The half-odd numerator is written with -i*sin(pi r) = (-1)**(r - 1/2) * (-i), which fixes the branch
    of omega**(r/2) so that the result agrees with the direct sum
    """
    r = _check_real(r)
    n = dim.n
    if _is_integer(r):
        ri = int(round(r))
        if ri % n == 0:
            return complex(_alias_value(n, ri // n))
        return 0j
    if _is_half_odd(r):
        q = int(round(r - 0.5))
        numerator = omega_pow(dim, r / 2) * (-1j) * (-1) ** (q % 2)
        return complex(2 * numerator / (1 - omega_pow(dim, r)))
    raise DomainError(f"case form needs an integer or half-odd r, got {r}")


def k_weighted_sum(dim: Dim, r: float) -> complex:
    """sum_{k=-j..j} k omega**(k r) in closed form

    Note
    ----
    Near r = 0 the first-order expansion i*pi*r*(N**2 - 1)/6 is returned, exactly 0 at r = 0.
    Near any other multiple of N the closed form is singular and SingularSumError is raised.
    """
    r = _check_real(r)
    n = dim.n
    s_n = math.sin(math.pi * r / n)
    if abs(s_n) < SINGULAR_GUARD:
        if int(round(r / n)) == 0:
            return complex(0.0, math.pi * r * (n * n - 1) / 6)
        raise SingularSumError(f"k-weighted sum has no closed form at r={r}, a nonzero multiple of N={n}")
    numer = math.sin(math.pi * r) * math.cos(math.pi * r / n) - n * math.cos(math.pi * r) * s_n
    return complex(0.0, 0.5 * numer / s_n ** 2)


class SumQuery:
    """One lattice-sum evaluation to be checked against its direct sum

    Arguments
    ---------
    dim: Dim
    r: float
        the exponent parameter, the geometric variant uses z = omega**r unless z is given
    variant: str
        one of "geometric", "omega", "omega_cases", "k_weighted"
    z: complex, optional
        explicit ratio for the geometric variant
    """
    __slots__ = ["dim", "r", "variant", "z"]

    def __init__(self, dim: Dim, r: float, variant: str, z: Optional[complex]=None) -> None:
        if variant not in SUM_VARIANTS:
            raise DomainError(f"unknown sum variant {variant!r}, choose among {SUM_VARIANTS}")
        self.dim = dim
        self.r = _check_real(r)
        self.variant = variant
        self.z = complex(z) if z is not None else None

    @property
    def ratio(self) -> complex:
        return self.z if self.z is not None else omega_pow(self.dim, self.r)

    def evaluate(self) -> complex:
        if self.variant == "geometric":
            return geometric_sum(self.ratio, self.dim)
        elif self.variant == "omega":
            return omega_sum(self.dim, self.r)
        elif self.variant == "omega_cases":
            return omega_sum_cases(self.dim, self.r)
        else:
            return k_weighted_sum(self.dim, self.r)

    def brute_force(self) -> complex:
        if self.variant == "geometric":
            return brute_geometric_sum(self.ratio, self.dim)
        elif self.variant == "k_weighted":
            return brute_k_weighted_sum(self.dim, self.r)
        else:
            return brute_omega_sum(self.dim, self.r)

    def is_exact_route(self) -> bool:
        """True when the closed form would be evaluated inside the singular guard"""
        return abs(math.sin(math.pi * self.r / self.dim.n)) < SINGULAR_GUARD

    def residual(self) -> float:
        return abs(self.evaluate() - self.brute_force())

    def __repr__(self) -> str:
        return f"SumQuery(n={self.dim.n}, r={self.r}, variant={self.variant!r})"


def r_grid(dim: Dim, n_random: int=N_RANDOM_R, seed: int=DEFAULT_SEED, band: float=RANDOM_R_BAND) -> Dict[str, np.ndarray]:
    """Sample points for the sum verification

    Returns
    -------
    dict with keys "integer" (-2N..2N), "half_odd" (-2N+1/2..2N-1/2) and "random"
    (n_random uniform reals in (-2N, 2N) kept away from the multiples of N by |sin(pi r/N)| > band)
    """
    n = dim.n
    integers = np.arange(-2 * n, 2 * n + 1, dtype=float)
    half_odd = np.arange(-2 * n, 2 * n, dtype=float) + 0.5
    rng = np.random.RandomState(seed)
    picked: List[float] = []
    while len(picked) < n_random:
        r = rng.uniform(-2 * n, 2 * n)
        if abs(math.sin(math.pi * r / n)) > band:
            picked.append(r)
    return {"integer": integers, "half_odd": half_odd, "random": np.array(picked)}


def verify_sums(dim: Dim, n_random: int=N_RANDOM_R, seed: int=DEFAULT_SEED) -> List[Dict[str, Any]]:
    """Evaluate every closed form on the sample grid next to its direct sum

    Returns
    -------
    List of rows with keys variant, r, closed, brute, residual, status.
    status is "ok", "skipped: exact-case route" or "skipped: singular"; skipped rows carry residual NaN
    """
    grid = r_grid(dim, n_random=n_random, seed=seed)
    rows: List[Dict[str, Any]] = []
    for kind, rs in grid.items():
        for r in rs:
            variants = list(SUM_VARIANTS) if kind != "random" else ["geometric", "omega", "k_weighted"]
            for variant in variants:
                query = SumQuery(dim, r, variant)
                brute = query.brute_force()
                row = {"variant": variant, "r": float(r), "closed": complex("nan"), "brute": brute,
                       "residual": float("nan"), "status": "ok"}
                if variant == "omega" and query.is_exact_route():
                    row["status"] = "skipped: exact-case route"
                    row["closed"] = query.evaluate()
                else:
                    try:
                        row["closed"] = query.evaluate()
                        row["residual"] = abs(row["closed"] - brute)
                    except SingularSumError:
                        row["status"] = "skipped: singular"
                rows.append(row)
    logging.debug(f"Checked {len(rows)} sum evaluations for N={dim.n}")
    return rows


def max_sum_residual(rows: List[Dict[str, Any]], variant: Optional[str]=None) -> float:
    residuals = [row["residual"] for row in rows if row["status"] == "ok" and (variant is None or row["variant"] == variant)]
    return float(max(residuals)) if residuals else 0.0
