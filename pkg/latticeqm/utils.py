from typing import *
import numpy as np
from scipy.optimize import linear_sum_assignment
from .constants import PHASE_TIE_TOL, LABEL_MATCH_TOL
from .exceptions import DomainError


def phase_fix(vectors: np.ndarray, tie_tol: float=PHASE_TIE_TOL) -> np.ndarray:
    """Fix the free phase of every column so that its largest component is real positive

    Arguments
    ---------
    vectors: np.ndarray (N, M)
        the columns are the vectors to normalize in phase
    tie_tol: float, default=PHASE_TIE_TOL
        components within this distance of the largest modulus count as ties,
        the first one in storage order wins

    Returns
    -------
    np.ndarray (N, M)
        a new array, each column multiplied by a unit complex number
    """
    vectors = np.asarray(vectors, dtype=complex)
    mags = np.abs(vectors)
    peak = mags.max(axis=0)
    idx = np.argmax(mags >= (peak - tie_tol)[None, :], axis=0)
    pivots = vectors[idx, np.arange(vectors.shape[1])]
    pivots[pivots == 0] = 1.0
    return vectors * (np.abs(pivots) / pivots)[None, :]


def principal_arg(values: np.ndarray) -> np.ndarray:
    """Argument in (-pi, pi], values numerically at -pi are moved to pi"""
    angles = np.angle(np.asarray(values, dtype=complex))
    angles = np.atleast_1d(angles).copy()
    angles[angles <= -np.pi + 1e-12] = np.pi
    return angles


def match_labels(values: np.ndarray, dim: Any, sign: int=1, tol: float=LABEL_MATCH_TOL) -> np.ndarray:
    """Assign to every unit-modulus eigenvalue the label k such that value = omega**(sign * k)

    Arguments
    ---------
    values: np.ndarray
        eigenvalues as returned by the solver
    dim: Dim
        fixes N and the admissible symmetric labels
    sign: int, default=1
        +1 for B and TB, -1 for T
    tol: float
        largest accepted distance between a value and its nearest candidate

    Returns
    -------
    np.ndarray
        the label matched to each value, in the order of ``values``

    Note
    ----
    Raises DomainError if a value has no candidate within tol or if two values claim the same label
    """
    values = np.asarray(values, dtype=complex)
    labels = dim.labels
    candidates = np.exp(2j * np.pi * sign * labels / dim.n)
    distance = np.abs(values[:, None] - candidates[None, :])
    nearest = np.argmin(distance, axis=1)
    worst = distance[np.arange(len(values)), nearest].max()
    if worst > tol:
        raise DomainError(f"eigenvalue is {worst:.3g} away from the nearest omega power")
    if len(np.unique(nearest)) != len(nearest):
        raise DomainError("two eigenvalues were matched to the same label")
    return labels[nearest]


def spectrum_deviation(values: np.ndarray, expected: np.ndarray) -> float:
    """Largest distance between two spectra after the optimal one-to-one pairing"""
    values = np.asarray(values, dtype=complex)
    expected = np.asarray(expected, dtype=complex)
    if values.shape != expected.shape:
        raise DomainError(f"cannot compare spectra of sizes {values.shape} and {expected.shape}")
    cost = np.abs(values[:, None] - expected[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if np.size(a) else 0.0
