import json
import logging
import os
from typing import *
import h5py
import numpy as np
from .exceptions import DomainError
from .linalg import Dim, LatticeScales, State, Op, Basis
from .operators import CanonicalSet

_OPERATORS = ("x_op", "p_op", "t_op", "b_op")
_BASES = ("pos_basis", "mom_basis")


def complex_to_pairs(values: np.ndarray) -> List[Any]:
    """Nested lists of [re, im] pairs with the shape of ``values``"""
    values = np.asarray(values, dtype=complex)
    return np.stack([values.real, values.imag], axis=-1).tolist()


def pairs_to_complex(data: Any) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.ndim == 0 or arr.shape[-1] != 2:
        raise DomainError("expected [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def state_to_json(psi: State) -> List[List[float]]:
    return complex_to_pairs(psi.amp)


def state_from_json(data: Any, dim: Optional[Dim]=None) -> State:
    """Parse a JSON array of [re, im] pairs in storage order into a normalized State

    Arguments
    ---------
    data: list
        already decoded JSON
    dim: Dim, optional
        if given the length must match, otherwise the length defines N

    Returns
    -------
    State, rescaled to unit norm (a warning is logged when the input was not normalized)
    """
    try:
        amp = pairs_to_complex(data)
    except (TypeError, ValueError) as e:
        raise DomainError(f"malformed state: {e}")
    if amp.ndim != 1:
        raise DomainError(f"a state is a flat list of [re, im] pairs, got shape {amp.shape}")
    if dim is None:
        dim = Dim(len(amp))
    elif len(amp) != dim.n:
        raise DomainError(f"state has {len(amp)} amplitudes but N={dim.n}")
    norm = np.linalg.norm(amp)
    if abs(norm - 1) > 1e-12:
        logging.warning(f"State has norm {norm:.6g}, it will be normalized")
    return State.normalized_from(dim, amp)


def load_state(filename: str, dim: Optional[Dim]=None) -> State:
    with open(filename, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except UnicodeDecodeError as e:
            raise DomainError(f"{filename} is not UTF-8 text: {e}")
        except json.JSONDecodeError as e:
            raise DomainError(f"{filename} is not valid JSON: {e}")
    return state_from_json(data, dim)


def op_to_json(op: Op) -> List[List[List[float]]]:
    """Row-major list of rows of [re, im] pairs"""
    return complex_to_pairs(op.entries)


def op_from_json(data: Any, dim: Optional[Dim]=None) -> Op:
    entries = pairs_to_complex(data)
    if entries.ndim != 2:
        raise DomainError(f"an operator is a list of rows, got shape {entries.shape}")
    return Op(dim if dim is not None else Dim(entries.shape[0]), entries)


def dump_hdf5(cset: CanonicalSet, filename: str, data_compression: int=7) -> None:
    """Write the operators, bases and scales of a CanonicalSet to hdf5

    Arguments
    ---------
    cset: CanonicalSet
    filename: str
        overwritten if it exists
    data_compression: int, default=7
        gzip level of the datasets
    """
    if os.path.isfile(filename):
        os.remove(filename)
    with h5py.File(filename, "w") as _file:
        _file.attrs["n"] = cset.dim.n
        _file.attrs["a"] = cset.scales.a
        _file.attrs["g"] = cset.scales.g
        for k in _OPERATORS:
            _file.create_dataset(k, data=getattr(cset, k).entries, compression="gzip", compression_opts=data_compression)
        for k in _BASES:
            _file.create_dataset(k, data=getattr(cset, k).matrix, compression="gzip", compression_opts=data_compression)
    logging.info(f"Canonical set for N={cset.dim.n} written to {filename}")


def load_hdf5(filename: str) -> CanonicalSet:
    """Rebuild a CanonicalSet written by ``dump_hdf5``, re-validating every flag"""
    with h5py.File(filename, "r") as _file:
        dim = Dim(int(_file.attrs["n"]))
        scales = LatticeScales(dim, float(_file.attrs["a"]), float(_file.attrs["g"]))
        arrays = {k: _file[k][:] for k in _OPERATORS + _BASES}
    return CanonicalSet(dim, scales,
                        x_op=Op(dim, arrays["x_op"], hermitian=True),
                        p_op=Op(dim, arrays["p_op"], hermitian=True),
                        t_op=Op(dim, arrays["t_op"], unitary=True),
                        b_op=Op(dim, arrays["b_op"], unitary=True),
                        pos_basis=Basis(dim, arrays["pos_basis"], name="position"),
                        mom_basis=Basis(dim, arrays["mom_basis"], name="momentum"))
