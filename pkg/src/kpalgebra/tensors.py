"""Dense tensors of rational functions stored as numpy object arrays.

Index position carries no variance: the ambient bilinear form is the
Kronecker delta, so ``T[i, j]`` serves for T^ij, T^i_j and T_ij alike.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

import numpy as np

from .field import RatFunc


def tensor(entries, m: int) -> np.ndarray:
    """Coerce nested sequences of RatFunc or exact numbers to an object array."""
    src = np.array(entries, dtype=object)
    arr = np.empty(src.shape, dtype=object)
    for idx in np.ndindex(src.shape):
        v = src[idx]
        arr[idx] = v if isinstance(v, RatFunc) else RatFunc.const(m, v)
    return arr


def zeros(m: int, rank: int) -> np.ndarray:
    arr = np.empty((m,) * rank, dtype=object)
    zero = RatFunc.zero(m)
    for idx in np.ndindex(arr.shape):
        arr[idx] = zero
    return arr


def identity(m: int) -> np.ndarray:
    arr = zeros(m, 2)
    for i in range(m):
        arr[i, i] = RatFunc.one(m)
    return arr


def vector(components: Iterable, m: int | None = None) -> np.ndarray:
    comps = list(components)
    if m is None:
        m = next(c.nvars for c in comps if isinstance(c, RatFunc))
    return tensor(comps, m)


def indices(m: int, rank: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(m), repeat=rank)


def nonzero_entries(T: np.ndarray) -> list[tuple[tuple[int, ...], RatFunc]]:
    return [(idx, T[idx]) for idx in np.ndindex(T.shape) if not T[idx].is_zero()]


def is_zero(T: np.ndarray) -> bool:
    return all(v.is_zero() for v in T.flat)


def differences(A: np.ndarray, B: np.ndarray) -> list[tuple[tuple[int, ...], RatFunc]]:
    """Index tuples where ``A`` and ``B`` differ, with the residual ``A - B``."""
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch {A.shape} vs {B.shape}")
    out = []
    for idx in np.ndindex(A.shape):
        if not A[idx].equals(B[idx]):
            out.append((idx, A[idx] - B[idx]))
    return out


def equal(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and all(a.equals(b) for a, b in zip(A.flat, B.flat))


def contract_slot(M: np.ndarray, T: np.ndarray, axis: int) -> np.ndarray:
    """``M[a, b] T[..., b, ...]`` with ``b`` in position ``axis``."""
    out = np.tensordot(M, T, axes=([1], [axis]))
    return np.moveaxis(out, 0, axis)


def trace(M: np.ndarray) -> RatFunc:
    total = M[0, 0]
    for i in range(1, M.shape[0]):
        total = total + M[i, i]
    return total


def dot(X: np.ndarray, Y: np.ndarray) -> RatFunc:
    """Flat bilinear form (X, Y) = X^i Y_i."""
    total = X[0] * Y[0]
    for a, b in zip(X[1:], Y[1:]):
        total = total + a * b
    return total


def star(T: np.ndarray) -> np.ndarray:
    out = np.empty(T.shape, dtype=object)
    for idx in np.ndindex(T.shape):
        out[idx] = T[idx].star()
    return out


def evaluate(T: np.ndarray, point) -> np.ndarray:
    """Entrywise evaluation; float points give a float/complex array."""
    vals = [v.evaluate(point) for v in T.flat]
    return np.array(vals).reshape(T.shape)
