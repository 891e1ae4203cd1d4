"""Batch crossing kernels over encoded arc arrays.

Exhaustive sweeps (all-pairs crossing checks over a window) dominate the
runtime of the verification suites, so they run over flat int64 arrays:
kind codes ``0 = U, 1 = D, 2 = C`` plus the two index columns.  A compiled
core (:mod:`stripcluster._crosskern`, built from Cython) is used when
available; a numpy-vectorized fallback with the same signatures is
selected at import time otherwise, or when ``STRIP_PURE_KERNELS=1``.

Scalar single-pair queries live in :mod:`stripcluster.arcs`; these kernels
must agree with them pair by pair (tested exhaustively).
"""

from __future__ import annotations

import os
from typing import NamedTuple, Sequence

import numpy as np

from .arcs import CONNECTING, LOWER, UPPER, Arc

KIND_CODE = {UPPER: 0, LOWER: 1, CONNECTING: 2}
CODE_KIND = {v: k for k, v in KIND_CODE.items()}


class ArcArrays(NamedTuple):
    kind: np.ndarray
    i: np.ndarray
    j: np.ndarray

    def __len__(self) -> int:
        return len(self.kind)


def encode_arcs(arcs: Sequence[Arc]) -> ArcArrays:
    n = len(arcs)
    kind = np.empty(n, dtype=np.int64)
    ii = np.empty(n, dtype=np.int64)
    jj = np.empty(n, dtype=np.int64)
    for t, u in enumerate(arcs):
        kind[t] = KIND_CODE[u.kind]
        ii[t] = u.i
        jj[t] = u.j
    return ArcArrays(kind, ii, jj)


def translate_arrays(a: ArcArrays, k: int) -> ArcArrays:
    return ArcArrays(a.kind, a.i + k, a.j + k)


def _np_cross_grid(ka, ia, ja, kb, ib, jb):
    """Crossing indicator with broadcasting; a-arrays and b-arrays must
    already be shaped to broadcast against each other."""
    out = np.zeros(np.broadcast_shapes(ka.shape, kb.shape), dtype=bool)

    m = (ka == 0) & (kb == 0)
    out |= m & (((ia < ib) & (ib < ja) & (ja < jb)) | ((ib < ia) & (ia < jb) & (jb < ja)))
    m = (ka == 1) & (kb == 1)
    out |= m & (((ia > ib) & (ib > ja) & (ja > jb)) | ((ib > ia) & (ia > jb) & (jb > ja)))
    m = (ka == 2) & (kb == 2)
    out |= m & (((ia > ib) & (ja > jb)) | ((ia < ib) & (ja < jb)))
    # upper/lower pairs never cross
    m = (ka == 0) & (kb == 2)
    out |= m & (ia < ib) & (ib < ja)
    m = (ka == 2) & (kb == 0)
    out |= m & (ib < ia) & (ia < jb)
    m = (ka == 1) & (kb == 2)
    out |= m & (ia > jb) & (jb > ja)
    m = (ka == 2) & (kb == 1)
    out |= m & (ib > ja) & (ja > jb)
    return out


def _py_cross_matrix(a: ArcArrays, b: ArcArrays, block: int = 1024) -> np.ndarray:
    na, nb = len(a), len(b)
    out = np.zeros((na, nb), dtype=bool)
    kb, ib, jb = b.kind[None, :], b.i[None, :], b.j[None, :]
    for lo in range(0, na, block):
        hi = min(lo + block, na)
        out[lo:hi] = _np_cross_grid(
            a.kind[lo:hi, None], a.i[lo:hi, None], a.j[lo:hi, None], kb, ib, jb
        )
    return out


def _py_cross_pairs(a: ArcArrays, b: ArcArrays) -> np.ndarray:
    if len(a) != len(b):
        raise ValueError("cross_pairs needs arrays of equal length")
    return _np_cross_grid(a.kind, a.i, a.j, b.kind, b.i, b.j)


def _py_conn_leq_matrix(a: ArcArrays, b: ArcArrays) -> np.ndarray:
    if not ((a.kind == 2).all() and (b.kind == 2).all()):
        raise ValueError("conn_leq_matrix is defined on connecting arcs only")
    return (a.i[:, None] <= b.i[None, :]) & (a.j[:, None] >= b.j[None, :])


COMPILED = False
if not os.environ.get("STRIP_PURE_KERNELS"):
    try:
        from . import _crosskern as _ck

        COMPILED = True
    except ImportError:
        _ck = None
else:
    _ck = None


def cross_matrix(a: ArcArrays, b: ArcArrays) -> np.ndarray:
    """Boolean matrix M with M[s, t] = cross(a[s], b[t])."""
    if COMPILED:
        return _ck.cross_matrix(a.kind, a.i, a.j, b.kind, b.i, b.j)
    return _py_cross_matrix(a, b)


def cross_pairs(a: ArcArrays, b: ArcArrays) -> np.ndarray:
    """Elementwise crossing indicator of two equal-length arc arrays."""
    if COMPILED:
        if len(a) != len(b):
            raise ValueError("cross_pairs needs arrays of equal length")
        return _ck.cross_pairs(a.kind, a.i, a.j, b.kind, b.i, b.j)
    return _py_cross_pairs(a, b)


def conn_leq_matrix(a: ArcArrays, b: ArcArrays) -> np.ndarray:
    """Partial-order matrix over connecting arcs: M[s, t] = (a[s] <= b[t])."""
    if COMPILED:
        if not ((a.kind == 2).all() and (b.kind == 2).all()):
            raise ValueError("conn_leq_matrix is defined on connecting arcs only")
        return _ck.conn_leq_matrix(a.i, a.j, b.i, b.j)
    return _py_conn_leq_matrix(a, b)
