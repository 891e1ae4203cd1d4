# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled all-pairs crossing kernels; see stripcluster.kernels for the API."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64
ctypedef cnp.uint8_t u8


cdef inline bint _cross(i64 ka, i64 ia, i64 ja, i64 kb, i64 ib, i64 jb) nogil:
    if ka == 0:
        if kb == 0:
            return (ia < ib < ja < jb) or (ib < ia < jb < ja)
        if kb == 2:
            return ia < ib < ja
        return False
    if ka == 1:
        if kb == 1:
            return (ia > ib > ja > jb) or (ib > ia > jb > ja)
        if kb == 2:
            return ia > jb > ja
        return False
    # ka == 2
    if kb == 2:
        return (ia > ib and ja > jb) or (ia < ib and ja < jb)
    if kb == 0:
        return ib < ia < jb
    return ib > ja > jb


def cross_matrix(i64[::1] ka, i64[::1] ia, i64[::1] ja,
                 i64[::1] kb, i64[::1] ib, i64[::1] jb):
    cdef Py_ssize_t na = ka.shape[0], nb = kb.shape[0]
    out = np.zeros((na, nb), dtype=np.uint8)
    cdef u8[:, ::1] o = out
    cdef Py_ssize_t s, t
    with nogil:
        for s in range(na):
            for t in range(nb):
                o[s, t] = _cross(ka[s], ia[s], ja[s], kb[t], ib[t], jb[t])
    return out.view(np.bool_)


def cross_pairs(i64[::1] ka, i64[::1] ia, i64[::1] ja,
                i64[::1] kb, i64[::1] ib, i64[::1] jb):
    cdef Py_ssize_t n = ka.shape[0]
    out = np.zeros(n, dtype=np.uint8)
    cdef u8[::1] o = out
    cdef Py_ssize_t s
    with nogil:
        for s in range(n):
            o[s] = _cross(ka[s], ia[s], ja[s], kb[s], ib[s], jb[s])
    return out.view(np.bool_)


def conn_leq_matrix(i64[::1] ia, i64[::1] ja, i64[::1] ib, i64[::1] jb):
    cdef Py_ssize_t na = ia.shape[0], nb = ib.shape[0]
    out = np.zeros((na, nb), dtype=np.uint8)
    cdef u8[:, ::1] o = out
    cdef Py_ssize_t s, t
    with nogil:
        for s in range(na):
            for t in range(nb):
                o[s, t] = ia[s] <= ib[t] and ja[s] >= jb[t]
    return out.view(np.bool_)
