# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled point-in-translate counting on int64 coordinates.

Callers must guarantee that every cross product fits in int64; the Python
wrapper in ``kernels`` checks magnitudes and falls back otherwise.
"""

import numpy as np

from libc.stdint cimport int64_t


cdef inline int _classify(const int64_t[:, ::1] poly, int64_t px, int64_t py, int64_t q) noexcept nogil:
    cdef Py_ssize_t n = poly.shape[0]
    cdef Py_ssize_t e, f
    cdef int64_t c
    cdef int zero = 0
    for e in range(n):
        f = e + 1
        if f == n:
            f = 0
        c = ((poly[f, 0] - poly[e, 0]) * (py - q * poly[e, 1])
             - (poly[f, 1] - poly[e, 1]) * (px - q * poly[e, 0]))
        if c < 0:
            return 0
        if c == 0:
            zero = 1
    return 1 if zero else 2


def count_points(const int64_t[:, ::1] poly, const int64_t[:, ::1] trans, const int64_t[:, ::1] pts):
    cdef Py_ssize_t npts = pts.shape[0], nt = trans.shape[0]
    opened = np.zeros(npts, dtype=np.int64)
    closed = np.zeros(npts, dtype=np.int64)
    cdef int64_t[::1] op = opened
    cdef int64_t[::1] cl = closed
    cdef Py_ssize_t i, j
    cdef int64_t X, Y, Q
    cdef int cls
    with nogil:
        for i in range(npts):
            X = pts[i, 0]
            Y = pts[i, 1]
            Q = pts[i, 2]
            for j in range(nt):
                cls = _classify(poly, X - Q * trans[j, 0], Y - Q * trans[j, 1], Q)
                if cls:
                    cl[i] += 1
                    if cls == 2:
                        op[i] += 1
    return opened, closed


def first_mismatch(const int64_t[:, ::1] poly, const int64_t[:, ::1] trans, const int64_t[:, ::1] pts, int64_t k):
    cdef Py_ssize_t npts = pts.shape[0], nt = trans.shape[0]
    cdef Py_ssize_t i, j
    cdef int64_t X, Y, Q, o
    cdef int cls, on_boundary
    cdef Py_ssize_t found = -1
    with nogil:
        for i in range(npts):
            X = pts[i, 0]
            Y = pts[i, 1]
            Q = pts[i, 2]
            o = 0
            on_boundary = 0
            for j in range(nt):
                cls = _classify(poly, X - Q * trans[j, 0], Y - Q * trans[j, 1], Q)
                if cls == 1:
                    on_boundary = 1
                    break
                if cls == 2:
                    o += 1
            if not on_boundary and o != k:
                found = i
                break
    return found
