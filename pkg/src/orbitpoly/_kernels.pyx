# cython: language_level=3
"""Compiled inner-loop kernels: chamber reduction and orbit pair sums.

Same API as _kernels_py; points travel as sequences of int tuples and come
back as dicts keyed by int tuples, so callers never notice which backend
answered.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


def reduce_to_dominant(cartan, w):
    cdef Py_ssize_t n = len(w)
    cdef long long *v = <long long *> malloc(n * sizeof(long long))
    cdef long long *m = <long long *> malloc(n * n * sizeof(long long))
    if v == NULL or m == NULL:
        free(v); free(m)
        raise MemoryError()
    cdef Py_ssize_t i, k
    cdef long long c
    cdef long long steps = 0
    try:
        for i in range(n):
            v[i] = w[i]
            row = cartan[i]
            for k in range(n):
                m[i * n + k] = row[k]
        while True:
            for i in range(n):
                if v[i] < 0:
                    break
            else:
                break
            c = v[i]
            for k in range(n):
                v[k] -= c * m[i * n + k]
            steps += 1
        return tuple(v[i] for i in range(n)), <int> (steps & 1)
    finally:
        free(v)
        free(m)


cdef long long * _flatten(points, Py_ssize_t na, Py_ssize_t n) except NULL:
    cdef long long *buf = <long long *> malloc(na * n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, k
    for i in range(na):
        p = points[i]
        for k in range(n):
            buf[i * n + k] = p[k]
    return buf


def pair_counts_dominant(points_a, points_b):
    counts = {}
    cdef Py_ssize_t na = len(points_a)
    cdef Py_ssize_t nb = len(points_b)
    if na == 0 or nb == 0:
        return counts
    cdef Py_ssize_t n = len(points_a[0])
    cdef long long *pa = _flatten(points_a, na, n)
    cdef long long *pb = _flatten(points_b, nb, n)
    cdef long long s[16]
    cdef Py_ssize_t i, j, k
    cdef bint ok
    try:
        for i in range(na):
            for j in range(nb):
                ok = True
                for k in range(n):
                    s[k] = pa[i * n + k] + pb[j * n + k]
                    if s[k] < 0:
                        ok = False
                        break
                if ok:
                    key = tuple(s[k] for k in range(n))
                    counts[key] = counts.get(key, 0) + 1
        return counts
    finally:
        free(pa)
        free(pb)


def pair_counts_signed(points_a, par_a, points_b, par_b, strict):
    counts = {}
    cdef Py_ssize_t na = len(points_a)
    cdef Py_ssize_t nb = len(points_b)
    if na == 0 or nb == 0:
        return counts
    cdef Py_ssize_t n = len(points_a[0])
    cdef long long lo = 1 if strict else 0
    cdef long long *pa = _flatten(points_a, na, n)
    cdef long long *pb = _flatten(points_b, nb, n)
    cdef char *sa = <char *> malloc(na)
    cdef char *sb = <char *> malloc(nb)
    cdef long long s[16]
    cdef Py_ssize_t i, j, k
    cdef int sign
    cdef bint ok
    if sa == NULL or sb == NULL:
        free(pa); free(pb); free(sa); free(sb)
        raise MemoryError()
    try:
        for i in range(na):
            sa[i] = par_a[i] & 1
        for j in range(nb):
            sb[j] = par_b[j] & 1
        for i in range(na):
            for j in range(nb):
                ok = True
                for k in range(n):
                    s[k] = pa[i * n + k] + pb[j * n + k]
                    if s[k] < lo:
                        ok = False
                        break
                if ok:
                    sign = -1 if (sa[i] ^ sb[j]) else 1
                    key = tuple(s[k] for k in range(n))
                    counts[key] = counts.get(key, 0) + sign
        return {k2: v for k2, v in counts.items() if v != 0}
    finally:
        free(pa); free(pb); free(sa); free(sb)


def pair_counts_raw(points_a, par_a, points_b, par_b):
    counts = {}
    cdef Py_ssize_t na = len(points_a)
    cdef Py_ssize_t nb = len(points_b)
    if na == 0 or nb == 0:
        return counts
    cdef Py_ssize_t n = len(points_a[0])
    cdef long long *pa = _flatten(points_a, na, n)
    cdef long long *pb = _flatten(points_b, nb, n)
    cdef long long s[16]
    cdef Py_ssize_t i, j, k
    try:
        for i in range(na):
            for j in range(nb):
                for k in range(n):
                    s[k] = pa[i * n + k] + pb[j * n + k]
                key = tuple(s[k] for k in range(n))
                slot = counts.get(key)
                if slot is None:
                    slot = [0, 0]
                    counts[key] = slot
                slot[(par_a[i] + par_b[j]) & 1] += 1
        return counts
    finally:
        free(pa); free(pb)
