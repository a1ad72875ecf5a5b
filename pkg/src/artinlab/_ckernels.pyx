# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Coefficients stay Python objects (gmpy2 rationals); the gain comes from
typed loop variables, direct dict C-API access and no bytecode dispatch.
"""
from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_DelItem, PyDict_Contains
from cpython.object cimport PyObject
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM, PyTuple_GET_SIZE
from cpython.ref cimport Py_INCREF
from heapq import heapify, heappop, heappush

BACKEND = "cython"


cpdef dict reduce_vector(dict vec, dict pivots):
    cdef dict r = dict(vec)
    cdef dict prow
    cdef list heap = [-c for c in r if c in pivots]
    cdef long col
    cdef object c, k, v, nv
    cdef PyObject* old
    heapify(heap)
    while heap:
        col = -<long>heappop(heap)
        old = PyDict_GetItem(r, col)
        if old is NULL:
            continue
        c = <object>old
        prow = <dict>pivots[col]
        for k, v in prow.items():
            old = PyDict_GetItem(r, k)
            if old is NULL:
                PyDict_SetItem(r, k, -c * v)
                if PyDict_Contains(pivots, k):
                    heappush(heap, -k)
            else:
                nv = <object>old - c * v
                if nv:
                    PyDict_SetItem(r, k, nv)
                else:
                    PyDict_DelItem(r, k)
    return r


cpdef tuple add_pivot(dict vec, dict pivots, long min_col):
    cdef dict r = reduce_vector(vec, pivots)
    cdef long p
    cdef object inv
    if not r:
        return None, r
    p = max(r)
    if p < min_col:
        return None, r
    inv = 1 / r[p]
    pivots[p] = {k: v * inv for k, v in r.items()}
    return p, r


cpdef void interreduce(dict pivots):
    cdef dict row, tail, red
    for col in sorted(pivots):
        row = <dict>pivots[col]
        tail = {k: v for k, v in row.items() if k != col}
        red = reduce_vector(tail, pivots)
        red[col] = row[col]
        pivots[col] = red


cdef inline tuple _add_exps(tuple m1, tuple m2, Py_ssize_t n):
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object e
    for i in range(n):
        e = <long>(<object>PyTuple_GET_ITEM(m1, i)) + <long>(<object>PyTuple_GET_ITEM(m2, i))
        Py_INCREF(e)
        PyTuple_SET_ITEM(out, i, e)
    return out


cdef inline long _deg(tuple m):
    cdef long s = 0
    cdef Py_ssize_t i
    for i in range(PyTuple_GET_SIZE(m)):
        s += <long>(<object>PyTuple_GET_ITEM(m, i))
    return s


cpdef dict mul_terms(dict a, dict b, long degree):
    cdef dict out = {}
    cdef list al, bl
    cdef tuple m1, m2, m
    cdef object c1, c2, v
    cdef PyObject* old
    cdef long d1, d2
    cdef Py_ssize_t n, i, j, na, nb
    if len(a) > len(b):
        a, b = b, a
    if not a or not b:
        return out
    al = [(m1_, c1_, _deg(m1_)) for m1_, c1_ in a.items()]
    bl = [(m2_, c2_, _deg(m2_)) for m2_, c2_ in b.items()]
    n = PyTuple_GET_SIZE(<tuple>al[0][0])
    na = len(al)
    nb = len(bl)
    for i in range(na):
        m1, c1, d1 = al[i]
        if degree >= 0 and d1 >= degree:
            continue
        for j in range(nb):
            m2, c2, d2 = bl[j]
            if degree >= 0 and d1 + d2 >= degree:
                continue
            m = _add_exps(m1, m2, n)
            old = PyDict_GetItem(out, m)
            if old is NULL:
                PyDict_SetItem(out, m, c1 * c2)
            else:
                v = <object>old + c1 * c2
                if v:
                    PyDict_SetItem(out, m, v)
                else:
                    PyDict_DelItem(out, m)
    return out


cpdef object eval_homogenized(list coeffs, object p, object q):
    cdef Py_ssize_t d = len(coeffs) - 1
    cdef Py_ssize_t i
    cdef object acc = coeffs[d]
    cdef object qpow = 1
    for i in range(d - 1, -1, -1):
        qpow = qpow * q
        acc = acc * p + coeffs[i] * qpow
    return acc
