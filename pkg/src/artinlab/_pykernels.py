"""Pure-Python hot kernels.  ``_ckernels.pyx`` is a line-for-line Cython twin.

Sparse vectors are ``dict[int, coefficient]``.  A pivot table maps a column
to a monic row whose largest column is that pivot; reduction always
eliminates the largest pivot column first, so it terminates.
"""
from heapq import heapify, heappop, heappush

BACKEND = "python"


def reduce_vector(vec, pivots):
    r = dict(vec)
    heap = [-c for c in r if c in pivots]
    heapify(heap)
    while heap:
        col = -heappop(heap)
        c = r.get(col)
        if c is None:
            continue
        for k, v in pivots[col].items():
            old = r.get(k)
            if old is None:
                r[k] = -c * v
                if k in pivots:
                    heappush(heap, -k)
            else:
                nv = old - c * v
                if nv:
                    r[k] = nv
                else:
                    del r[k]
    return r


def add_pivot(vec, pivots, min_col):
    """Reduce ``vec`` and store it as a new pivot row if its lead is >= min_col.

    Returns (pivot_column_or_None, reduced_vector).
    """
    r = reduce_vector(vec, pivots)
    if not r:
        return None, r
    p = max(r)
    if p < min_col:
        return None, r
    inv = 1 / r[p]
    pivots[p] = {k: v * inv for k, v in r.items()}
    return p, r


def interreduce(pivots):
    """Bring the pivot table to fully reduced form, in place."""
    for col in sorted(pivots):
        row = pivots[col]
        tail = {k: v for k, v in row.items() if k != col}
        red = reduce_vector(tail, pivots)
        red[col] = row[col]
        pivots[col] = red


def mul_terms(a, b, degree):
    """Multiply two term maps; if degree >= 0 drop terms of total degree >= degree."""
    out = {}
    if len(a) > len(b):
        a, b = b, a
    if degree >= 0:
        bl = [(m, c, sum(m)) for m, c in b.items()]
        for m1, c1 in a.items():
            d1 = sum(m1)
            if d1 >= degree:
                continue
            for m2, c2, d2 in bl:
                if d1 + d2 >= degree:
                    continue
                m = tuple([i + j for i, j in zip(m1, m2)])
                v = out.get(m)
                if v is None:
                    out[m] = c1 * c2
                else:
                    v = v + c1 * c2
                    if v:
                        out[m] = v
                    else:
                        del out[m]
    else:
        bl = list(b.items())
        for m1, c1 in a.items():
            for m2, c2 in bl:
                m = tuple([i + j for i, j in zip(m1, m2)])
                v = out.get(m)
                if v is None:
                    out[m] = c1 * c2
                else:
                    v = v + c1 * c2
                    if v:
                        out[m] = v
                    else:
                        del out[m]
    return out


def eval_homogenized(coeffs, p, q):
    """Return sum c_i p^i q^(d-i) for integer coefficients (ascending), d = len-1.

    Its sign is the sign of the polynomial at p/q when q > 0.
    """
    d = len(coeffs) - 1
    acc = coeffs[d]
    qpow = 1
    for i in range(d - 1, -1, -1):
        qpow *= q
        acc = acc * p + coeffs[i] * qpow
    return acc
