"""Sparse exact row echelon forms built on the kernel layer.

Columns are nonnegative integers; the pivot of a row is its largest column.
Callers order columns so that "largest" means "largest monomial" in the
term order they care about.  Tracking columns (negative integers) record
which input rows were combined, which gives multipliers and null spaces
without a second elimination.
"""
from __future__ import annotations

from gmpy2 import mpq

from . import kernels


def _tag_col(tag: int) -> int:
    return -1 - tag


class Echelon:
    """Incremental semi-echelon basis of a subspace of sparse vectors."""

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, vec: dict) -> int | None:
        p, _ = kernels.add_pivot(vec, self.pivots, 0)
        return p

    def extend(self, vecs) -> None:
        for v in vecs:
            kernels.add_pivot(v, self.pivots, 0)

    def reduce(self, vec: dict) -> dict:
        return kernels.reduce_vector(vec, self.pivots)

    def contains(self, vec: dict) -> bool:
        return not kernels.reduce_vector(vec, self.pivots)

    def interreduce(self) -> None:
        kernels.interreduce(self.pivots)


class TrackedEchelon:
    """Echelon form that remembers how each pivot row was built from inputs.

    Input ``j`` gets the tracking column ``-1 - j``.  After :meth:`reduce`,
    ``vec == residual + sum(coeff[j] * input[j])``.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}
        self.relations: list[dict[int, mpq]] = []
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, vec: dict) -> int:
        tag = self.count
        self.count += 1
        v = dict(vec)
        v[_tag_col(tag)] = mpq(1)
        p, r = kernels.add_pivot(v, self.pivots, 0)
        if p is None:
            # real part vanished: what is left is a linear relation among inputs
            self.relations.append({-1 - k: c for k, c in r.items()})
        return tag

    def reduce(self, vec: dict) -> tuple[dict, dict]:
        """Return (residual on non-pivot columns, {input tag: coefficient})."""
        r = kernels.reduce_vector(vec, self.pivots)
        residual = {k: v for k, v in r.items() if k >= 0}
        combo = {-1 - k: -v for k, v in r.items() if k < 0}
        return residual, combo


def rank(vectors) -> int:
    e = Echelon()
    e.extend(vectors)
    return e.rank


def nullspace(vectors) -> list[dict[int, mpq]]:
    """Basis of {c : sum c_j vectors[j] = 0}, as sparse dicts over input indices."""
    t = TrackedEchelon()
    for v in vectors:
        t.add(v)
    return t.relations


def same_span(first, second) -> bool:
    """True iff two finite families of sparse vectors span the same subspace."""
    a = Echelon()
    a.extend(first)
    b = Echelon()
    b.extend(second)
    if a.rank != b.rank:
        return False
    return all(a.contains(v) for v in b.pivots.values())


def solve_dense(matrix: list[list], rhs: list) -> list | None:
    """Solve a square exact system; None if singular."""
    n = len(matrix)
    a = [[mpq(x) for x in row] + [mpq(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def determinant(matrix: list[list]) -> mpq:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[mpq(x) for x in row] for row in matrix]
    n = len(a)
    det = mpq(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return mpq(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def inverse(matrix: list[list]) -> list[list] | None:
    n = len(matrix)
    a = [[mpq(x) for x in row] + [mpq(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
