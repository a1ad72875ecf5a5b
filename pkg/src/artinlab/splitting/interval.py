"""Outward-rounded interval arithmetic on MPFR endpoints, plus Krawczyk tests.

Lower endpoints are computed in a round-toward-minus-infinity context and
upper endpoints toward plus infinity, so every enclosure is rigorous.
Comparisons against rational box bounds are exact.
"""
from __future__ import annotations

from contextlib import contextmanager
from typing import Sequence

import gmpy2
from gmpy2 import mpfr, mpq

from ..echelon import determinant, inverse
from ..poly import Polynomial

DEFAULT_PRECISION = 256

_ctx: dict = {}


def _contexts(bits: int):
    if bits not in _ctx:
        _ctx[bits] = (gmpy2.context(precision=bits, round=gmpy2.RoundDown),
                      gmpy2.context(precision=bits, round=gmpy2.RoundUp))
    return _ctx[bits]


_D, _U = _contexts(DEFAULT_PRECISION)
_bits = DEFAULT_PRECISION


def current_precision() -> int:
    return _bits


@contextmanager
def precision(bits: int):
    """Temporarily change the working precision of all interval operations."""
    global _D, _U, _bits
    saved = (_D, _U, _bits)
    _D, _U = _contexts(bits)
    _bits = bits
    try:
        yield
    finally:
        _D, _U, _bits = saved


def bits_for(bounds: Sequence[tuple]) -> int:
    """Working precision adequate for a rational box: resolve its width twice over."""
    need = DEFAULT_PRECISION
    for lo, hi in bounds:
        w = mpq(hi) - mpq(lo)
        if w > 0:
            need = max(need, 128 + 2 * (w.denominator.bit_length() - w.numerator.bit_length()))
    return need


def _down(q) -> mpfr:
    with gmpy2.context(_D):
        return mpfr(q)


def _up(q) -> mpfr:
    with gmpy2.context(_U):
        return mpfr(q)


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        self.lo = lo if isinstance(lo, type(mpfr(0))) else _down(lo)
        self.hi = hi if isinstance(hi, type(mpfr(0))) else _up(hi)
        if self.lo > self.hi:
            raise ValueError("interval lower bound exceeds upper bound")

    @classmethod
    def _make(cls, lo, hi) -> "Interval":
        iv = object.__new__(cls)
        iv.lo = lo
        iv.hi = hi
        return iv

    @classmethod
    def exact(cls, q) -> "Interval":
        q = mpq(q)
        return cls._make(_down(q), _up(q))

    def __add__(self, other):
        if not isinstance(other, Interval):
            other = Interval.exact(other)
        return Interval._make(_D.add(self.lo, other.lo), _U.add(self.hi, other.hi))

    __radd__ = __add__

    def __neg__(self):
        return Interval._make(-self.hi, -self.lo)

    def __sub__(self, other):
        if not isinstance(other, Interval):
            other = Interval.exact(other)
        return Interval._make(_D.sub(self.lo, other.hi), _U.sub(self.hi, other.lo))

    def __rsub__(self, other):
        return Interval.exact(other) - self

    def __mul__(self, other):
        if not isinstance(other, Interval):
            other = Interval.exact(other)
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        lo = min(_D.mul(a, c), _D.mul(a, d), _D.mul(b, c), _D.mul(b, d))
        hi = max(_U.mul(a, c), _U.mul(a, d), _U.mul(b, c), _U.mul(b, d))
        return Interval._make(lo, hi)

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.contains_zero():
            raise ZeroDivisionError("interval contains zero")
        return Interval._make(_D.div(1, self.hi), _U.div(1, self.lo))

    def __truediv__(self, other):
        if not isinstance(other, Interval):
            other = Interval.exact(other)
        return self * other.reciprocal()

    def __pow__(self, k: int):
        if k == 0:
            return Interval.exact(1)
        if k % 2 == 1 or self.lo >= 0:
            return Interval._make(_D.pow(self.lo, k), _U.pow(self.hi, k))
        if self.hi <= 0:
            return Interval._make(_D.pow(self.hi, k), _U.pow(self.lo, k))
        return Interval._make(mpfr(0), _U.pow(max(-self.lo, self.hi), k))

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int:
        """+1 or -1 if the interval has constant sign, 0 if it meets zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def magnitude(self) -> mpfr:
        return max(abs(self.lo), abs(self.hi))

    def mignitude(self) -> mpfr:
        if self.contains_zero():
            return mpfr(0)
        return min(abs(self.lo), abs(self.hi))

    def width(self) -> mpfr:
        return _U.sub(self.hi, self.lo)

    def midpoint(self) -> mpq:
        return (mpq(self.lo) + mpq(self.hi)) / 2

    def inside(self, lo: mpq, hi: mpq) -> bool:
        """Strictly inside the open rational interval (lo, hi)."""
        return mpq(self.lo) > lo and mpq(self.hi) < hi

    def intersect(self, other: "Interval") -> "Interval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval._make(lo, hi)

    def __repr__(self):
        return f"[{float(self.lo):.6g}, {float(self.hi):.6g}]"


# polynomials over boxes -----------------------------------------------------------

def eval_poly(p: Polynomial, box: Sequence[Interval]) -> Interval:
    """Naive interval extension: sum of coefficient * product of powers."""
    powers: dict = {}
    total = Interval.exact(0)
    for mono, c in p.terms.items():
        term = Interval.exact(c)
        for i, e in enumerate(mono):
            if e:
                key = (i, e)
                if key not in powers:
                    powers[key] = box[i] ** e
                term = term * powers[key]
        total = total + term
    return total


def point_box(point: Sequence) -> list[Interval]:
    return [Interval.exact(q) for q in point]


def rational_box(bounds: Sequence[tuple]) -> list[Interval]:
    return [Interval(mpq(lo), mpq(hi)) for lo, hi in bounds]


def interval_det_small(m: list[list[Interval]]) -> Interval:
    """Determinant of an interval matrix of size <= 3 by cofactor expansion."""
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return interval_determinant(m)


def _gauss_det(m: list[list[Interval]]) -> Interval | None:
    a = [row[:] for row in m]
    n = len(a)
    det = Interval.exact(1)
    for col in range(n):
        piv = max(range(col, n), key=lambda r: a[r][col].mignitude())
        if a[piv][col].contains_zero():
            return None
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = p.reciprocal()
        for r in range(col + 1, n):
            f = a[r][col] * inv
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def interval_determinant(m: list[list[Interval]]) -> Interval | None:
    """Enclosure of det M, or None if elimination cannot exclude a zero pivot.

    M is preconditioned by an approximate inverse C of its midpoint (a
    dyadic matrix whose determinant is computed exactly), so elimination
    runs on C·M, which is close to the identity.
    """
    n = len(m)
    mid = [[x.midpoint() for x in row] for row in m]
    approx = inverse(mid)
    if approx is None:
        return _gauss_det(m)
    # round C to working-precision dyadics: any matrix is a valid preconditioner
    c = [[mpq(mpfr(x)) for x in row] for row in approx]
    det_c = determinant(c)
    if det_c == 0:
        return _gauss_det(m)
    ci = [[Interval.exact(x) for x in row] for row in c]
    cm = [[_dot(ci[i], [m[k][j] for k in range(n)]) for j in range(n)] for i in range(n)]
    d = _gauss_det(cm)
    if d is None:
        return None
    return d / Interval.exact(det_c)


def _dot(u: Sequence[Interval], v: Sequence[Interval]) -> Interval:
    acc = Interval.exact(0)
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


# Krawczyk operator ------------------------------------------------------------------

def jacobian_polys(polys: Sequence[Polynomial]) -> list[list[Polynomial]]:
    n = len(polys)
    return [[p.diff(j) for j in range(n)] for p in polys]


def exact_jacobian(jac: list[list[Polynomial]], point: Sequence) -> list[list[mpq]]:
    return [[q.evaluate(point) for q in row] for row in jac]


def excluded(polys: Sequence[Polynomial], bounds: Sequence[tuple]) -> bool:
    """True if some polynomial provably has no zero on the rational box."""
    with precision(bits_for(bounds)):
        box = rational_box(bounds)
        return any(not eval_poly(p, box).contains_zero() for p in polys)


def krawczyk(polys: Sequence[Polynomial], jac: list[list[Polynomial]], bounds: Sequence[tuple]):
    """Apply the Krawczyk operator on the rational box ``bounds``.

    Returns (verdict, K) with verdict "unique" if K lies strictly inside the
    box (exactly one zero there, and it lies in K), "empty" if K misses the
    box (no zero), or "unknown".
    """
    with precision(bits_for(bounds)):
        return _krawczyk(polys, jac, bounds)


def _krawczyk(polys, jac, bounds):
    n = len(polys)
    centre = [(mpq(lo) + mpq(hi)) / 2 for lo, hi in bounds]
    box = rational_box(bounds)
    jc = exact_jacobian(jac, centre)
    y = inverse(jc)
    if y is None:
        return "unknown", None
    yi = [[Interval.exact(mpq(mpfr(v))) for v in row] for row in y]
    fc = [eval_poly(p, point_box(centre)) for p in polys]
    jx = [[eval_poly(q, box) for q in row] for row in jac]
    diff = [box[j] - centre[j] for j in range(n)]
    k = []
    for i in range(n):
        acc = Interval.exact(centre[i]) - _dot(yi[i], fc)
        for j in range(n):
            coef = Interval.exact(int(i == j)) - _dot(yi[i], [jx[r][j] for r in range(n)])
            acc = acc + coef * diff[j]
        k.append(acc)
    if all(k[i].inside(mpq(bounds[i][0]), mpq(bounds[i][1])) for i in range(n)):
        return "unique", k
    if any(k[i].intersect(box[i]) is None for i in range(n)):
        return "empty", k
    return "unknown", k
