"""Exact univariate polynomials over Q: Sturm sequences and real-root isolation.

A polynomial is a list of coefficients in ascending degree with no
trailing zeros (the zero polynomial is ``[]``).  Sign evaluations run on
primitive integer copies through the homogeneous Horner kernel, so no
rational is ever formed at the evaluation points.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import floor

from gmpy2 import gcd, mpq, mpz

from .. import kernels
from ..poly import to_rational


def strip(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p: list) -> int:
    return len(p) - 1


def uderivative(p: list) -> list:
    return strip([i * p[i] for i in range(1, len(p))])


def usub(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return strip([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def umul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return strip(out)


def udivmod(p: list, q: list) -> tuple[list, list]:
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    r = [mpq(c) for c in p]
    dq = degree(q)
    lead = mpq(q[-1])
    quot = [mpq(0)] * max(len(p) - dq, 0)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if not c:
            continue
        f = c / lead
        quot[k - dq] = f
        for j in range(dq + 1):
            r[k - dq + j] -= f * q[j]
    return strip(quot), strip(r[:dq] if dq > 0 else [])


def umonic(p: list) -> list:
    if not p:
        return []
    lead = mpq(p[-1])
    return [mpq(c) / lead for c in p]


def ugcd(p: list, q: list) -> list:
    a, b = strip(p), strip(q)
    while b:
        a, b = b, udivmod(a, b)[1]
    return umonic(a)


def squarefree(p: list) -> list:
    p = strip(p)
    if degree(p) < 1:
        return umonic(p)
    g = ugcd(p, uderivative(p))
    return umonic(udivmod(p, g)[0])


def primitive_integer(p: list) -> list:
    """Positive rational multiple of p with coprime integer coefficients."""
    p = strip([to_rational(c) for c in p])
    if not p:
        return []
    den = mpz(1)
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [mpz(c * den) for c in p]
    g = mpz(0)
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def ueval(p: list, x) -> mpq:
    acc = mpq(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_at(ip: list, x: mpq) -> int:
    """Sign of an integer-coefficient polynomial at a rational point."""
    if not ip:
        return 0
    x = mpq(x)
    v = kernels.eval_homogenized(ip, x.numerator, x.denominator)
    return (v > 0) - (v < 0)


def cauchy_bound(p: list) -> mpq:
    p = strip(p)
    lead = abs(mpq(p[-1]))
    return 1 + max((abs(mpq(c)) / lead for c in p[:-1]), default=mpq(0))


def sturm_sequence(p: list) -> list[list]:
    """Sturm chain of p as primitive integer polynomials."""
    p = strip(p)
    seq = [primitive_integer(p)]
    if degree(p) < 1:
        return seq
    seq.append(primitive_integer(uderivative(p)))
    while degree(seq[-1]) > 0:
        r = udivmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(primitive_integer([-c for c in r]))
    return seq


def sign_changes(seq: list[list], x) -> int:
    last = 0
    n = 0
    for q in seq:
        s = sign_at(q, x)
        if s:
            if last and s != last:
                n += 1
            last = s
    return n


def simplest_between(lo, hi) -> mpq:
    """The rational with least denominator in the closed interval [lo, hi]."""
    lo, hi = mpq(lo), mpq(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return mpq(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    terms = []
    while True:
        fl = mpz(floor(lo))
        if fl == lo:
            terms.append(mpq(fl))
            break
        if fl + 1 <= hi:
            terms.append(mpq(fl + 1))
            break
        terms.append(mpq(fl))
        lo, hi = 1 / (hi - fl), 1 / (lo - fl)
    value = terms[-1]
    for t in reversed(terms[:-1]):
        value = t + 1 / value
    return value


@dataclass
class RealRoot:
    """A real root of a squarefree polynomial.

    Either ``exact`` is the rational root itself (and lo == hi == exact),
    or the open interval (lo, hi) holds exactly one root and the
    polynomial has opposite nonzero signs at its endpoints.
    """

    lo: mpq
    hi: mpq
    poly: list = field(repr=False)
    exact: mpq | None = None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def width(self) -> mpq:
        return self.hi - self.lo

    def midpoint(self) -> mpq:
        return self.exact if self.exact is not None else (self.lo + self.hi) / 2

    def bisect(self) -> None:
        if self.exact is not None:
            return
        mid = (self.lo + self.hi) / 2
        s = sign_at(self.poly, mid)
        if s == 0:
            self.lo = self.hi = self.exact = mid
        elif s == sign_at(self.poly, self.lo):
            self.lo = mid
        else:
            self.hi = mid

    def refine(self, width) -> "RealRoot":
        width = mpq(width)
        while self.exact is None and self.hi - self.lo > width:
            self.bisect()
        return self

    def settle_rationality(self) -> bool:
        """Decide whether the root is rational; if so make it exact.

        A rational root p/q of the primitive integer polynomial has q
        dividing the leading coefficient c.  Two distinct rationals with
        denominators at most |c| are at least 1/c^2 apart, so once the
        interval is narrower than that, the simplest rational inside it is
        the only possible candidate.
        """
        if self.exact is not None:
            return True
        lead = abs(self.poly[-1])
        self.refine(mpq(1, 2 * lead * lead))
        if self.exact is not None:
            return True
        s = simplest_between(self.lo, self.hi)
        if lead % s.denominator == 0 and sign_at(self.poly, s) == 0:
            self.lo = self.hi = self.exact = s
            return True
        return False

    def to_json(self) -> dict:
        if self.exact is not None:
            return {"exact": str(self.exact)}
        return {"lo": str(self.lo), "hi": str(self.hi)}


def count_roots(p: list, lo, hi) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    seq = sturm_sequence(squarefree(p))
    return sign_changes(seq, mpq(lo)) - sign_changes(seq, mpq(hi))


def isolate_real_roots(p: list, lo=None, hi=None, settle: bool = True) -> list[RealRoot]:
    """Isolate the distinct real roots of p in the closed interval [lo, hi].

    Without bounds the whole real line is covered (Cauchy bound).  With
    ``settle`` every rational root is returned in exact form.
    """
    p = strip([to_rational(c) for c in p])
    if not p:
        raise ValueError("the zero polynomial has no isolated roots")
    if degree(p) == 0:
        return []
    sf = squarefree(p)
    ip = primitive_integer(sf)
    seq = sturm_sequence(sf)
    if lo is None or hi is None:
        b = cauchy_bound(sf)
        lo = -b if lo is None else lo
        hi = b if hi is None else hi
    lo, hi = mpq(lo), mpq(hi)
    roots: list[RealRoot] = []
    if sign_at(ip, lo) == 0:
        roots.append(RealRoot(lo, lo, ip, lo))
    stack = [(lo, hi, sign_changes(seq, lo), sign_changes(seq, hi))]
    found = []
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        # n distinct roots in (a, b]
        if n == 1:
            sb = sign_at(ip, b)
            if sb == 0:
                found.append(RealRoot(b, b, ip, b))
                continue
            if sign_at(ip, a) != 0:
                found.append(RealRoot(a, b, ip))
                continue
        m = (a + b) / 2
        vm = sign_changes(seq, m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    roots.extend(found)
    roots.sort(key=lambda r: r.lo)
    if settle:
        for r in roots:
            r.settle_rationality()
    return roots
