"""Sign tables, root-gap asymptotics, parameterised normal forms, interpolation matrices."""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from ..echelon import TrackedEchelon, solve_dense
from ..local import LocalIdeal, artinian_closure
from ..poly import Polynomial, monomials_below, to_rational
from .count import RefinementBudgetExceeded, RootEnclosure, count_real_roots
from .interval import Interval, bits_for, interval_determinant, precision, rational_box
from .systems import BoxRegion, SplitSystem, first_splitting_symbolic, h_poly
from .univariate import isolate_real_roots, umul, ueval

# sign table --------------------------------------------------------------------


def h_sign_table(a) -> list[tuple[mpq, mpq, int]]:
    """Exact values and signs of h at -2a, -a/2, 0, a."""
    a = to_rational(a)
    if a <= 0:
        raise ValueError("the sign table needs a > 0")
    h = h_poly(a)
    out = []
    for pt in (-2 * a, -a / 2, mpq(0), a):
        v = ueval(h, pt)
        out.append((pt, v, (v > 0) - (v < 0)))
    return out


# root gap ------------------------------------------------------------------------

@dataclass
class RootGapSample:
    a: mpq
    roots: list
    gap: mpq


def root_gap_sample(a, rel_precision: int = 40) -> RootGapSample:
    """Isolate the four real roots of y·h(y) and measure their least distance.

    Each root is refined until its interval is 2^-rel_precision times the
    smallest gap between neighbouring intervals, so the reported gap is
    exact to that relative accuracy.
    """
    a = to_rational(a)
    if a <= 0:
        raise ValueError("a must be positive")
    p = umul([mpq(0), mpq(1)], h_poly(a))
    roots = isolate_real_roots(p)
    if len(roots) != 4:
        raise ArithmeticError(f"expected 4 real roots of y*h(y), found {len(roots)}")
    while True:
        gaps = [roots[i + 1].lo - roots[i].hi for i in range(3)]
        lower = min(gaps)
        widest = max(r.width for r in roots)
        if lower > 0 and widest * 2 ** rel_precision <= lower:
            break
        for r in roots:
            r.refine(r.width / 4 if r.width else 0)
    mids = [r.midpoint() for r in roots]
    gap = min(mids[i + 1] - mids[i] for i in range(3))
    return RootGapSample(a, roots, gap)


def _log(q) -> float:
    # numerator and denominator separately: the quotient may underflow a float
    q = abs(mpq(q))
    return math.log(int(q.numerator)) - math.log(int(q.denominator))


def fit_loglog_slope(xs: Sequence, ys: Sequence) -> float:
    return statistics.linear_regression([_log(x) for x in xs], [_log(y) for y in ys]).slope


def min_root_gap(a_samples: Sequence) -> float:
    """Least-squares slope of log(min gap of roots of y·h(y)) against log(a)."""
    if len(a_samples) < 2:
        raise ValueError("need at least two parameter samples to fit a slope")
    samples = [root_gap_sample(a) for a in a_samples]
    return fit_loglog_slope([s.a for s in samples], [s.gap for s in samples])


# parameterised normal form ------------------------------------------------------

FIRST_MONOMIALS = tuple(sorted([(i, j) for i in range(3) for j in range(3)] + [(3, 0), (0, 3)],
                               key=lambda m: (sum(m), m)))
PARAM_NF_CAP = 8


@dataclass
class ParamNormalForm:
    """f = sum lam_s(a) s + sum mult_i g_i + a^N rem + tail, checked exactly.

    Polynomials live in (x_1..x_n, a); ``tail`` only has terms of
    (x)-degree >= ``tail_degree``, a range contained in (g, a^N) because
    the a = 0 ideal contains the ``certified_degree``-th power of the
    maximal ideal.
    """

    monomials: tuple
    coefficients: dict
    multipliers: list
    remainder: Polynomial
    tail: Polynomial
    rounds: int
    tail_degree: int
    certified_degree: int
    verified: bool = field(default=False)

    def coefficient(self, mono) -> Polynomial:
        return self.coefficients[tuple(mono)]


class _AtZeroReducer:
    """Tracked reduction modulo the a = 0 ideal, truncated at a fixed degree."""

    def __init__(self, gens0: Sequence[Polynomial], degree: int, monomials: Sequence):
        n = gens0[0].arity
        self.n = n
        self.degree = degree
        self.cols = monomials_below(n, degree)
        self.index = {m: i for i, m in enumerate(self.cols)}
        self.ech = TrackedEchelon()
        self.rows = []
        for j, g in enumerate(gens0):
            for m in monomials_below(n, degree - g.order()):
                prod = g * Polynomial.monomial(m)
                self.ech.add(self._vec(prod))
                self.rows.append((j, m))
        self.gens0 = gens0
        self.monomials = tuple(tuple(m) for m in monomials)
        self._prepared = {s: self._raw(Polynomial.monomial(s)) for s in self.monomials}
        mat = [[self._prepared[s][0].get(self.index[b], 0) for s in self.monomials] for b in self._basis_cols()]
        self._mat = mat
        if len(mat) != len(self.monomials):
            raise ValueError("monomial set size differs from the quotient dimension")

    def _vec(self, p: Polynomial) -> dict:
        return {self.index[m]: c for m, c in p.terms.items() if sum(m) < self.degree}

    def _basis_cols(self):
        return [m for m in self.cols if self.index[m] not in self.ech.pivots]

    def _raw(self, p: Polynomial):
        residual, combo = self.ech.reduce(self._vec(p))
        mults = [Polynomial.zero(self.n) for _ in self.gens0]
        for tag, c in combo.items():
            j, m = self.rows[tag]
            mults[j] = mults[j] + Polynomial.monomial(m, c)
        return residual, mults

    def reduce(self, p: Polynomial):
        """p = sum lam_s s + sum mult_j g0_j + tail, tail of degree >= self.degree."""
        residual, mults = self._raw(p)
        rhs = [residual.get(self.index[b], 0) for b in self._basis_cols()]
        lam = solve_dense(self._mat, rhs)
        if lam is None:
            raise ValueError("the monomial set is not a basis of the quotient at a = 0")
        for s, l in zip(self.monomials, lam):
            if l:
                smults = self._prepared[s][1]
                mults = [m - sm.scale(l) for m, sm in zip(mults, smults)]
        return dict(zip(self.monomials, lam)), mults


def _a_collect(p: Polynomial, n: int) -> dict[int, Polynomial]:
    return p.collect(n)


def _lift_with_a(p: Polynomial, power: int, n: int) -> Polynomial:
    """View an x-polynomial as a polynomial in (x, a) times a^power."""
    return Polynomial._raw(n + 1, {m + (power,): c for m, c in p.terms.items()})


def param_normal_form(f: Polynomial, rounds: int, gens: Sequence[Polynomial] | None = None,
                      monomials: Sequence | None = None, tail_factor: int | None = None) -> ParamNormalForm:
    """Reduce f(x, a) modulo (g(x, a), a^N) onto span(monomials) with coefficients in Q[a].

    Round k reduces every a-coefficient of F_k modulo the a = 0 ideal,
    then replaces g_i|_{a=0} by g_i - a E_i, which leaves the remainder
    F_(k+1) = -sum b_i E_i multiplied by a.
    """
    if not 1 <= rounds <= PARAM_NF_CAP:
        raise ValueError(f"rounds must be between 1 and {PARAM_NF_CAP}")
    gens = tuple(gens) if gens is not None else first_splitting_symbolic()
    monomials = tuple(monomials) if monomials is not None else FIRST_MONOMIALS
    n = gens[0].arity - 1
    if f.arity != n + 1:
        raise ValueError("f must be a polynomial in the system variables and a")
    gens0 = [g.specialize(n, 0) for g in gens]
    alg = artinian_closure(LocalIdeal(n, tuple(gens0)))
    c = alg.certified_degree
    k_tail = c * (tail_factor if tail_factor is not None else rounds)
    reducer = _AtZeroReducer(gens0, k_tail, monomials)
    errs = [(g - _lift_with_a(g0, 0, n)).divide_by_variable(n) for g, g0 in zip(gens, gens0)]

    a_var = Polynomial.variable(n, n + 1)
    lam = {s: Polynomial.zero(n + 1) for s in monomials}
    mults = [Polynomial.zero(n + 1) for _ in gens]
    tail = Polynomial.zero(n + 1)
    current = f
    for k in range(rounds):
        nxt = Polynomial.zero(n + 1)
        round_mults = [Polynomial.zero(n + 1) for _ in gens]
        for j, coeff in _a_collect(current, n).items():
            part_lam, part_mults = reducer.reduce(coeff)
            low = _lift_with_a(coeff, j, n)
            for s, v in part_lam.items():
                if v:
                    low = low - _lift_with_a(Polynomial.monomial(s, v), j, n)
                    lam[s] = lam[s] + Polynomial.monomial((0,) * n + (j + k,), v)
            for i, pm in enumerate(part_mults):
                lifted = _lift_with_a(pm, j, n)
                round_mults[i] = round_mults[i] + lifted
                low = low - lifted * _lift_with_a(gens0[i], 0, n)
            # what is left of this coefficient has x-degree >= k_tail
            tail = tail + low * a_var ** k
        for i, b in enumerate(round_mults):
            mults[i] = mults[i] + b * a_var ** k
            nxt = nxt - b * errs[i]
        current = nxt
    # coefficients are reported modulo a^N; overflow joins the remainder
    rem = current
    for s in monomials:
        keep = {m: v for m, v in lam[s].terms.items() if m[n] < rounds}
        over = {m: v for m, v in lam[s].terms.items() if m[n] >= rounds}
        lam[s] = Polynomial(n + 1, keep)
        if over:
            extra = Polynomial(n + 1, over).divide_by_variable(n, rounds)
            rem = rem + extra * Polynomial.monomial(s + (0,))
    result = ParamNormalForm(monomials, lam, mults, rem, tail, rounds, k_tail, c)
    result.verified = verify_param_normal_form(f, gens, result)
    return result


def verify_param_normal_form(f: Polynomial, gens: Sequence[Polynomial], r: ParamNormalForm) -> bool:
    n = f.arity - 1
    total = Polynomial.zero(n + 1)
    for s in r.monomials:
        total = total + r.coefficients[s] * Polynomial.monomial(tuple(s) + (0,))
        if any(m[n] >= r.rounds for m in r.coefficients[s].terms):
            return False
    for m, g in zip(r.multipliers, gens):
        total = total + m * g
    total = total + r.remainder * Polynomial.variable(n, n + 1) ** r.rounds + r.tail
    if total != f:
        return False
    return all(sum(m[:n]) >= r.tail_degree for m in r.tail.terms)


# interpolation ---------------------------------------------------------------------

@dataclass
class InterpolationReport:
    monomials: tuple
    samples: list = field(default_factory=list)   # (a, count, determinant interval)
    points: dict = field(default_factory=dict)    # a -> list of RootEnclosure
    fitted_order: float | None = None

    def certified(self) -> bool:
        return bool(self.samples) and all(d is not None and d.sign() != 0 for _, _, d in self.samples)

    def to_json(self) -> dict:
        return {
            "monomials": [list(m) for m in self.monomials],
            "samples": [{"a": str(a), "roots": n,
                         "determinant": None if d is None else [str(d.lo), str(d.hi)]}
                        for a, n, d in self.samples],
            "fitted_order": self.fitted_order,
        }


def interpolation_matrix(enclosures: Sequence[RootEnclosure], monomials: Sequence) -> list[list[Interval]]:
    rows = []
    for enc in enclosures:
        box = rational_box(enc.bounds)
        row = []
        for m in monomials:
            v = Interval.exact(1)
            for iv, e in zip(box, m):
                if e:
                    v = v * iv ** e
            row.append(v)
        rows.append(row)
    return rows


def certified_determinant(enclosures: Sequence[RootEnclosure], monomials: Sequence,
                          budget: int = 12) -> Interval | None:
    """Interval enclosure of det M excluding zero, refining the points as needed.

    Returns None if the budget runs out (e.g. a genuinely singular matrix).
    """
    for _ in range(budget):
        bounds = [b for e in enclosures for b in e.bounds]
        with precision(bits_for(bounds)):
            det = interval_determinant(interpolation_matrix(enclosures, monomials))
        if det is not None and det.sign() != 0:
            return det
        for e in enclosures:
            if e.point is None:
                e.refine(e.width() / 2 ** 32)
    return None


def interpolation_analysis(system_factory, monomials: Sequence, a_samples: Sequence,
                           box: BoxRegion, budget: int = 12) -> InterpolationReport:
    """Value-interpolation matrices at the certified zeroes for each sampled a.

    ``system_factory(a)`` builds the system; its real zeroes in ``box`` are
    the interpolation points.  The fitted order is the least-squares slope
    of log|det| against log(a), reported when at least two samples certify.
    """
    monomials = tuple(tuple(m) for m in monomials)
    report = InterpolationReport(monomials)
    for a in a_samples:
        a = to_rational(a)
        system: SplitSystem = system_factory(a)
        count, encs = count_real_roots(system, box)
        if count != len(monomials):
            raise ValueError(f"at a = {a}: {count} zeroes for {len(monomials)} monomials")
        for e in encs:
            if e.point is None:
                e.refine(e.width() if e.width() < a ** 4 else a ** 4)
        det = certified_determinant(encs, monomials, budget)
        if det is None:
            raise RefinementBudgetExceeded(f"interpolation determinant not certified at a = {a}")
        report.samples.append((a, count, det))
        report.points[a] = encs
    good = [(a, d) for a, _, d in report.samples if d is not None]
    if len(good) >= 2:
        report.fitted_order = fit_loglog_slope([a for a, _ in good], [d.midpoint() for _, d in good])
    return report
