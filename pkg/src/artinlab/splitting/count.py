"""Certified real-root counting, global complex counts and transversality."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from gmpy2 import mpq

from ..echelon import Echelon, determinant
from ..poly import Polynomial, grlex_key, monomials_below
from .interval import (Interval, bits_for, eval_poly, excluded, exact_jacobian, interval_det_small,
                       jacobian_polys, krawczyk, precision, rational_box)
from .resultant import DegenerateResultant, resultant
from .systems import BoxRegion, SplitSystem
from .univariate import RealRoot, count_roots, isolate_real_roots, strip, ugcd

DEFAULT_REFINEMENT_BUDGET = 200


class RefinementBudgetExceeded(RuntimeError):
    pass


class NotZeroDimensional(ArithmeticError):
    pass


@dataclass
class RootEnclosure:
    """A box holding exactly one real solution.

    ``coords`` are per-coordinate root objects that can be narrowed; in
    the resultant path each is a root of the corresponding resultant, so
    narrowing never loses the solution.  ``certificate`` names the proof:
    "exact" (rational point checked by substitution), "gcd-sturm" (one
    coordinate rational, the other counted by Sturm on the gcd of the
    specialised equations) or "krawczyk".
    """

    coords: list
    certificate: str
    system: SplitSystem | None = field(default=None, repr=False)

    @property
    def bounds(self) -> tuple[tuple[mpq, mpq], ...]:
        out = []
        for c in self.coords:
            if isinstance(c, RealRoot):
                out.append((c.lo, c.hi))
            else:
                out.append(c)
        return tuple(out)

    @property
    def point(self) -> tuple | None:
        if all(isinstance(c, RealRoot) and c.is_exact for c in self.coords):
            return tuple(c.exact for c in self.coords)
        return None

    def centre(self) -> tuple:
        return tuple((lo + hi) / 2 for lo, hi in self.bounds)

    def width(self) -> mpq:
        return max(hi - lo for lo, hi in self.bounds)

    def box(self) -> list[Interval]:
        return rational_box(self.bounds)

    def refine(self, width) -> "RootEnclosure":
        width = mpq(width)
        if all(isinstance(c, RealRoot) for c in self.coords):
            for c in self.coords:
                c.refine(width)
            return self
        # seeded boxes: contract with Krawczyk steps while they stay certified
        polys = self.system.polys
        jac = jacobian_polys(polys)
        while self.width() > width:
            verdict, k = krawczyk(polys, jac, self.bounds)
            if verdict != "unique":
                break
            new = [(max(lo, mpq(iv.lo)), min(hi, mpq(iv.hi))) for (lo, hi), iv in zip(self.bounds, k)]
            if max(hi - lo for lo, hi in new) >= self.width():
                break
            self.coords = new
        return self

    def contains(self, point: Sequence) -> bool:
        return all(lo <= v <= hi for v, (lo, hi) in zip(point, self.bounds))

    def to_json(self) -> dict:
        p = self.point
        out = {"certificate": self.certificate, "box": [[str(lo), str(hi)] for lo, hi in self.bounds]}
        if p is not None:
            out["point"] = [str(v) for v in p]
        return out


def _univariate_in(p: Polynomial, keep: int, value: mpq) -> list:
    u = p.specialize(1 - keep, value)
    d = u.total_degree()
    return strip([u.coefficient((k,)) for k in range(d + 1)]) if d >= 0 else []


def _decide_pair(system: SplitSystem, xr: RealRoot, yr: RealRoot, jac, budget: int) -> RootEnclosure | None:
    g = system.polys
    if xr.is_exact and yr.is_exact:
        pt = (xr.exact, yr.exact)
        if all(p.evaluate(pt) == 0 for p in g):
            return RootEnclosure([xr, yr], "exact", system)
        return None
    if xr.is_exact or yr.is_exact:
        fixed, free = (0, 1) if xr.is_exact else (1, 0)
        value = (xr, yr)[fixed].exact
        u1 = _univariate_in(g[0], free, value)
        u2 = _univariate_in(g[1], free, value)
        common = ugcd(u1, u2)
        if not common:
            raise DegenerateResultant("both equations vanish on a coordinate line")
        root = (xr, yr)[free]
        if len(common) > 1 and count_roots(common, root.lo, root.hi) == 1:
            return RootEnclosure([xr, yr], "gcd-sturm", system)
        return None
    for _ in range(budget):
        bounds = [(xr.lo, xr.hi), (yr.lo, yr.hi)]
        if excluded(g, bounds):
            return None
        verdict, _ = krawczyk(g, jac, bounds)
        if verdict == "unique":
            return RootEnclosure([xr, yr], "krawczyk", system)
        if verdict == "empty":
            return None
        for r in (xr, yr):
            for _ in range(4):
                r.bisect()
        if xr.is_exact or yr.is_exact:
            return _decide_pair(system, xr, yr, jac, budget)
    raise RefinementBudgetExceeded("could not decide a candidate box")


def count_real_roots(system: SplitSystem, box: BoxRegion,
                     budget: int = DEFAULT_REFINEMENT_BUDGET) -> tuple[int, list[RootEnclosure]]:
    """Exact number of real solutions of a bivariate system in a closed box."""
    if system.arity != 2 or len(system.polys) != 2:
        raise ValueError("exact real counting needs a square bivariate system")
    if box.dimension != 2:
        raise ValueError("box dimension must be 2")
    g1, g2 = system.polys
    rx = resultant(g1, g2, var=1)
    ry = resultant(g1, g2, var=0)
    (xlo, xhi), (ylo, yhi) = box.bounds
    xs = isolate_real_roots(rx, xlo, xhi)
    ys = isolate_real_roots(ry, ylo, yhi)
    jac = jacobian_polys(system.polys)
    enclosures = []
    for xr in xs:
        for yr in ys:
            enc = _decide_pair(system, xr, yr, jac, budget)
            if enc is not None:
                enclosures.append(enc)
    enclosures.sort(key=lambda e: e.centre())
    return len(enclosures), enclosures


def transversality_check(system: SplitSystem, enclosures: Sequence[RootEnclosure],
                         budget: int = DEFAULT_REFINEMENT_BUDGET) -> bool:
    """True iff the Jacobian determinant is certified nonzero on every enclosure."""
    jac = jacobian_polys(system.polys)
    for enc in enclosures:
        pt = enc.point
        if pt is not None:
            if determinant(exact_jacobian(jac, pt)) == 0:
                return False
            continue
        for _ in range(budget):
            with precision(bits_for(enc.bounds)):
                box = enc.box()
                det = interval_det_small([[eval_poly(q, box) for q in row] for row in jac])
            if det.sign() != 0:
                break
            enc.refine(enc.width() / 16)
        else:
            raise RefinementBudgetExceeded("Jacobian sign not certified within budget")
    return True


def certify_seeded(system: SplitSystem, seeds: Sequence[Sequence], radius,
                   budget: int = 60) -> list[RootEnclosure]:
    """Certify one solution in the box seed ± radius for each seed (Krawczyk).

    Seeds whose box provably holds no solution are dropped; a box that can
    be neither certified nor excluded raises RefinementBudgetExceeded.
    """
    polys = system.polys
    jac = jacobian_polys(polys)
    radius = mpq(radius)
    out = []
    for seed in seeds:
        bounds = [(mpq(s) - radius, mpq(s) + radius) for s in seed]
        for _ in range(budget):
            if excluded(polys, bounds):
                bounds = None
                break
            verdict, k = krawczyk(polys, jac, bounds)
            if verdict == "unique":
                out.append(RootEnclosure(list(bounds), "krawczyk", system))
                break
            if verdict == "empty":
                bounds = None
                break
            # Newton-type recentring: shrink the box around the Krawczyk image midpoint
            new = []
            for (lo, hi), iv in zip(bounds, k):
                c = iv.midpoint()
                r = (hi - lo) / 4
                new.append((c - r, c + r))
            bounds = new
        else:
            raise RefinementBudgetExceeded(f"seed {tuple(str(s) for s in seed)} not decided")
    return out


# global complex count -------------------------------------------------------------

def _lead(p: dict):
    return max(p, key=grlex_key)


def _reduce_full(p: dict, basis: list[dict]) -> dict:
    """Multivariate division remainder with respect to grlex leading terms."""
    p = dict(p)
    rem: dict = {}
    leads = [(_lead(g), g) for g in basis]
    while p:
        m = _lead(p)
        c = p[m]
        for lm, g in leads:
            if all(a >= b for a, b in zip(m, lm)):
                f = c / g[lm]
                shift = tuple(a - b for a, b in zip(m, lm))
                for gm, gc in g.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    v = p.get(t, 0) - f * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f: dict, g: dict) -> dict:
    lf, lg = _lead(f), _lead(g)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    out: dict = {}
    for poly, lm, sign in ((f, lf, 1), (g, lg, -1)):
        shift = tuple(a - b for a, b in zip(lcm, lm))
        scale = sign / poly[lm]
        for m, c in poly.items():
            t = tuple(a + b for a, b in zip(m, shift))
            v = out.get(t, 0) + scale * c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


def groebner_by_degree(polys: Sequence[Polynomial], degree_cap: int = 40) -> tuple[list[dict], int]:
    """Reduced grlex Groebner basis read off a Macaulay matrix, verified by Buchberger's criterion."""
    n = polys[0].arity
    start = max(p.total_degree() for p in polys)
    gens = [dict(p.terms) for p in polys if not p.is_zero()]
    for degree in range(start, degree_cap + 1):
        monos = monomials_below(n, degree + 1)
        index = {m: i for i, m in enumerate(monos)}
        ech = Echelon()
        for p in polys:
            for m in monomials_below(n, degree - p.total_degree() + 1):
                ech.add({index[tuple(a + b for a, b in zip(t, m))]: c for t, c in p.terms.items()})
        ech.interreduce()
        minimal = [c for c in ech.pivots
                   if not any(monos[d] != monos[c] and all(a >= b for a, b in zip(monos[c], monos[d]))
                              for d in ech.pivots)]
        basis = [{monos[k]: v for k, v in ech.pivots[c].items()} for c in minimal]
        if all(not _reduce_full(g, basis) for g in gens) and all(
                not _reduce_full(_spoly(basis[i], basis[j]), basis)
                for i in range(len(basis)) for j in range(i + 1, len(basis))):
            return basis, degree
    raise NotZeroDimensional(f"no verified Groebner basis up to degree {degree_cap}")


def standard_monomial_count(basis: list[dict], arity: int) -> int:
    leads = [_lead(g) for g in basis]
    caps = []
    for i in range(arity):
        pure = [lm[i] for lm in leads if all(e == 0 for j, e in enumerate(lm) if j != i)]
        if not pure:
            raise NotZeroDimensional("the ideal has positive dimension")
        caps.append(min(pure))
    count = 0
    for m in product(*(range(c) for c in caps)):
        if not any(all(a >= b for a, b in zip(m, lm)) for lm in leads):
            count += 1
    return count


def complex_root_count(system: SplitSystem, degree_cap: int = 40) -> int:
    """Number of complex solutions counted with multiplicity (global quotient dimension)."""
    basis, _ = groebner_by_degree(system.polys, degree_cap)
    return standard_monomial_count(basis, system.arity)
