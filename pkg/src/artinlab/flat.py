"""Prolongation, flat elements, Weil-algebra tensor products and pushouts.

Prolongation lemma (generator level).  For an ideal I = (g_1..g_r) put
G_k = sum_i y_i dg_k/dx_i.  For any f = sum h_k g_k in I,

    sum_i y_i df/dx_i = sum_k h_k G_k + sum_k g_k (sum_i y_i dh_k/dx_i),

and the last sum lies in I(x)·(y).  Hence the ideal generated by I(x) and
the G_k already contains sum_i y_i df/dx_i for every f in I, so prolonging
the generators gives the full prolonged ideal.  ``tests/test_flat.py``
checks this on random multipliers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .echelon import Echelon, nullspace, same_span
from .local import LocalIdeal, QuotientAlgebra, QuotientElement, artinian_closure, nilpotency_index
from .poly import ArityError, Polynomial, monomials_below


# prolongation -----------------------------------------------------------------

@dataclass(frozen=True)
class ProlongedIdeal:
    base: LocalIdeal
    prolonged: LocalIdeal

    @property
    def arity(self) -> int:
        return self.base.arity


def _tangent_names(names: Sequence[str]) -> tuple[str, ...]:
    taken = set(names)
    out = []
    for v in names:
        t = "d" + v
        while t in taken:
            t += "_"
        taken.add(t)
        out.append(t)
    return tuple(out)


def directional_derivative(p: Polynomial, arity: int) -> Polynomial:
    """sum_i y_i dp/dx_i as a polynomial in (x_1..x_n, y_1..y_n)."""
    n = arity
    out = Polynomial.zero(2 * n)
    for i in range(n):
        d = p.diff(i).embed(2 * n)
        out = out + d * Polynomial.variable(n + i, 2 * n)
    return out


def prolong(ideal: LocalIdeal) -> ProlongedIdeal:
    n = ideal.arity
    gens = [g.embed(2 * n) for g in ideal.generators]
    gens += [directional_derivative(g, n) for g in ideal.generators]
    names = tuple(ideal.variables) + _tangent_names(ideal.variables)
    return ProlongedIdeal(ideal, LocalIdeal(2 * n, tuple(gens), names))


def _y_degree(mono, n: int) -> int:
    return sum(mono[n:])


def prolonged_slice_member(pro: ProlongedIdeal, target: Polynomial, x_degree: int) -> bool:
    """Membership of a y-linear polynomial in the prolonged ideal.

    The prolonged generators are homogeneous in y (degree 0 or 1), so the
    ideal is y-graded and a y-linear target only meets the y-linear slice.
    That slice contains y_i·m_x^x_degree whenever m^x_degree lies in the
    base ideal, so all x-degrees >= x_degree may be discarded.
    """
    n = pro.arity
    if target.arity != 2 * n:
        raise ArityError("target must live in the prolonged ring")
    if any(_y_degree(m, n) != 1 for m in target.terms):
        raise ValueError("target must be linear homogeneous in the tangent variables")
    x_monos = monomials_below(n, x_degree)
    cols = {}
    for i in range(n):
        for b in x_monos:
            cols[b + tuple(int(j == i) for j in range(n))] = len(cols)

    def vec(p: Polynomial) -> dict:
        return {cols[m]: c for m, c in p.terms.items() if sum(m[:n]) < x_degree}

    ech = Echelon()
    for g in pro.prolonged.generators:
        low = min(sum(m[:n]) for m in g.terms)
        need_y = 1 - min(_y_degree(m, n) for m in g.terms)
        multipliers = []
        for a in monomials_below(n, x_degree - low):
            if need_y:
                multipliers += [a + tuple(int(j == i) for j in range(n)) for i in range(n)]
            else:
                multipliers.append(a + (0,) * n)
        for mono in multipliers:
            row = vec(g * Polynomial.monomial(mono))
            if row:
                ech.add(row)
    return ech.contains(vec(target))


# flat elements ----------------------------------------------------------------

def _check_arity(algebra: QuotientAlgebra, p: Polynomial) -> None:
    if p.arity != algebra.arity:
        raise ArityError(f"polynomial arity {p.arity} differs from algebra arity {algebra.arity}")


def _gradient_vector(algebra: QuotientAlgebra, p: Polynomial) -> dict:
    """Normal forms of all partials of p, flattened into one sparse vector."""
    dim = algebra.dim
    out = {}
    for i in range(algebra.arity):
        for k, c in algebra.normal_form(p.diff(i)).sparse().items():
            out[i * dim + k] = c
    return out


def default_flat_budget(algebra: QuotientAlgebra) -> int:
    return algebra.certified_degree + algebra.ideal.max_degree()


def flat_member_c2(algebra: QuotientAlgebra, p: Polynomial, degree_budget: int | None = None) -> bool:
    """Is there g in I (deg g <= budget) with every partial of p - g in I?

    g ranges over the span of monomial multiples m·g_k; the search is the
    linear question of whether grad(p) lies in the span of grad(m·g_k),
    everything taken modulo I.
    """
    _check_arity(algebra, p)
    budget = default_flat_budget(algebra) if degree_budget is None else degree_budget
    n_cert = algebra.certified_degree
    ech = Echelon()
    for g in algebra.ideal.generators:
        deg, low = g.total_degree(), g.order()
        # partials of m·g have order >= deg m + low - 1; those >= N vanish
        top = min(budget - deg, n_cert - low)
        if top < 0:
            continue
        for m in monomials_below(algebra.arity, top + 1):
            v = _gradient_vector(algebra, g * Polynomial.monomial(m))
            if v:
                ech.add(v)
    return ech.contains(_gradient_vector(algebra, p))


def flat_member_c1(algebra: QuotientAlgebra, p: Polynomial) -> bool:
    """Is sum_i y_i dp/dx_i in the prolonged ideal, at the origin fiber?"""
    _check_arity(algebra, p)
    pro = prolong(algebra.ideal)
    target = directional_derivative(p, algebra.arity)
    if target.is_zero():
        return True
    return prolonged_slice_member(pro, target, algebra.certified_degree)


# tensor products and morphisms --------------------------------------------------

def real_line() -> QuotientAlgebra:
    """The zero-variable Weil algebra (the scalars)."""
    return artinian_closure(LocalIdeal(0, ()))


def _joint_names(first: Sequence[str], second: Sequence[str]) -> tuple[str, ...]:
    taken = set(first)
    out = list(first)
    for v in second:
        w = v
        while w in taken:
            w += "'"
        taken.add(w)
        out.append(w)
    return tuple(out)


def _joint_ideal(a: QuotientAlgebra, b: QuotientAlgebra, extra=()) -> LocalIdeal:
    n, m = a.arity, b.arity
    total = n + m
    gens = [g.embed(total) for g in a.ideal.generators]
    gens += [g.embed(total, range(n, total)) for g in b.ideal.generators]
    gens += list(extra)
    return LocalIdeal(total, tuple(gens), _joint_names(a.variables, b.variables))


def weil_tensor(a: QuotientAlgebra, w: QuotientAlgebra) -> QuotientAlgebra:
    """A ⊗ W: the joint ring modulo both generator sets."""
    t = artinian_closure(_joint_ideal(a, w))
    assert t.dim == a.dim * w.dim, "tensor of certified quotients must multiply dimensions"
    return t


class AlgebraMorphism:
    """Local homomorphism given by the images of the source variables."""

    def __init__(self, source: QuotientAlgebra, target: QuotientAlgebra, images: Sequence[QuotientElement]):
        if len(images) != source.arity:
            raise ValueError("need one image per source variable")
        for e in images:
            if e.algebra is not target:
                raise ValueError("images must be elements of the target algebra")
            if e.constant_coordinate() != 0:
                raise ValueError("a local homomorphism sends variables into the maximal ideal")
        self.source = source
        self.target = target
        self.images = tuple(images)
        self._image_polys = [e.lift() for e in images]
        for g in source.ideal.generators:
            if not self.apply_poly(g).is_zero():
                raise ValueError(f"generator {g.format(source.variables)} does not map to zero")

    @classmethod
    def from_strings(cls, source: QuotientAlgebra, target: QuotientAlgebra, images: Sequence[str]):
        return cls(source, target, [target.element(s) for s in images])

    @classmethod
    def augmentation(cls, source: QuotientAlgebra) -> "AlgebraMorphism":
        r = real_line()
        return cls(source, r, [r.zero()] * source.arity)

    @classmethod
    def identity(cls, source: QuotientAlgebra) -> "AlgebraMorphism":
        return cls(source, source, [source.normal_form(Polynomial.variable(i, source.arity))
                                    for i in range(source.arity)])

    def substitute(self, p: Polynomial, images: Sequence[Polynomial], degree: int) -> Polynomial:
        out = Polynomial.zero(images[0].arity if images else 0)
        powers: dict = {}
        for mono, c in p.terms.items():
            term = Polynomial.constant(c, out.arity)
            for i, e in enumerate(mono):
                if e:
                    key = (i, e)
                    if key not in powers:
                        pw = Polynomial.constant(1, out.arity)
                        for _ in range(e):
                            pw = pw.mul_truncated(images[i], degree)
                        powers[key] = pw
                    term = term.mul_truncated(powers[key], degree)
            out = out + term
        return out

    def apply_poly(self, p: Polynomial) -> QuotientElement:
        t = self.target
        if self.source.arity == 0:
            return t.normal_form(Polynomial.constant(p.constant_term(), t.arity))
        return t.normal_form(self.substitute(p, self._image_polys, t.certified_degree))

    def __call__(self, e: QuotientElement) -> QuotientElement:
        return self.apply_poly(e.lift())

    def kernel(self) -> list[QuotientElement]:
        """Basis of ker φ, as source elements."""
        src = self.source
        images = [self(src.basis_element(k)).sparse() for k in range(src.dim)]
        out = []
        for rel in nullspace(images):
            coords = [0] * src.dim
            for k, c in rel.items():
                coords[k] = c
            out.append(src.from_coordinates(coords))
        return out


def _tensor_map_images(a: QuotientAlgebra, phi: AlgebraMorphism, t: QuotientAlgebra, t2: QuotientAlgebra) -> list[dict]:
    """Images of the monomial basis of A⊗W under id⊗φ, as sparse vectors of A⊗W'."""
    n = a.arity
    w_images = [e.lift().embed(t2.arity, range(n, t2.arity)) for e in phi.images]
    out = []
    for mono in t.basis:
        x_part = Polynomial.monomial(mono[:n] + (0,) * phi.target.arity)
        w_part = Polynomial.monomial(mono[n:])
        if phi.source.arity:
            img = phi.substitute(w_part, w_images, t2.certified_degree)
        else:
            img = Polynomial.constant(1, t2.arity)
        out.append(t2.normal_form(x_part.mul_truncated(img, t2.certified_degree)).sparse())
    return out


def tensor_kernel_report(a: QuotientAlgebra, phi: AlgebraMorphism) -> dict:
    t = weil_tensor(a, phi.source)
    t2 = weil_tensor(a, phi.target)
    images = _tensor_map_images(a, phi, t, t2)
    kernel_vecs = []
    for rel in nullspace(images):
        kernel_vecs.append(rel)
    n = a.arity
    gens = [k.lift().embed(t.arity, range(n, t.arity)) for k in phi.kernel()]
    ideal_vecs = []
    for g in gens:
        for mono in t.basis:
            prod = g.mul_truncated(Polynomial.monomial(mono), t.certified_degree)
            v = t.normal_form(prod).sparse()
            if v:
                ideal_vecs.append(v)
    ker_rank = Echelon()
    ker_rank.extend(kernel_vecs)
    ideal_rank = Echelon()
    ideal_rank.extend(ideal_vecs)
    return {
        "tensor_dim": t.dim,
        "target_tensor_dim": t2.dim,
        "kernel_dim": ker_rank.rank,
        "generated_ideal_dim": ideal_rank.rank,
        "equal": same_span(kernel_vecs, ideal_vecs),
    }


def tensor_kernel_check(a: QuotientAlgebra, phi: AlgebraMorphism) -> bool:
    """Does ker(id⊗φ) equal the ideal of A⊗W generated by ker φ?"""
    return tensor_kernel_report(a, phi)["equal"]


class PushoutPreconditionError(ValueError):
    pass


def pushout_algebra(a: QuotientAlgebra, a0: QuotientElement, b: QuotientAlgebra, b0: QuotientElement) -> QuotientAlgebra:
    na, nb = nilpotency_index(a0), nilpotency_index(b0)
    if na is None or nb is None or na != nb or na < 2:
        raise PushoutPreconditionError(
            f"a0 and b0 need a common nilpotency index >= 2, got {na} and {nb}")
    n, m = a.arity, b.arity
    rel = a0.lift().embed(n + m) - b0.lift().embed(n + m, range(n, n + m))
    return artinian_closure(_joint_ideal(a, b, [rel]))


def pushout_injective(a: QuotientAlgebra, a0: QuotientElement, b: QuotientAlgebra, b0: QuotientElement) -> bool:
    """Is A -> A⊗B/(a0 - b0) injective?"""
    c = pushout_algebra(a, a0, b, b0)
    ech = Echelon()
    for mono in a.basis:
        ech.add(c.normal_form(Polynomial.monomial(mono + (0,) * b.arity)).sparse())
    return ech.rank == a.dim
