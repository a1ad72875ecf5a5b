"""Artinian quotients of the power-series ring at the origin.

The quotient R/I (R = Q[[x_1..x_n]]) is computed inside the truncated ring
R/m^D: the span of all monomial multiples of the generators, with terms of
degree >= D discarded, is row-reduced with the grlex-largest monomial as
pivot.  If dim R/(I + m^D) == dim R/(I + m^(D-1)) then m^(D-1) lies in
I + m^D, hence (Nakayama) in I, and the truncation is exact from then on.
That stabilisation is the Artinian certificate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .echelon import Echelon
from .poly import ArityError, Polynomial, default_names, monomials_below, parse_poly, to_rational

DEFAULT_DEGREE_CAP = 40


class NotArtinian(ArithmeticError):
    def __init__(self, degree_cap: int):
        super().__init__(f"no Artinian certificate found up to degree {degree_cap}")
        self.degree_cap = degree_cap


class EmptyIdeal(ValueError):
    pass


@dataclass(frozen=True)
class LocalIdeal:
    """Ideal of Q[[x_1..x_n]] given by polynomial generators vanishing at 0."""

    arity: int
    generators: tuple[Polynomial, ...]
    variables: tuple[str, ...] = field(default=())

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.arity != self.arity:
                raise ArityError(f"generator arity {g.arity} differs from ideal arity {self.arity}")
            if g.constant_term() != 0:
                raise ValueError(f"generator {g} does not vanish at the origin")
        if self.arity > 0 and not gens:
            raise EmptyIdeal("all generators are zero")
        object.__setattr__(self, "generators", gens)
        names = tuple(self.variables) or tuple(default_names(self.arity))
        if len(names) != self.arity:
            raise ArityError("variable names do not match arity")
        object.__setattr__(self, "variables", names)

    @classmethod
    def parse(cls, generators: Sequence[str], variables: Sequence[str]) -> "LocalIdeal":
        return cls(len(variables), tuple(parse_poly(g, variables) for g in generators), tuple(variables))

    def max_degree(self) -> int:
        return max((g.total_degree() for g in self.generators), default=0)


def _truncated_span(gens, arity: int, degree: int):
    """Echelon of truncated monomial multiples of ``gens`` inside R/m^degree."""
    monos = monomials_below(arity, degree)
    index = {m: i for i, m in enumerate(monos)}
    ech = Echelon()
    for g in gens:
        low = g.order()
        terms = list(g.terms.items())
        for m in monomials_below(arity, degree - low):
            vec = {}
            for t, c in terms:
                s = tuple([a + b for a, b in zip(t, m)])
                if sum(s) < degree:
                    vec[index[s]] = c
            if vec:
                ech.add(vec)
    return monos, index, ech


def truncated_dimension(ideal: LocalIdeal, degree: int) -> int:
    """dim R/(I + m^degree), by a fresh elimination (no certificate involved)."""
    monos, _, ech = _truncated_span(ideal.generators, ideal.arity, degree)
    return len(monos) - ech.rank


class QuotientAlgebra:
    """Certified finite-dimensional local algebra Q[[x]]/I.

    ``certified_degree`` is N with m^N contained in I; ``basis`` lists the
    standard monomials (grlex ascending, so ``basis[0]`` is 1).
    """

    def __init__(self, ideal: LocalIdeal, certified_degree: int, monos, index, ech: Echelon):
        self.ideal = ideal
        self.arity = ideal.arity
        self.certified_degree = certified_degree
        self.working_degree = certified_degree + 1
        ech.interreduce()
        pivots = ech.pivots
        self.basis: tuple = tuple(m for m in monos if index[m] not in pivots)
        self._pos = {m: k for k, m in enumerate(self.basis)}
        col_to_pos = {index[m]: k for m, k in self._pos.items()}
        # pivot monomial -> its normal form as [(basis position, coefficient)]
        self.reduction_table: dict = {}
        for col, row in pivots.items():
            mono = monos[col]
            self.reduction_table[mono] = [(col_to_pos[k], -v) for k, v in row.items() if k != col]
        self.staircase = self._minimal_leading(set(self.reduction_table))

    def _minimal_leading(self, leading: set) -> tuple:
        out = []
        for m in leading:
            minimal = True
            for i, e in enumerate(m):
                if e and (m[:i] + (e - 1,) + m[i + 1:]) in leading:
                    minimal = False
                    break
            if minimal:
                out.append(m)
        return tuple(sorted(out, key=lambda m: (sum(m), m)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ideal.variables

    def pure_powers(self) -> list[int]:
        """Least e_i with x_i^e_i in the leading-monomial ideal (the Artinian witness)."""
        out = []
        for i in range(self.arity):
            e = 1
            while True:
                m = tuple(e if j == i else 0 for j in range(self.arity))
                if m not in self._pos:
                    out.append(e)
                    break
                e += 1
        return out

    # elements ---------------------------------------------------------------

    def normal_form(self, p: Polynomial) -> "QuotientElement":
        if p.arity != self.arity:
            raise ArityError(f"polynomial arity {p.arity} differs from algebra arity {self.arity}")
        coords = [mpq(0)] * self.dim
        n = self.certified_degree
        pos = self._pos
        table = self.reduction_table
        for m, c in p.terms.items():
            if sum(m) >= n:
                continue
            k = pos.get(m)
            if k is not None:
                coords[k] += c
            else:
                for k, v in table[m]:
                    coords[k] += c * v
        return QuotientElement(self, tuple(coords))

    def element(self, p: Polynomial | str) -> "QuotientElement":
        if isinstance(p, str):
            p = parse_poly(p, self.variables)
        return self.normal_form(p)

    def from_coordinates(self, coords: Sequence) -> "QuotientElement":
        if len(coords) != self.dim:
            raise ValueError("coordinate vector length differs from the algebra dimension")
        return QuotientElement(self, tuple(to_rational(c) for c in coords))

    def one(self) -> "QuotientElement":
        return self.normal_form(Polynomial.constant(1, self.arity))

    def zero(self) -> "QuotientElement":
        return QuotientElement(self, (mpq(0),) * self.dim)

    def basis_element(self, k: int) -> "QuotientElement":
        coords = [mpq(0)] * self.dim
        coords[k] = mpq(1)
        return QuotientElement(self, tuple(coords))

    def member(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def describe(self) -> dict:
        names = self.variables
        return {
            "variables": list(names),
            "dimension": self.dim,
            "certified_degree": self.certified_degree,
            "basis": [Polynomial.monomial(m).format(names) for m in self.basis],
            "staircase": [Polynomial.monomial(m).format(names) for m in self.staircase],
        }

    def __repr__(self):
        return f"QuotientAlgebra(dim={self.dim}, certified_degree={self.certified_degree})"


class QuotientElement:
    """Class of a polynomial in a QuotientAlgebra, stored as basis coordinates."""

    __slots__ = ("algebra", "coordinates")

    def __init__(self, algebra: QuotientAlgebra, coordinates: tuple):
        if len(coordinates) != algebra.dim:
            raise ValueError("coordinate vector length differs from the algebra dimension")
        self.algebra = algebra
        self.coordinates = coordinates

    def _check(self, other: "QuotientElement"):
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def constant_coordinate(self) -> mpq:
        return self.coordinates[0]

    def lift(self) -> Polynomial:
        basis = self.algebra.basis
        return Polynomial._raw(self.algebra.arity, {basis[k]: c for k, c in enumerate(self.coordinates) if c})

    def sparse(self) -> dict[int, mpq]:
        return {k: c for k, c in enumerate(self.coordinates) if c}

    def __add__(self, other):
        self._check(other)
        return QuotientElement(self.algebra, tuple(a + b for a, b in zip(self.coordinates, other.coordinates)))

    def __sub__(self, other):
        self._check(other)
        return QuotientElement(self.algebra, tuple(a - b for a, b in zip(self.coordinates, other.coordinates)))

    def __neg__(self):
        return QuotientElement(self.algebra, tuple(-a for a in self.coordinates))

    def __mul__(self, other):
        if isinstance(other, QuotientElement):
            self._check(other)
            alg = self.algebra
            return alg.normal_form(self.lift().mul_truncated(other.lift(), alg.certified_degree))
        c = to_rational(other)
        return QuotientElement(self.algebra, tuple(c * a for a in self.coordinates))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coordinates == other.coordinates

    def __hash__(self):
        return hash(self.coordinates)

    def format(self) -> str:
        return self.lift().format(self.algebra.variables)

    def __repr__(self):
        return f"[{self.format()}]"


# operations --------------------------------------------------------------------

def artinian_closure(ideal: LocalIdeal, degree_cap: int = DEFAULT_DEGREE_CAP) -> QuotientAlgebra:
    """Certify that ``ideal`` contains a power of the maximal ideal and build R/I."""
    prev = 0
    for degree in range(1, degree_cap + 2):
        monos, index, ech = _truncated_span(ideal.generators, ideal.arity, degree)
        dim = len(monos) - ech.rank
        if dim == prev:
            return QuotientAlgebra(ideal, degree - 1, monos, index, ech)
        prev = dim
    raise NotArtinian(degree_cap)


def normal_form(algebra: QuotientAlgebra, p: Polynomial) -> QuotientElement:
    return algebra.normal_form(p)


def member(algebra: QuotientAlgebra, p: Polynomial) -> bool:
    return algebra.member(p)


def quotient_dim(algebra: QuotientAlgebra) -> int:
    return algebra.dim


def nilpotency_index(e: QuotientElement) -> int | None:
    """Least k >= 1 with e^k = 0; None when e is a unit (nonzero constant part)."""
    if e.constant_coordinate() != 0:
        return None
    power = e
    k = 1
    # e lies in m, so e^N = 0 for the certified degree N
    while not power.is_zero():
        if k > e.algebra.certified_degree:
            raise AssertionError("nilpotency bound exceeded; certificate is inconsistent")
        power = power * e
        k += 1
    return k


def principal_ideal_dim(e: QuotientElement) -> int:
    """Dimension of the ideal A*e, spanned by the products (basis monomial)*e."""
    alg = e.algebra
    lifted = e.lift()
    ech = Echelon()
    for m in alg.basis:
        prod = lifted.mul_truncated(Polynomial.monomial(m), alg.certified_degree)
        ech.add(alg.normal_form(prod).sparse())
    return ech.rank


def quotient(generators: Sequence[str], variables: Sequence[str], degree_cap: int = DEFAULT_DEGREE_CAP) -> QuotientAlgebra:
    """Convenience: parse generators and build the certified quotient."""
    return artinian_closure(LocalIdeal.parse(generators, variables), degree_cap)
