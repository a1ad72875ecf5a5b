"""The two parameterised splitting systems and the boxes they are counted in."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from gmpy2 import mpq

from ..poly import Polynomial, default_names, parse_poly, to_rational

SECOND_MAX_N = 3


@dataclass(frozen=True)
class SplitSystem:
    """Square polynomial system with the parameter a already substituted."""

    name: str
    polys: tuple[Polynomial, ...]
    a: mpq
    variables: tuple[str, ...]

    @property
    def arity(self) -> int:
        return len(self.variables)

    def evaluate(self, point: Sequence) -> list[mpq]:
        return [p.evaluate(point) for p in self.polys]

    def describe(self) -> dict:
        return {
            "name": self.name,
            "a": str(self.a),
            "variables": list(self.variables),
            "polys": [p.format(self.variables) for p in self.polys],
        }


@dataclass(frozen=True)
class BoxRegion:
    bounds: tuple[tuple[mpq, mpq], ...]

    def __post_init__(self):
        clean = tuple((to_rational(lo), to_rational(hi)) for lo, hi in self.bounds)
        for lo, hi in clean:
            if lo > hi:
                raise ValueError(f"empty box side [{lo}, {hi}]")
        object.__setattr__(self, "bounds", clean)

    @classmethod
    def square(cls, lo, hi, n: int = 2) -> "BoxRegion":
        return cls(tuple((lo, hi) for _ in range(n)))

    @classmethod
    def parse(cls, text: str) -> "BoxRegion":
        """Parse ``lo:hi,lo:hi`` with rational endpoints such as ``-1/4:1/4``."""
        sides = []
        for part in text.split(","):
            lo, sep, hi = part.strip().partition(":")
            if not sep:
                raise ValueError(f"box side {part!r} is not of the form lo:hi")
            sides.append((mpq(lo.strip()), mpq(hi.strip())))
        return cls(tuple(sides))

    @property
    def dimension(self) -> int:
        return len(self.bounds)

    def contains(self, point: Sequence) -> bool:
        return all(lo <= v <= hi for v, (lo, hi) in zip(point, self.bounds))

    def to_json(self) -> list:
        return [[str(lo), str(hi)] for lo, hi in self.bounds]


# first splitting ---------------------------------------------------------------

_G1 = "x*(5*(x^3 + a*x^2 - a^4*x - a^5 - 2/5*a^4) + 2*y^2)"
_G2 = "y*(5*(y^3 + a*y^2 - a^4*y - a^5 - 2/5*a^4) + 2*x^2)"


def first_splitting_symbolic() -> tuple[Polynomial, Polynomial]:
    """g1, g2 as polynomials in (x, y, a)."""
    names = ["x", "y", "a"]
    return parse_poly(_G1, names), parse_poly(_G2, names)


def first_splitting(a) -> SplitSystem:
    a = to_rational(a)
    polys = tuple(g.specialize(2, a) for g in first_splitting_symbolic())
    return SplitSystem("first", polys, a, ("x", "y"))


def h_poly(a) -> list:
    """h(y) = y^3 + a y^2 - a^4 y - a^5 - (2/5) a^4, ascending coefficients."""
    a = to_rational(a)
    return [-a ** 5 - mpq(2, 5) * a ** 4, -a ** 4, a, mpq(1)]


# second splitting ----------------------------------------------------------------

def second_splitting_symbolic(n: int) -> tuple[Polynomial, ...]:
    """h_1..h_n as polynomials in (x_1..x_n, a)."""
    if not 1 <= n <= SECOND_MAX_N:
        raise ValueError(f"second splitting is supported for 1 <= n <= {SECOND_MAX_N}, got {n}")
    ar = n + 1
    a = Polynomial.variable(n, ar)
    out = []
    for i in range(n):
        xi = Polynomial.variable(i, ar)
        prod = Polynomial.constant(3 * n - 1, ar)
        for k in range(1, 3 * n - 1):
            prod = prod * (xi - a.scale(k))
        mono = [3] * n + [0]
        mono[i] = 2
        out.append(prod + Polynomial.monomial(mono, 3))
    return tuple(out)


def second_splitting(n: int, a) -> SplitSystem:
    a = to_rational(a)
    polys = tuple(h.specialize(n, a) for h in second_splitting_symbolic(n))
    return SplitSystem(f"second-{n}", polys, a, tuple(default_names(n)))


def predicted_second_points(n: int, a) -> list[tuple]:
    """The points (k_1 a, ..., k_n a), 1 <= k_i <= 3n-2, that the zeroes approach."""
    a = to_rational(a)
    return [tuple(k * a for k in ks) for ks in product(range(1, 3 * n - 1), repeat=n)]
