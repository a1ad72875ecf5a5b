"""Jacobian ideals, Milnor algebras and the Briançon–Skoda exponent."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .local import DEFAULT_DEGREE_CAP, LocalIdeal, QuotientAlgebra, artinian_closure
from .poly import Polynomial, default_names

FAMILY_MAX_N = 3


class ExponentSearchError(RuntimeError):
    """f^k stayed outside the Jacobian ideal past the nilpotency bound."""


@dataclass(frozen=True)
class JacobianData:
    f: Polynomial
    delta: LocalIdeal
    milnor_algebra: QuotientAlgebra

    @property
    def milnor_number(self) -> int:
        return self.milnor_algebra.dim


def jacobian_ideal(f: Polynomial, variables: Sequence[str] | None = None) -> LocalIdeal:
    """The ideal of first partials of f, in variable order."""
    if f.constant_term() != 0:
        raise ValueError("f must vanish at the origin")
    names = tuple(variables) if variables else tuple(default_names(f.arity))
    return LocalIdeal(f.arity, tuple(f.diff(i) for i in range(f.arity)), names)


def jacobian_data(f: Polynomial, variables: Sequence[str] | None = None,
                  degree_cap: int = DEFAULT_DEGREE_CAP) -> JacobianData:
    delta = jacobian_ideal(f, variables)
    return JacobianData(f, delta, artinian_closure(delta, degree_cap))


def bs_exponent(f: Polynomial, degree_cap: int = DEFAULT_DEGREE_CAP,
                algebra: QuotientAlgebra | None = None) -> int:
    """Least k >= 1 with f^k in the Jacobian ideal of f.

    Membership is tested on the polynomial power itself, truncated at the
    certified degree, not on products of quotient elements.
    """
    alg = algebra if algebra is not None else jacobian_data(f, degree_cap=degree_cap).milnor_algebra
    n = alg.certified_degree
    power = f.truncate(n - 1)
    # f lies in m, so f^k = 0 in the quotient once k >= n; also k <= dim
    bound = min(n, alg.dim) if alg.dim else 1
    for k in range(1, bound + 1):
        if alg.member(power):
            return k
        power = power.mul_truncated(f, n)
    raise ExponentSearchError(f"no exponent found up to the bound {bound}")


def family(n: int) -> Polynomial:
    """sum_i x_i^(3n-1) + (x_1 ... x_n)^3 in n variables."""
    if not 1 <= n <= FAMILY_MAX_N:
        raise ValueError(f"family is supported for 1 <= n <= {FAMILY_MAX_N}, got {n}")
    terms = {}
    for i in range(n):
        terms[tuple(3 * n - 1 if j == i else 0 for j in range(n))] = 1
    mono = (3,) * n
    terms[mono] = terms.get(mono, 0) + 1
    return Polynomial(n, terms)
