from __future__ import annotations

import sympy
from gmpy2 import mpq
from hypothesis import settings, strategies as st

from artinlab.poly import Polynomial

settings.register_profile("artinlab", max_examples=60, deadline=None)
settings.load_profile("artinlab")

small_rationals = st.builds(mpq, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def polynomials(draw, arity: int = 2, max_degree: int = 4, max_terms: int = 6):
    """Random polynomial with small exponents and rational coefficients."""
    mono = st.tuples(*[st.integers(0, max_degree)] * arity)
    terms = draw(st.dictionaries(mono, small_rationals, max_size=max_terms))
    return Polynomial(arity, {m: c for m, c in terms.items() if sum(m) <= max_degree})


def to_sympy(p: Polynomial, symbols):
    expr = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for s, e in zip(symbols, mono):
            term *= s ** e
        expr += term
    return sympy.expand(expr)


def from_sympy(expr, symbols) -> Polynomial:
    poly = sympy.Poly(expr, *symbols)
    return Polynomial(len(symbols), {m: mpq(int(c.p), int(c.q)) for m, c in poly.terms()})
