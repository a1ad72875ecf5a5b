from __future__ import annotations

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, strategies as st

from artinlab.poly import (ArityError, MAX_ARITY, Polynomial, PolynomialSyntaxError, UnknownVariableError,
                           evaluate, format_poly, mul, parse_poly, partial_derivative, pow, truncate)
from artinlab.splitting import first_splitting, h_poly

from conftest import from_sympy, polynomials, small_rationals, to_sympy

XY = ["x", "y"]
F = "x^5 + x^2*y^2 + y^5"


def P(text, names=XY):
    return parse_poly(text, names)


# parsing ---------------------------------------------------------------------------

def test_parse_jacobian_generator():
    p = P("5*x^4 + 2*x*y^2")
    assert p.terms == {(4, 0): 5, (1, 2): 2}


def test_parse_zero():
    p = parse_poly("0", ["x"])
    assert p.is_zero() and p.terms == {}


def test_parse_power_of_product():
    assert P("(x*y)^3") == Polynomial.monomial((3, 3))


def test_parse_rationals_and_whitespace():
    assert P(" 2/6 * x -  y ") == Polynomial(2, {(1, 0): mpq(1, 3), (0, 1): -1})


def test_parse_reports_position():
    with pytest.raises(PolynomialSyntaxError) as info:
        P("x + * y")
    assert info.value.position == 4


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariableError):
        P("x + z")


def test_zero_denominator_rejected():
    with pytest.raises(PolynomialSyntaxError):
        P("x/0")


def test_format_is_grlex_descending():
    assert format_poly(P("y + x + x*y + 1 + y^2 + x^2")) == "x^2 + x*y + y^2 + x + y + 1"


@given(polynomials(arity=3))
def test_parse_print_roundtrip(p):
    names = ["x", "y", "z"]
    assert parse_poly(p.format(names), names) == p


# ring laws -------------------------------------------------------------------------

def test_monomial_product():
    assert mul(P("x"), P("5*x^3")) == P("5*x^4")


def test_zeroth_power_is_one():
    assert pow(P(F), 0) == Polynomial.constant(1, 2)


def test_binomial_square():
    assert pow(P("x + y"), 2) == P("x^2 + 2*x*y + y^2")


def test_arity_mismatch():
    with pytest.raises(ArityError):
        P("x") + parse_poly("x", ["x"])


def test_arity_cap():
    with pytest.raises(ArityError):
        Polynomial.zero(MAX_ARITY + 1)


def test_arity_zero_constants():
    c = Polynomial.constant(3, 0)
    assert (c * c).constant_term() == 9


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p and p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero(2)


@given(polynomials(), polynomials())
def test_product_matches_sympy(p, q):
    x, y = sympy.symbols("x y")
    assert p * q == from_sympy(to_sympy(p, (x, y)) * to_sympy(q, (x, y)), (x, y))


@given(polynomials(max_degree=3), st.integers(0, 4))
def test_power_matches_repeated_product(p, k):
    expected = Polynomial.constant(1, 2)
    for _ in range(k):
        expected = expected * p
    assert p ** k == expected


@given(polynomials(), polynomials(), st.integers(0, 6))
def test_truncated_product(p, q, d):
    keep = {m: c for m, c in (p * q).terms.items() if sum(m) < d}
    assert p.mul_truncated(q, d) == Polynomial(2, keep)


# derivatives -----------------------------------------------------------------------

def test_derivative_of_f():
    assert partial_derivative(P(F), 0) == P("5*x^4 + 2*x*y^2")


def test_derivative_of_constant():
    assert partial_derivative(P("7"), 0).is_zero()


def test_power_rule():
    assert P("x^3*y^3").diff(1) == P("3*x^3*y^2")


def test_derivative_index_range():
    with pytest.raises(ArityError):
        P("x").diff(2)


@given(polynomials(), polynomials(), small_rationals)
def test_derivative_linear_and_leibniz(p, q, c):
    for i in range(2):
        assert (p + q.scale(c)).diff(i) == p.diff(i) + q.diff(i).scale(c)
        assert (p * q).diff(i) == p * q.diff(i) + q * p.diff(i)


# evaluation and truncation -----------------------------------------------------------

def test_first_splitting_vanishes_at_a_squared():
    a = mpq(1, 10)
    assert first_splitting(a).evaluate((a * a, a * a)) == [0, 0]


def test_evaluate_at_origin_is_constant_term():
    p = P("3 + x*y - 2*y^4")
    assert evaluate(p, (0, 0)) == 3


def test_h_at_minus_two_a():
    # published closed form -4a^3 - (2/5)a^4 + a^5 at a = 1/10
    a = mpq(1, 10)
    h = Polynomial(1, {(k,): c for k, c in enumerate(h_poly(a))})
    assert h.evaluate((-2 * a,)) == mpq(-4, 1000) - mpq(2, 50000) + mpq(1, 100000)


def test_evaluate_arity_mismatch():
    with pytest.raises(ArityError):
        P("x").evaluate((1,))


@given(polynomials(), polynomials(), st.tuples(small_rationals, small_rationals))
def test_evaluate_is_homomorphism(p, q, v):
    assert (p * q).evaluate(v) == p.evaluate(v) * q.evaluate(v)
    assert (p + q).evaluate(v) == p.evaluate(v) + q.evaluate(v)


def test_truncate_examples():
    assert truncate(P(F), 4) == P("x^2*y^2")
    assert truncate(P(F), 10 ** 6) == P(F)
    assert truncate(P("0"), 3).is_zero()


@given(polynomials(), st.integers(0, 6))
def test_truncate_idempotent(p, d):
    assert p.truncate(d).truncate(d) == p.truncate(d)
    assert all(sum(m) <= d for m in p.truncate(d).terms)


def test_specialize_and_collect():
    g = P("x*y + x^2*y^3")
    assert g.specialize(1, 2) == parse_poly("2*x + 8*x^2", ["x"])
    parts = g.collect(1)
    assert set(parts) == {1, 3}
