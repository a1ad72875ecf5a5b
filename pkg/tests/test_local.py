from __future__ import annotations

import itertools

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, strategies as st

from artinlab.corpus import A_GENS, B0_ELEMENT, B0_GENS, F_SIMPLE
from artinlab.jacobian import family, jacobian_data
from artinlab.local import (EmptyIdeal, LocalIdeal, NotArtinian, artinian_closure, member, nilpotency_index,
                            normal_form, principal_ideal_dim, quotient, quotient_dim, truncated_dimension)
from artinlab.poly import ArityError, Polynomial, monomials_of_degree, parse_poly

from conftest import polynomials, small_rationals, to_sympy

XY = ["x", "y"]
A = quotient(A_GENS, XY)


def sympy_local_dim(gens, names, degree):
    """dim Q[x]/(I + m^degree) from a sympy Groebner basis (independent oracle)."""
    syms = sympy.symbols(names)
    polys = [to_sympy(g, syms) for g in gens]
    polys += [sympy.Mul(*[s ** e for s, e in zip(syms, m)]) for m in monomials_of_degree(len(names), degree)]
    G = sympy.groebner(polys, *syms, order="grevlex")
    leads = [sympy.Poly(g, *syms).monoms(order="grevlex")[0] for g in G.exprs]
    count = 0
    for m in itertools.product(range(degree), repeat=len(names)):
        if not any(all(a >= b for a, b in zip(m, lm)) for lm in leads):
            count += 1
    return count


# closure ---------------------------------------------------------------------------

def test_simple_locus_dimension():
    assert quotient_dim(A) == 11
    assert A.certified_degree == 6
    assert A.basis[0] == (0, 0)


def test_simple_locus_staircase():
    assert set(A.staircase) == {(4, 0), (3, 1), (1, 3), (0, 4)}
    assert A.pure_powers() == [4, 4]


def test_maximal_ideal():
    m = quotient(["x", "y"], XY)
    assert m.dim == 1 and m.basis == ((0, 0),)


def test_not_artinian():
    with pytest.raises(NotArtinian) as info:
        quotient(["x^2"], XY, degree_cap=10)
    assert info.value.degree_cap == 10


def test_empty_ideal():
    with pytest.raises(EmptyIdeal):
        LocalIdeal.parse(["0", "x - x"], XY)


def test_generator_with_constant_rejected():
    with pytest.raises(ValueError):
        LocalIdeal.parse(["1 + x"], ["x"])


def test_dual_numbers():
    assert quotient_dim(quotient(["x^2"], ["x"])) == 2


def test_dimension_against_sympy():
    assert sympy_local_dim([parse_poly(g, XY) for g in A_GENS], XY, A.certified_degree + 1) == 11


def test_milnor_algebra_of_f2_against_sympy():
    alg = jacobian_data(family(2)).milnor_algebra
    assert alg.dim == 16
    gens = list(alg.ideal.generators)
    assert sympy_local_dim(gens, ["x", "y"], alg.certified_degree + 1) == 16


def test_dimension_stable_one_degree_higher():
    for alg in (A, quotient(B0_GENS, XY), quotient(["x^3", "y^2", "x*y"], XY)):
        n = alg.certified_degree
        assert truncated_dimension(alg.ideal, n) == alg.dim
        assert truncated_dimension(alg.ideal, n + 3) == alg.dim


def test_certified_degree_kills_monomials():
    for m in monomials_of_degree(2, A.certified_degree):
        assert A.member(Polynomial.monomial(m))


def test_duplicate_generators_tolerated():
    assert quotient(list(A_GENS) * 2 + ["x^7"], XY).dim == 11


# normal forms ------------------------------------------------------------------------

def test_normal_form_x4():
    # [DERIVED] one reduction by 5x^4 + 2xy^2
    assert normal_form(A, parse_poly("x^4", XY)).lift() == parse_poly("-2/5*x*y^2", XY)


@pytest.mark.parametrize("n", [2, 3])
def test_family_pure_power_relation(n):
    alg = jacobian_data(family(n)).milnor_algebra
    names = alg.variables
    prod = "*".join(names)
    for v in names:
        lhs = alg.element(f"{v}^{3 * n - 1}")
        rhs = alg.element(f"({prod})^3") * mpq(-3, 3 * n - 1)
        assert lhs == rhs


def test_normal_form_of_generators_is_zero():
    for g in A.ideal.generators:
        assert normal_form(A, g).is_zero()


def test_normal_form_arity_mismatch():
    with pytest.raises(ArityError):
        A.normal_form(parse_poly("x", ["x"]))


def test_membership_family_two():
    alg = jacobian_data(family(2)).milnor_algebra
    assert member(alg, parse_poly("(x*y)^6", XY))
    assert not member(alg, parse_poly("(x*y)^3", XY))
    assert member(alg, Polynomial.zero(2))


@given(polynomials(max_degree=7), polynomials(max_degree=7))
def test_normal_form_multiplicative(p, q):
    lhs = A.normal_form(p * q)
    rhs = A.normal_form(A.normal_form(p).lift() * A.normal_form(q).lift())
    assert lhs == rhs


@given(polynomials(max_degree=7), small_rationals)
def test_normal_form_linear_and_idempotent(p, c):
    e = A.normal_form(p)
    assert A.normal_form(e.lift()) == e
    assert A.normal_form(p.scale(c) + p) == e * (c + 1)


@given(st.lists(polynomials(max_degree=4), min_size=2, max_size=2))
def test_ideal_combinations_are_members(mults):
    combo = sum((m * g for m, g in zip(mults, A.ideal.generators)), Polynomial.zero(2))
    assert A.member(combo)


def test_normal_form_against_sympy_reduction():
    syms = sympy.symbols("x y")
    polys = [to_sympy(g, syms) for g in A.ideal.generators]
    polys += [to_sympy(Polynomial.monomial(m), syms) for m in monomials_of_degree(2, A.certified_degree)]
    G = sympy.groebner(polys, *syms, order="grevlex")
    for text in ("x^5 + y^3*x", "x^2*y^2", F_SIMPLE, "(x + y)^4"):
        p = parse_poly(text, XY)
        assert (G.reduce(to_sympy(p, syms))[1] == 0) == A.member(p)


# nilpotency and principal ideals --------------------------------------------------------

def test_nilpotency_of_f():
    f = A.element(F_SIMPLE)
    assert nilpotency_index(f) == 2
    # oracle: f itself is nonzero, f^2 reduces to zero
    assert not f.is_zero() and A.member(parse_poly(F_SIMPLE, XY) ** 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_family_nilpotency(n):
    alg = jacobian_data(family(n)).milnor_algebra
    assert nilpotency_index(alg.normal_form(family(n))) == n


def test_unit_is_not_nilpotent():
    assert nilpotency_index(A.one()) is None


def test_principal_ideal_of_f():
    assert principal_ideal_dim(A.element(F_SIMPLE)) == 1
    assert principal_ideal_dim(A.zero()) == 0
    assert principal_ideal_dim(A.one()) == A.dim


def test_principal_ideal_of_b0():
    b = quotient(B0_GENS, XY)
    assert principal_ideal_dim(b.element(B0_ELEMENT)) == 1


@given(st.lists(small_rationals, min_size=11, max_size=11))
def test_nakayama_consequence(coords):
    e = A.from_coordinates([0] + coords[1:])
    if principal_ideal_dim(e) == 1:
        assert nilpotency_index(e) == 2


def test_socle_elements_square_to_zero():
    # the socle of A is spanned by x^2 y^2; every multiple has principal dimension 1
    e = A.element("x^2*y^2") * 3 + A.element(F_SIMPLE)
    assert principal_ideal_dim(e) == 1 and nilpotency_index(e) == 2


def test_element_arithmetic():
    x = A.element("x")
    y = A.element("y")
    assert (x + y) ** 2 == x * x + x * y * 2 + y * y
    assert (x - x).is_zero() and -x == x * -1
    assert x ** 4 == A.element("-2/5*x*y^2")


def test_describe_is_json_ready():
    d = A.describe()
    assert d["dimension"] == 11 and d["basis"][0] == "1" and len(d["staircase"]) == 4


def test_arity_zero_algebra():
    r = artinian_closure(LocalIdeal(0, (), ()))
    assert r.dim == 1 and r.one() * r.one() == r.one()
