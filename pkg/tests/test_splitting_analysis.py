from __future__ import annotations

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings

from artinlab.poly import Polynomial, parse_poly
from artinlab.splitting import (BoxRegion, FIRST_MONOMIALS, first_splitting, first_splitting_symbolic,
                                h_sign_table, interpolation_analysis, min_root_gap, param_normal_form,
                                second_splitting)
from artinlab.splitting.analysis import (PARAM_NF_CAP, certified_determinant, root_gap_sample,
                                         verify_param_normal_form)
from artinlab.splitting.count import count_real_roots
from artinlab.splitting.univariate import isolate_real_roots

from conftest import polynomials

XYA = ["x", "y", "a"]


def published_h_values(a):
    """The four closed-form expansions of h at -2a, -a/2, 0, a."""
    return [-4 * a ** 3 - mpq(2, 5) * a ** 4 + a ** 5,
            mpq(1, 8) * a ** 3 - mpq(2, 5) * a ** 4 - mpq(1, 2) * a ** 5,
            -mpq(2, 5) * a ** 4 - a ** 5,
            2 * a ** 3 - mpq(2, 5) * a ** 4 - 2 * a ** 5]


# sign table -------------------------------------------------------------------------

@pytest.mark.parametrize("a", [mpq(1, 10), mpq(1, 100), mpq(1, 1000)])
def test_sign_table(a):
    table = h_sign_table(a)
    assert [pt for pt, _, _ in table] == [-2 * a, -a / 2, 0, a]
    assert [v for _, v, _ in table] == published_h_values(a)
    assert [s for _, _, s in table] == [-1, 1, -1, 1]


def test_sign_table_against_sympy():
    y, a = sympy.symbols("y a")
    h = y ** 3 + a * y ** 2 - a ** 4 * y - a ** 5 - sympy.Rational(2, 5) * a ** 4
    av = sympy.Rational(1, 10)
    for pt, v, _ in h_sign_table(mpq(1, 10)):
        assert mpq(str(h.subs({a: av, y: sympy.Rational(str(pt))}))) == v


def test_sign_table_rejects_nonpositive():
    with pytest.raises(ValueError):
        h_sign_table(0)


def test_h_has_three_roots_bracketed_by_table():
    from artinlab.splitting import h_poly
    a = mpq(1, 100)
    roots = isolate_real_roots(h_poly(a), -2 * a, a)
    assert len(roots) == 3
    assert -2 * a <= roots[0].lo and roots[0].hi <= -a / 2
    assert -a / 2 <= roots[1].lo and roots[1].hi <= 0
    assert 0 <= roots[2].lo and roots[2].hi <= a


# root gap ---------------------------------------------------------------------------

def test_root_gap_exponent():
    slope = min_root_gap([mpq(1, 10 ** k) for k in range(2, 6)])
    assert 1.4 <= slope <= 1.6


def test_root_gap_sample_structure():
    a = mpq(1, 10 ** 4)
    s = root_gap_sample(a)
    assert len(s.roots) == 4
    # smallest gap is between the two roots of order a^(3/2) around the origin
    assert s.gap < a
    assert any(r.lo <= 0 <= r.hi for r in s.roots)


def test_root_gap_needs_two_samples():
    with pytest.raises(ValueError):
        min_root_gap([mpq(1, 100)])


# parameterised normal form ------------------------------------------------------------

def _p(s):
    return parse_poly(s, XYA)


@pytest.mark.parametrize("rounds", [1, 2, 3])
@pytest.mark.parametrize("f", ["x^4", "x^2*y^2", "1", "x^3*y^3 + a*x*y - 2*y^5 + x^6", "a^2*x^2 + 7"])
def test_param_normal_form_certificates(f, rounds):
    r = param_normal_form(_p(f), rounds)
    assert r.verified
    assert verify_param_normal_form(_p(f), first_splitting_symbolic(), r)


def test_param_normal_form_trivial_cases():
    r = param_normal_form(_p("1"), 2)
    assert r.coefficient((0, 0)) == Polynomial.constant(1, 3)
    assert all(r.coefficient(s).is_zero() for s in FIRST_MONOMIALS if s != (0, 0))
    r = param_normal_form(_p("x^2*y^2"), 2)
    assert r.coefficient((2, 2)) == Polynomial.constant(1, 3)


def test_param_normal_form_x4_at_zero():
    # 5x^4 = -2xy^2 modulo the a = 0 ideal
    r = param_normal_form(_p("x^4"), 1)
    assert r.coefficient((1, 2)) == Polynomial.constant(mpq(-2, 5), 3)


def test_param_normal_form_x4_three_rounds():
    r = param_normal_form(_p("x^4"), 3)
    assert r.coefficient((1, 2)) == Polynomial.constant(mpq(-2, 5), 3)
    assert r.coefficient((3, 0)) == _p("-a")


@settings(max_examples=15)
@given(polynomials(arity=3, max_degree=6, max_terms=5))
def test_param_normal_form_random(f):
    for rounds in (1, 2, 3):
        assert param_normal_form(f, rounds).verified


def test_param_normal_form_rejects_tampering():
    f = _p("x^4")
    r = param_normal_form(f, 2)
    r.remainder = r.remainder + _p("1")
    assert not verify_param_normal_form(f, first_splitting_symbolic(), r)


def test_param_normal_form_bounds():
    with pytest.raises(ValueError):
        param_normal_form(_p("x"), PARAM_NF_CAP + 1)
    with pytest.raises(ValueError):
        param_normal_form(parse_poly("x", ["x", "y"]), 1)


# interpolation ---------------------------------------------------------------------------

def test_first_splitting_interpolation_certified():
    box = BoxRegion.square(mpq(-1, 4), mpq(1, 4))
    monos = [m for m in FIRST_MONOMIALS]
    r = interpolation_analysis(first_splitting, monos, [mpq(1, 100), mpq(1, 1000)], box)
    assert r.certified()
    assert r.fitted_order is not None and r.fitted_order > 0
    assert [n for _, n, _ in r.samples] == [11, 11]


def test_second_splitting_interpolation_certified():
    box = BoxRegion.square(mpq(-1, 2), mpq(1, 2))
    monos = [(i, j) for i in range(4) for j in range(4)]
    r = interpolation_analysis(lambda a: second_splitting(2, a), monos, [mpq(1, 1000)], box)
    assert r.certified()
    assert r.to_json()["samples"][0]["roots"] == 16


def test_second_splitting_interpolation_count_mismatch():
    box = BoxRegion.square(mpq(-1, 2), mpq(1, 2))
    monos = [(i, j) for i in range(4) for j in range(4)]
    with pytest.raises(ValueError, match="12 zeroes"):
        interpolation_analysis(lambda a: second_splitting(2, a), monos, [mpq(1, 100)], box)


def test_singular_interpolation_matrix_not_certified():
    _, encs = count_real_roots(first_splitting(mpq(1, 100)), BoxRegion.square(mpq(-1, 4), mpq(1, 4)))
    # a repeated monomial column makes the matrix singular
    monos = list(FIRST_MONOMIALS[:10]) + [FIRST_MONOMIALS[0]]
    assert certified_determinant(encs, monos, budget=3) is None
