from __future__ import annotations

from gmpy2 import mpq
from hypothesis import given, strategies as st

from artinlab.poly import parse_poly
from artinlab.splitting.interval import (Interval, bits_for, current_precision, eval_poly, excluded,
                                         interval_det_small, interval_determinant, jacobian_polys, krawczyk,
                                         precision, rational_box)

from conftest import polynomials, small_rationals

pairs = st.tuples(small_rationals, small_rationals).map(sorted)


def _has(iv: Interval, q) -> bool:
    return mpq(iv.lo) <= q <= mpq(iv.hi)


@given(pairs, pairs, small_rationals, small_rationals)
def test_arithmetic_encloses(a, b, s, t):
    x = a[0] + (a[1] - a[0]) * abs(s) / (1 + abs(s))
    y = b[0] + (b[1] - b[0]) * abs(t) / (1 + abs(t))
    A, B = Interval(*a), Interval(*b)
    assert _has(A + B, x + y) and _has(A - B, x - y) and _has(A * B, x * y)
    for k in range(5):
        assert _has(A ** k, x ** k)
    if not B.contains_zero():
        assert _has(A / B, x / y)


def test_thirds_are_rounded_outward():
    third = Interval.exact(mpq(1, 3))
    assert mpq(third.lo) < mpq(1, 3) < mpq(third.hi)


def test_even_power_of_straddling_interval():
    iv = Interval(-2, 1) ** 2
    assert mpq(iv.lo) == 0 and mpq(iv.hi) == 4


@given(polynomials(max_degree=4), st.tuples(small_rationals, small_rationals))
def test_box_evaluation_encloses_point(p, pt):
    box = rational_box([(v - mpq(1, 7), v + mpq(1, 5)) for v in pt])
    assert _has(eval_poly(p, box), p.evaluate(pt))


def test_precision_context_restores():
    before = current_precision()
    with precision(1024):
        assert current_precision() == 1024
    assert current_precision() == before


def test_bits_for_grows_with_resolution():
    assert bits_for([(0, 1)]) == 256
    assert bits_for([(0, mpq(1, 2 ** 400))]) >= 900


def test_determinants_enclose_exact_values():
    m = [[mpq(2), mpq(1, 3)], [mpq(5), mpq(-7, 2)]]
    iv = [[Interval.exact(v) for v in row] for row in m]
    exact = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    assert _has(interval_det_small(iv), exact)
    assert _has(interval_determinant(iv), exact)


def test_singular_interval_matrix_not_certified():
    row = [Interval(1, 2), Interval(3, 4)]
    assert interval_determinant([row, row]) is None or interval_determinant([row, row]).contains_zero()


def test_krawczyk_verdicts():
    names = ["x", "y"]
    polys = [parse_poly("x^2 + y^2 - 1", names), parse_poly("x - y", names)]
    jac = jacobian_polys(polys)
    verdict, k = krawczyk(polys, jac, [(mpq(6, 10), mpq(8, 10)), (mpq(6, 10), mpq(8, 10))])
    assert verdict == "unique"
    assert krawczyk(polys, jac, [(mpq(2), mpq(3)), (mpq(2), mpq(3))])[0] == "empty"
    assert excluded(polys, [(mpq(2), mpq(3)), (mpq(2), mpq(3))])
