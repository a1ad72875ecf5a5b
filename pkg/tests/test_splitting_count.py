from __future__ import annotations

import pytest
import sympy
from gmpy2 import mpq

from artinlab.poly import parse_poly
from artinlab.splitting import (BoxRegion, DegenerateResultant, RefinementBudgetExceeded, complex_root_count,
                                count_real_roots, first_splitting, predicted_second_points, second_splitting,
                                transversality_check)
from artinlab.splitting.count import certify_seeded
from artinlab.splitting.resultant import resultant

from conftest import to_sympy

XY = ["x", "y"]
NEAR = BoxRegion.square(mpq(-1, 4), mpq(1, 4))
HALF = BoxRegion.square(mpq(-1, 2), mpq(1, 2))
WIDE = BoxRegion.square(-1, 1)


def sympy_real_zeros(polys, shift=3):
    """Real zeroes via a lex Groebner basis in generic coordinates u = x + shift*y (oracle)."""
    x, y, u = sympy.symbols("x y u")
    eqs = [sympy.expand(to_sympy(p, (x, y)).subs(x, u - shift * y)) for p in polys]
    lin, q = sympy.groebner(eqs, y, u, order="lex").exprs
    yu = sympy.solve(lin, y)[0]
    out = []
    for r in sympy.Poly(q, u).real_roots():
        uv = r.evalf(60)
        yv = yu.subs(u, uv).evalf(60)
        out.append((uv - shift * yv, yv))
    return out


def _in(box, pt):
    return all(float(lo) <= v <= float(hi) for v, (lo, hi) in zip(pt, box.bounds))


# systems -------------------------------------------------------------------------------

def test_first_splitting_at_zero():
    assert first_splitting(0).polys == (parse_poly("5*x^4 + 2*x*y^2", XY), parse_poly("5*y^4 + 2*x^2*y", XY))


@pytest.mark.parametrize("a", [mpq(1, 10), mpq(1, 100), mpq(-3, 7)])
def test_exact_zeroes_at_a_squared(a):
    s = first_splitting(a)
    for sx in (1, -1):
        for sy in (1, -1):
            assert s.evaluate((sx * a * a, sy * a * a)) == [0, 0]
    assert s.evaluate((0, 0)) == [0, 0]


def test_second_splitting_at_zero_is_jacobian_of_f2():
    assert second_splitting(2, 0).polys == (parse_poly("5*x^4 + 3*x^2*y^3", XY),
                                            parse_poly("5*y^4 + 3*x^3*y^2", XY))


def test_second_splitting_n1():
    assert second_splitting(1, mpq(1, 10)).polys == (parse_poly("2*(x - 1/10) + 3*x^2", ["x"]),)


def test_second_splitting_product_factor():
    a = mpq(1, 100)
    h1 = second_splitting(2, a).polys[0]
    assert all(h1.evaluate((k * a, 0)) == 0 for k in range(1, 5))


def test_second_splitting_range():
    with pytest.raises(ValueError):
        second_splitting(4, mpq(1, 10))


def test_box_parsing():
    box = BoxRegion.parse("-1/4:1/4, 0:2")
    assert box.bounds == ((mpq(-1, 4), mpq(1, 4)), (mpq(0), mpq(2)))
    with pytest.raises(ValueError):
        BoxRegion.parse("1:0")
    with pytest.raises(ValueError):
        BoxRegion.parse("0,1")


# resultants -------------------------------------------------------------------------------

@pytest.mark.parametrize("a", [mpq(0), mpq(1, 100)])
def test_resultant_matches_sympy(a):
    s = first_splitting(a)
    x, y = sympy.symbols("x y")
    f, g = (to_sympy(p, (x, y)) for p in s.polys)
    expected = sympy.Poly(sympy.resultant(f, g, y), x).all_coeffs()[::-1]
    ours = resultant(*s.polys, var=1)
    assert [mpq(str(c)) for c in expected] == ours


def test_common_component_is_degenerate():
    polys = (parse_poly("(x - y)*x", XY), parse_poly("(x - y)*(y + 1)", XY))
    with pytest.raises(DegenerateResultant):
        resultant(*polys, var=1)


# real counts ------------------------------------------------------------------------------

@pytest.mark.parametrize("a", [mpq(1, 100), mpq(1, 1000)])
def test_eleven_zeroes_near_origin(a):
    s = first_splitting(a)
    count, encs = count_real_roots(s, NEAR)
    assert count == 11
    assert transversality_check(s, encs)


def test_first_splitting_counts_against_sympy():
    s = first_splitting(mpq(1, 100))
    pts = sympy_real_zeros(s.polys)
    assert len(pts) == 12
    for box in (NEAR, HALF, WIDE):
        assert count_real_roots(s, box)[0] == sum(1 for p in pts if _in(box, p))


def test_half_box_includes_far_zero():
    # the [-1/2, 1/2]^2 box also holds the zero near (-2/5, -2/5)
    count, encs = count_real_roots(first_splitting(mpq(1, 100)), HALF)
    assert count == 12
    assert any(e.contains((mpq(-2, 5), mpq(-2, 5))) or e.centre()[0] < mpq(-3, 10) for e in encs)


def test_unperturbed_zero_set():
    assert count_real_roots(first_splitting(0), HALF)[0] == 2
    count, encs = count_real_roots(first_splitting(0), WIDE)
    assert count == 2 and encs[0].point == (mpq(-2, 5), mpq(-2, 5)) and encs[1].point == (0, 0)


def test_origin_is_not_transverse_at_zero():
    s = first_splitting(0)
    _, encs = count_real_roots(s, NEAR)
    assert not transversality_check(s, encs)


def test_enclosures_are_swap_symmetric():
    _, encs = count_real_roots(first_splitting(mpq(1, 100)), NEAR)
    boxes = {e.bounds for e in encs}
    for b in list(boxes):
        swapped = (b[1], b[0])
        assert any(all(lo <= l2 and h2 <= hi or l2 <= lo and hi <= h2 for (lo, hi), (l2, h2) in zip(swapped, o))
                   for o in boxes)


def test_axis_zero_structure():
    _, encs = count_real_roots(first_splitting(mpq(1, 100)), NEAR)
    on_x0 = [e for e in encs if e.bounds[0] == (0, 0) and e.bounds[1] != (0, 0)]
    on_y0 = [e for e in encs if e.bounds[1] == (0, 0) and e.bounds[0] != (0, 0)]
    origin = [e for e in encs if e.point == (0, 0)]
    assert (len(on_x0), len(on_y0), len(origin)) == (3, 3, 1)


def test_enclosures_are_disjoint_and_shrinkable():
    _, encs = count_real_roots(first_splitting(mpq(1, 100)), NEAR)
    for e in encs:
        e.refine(mpq(1, 10 ** 30))
        assert e.width() <= mpq(1, 10 ** 30)
    for i, e in enumerate(encs):
        for f in encs[i + 1:]:
            assert any(h1 < l2 or h2 < l1 for (l1, h1), (l2, h2) in zip(e.bounds, f.bounds))


def test_second_splitting_small_parameter():
    a = mpq(1, 1000)
    s = second_splitting(2, a)
    count, encs = count_real_roots(s, HALF)
    assert count == 16 and transversality_check(s, encs)
    for k1, k2 in ((1, 1), (2, 3), (4, 4)):
        target = (k1 * a, k2 * a)
        nearest = min(encs, key=lambda e: sum(abs(c - t) for c, t in zip(e.centre(), target)))
        assert all(abs(c - t) < a / 2 for c, t in zip(nearest.centre(), target))


def test_second_splitting_at_one_hundredth_against_sympy():
    # 12 real zeroes in the box at a = 1/100, 13 in the plane (see decisions ledger)
    s = second_splitting(2, mpq(1, 100))
    pts = sympy_real_zeros(s.polys)
    assert len(pts) == 13
    count, encs = count_real_roots(s, HALF)
    assert count == sum(1 for p in pts if _in(HALF, p)) == 12
    assert transversality_check(s, encs)


def test_non_square_input_rejected():
    with pytest.raises(ValueError):
        count_real_roots(second_splitting(1, mpq(1, 10)), HALF)


# complex counts ----------------------------------------------------------------------------

@pytest.mark.parametrize("a", [mpq(0), mpq(1, 100), mpq(1, 10)])
def test_bezout_count_first_splitting(a):
    assert complex_root_count(first_splitting(a)) == 16


def test_complex_count_against_sympy():
    x, y = sympy.symbols("x y")
    for s in (first_splitting(mpq(1, 100)), second_splitting(2, mpq(1, 100))):
        G = sympy.groebner([to_sympy(p, (x, y)) for p in s.polys], x, y, order="grlex")
        leads = [sympy.Poly(g, x, y).monoms(order="grlex")[0] for g in G.exprs]
        count = sum(1 for i in range(40) for j in range(40) if not any(i >= a and j >= b for a, b in leads))
        assert complex_root_count(s) == count


def test_second_splitting_global_count():
    # 16 near the origin plus 5 further critical points of f_2, at every a
    for a in (mpq(0), mpq(1, 100)):
        assert complex_root_count(second_splitting(2, a)) == 21


# seeded certification ------------------------------------------------------------------------

def test_seeded_certification_n2_matches_exact_count():
    a = mpq(1, 1000)
    s = second_splitting(2, a)
    encs = certify_seeded(s, predicted_second_points(2, a), a / 2)
    assert len(encs) == 16


def test_seeded_certification_drops_empty_seeds():
    s = second_splitting(2, mpq(1, 1000))
    assert certify_seeded(s, [(mpq(3, 10), mpq(3, 10))], mpq(1, 100)) == []


@pytest.mark.slow
def test_seeded_certification_n3():
    a = mpq(1, 10 ** 6)
    s = second_splitting(3, a)
    encs = certify_seeded(s, predicted_second_points(3, a), a / 2)
    assert len(encs) == 343


def test_budget_error_type():
    assert issubclass(RefinementBudgetExceeded, RuntimeError)
