"""Bivariate resultants by evaluation and Newton interpolation."""
from __future__ import annotations

from gmpy2 import mpq

from ..echelon import determinant
from ..poly import Polynomial
from .univariate import strip


class DegenerateResultant(ArithmeticError):
    """The resultant vanishes identically: the system has a common curve component."""


def coefficients_in(p: Polynomial, var: int) -> list:
    """Coefficients of a univariate polynomial (arity 1), ascending."""
    if p.arity != 1:
        raise ValueError("expected a univariate polynomial")
    d = p.total_degree()
    return strip([p.coefficient((k,)) for k in range(d + 1)]) if d >= 0 else []


def sylvester(f: list, g: list, df: int, dg: int) -> list[list]:
    """Sylvester matrix for formal degrees df, dg (ascending coefficient lists)."""
    f = list(f) + [mpq(0)] * (df + 1 - len(f))
    g = list(g) + [mpq(0)] * (dg + 1 - len(g))
    size = df + dg
    rows = []
    for i in range(dg):
        row = [mpq(0)] * size
        for k in range(df + 1):
            row[i + k] = f[df - k]
        rows.append(row)
    for i in range(df):
        row = [mpq(0)] * size
        for k in range(dg + 1):
            row[i + k] = g[dg - k]
        rows.append(row)
    return rows


def _newton_interpolate(xs: list, ys: list) -> list:
    n = len(xs)
    coef = [mpq(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form into monomial coefficients
    poly = [coef[-1]]
    for i in range(n - 2, -1, -1):
        shifted = [mpq(0)] + poly
        for k in range(len(poly)):
            shifted[k] -= xs[i] * poly[k]
        shifted[0] += coef[i]
        poly = shifted
    return strip(poly)


def resultant(f: Polynomial, g: Polynomial, var: int) -> list:
    """Res_var(f, g) for bivariate f, g, as a polynomial in the other variable."""
    if f.arity != 2 or g.arity != 2:
        raise ValueError("resultant expects bivariate polynomials")
    other = 1 - var
    df, dg = f.degree_in(var), g.degree_in(var)
    bound = f.degree_in(other) * dg + g.degree_in(other) * df
    xs, ys = [], []
    for t in range(bound + 1):
        t = mpq(t)
        fu = coefficients_in(f.specialize(other, t), 0)
        gu = coefficients_in(g.specialize(other, t), 0)
        if df + dg == 0:
            value = mpq(1)
        else:
            value = determinant(sylvester(fu, gu, df, dg))
        xs.append(t)
        ys.append(value)
    r = _newton_interpolate(xs, ys)
    if not r:
        raise DegenerateResultant("resultant vanishes identically")
    return r
