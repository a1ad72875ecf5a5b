"""Exact computations in Artinian local quotient algebras and certified root counts."""
from __future__ import annotations

__version__ = "0.1.0"

from .poly import Polynomial, parse_poly, format_poly
from .local import (LocalIdeal, QuotientAlgebra, QuotientElement, NotArtinian, EmptyIdeal,
                    artinian_closure, normal_form, member, quotient_dim, nilpotency_index,
                    principal_ideal_dim, quotient)
from .jacobian import jacobian_ideal, jacobian_data, bs_exponent, family

__all__ = [
    "Polynomial", "parse_poly", "format_poly",
    "LocalIdeal", "QuotientAlgebra", "QuotientElement", "NotArtinian", "EmptyIdeal",
    "artinian_closure", "normal_form", "member", "quotient_dim", "nilpotency_index",
    "principal_ideal_dim", "quotient",
    "jacobian_ideal", "jacobian_data", "bs_exponent", "family",
]
