"""The two parameterised splitting systems and their certified analysis."""
from __future__ import annotations

from .systems import (BoxRegion, SplitSystem, first_splitting, first_splitting_symbolic, h_poly,
                      predicted_second_points, second_splitting, second_splitting_symbolic)
from .count import (NotZeroDimensional, RefinementBudgetExceeded, RootEnclosure, certify_seeded,
                    complex_root_count, count_real_roots, transversality_check)
from .resultant import DegenerateResultant
from .analysis import (FIRST_MONOMIALS, InterpolationReport, ParamNormalForm, h_sign_table,
                       interpolation_analysis, min_root_gap, param_normal_form)

__all__ = [
    "BoxRegion", "SplitSystem", "first_splitting", "first_splitting_symbolic", "h_poly",
    "predicted_second_points", "second_splitting", "second_splitting_symbolic",
    "NotZeroDimensional", "RefinementBudgetExceeded", "RootEnclosure", "certify_seeded",
    "complex_root_count", "count_real_roots", "transversality_check", "DegenerateResultant",
    "FIRST_MONOMIALS", "InterpolationReport", "ParamNormalForm", "h_sign_table",
    "interpolation_analysis", "min_root_gap", "param_normal_form",
]
