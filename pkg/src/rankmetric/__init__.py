"""Exact computation with linearized polynomials, rank-metric codes and
scattered linear sets over finite fields."""

from .field import (DEFAULT_TABLE_CAP, FieldCtx, FieldSpec, build_field,
                    factor_prime_power, field_for)
from .linpoly import LinPoly, from_matrix, slope_fiber_counts
from .code import IdealiserReport, MrdResult, RankCode
from .scattered import (LinearSetReport, PointedSubspace, StabiliserReport,
                        code_of, family_u1, family_u2, family_u3, family_u4,
                        linear_set, slopes, stabiliser_order, subspace_of)
from .trinomial import (TrinomialInstance, build_instance, candidate_scan,
                        dual_word, even_solution, full_gamma_scan, golden_roots,
                        solve_t_equation, system_check, trinomial_map,
                        unit_norm_lambdas, verify_main)
from .search import (SearchHit, SearchJob, SearchResult, exhaustive_search,
                     job_for_row, random_search, scan_is_mrd, verify_candidate)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TABLE_CAP", "FieldCtx", "FieldSpec", "build_field",
    "factor_prime_power", "field_for",
    "LinPoly", "from_matrix", "slope_fiber_counts",
    "IdealiserReport", "MrdResult", "RankCode",
    "LinearSetReport", "PointedSubspace", "StabiliserReport", "code_of",
    "family_u1", "family_u2", "family_u3", "family_u4", "linear_set",
    "slopes", "stabiliser_order", "subspace_of",
    "TrinomialInstance", "build_instance", "candidate_scan", "dual_word",
    "even_solution", "full_gamma_scan", "golden_roots", "solve_t_equation",
    "system_check", "trinomial_map", "unit_norm_lambdas", "verify_main",
    "SearchHit", "SearchJob", "SearchResult", "exhaustive_search",
    "job_for_row", "random_search", "scan_is_mrd", "verify_candidate",
]
