"""Exact and asymptotic counting of segments and lines in square integer grids.

The package is organized around one exact quantity, the weighted gcd-class
pair count f_q(n), computed either by definition (f_direct) or through a
totient identity in O(n/q) time (f_fast).  Segment counts, line counts, and
the number of linear threshold dichotomies all derive from f by exact
integer arithmetic.  Independent brute-force oracles cover small grids, and
the asympt module compares exact values against their n^4 main terms.
"""

from .asympt import (
    RH_EXPONENT,
    UNCONDITIONAL_EXPONENT,
    RhReport,
    ScanRow,
    SlopeFit,
    fit_log_exponent,
    main_term_f,
    main_term_lines_eq,
    main_term_lines_ge,
    main_term_segments,
    residual,
    rh_report,
    scan_residuals,
)
from .counts import (
    MAX_GRID_N,
    CountSet,
    GridQuery,
    LemmaDecomposition,
    count_set,
    decompose_lemma,
    f_direct,
    f_fast,
    lines_at_least,
    lines_exactly,
    segments_count,
    table_limit_for,
    threshold_count,
)
from .errors import ResourceLimitError
from .oracle import (
    ORACLE_GRID_LIMIT,
    THRESHOLD_GRID_LIMIT,
    CanonicalLine,
    LineHistogram,
    canonical_line,
    oracle_line_histogram,
    oracle_segments,
    oracle_threshold_count,
)
from .totient import (
    DEFAULT_SIEVE_BUDGET,
    PI_SQUARED,
    SIEVE_BUDGET_ENV,
    TotientTable,
    build_totient_table,
    check_partial_summation,
    e_phi,
    e_r,
    iter_error_terms,
    summatory_phi,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalLine",
    "CountSet",
    "DEFAULT_SIEVE_BUDGET",
    "GridQuery",
    "LemmaDecomposition",
    "LineHistogram",
    "MAX_GRID_N",
    "ORACLE_GRID_LIMIT",
    "PI_SQUARED",
    "RH_EXPONENT",
    "ResourceLimitError",
    "RhReport",
    "SIEVE_BUDGET_ENV",
    "ScanRow",
    "SlopeFit",
    "THRESHOLD_GRID_LIMIT",
    "TotientTable",
    "UNCONDITIONAL_EXPONENT",
    "build_totient_table",
    "canonical_line",
    "check_partial_summation",
    "count_set",
    "decompose_lemma",
    "e_phi",
    "e_r",
    "f_direct",
    "f_fast",
    "fit_log_exponent",
    "iter_error_terms",
    "lines_at_least",
    "lines_exactly",
    "main_term_f",
    "main_term_lines_eq",
    "main_term_lines_ge",
    "main_term_segments",
    "oracle_line_histogram",
    "oracle_segments",
    "oracle_threshold_count",
    "residual",
    "rh_report",
    "scan_residuals",
    "segments_count",
    "summatory_phi",
    "table_limit_for",
    "threshold_count",
]
