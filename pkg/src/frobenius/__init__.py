"""Frobenius numbers and Sylvester statistics of numerical semigroups.

Engines
-------
``compute_nr`` / ``stats_from_nr``
    residue-class minima N_r by shortest paths, aggregated into g, n, s,
    power sums, binomial moments and weighted sums.
``oracle_stats``
    brute-force enumeration of the gaps; the reference everything is
    tested against.
``evaluate_family``
    closed forms for structured tuple families, refused outside their
    hypotheses.
``stats_via_ct``
    constant-term evaluation of f(x) = sum_r x^{N_r} given as a sum of
    rational terms.
"""
from .apery import NrTable, apery_table, compute_nr, residue_permute, stats_from_nr
from .ct import (
    LaurentPoly,
    RationalTerm,
    RationalTermSum,
    TruncatedSeries,
    ct_term,
    differentiate,
    series_exp,
    series_t_over_one_minus_exp,
    stats_via_ct,
    value_at,
    value_at_one,
)
from .errors import (
    ConsistencyError,
    DomainError,
    FrobeniusError,
    InvalidTuple,
    OracleCapExceeded,
    PoleError,
    PreconditionError,
    ResourceError,
    UnresolvedError,
)
from .families import FAMILIES, FamilySpec, evaluate_family, family_tuple
from .fx import fx_equivalence_check, fx_family, fx_from_table
from .obopt import ObProblem, ob_closed_form, ob_general, ndr_via_reduction
from .oracle import denumerant, gap_set, oracle_stats
from .stats import StatBundle, make_tuple, parse_tuple

__version__ = "0.1.0"

__all__ = [
    "NrTable",
    "apery_table",
    "compute_nr",
    "residue_permute",
    "stats_from_nr",
    "LaurentPoly",
    "RationalTerm",
    "RationalTermSum",
    "TruncatedSeries",
    "ct_term",
    "differentiate",
    "series_exp",
    "series_t_over_one_minus_exp",
    "stats_via_ct",
    "value_at",
    "value_at_one",
    "ConsistencyError",
    "DomainError",
    "FrobeniusError",
    "InvalidTuple",
    "OracleCapExceeded",
    "PoleError",
    "PreconditionError",
    "ResourceError",
    "UnresolvedError",
    "FAMILIES",
    "FamilySpec",
    "evaluate_family",
    "family_tuple",
    "fx_equivalence_check",
    "fx_family",
    "fx_from_table",
    "ObProblem",
    "ob_closed_form",
    "ob_general",
    "ndr_via_reduction",
    "denumerant",
    "gap_set",
    "oracle_stats",
    "StatBundle",
    "make_tuple",
    "parse_tuple",
]
