"""Gorenstein, smooth, factorial and Fano tests for type A Schubert varieties."""

from .permcore import (
    AntiDiagonal, InnerCorner, Mixed, Permutation, PermutationError, RectPartition,
    covers, descent_subword, descents, flatten, frak_I, grassmannian_descent,
    grassmannian_from_partition, grassmannian_partition, inner_corners_from_covers,
    is_cover, length,
)
from .patterns import (
    RestrictedPattern, contains, contains_restricted, embeddings,
    gorenstein_patterns, is_restricted_embedding, smooth_patterns,
)
from .divisor import (
    CoverSystem, InnerCornerViolation, NotGorensteinError, bar_diagram, build_system,
    candidate_alpha, canonical_weight, descent_frak_I, first_violation, is_factorial,
    rational_feasible, smith_invariants, solve, solve_system, system_json, verify_alpha,
)
from .verdicts import (
    ClassificationReport, Composition, InnerCornerFailure, PatternFailure,
    check_gorenstein, classify, coset_gorenstein, is_fano, is_gorenstein, is_smooth,
    matrix_schubert_embed, min_coset_rep,
)
from .enumeration import CensusRow, OracleMismatch, census

__version__ = "0.1.0"
