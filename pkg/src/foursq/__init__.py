"""Four-square representations of integers under linear, polynomial, and
Pythagorean constraints: exact arithmetic, exception-set catalogs,
constructive decompositions, and checkpointed large-range verification."""

from .arith import (exact_root, iroot, is_square, is_sum_of_three_squares,
                    isqrt, strip_fours, three_square_decompose)
from .constraint import (ConstraintSpec, Representation, Witness,
                         parse_constraint, satisfies)
from .constructive import (all_families, batch_validate, construct,
                           parse_family)
from .errors import (CheckpointMismatch, CorruptCheckpoint, DegreeError,
                     DslSyntaxError, FourSquareError, HypothesisFailure,
                     NonContiguousRows, OverflowCapError, UnknownFormError)
from .families import FAMILIES, get_family, list_families
from .quad_enum import (DedupRule, count_constrained, enumerate_four_squares,
                        find_constrained)
from .scanner import (ScanConfig, ScanReport, resume, scan,
                      verify_hypothesis)
from .sequences import SequenceDef, emit_bfile, generate, load_catalog
from .ternary import (Membership, TernaryForm, exception_membership,
                      pairwise_disjoint, verify_exception_catalog)

__version__ = "0.1.0"

__all__ = [
    "CheckpointMismatch", "ConstraintSpec", "CorruptCheckpoint",
    "DedupRule", "DegreeError", "DslSyntaxError", "FAMILIES",
    "FourSquareError", "HypothesisFailure", "Membership",
    "NonContiguousRows", "OverflowCapError", "Representation",
    "ScanConfig", "ScanReport", "SequenceDef", "TernaryForm",
    "UnknownFormError", "Witness", "all_families", "batch_validate",
    "construct", "count_constrained", "emit_bfile",
    "enumerate_four_squares", "exact_root", "exception_membership",
    "find_constrained", "generate", "get_family", "iroot", "is_square",
    "is_sum_of_three_squares", "isqrt", "list_families", "load_catalog",
    "pairwise_disjoint", "parse_constraint", "parse_family", "resume",
    "satisfies", "scan", "strip_fours", "three_square_decompose",
    "verify_exception_catalog", "verify_hypothesis",
]
