"""Symbolic GF(2) engine for Stiefel-manifold cohomology and bounds on the
upper characteristic rank of vector bundles."""

from .gf2 import CoordVector, Span
from .registry import WitnessRecord, load_witnesses, witness_by_id
from .rings import (
    COMPLEX,
    QUATERNION,
    REAL,
    Element,
    FieldTag,
    GeneratorSpec,
    Monomial,
    RingPresentation,
    build_ring,
    manifold_dimension,
)
from .steenrod import SQ1_ZERO_ASSUMPTION, SqTable, binom_mod2, sq_on_generator
from .table import TheoremRow, expected_row, run_theorem_table
from .wu import (
    DEFAULT_BRANCH_LIMIT,
    MILNOR_RULE,
    BoundReport,
    BranchLimitExceeded,
    CorollaryResult,
    ObstructionRule,
    Partial,
    SWAssignment,
    WitnessVerification,
    WitnessVerificationError,
    WuEnumerator,
    charrank_of_assignment,
    check_corollary,
    coverage_prefix,
    ucharrank_bound,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "COMPLEX",
    "CoordVector",
    "DEFAULT_BRANCH_LIMIT",
    "Element",
    "FieldTag",
    "GeneratorSpec",
    "MILNOR_RULE",
    "Monomial",
    "ObstructionRule",
    "Partial",
    "QUATERNION",
    "REAL",
    "RingPresentation",
    "SQ1_ZERO_ASSUMPTION",
    "SWAssignment",
    "Span",
    "SqTable",
    "TheoremRow",
    "BoundReport",
    "BranchLimitExceeded",
    "CorollaryResult",
    "WitnessRecord",
    "WitnessVerification",
    "WitnessVerificationError",
    "WuEnumerator",
    "binom_mod2",
    "build_ring",
    "charrank_of_assignment",
    "check_corollary",
    "coverage_prefix",
    "expected_row",
    "load_witnesses",
    "manifold_dimension",
    "run_theorem_table",
    "sq_on_generator",
    "ucharrank_bound",
    "verify_witness",
    "witness_by_id",
]
