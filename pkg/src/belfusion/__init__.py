"""Belief fusion over finite frames of discernment.

Classical Dempster-Shafer machinery (mass functions, belief/plausibility,
Dempster's combination rule) next to an alternative fusion rule that pools
cardinality-split subset weights instead of raw masses, plus scenario
generators and a randomized verifier for the alternative rule's
no-replication behaviour, and a document/CLI layer for batch use.
"""

from ._version import __version__
from .alt import (
    AltFusionResult,
    TransformedMeasure,
    absorbing_pair,
    alt_combine,
    alt_conflict,
    fuse,
    transform,
)
from .classic import (
    AnomalyVerdict,
    belief,
    belief_table,
    conflict,
    dempster_combine,
    detect_anomaly,
    plausibility,
)
from .core import (
    Frame,
    MassFunction,
    differing_subsets,
    is_bayesian,
    is_categorical,
    is_vacuous,
    make_bba,
    make_frame,
    vacuous_bba,
)
from .errors import (
    AltFrameLimitExceeded,
    DuplicateFocalElement,
    DuplicateLabel,
    EmptyFrame,
    FrameMismatch,
    FrameTooLarge,
    FrameTooLargeForDenseTable,
    FusionError,
    InvalidParams,
    MassOnEmptySet,
    NegativeMass,
    ParseError,
    SumNotOne,
    TotalAltConflict,
    TotalConflict,
    UnknownLabel,
    ValidationError,
)
from .scenarios import (
    SweepPoint,
    SweepReport,
    TheoremTrialReport,
    TheoremViolation,
    TwoDoctorsParams,
    paradox_sweep,
    parameter_grid,
    random_bba,
    two_doctors,
    verify_theorem,
)

__all__ = [
    "__version__",
    "AltFrameLimitExceeded",
    "AltFusionResult",
    "AnomalyVerdict",
    "DuplicateFocalElement",
    "DuplicateLabel",
    "EmptyFrame",
    "Frame",
    "FrameMismatch",
    "FrameTooLarge",
    "FrameTooLargeForDenseTable",
    "FusionError",
    "InvalidParams",
    "MassFunction",
    "MassOnEmptySet",
    "NegativeMass",
    "ParseError",
    "SumNotOne",
    "SweepPoint",
    "SweepReport",
    "TheoremTrialReport",
    "TheoremViolation",
    "TotalAltConflict",
    "TotalConflict",
    "TransformedMeasure",
    "TwoDoctorsParams",
    "UnknownLabel",
    "ValidationError",
    "absorbing_pair",
    "alt_combine",
    "alt_conflict",
    "belief",
    "belief_table",
    "conflict",
    "dempster_combine",
    "detect_anomaly",
    "differing_subsets",
    "fuse",
    "is_bayesian",
    "is_categorical",
    "is_vacuous",
    "make_bba",
    "make_frame",
    "paradox_sweep",
    "parameter_grid",
    "plausibility",
    "random_bba",
    "transform",
    "two_doctors",
    "vacuous_bba",
    "verify_theorem",
]
