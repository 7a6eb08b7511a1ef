"""Exception hierarchy for the belief-fusion library.

``ValidationError`` subclasses signal rejected inputs (bad frames, bad mass
assignments, malformed documents, out-of-range parameters).  The two
``Total*Conflict`` errors signal analytically degenerate combinations where
the respective rule is undefined; they are raised from otherwise valid
inputs and are therefore not validation errors.
"""


class FusionError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(FusionError):
    """An input failed validation."""


class DuplicateLabel(ValidationError):
    """Frame labels must be pairwise distinct."""


class EmptyFrame(ValidationError):
    """A frame needs at least one hypothesis label."""


class FrameTooLarge(ValidationError):
    """Frame exceeds the 63-label subset-encoding capacity."""


class MassOnEmptySet(ValidationError):
    """A mass assignment put positive mass on the empty set."""


class NegativeMass(ValidationError):
    """A mass assignment contained a negative mass."""


class SumNotOne(ValidationError):
    """Masses do not sum to one within tolerance."""


class DuplicateFocalElement(ValidationError):
    """The same subset appeared twice in a mass assignment."""


class FrameMismatch(ValidationError):
    """Operands are defined over different frames, or a subset encoding
    carries bits outside the frame."""


class InvalidParams(ValidationError):
    """Scenario parameters outside their admissible region."""


class FrameTooLargeForDenseTable(ValidationError):
    """Dense power-set tables are capped at 24 labels."""


class AltFrameLimitExceeded(ValidationError):
    """Transformed-measure operations refuse frames beyond the configured
    cardinality guard (the support can be the full downward closure of the
    focal elements, so the pair enumeration grows as 4^n)."""


class ParseError(ValidationError):
    """A document is not well-formed under the input schema."""


class UnknownLabel(ParseError):
    """A subset in a document referenced a label outside the frame."""


class TotalConflict(FusionError):
    """Dempster's rule is undefined: the sources are in total conflict."""


class TotalAltConflict(FusionError):
    """The alternative rule is undefined: every cross-support pair of the
    transformed measures is disjoint."""
