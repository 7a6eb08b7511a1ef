"""Frames of discernment, bitmask subset encoding, and mass functions.

A frame fixes a canonical ordering of hypothesis labels; every subset of the
frame is encoded as an integer bitmask with bit ``i`` set exactly when label
``i`` is a member.  Masks from different frames are not interchangeable.
Bitmasks make the set algebra needed by the combination rules O(1):
intersection is ``&``, subset tests are ``a & b == a``, complement is
``mask ^ frame.full``.

A :class:`MassFunction` is a validated, immutable basic belief assignment:
a sparse map from non-empty subsets to strictly positive masses summing to
one.  The stored keys are exactly the focal elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Iterable, Iterator, Mapping

from .errors import (
    DuplicateFocalElement,
    DuplicateLabel,
    EmptyFrame,
    FrameMismatch,
    FrameTooLarge,
    MassOnEmptySet,
    NegativeMass,
    SumNotOne,
)

MAX_FRAME_SIZE = 63
SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Frame:
    """An ordered frame of discernment.

    Construct via :func:`make_frame`, which validates the labels.  The label
    order given at construction is canonical and defines the bit positions
    of the subset encoding.
    """

    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        """Number of hypotheses."""
        return len(self.labels)

    @property
    def full(self) -> int:
        """Bitmask of the whole frame (all hypotheses)."""
        return (1 << len(self.labels)) - 1

    def encode(self, labels: Iterable[str]) -> int:
        """Encode a collection of labels as a subset bitmask.

        A bare string is treated as a single label, not as an iterable of
        characters.  Raises :class:`FrameMismatch` for labels outside the
        frame.
        """
        if isinstance(labels, str):
            labels = (labels,)
        mask = 0
        for label in labels:
            try:
                mask |= 1 << self.labels.index(label)
            except ValueError:
                raise FrameMismatch(
                    f"label {label!r} is not in frame {list(self.labels)}"
                ) from None
        return mask

    def decode(self, subset: int) -> tuple[str, ...]:
        """Decode a subset bitmask into its member labels, in frame order."""
        self.check_subset(subset)
        return tuple(
            label for i, label in enumerate(self.labels) if subset >> i & 1
        )

    def check_subset(self, subset: int) -> int:
        """Validate that a bitmask stays within this frame; returns it."""
        if subset < 0 or subset & ~self.full:
            raise FrameMismatch(
                f"subset 0b{subset:b} does not fit a frame of {self.n} labels"
            )
        return subset

    def complement(self, subset: int) -> int:
        self.check_subset(subset)
        return subset ^ self.full

    def subsets(self, include_empty: bool = False) -> Iterator[int]:
        """Iterate over all subset masks in increasing encoded order."""
        return iter(range(0 if include_empty else 1, self.full + 1))

    def singletons(self) -> Iterator[int]:
        return (1 << i for i in range(self.n))

    def format_subset(self, subset: int) -> str:
        """Human-readable rendering, e.g. ``{A,B}``."""
        return "{" + ",".join(self.decode(subset)) + "}"


def make_frame(labels: Iterable[str]) -> Frame:
    """Build a frame from an ordered collection of hypothesis labels.

    Labels must be non-empty strings, pairwise distinct, at most 63 of them
    (so every subset fits one machine word).
    """
    labels = tuple(labels)
    if not labels:
        raise EmptyFrame("a frame needs at least one label")
    if len(labels) > MAX_FRAME_SIZE:
        raise FrameTooLarge(
            f"{len(labels)} labels exceed the capacity of {MAX_FRAME_SIZE}"
        )
    seen = set()
    for label in labels:
        if not isinstance(label, str) or not label:
            raise EmptyFrame(f"labels must be non-empty strings, got {label!r}")
        if label in seen:
            raise DuplicateLabel(f"label {label!r} appears more than once")
        seen.add(label)
    return Frame(labels)


class MassFunction:
    """A validated basic belief assignment over a frame.

    Immutable after construction.  Keys of the internal mapping are exactly
    the focal elements (subsets with strictly positive mass); the empty set
    never appears; masses sum to one within ``SUM_TOLERANCE``.

    Use :func:`make_bba` (or the scenario generators) rather than calling
    the constructor with unchecked data.
    """

    __slots__ = ("frame", "_masses")

    def __init__(self, frame: Frame, entries: Iterable[tuple[int, float]] | Mapping[int, float],
                 normalize: bool = False):
        if isinstance(entries, Mapping):
            entries = entries.items()
        masses: dict[int, float] = {}
        for subset, mass in entries:
            frame.check_subset(subset)
            mass = float(mass)
            if mass == 0.0:
                continue  # explicit zeros are dropped, not rejected
            if mass < 0.0:
                raise NegativeMass(
                    f"mass {mass!r} on {frame.format_subset(subset)} is negative"
                )
            if subset == 0:
                raise MassOnEmptySet("positive mass on the empty set")
            if subset in masses:
                raise DuplicateFocalElement(
                    f"subset {frame.format_subset(subset)} listed twice"
                )
            masses[subset] = mass
        total = fsum(masses.values())
        if normalize:
            if total <= 0.0:
                raise SumNotOne("cannot normalize: total mass is zero")
            masses = {s: v / total for s, v in masses.items()}
            total = fsum(masses.values())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise SumNotOne(f"masses sum to {total!r}, expected 1")
        self.frame = frame
        self._masses = dict(sorted(masses.items()))

    def mass(self, subset: int) -> float:
        """Mass of a subset; 0.0 for non-focal subsets."""
        self.frame.check_subset(subset)
        return self._masses.get(subset, 0.0)

    def items(self):
        """(subset, mass) pairs in increasing encoded-subset order."""
        return self._masses.items()

    def focal(self) -> frozenset[int]:
        """The focal elements (subsets carrying positive mass)."""
        return frozenset(self._masses)

    def __len__(self) -> int:
        return len(self._masses)

    def __contains__(self, subset: int) -> bool:
        return subset in self._masses

    def __eq__(self, other) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame == other.frame and self._masses == other._masses

    def __hash__(self):
        return hash((self.frame, tuple(self._masses.items())))

    def __repr__(self) -> str:
        body = ", ".join(
            f"{self.frame.format_subset(s)}: {v:g}" for s, v in self._masses.items()
        )
        return f"MassFunction({body})"


def make_bba(frame: Frame, entries: Iterable[tuple[int, float]] | Mapping[int, float],
             normalize: bool = False) -> MassFunction:
    """Build a validated mass function from (subset, mass) entries.

    Entries with mass exactly 0 are dropped before validation.  With
    ``normalize=True`` the remaining masses are rescaled to sum to one;
    by default a bad sum is an error (silent renormalization masks data
    errors).
    """
    return MassFunction(frame, entries, normalize=normalize)


def vacuous_bba(frame: Frame) -> MassFunction:
    """The vacuous assignment: all mass on the whole frame (full ignorance)."""
    return MassFunction(frame, [(frame.full, 1.0)])


def differing_subsets(m1: MassFunction, m2: MassFunction, epsilon: float) -> set[int]:
    """Subsets where two mass functions differ by more than ``epsilon``.

    Because both assignments are normalized, the result never has exactly
    one element: a single differing subset would leave the remaining mass
    unbalanced.
    """
    if m1.frame != m2.frame:
        raise FrameMismatch("mass functions live on different frames")
    if epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    keys = set(m1.focal()) | set(m2.focal())
    return {s for s in keys if abs(m1.mass(s) - m2.mass(s)) > epsilon}


def is_vacuous(m: MassFunction) -> bool:
    """True when the only focal element is the whole frame."""
    return m.focal() == {m.frame.full}


def is_bayesian(m: MassFunction) -> bool:
    """True when every focal element is a singleton."""
    return all(s.bit_count() == 1 for s in m.focal())


def is_categorical(m: MassFunction) -> bool:
    """True when a single focal element carries all the mass."""
    return len(m) == 1
