"""Classical Dempster-Shafer operators.

Belief and plausibility, the conflict mass, Dempster's combination rule,
and a detector for the rule's replication anomaly (a combined assignment
that reproduces one of two differing inputs).

All sums use ``math.fsum``, which returns the correctly rounded value of
the exact sum regardless of operand order; this makes ``conflict`` and
``dempster_combine`` exactly commutative in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Literal

import numpy as np

from .core import Frame, MassFunction, differing_subsets, is_vacuous
from .errors import FrameMismatch, FrameTooLargeForDenseTable, TotalConflict

MAX_DENSE_TABLE_FRAME = 24
DEGENERACY_THRESHOLD = 1e-12
DEFAULT_EPSILON = 1e-9


def _same_frame(m1: MassFunction, m2: MassFunction) -> Frame:
    if m1.frame != m2.frame:
        raise FrameMismatch("operands live on different frames")
    return m1.frame


def belief(m: MassFunction, subset: int) -> float:
    """Bel(A): total mass of focal elements contained in ``subset``."""
    m.frame.check_subset(subset)
    return fsum(v for s, v in m.items() if s & subset == s)


def plausibility(m: MassFunction, subset: int) -> float:
    """Pl(A): total mass of focal elements intersecting ``subset``."""
    m.frame.check_subset(subset)
    return fsum(v for s, v in m.items() if s & subset)


def belief_table(m: MassFunction) -> np.ndarray:
    """Bel(A) for every subset at once, indexed by encoded subset value.

    Runs the subset-sum zeta transform in O(n * 2^n); refuses frames past
    24 labels, where the dense table stops being reasonable.
    """
    n = m.frame.n
    if n > MAX_DENSE_TABLE_FRAME:
        raise FrameTooLargeForDenseTable(
            f"dense table over {n} labels needs 2^{n} entries"
        )
    table = np.zeros(1 << n)
    for s, v in m.items():
        table[s] = v
    for i in range(n):
        step = 1 << i
        view = table.reshape(-1, 2 * step)
        view[:, step:] += view[:, :step]
    return table


def conflict(m1: MassFunction, m2: MassFunction) -> float:
    """Total product mass on disjoint focal pairs (the conflict)."""
    _same_frame(m1, m2)
    return fsum(
        v1 * v2 for s1, v1 in m1.items() for s2, v2 in m2.items() if not s1 & s2
    )


def dempster_combine(m1: MassFunction, m2: MassFunction) -> tuple[MassFunction, float]:
    """Dempster's rule: conjunctive pooling renormalized by 1 - conflict.

    Returns the combined mass function together with the conflict value.
    Iterates over focal pairs only; products falling on the same subset are
    accumulated and summed exactly, then divided by the total non-conflicting
    product mass (the numerically stable form of 1 - conflict, identical for
    exactly normalized inputs).  Raises :class:`TotalConflict` when no
    non-conflicting mass remains.
    """
    _same_frame(m1, m2)
    buckets: dict[int, list[float]] = {}
    clash: list[float] = []
    for s1, v1 in m1.items():
        for s2, v2 in m2.items():
            inter = s1 & s2
            if inter:
                buckets.setdefault(inter, []).append(v1 * v2)
            else:
                clash.append(v1 * v2)
    conflict_value = fsum(clash)
    remaining = fsum(fsum(products) for products in buckets.values())
    if remaining <= DEGENERACY_THRESHOLD:
        raise TotalConflict(
            f"sources are in total conflict (remaining mass {remaining!r})"
        )
    combined = MassFunction(
        m1.frame, [(s, fsum(products) / remaining) for s, products in buckets.items()]
    )
    return combined, conflict_value


@dataclass(frozen=True)
class AnomalyVerdict:
    """Outcome of checking a combined assignment against its two inputs.

    ``anomalous`` is true when the inputs differ (beyond epsilon somewhere)
    yet the combined assignment replicates one of them everywhere within
    epsilon; ``matched_source`` names the replicated input.  Replication of
    an input is expected, not pathological, when the other input is vacuous;
    ``vacuous_input`` flags that case so callers can discount it.
    ``max_deviation`` is the smaller of the two max-norm distances from the
    combined assignment to the inputs.
    """

    anomalous: bool
    matched_source: Literal["source1", "source2"] | None
    vacuous_input: bool
    max_deviation: float


def _max_abs_difference(a: MassFunction, b: MassFunction) -> float:
    keys = set(a.focal()) | set(b.focal())
    if not keys:
        return 0.0
    return max(abs(a.mass(s) - b.mass(s)) for s in keys)


def detect_anomaly(m1: MassFunction, m2: MassFunction, combined: MassFunction,
                   epsilon: float = DEFAULT_EPSILON) -> AnomalyVerdict:
    """Check whether ``combined`` replicates ``m1`` or ``m2``.

    Comparison runs over all subsets (outside the union of focal elements
    every assignment is zero, so only stored keys need checking).  Ties
    resolve to ``source1``.
    """
    _same_frame(m1, m2)
    if combined.frame != m1.frame:
        raise FrameMismatch("combined assignment lives on a different frame")
    if epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    dev1 = _max_abs_difference(combined, m1)
    dev2 = _max_abs_difference(combined, m2)
    if dev1 <= epsilon:
        matched: Literal["source1", "source2"] | None = "source1"
    elif dev2 <= epsilon:
        matched = "source2"
    else:
        matched = None
    inputs_differ = bool(differing_subsets(m1, m2, epsilon))
    return AnomalyVerdict(
        anomalous=inputs_differ and matched is not None,
        matched_source=matched,
        vacuous_input=is_vacuous(m1) or is_vacuous(m2),
        max_deviation=min(dev1, dev2),
    )
