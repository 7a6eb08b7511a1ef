"""Alternative fusion: transformed measures and their conjunctive pooling.

The transform spreads each focal mass equally over the elements of the
focal set and reads the weight of a subset as the total share it receives
from focal supersets:

    weight(A) = sum over focal H with H >= A of  m(H) / |H|

On singletons this is the classical cardinality split; extending it to all
subsets by the same superset sum makes the weight function antitone under
inclusion and keeps the singleton weights summing to one.

Two transformed measures are pooled like Dempster's rule pools mass
functions: products of weights are routed to the intersection of their
supporting subsets, and the surviving mass is rescaled to a proper mass
function.  Unlike Dempster's rule, the weights of a measure can sum past
one, so the disjoint-pair product total (``conflict_mu``) may exceed one;
the effective positive normalizer is the intersecting-pair product total,
which is what :class:`AltFusionResult` reports.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import fsum

from .core import Frame, MassFunction, is_bayesian
from .errors import AltFrameLimitExceeded, FrameMismatch, TotalAltConflict

DEFAULT_MAX_ALT_FRAME = 12
FRAME_LIMIT_ENV_VAR = "FUSION_MAX_FRAME"
DEGENERACY_THRESHOLD = 1e-12


def _frame_limit(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get(FRAME_LIMIT_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise AltFrameLimitExceeded(
                f"{FRAME_LIMIT_ENV_VAR}={env!r} is not an integer"
            ) from None
    return DEFAULT_MAX_ALT_FRAME


def _check_frame_limit(frame: Frame, max_frame: int | None) -> None:
    limit = _frame_limit(max_frame)
    if frame.n > limit:
        raise AltFrameLimitExceeded(
            f"frame of {frame.n} labels exceeds the guard of {limit}; the "
            f"support enumeration grows as 4^n (set {FRAME_LIMIT_ENV_VAR} or "
            f"pass max_frame to override)"
        )


@dataclass(frozen=True)
class TransformedMeasure:
    """Subset weights derived from a mass function by the cardinality split.

    ``weights`` holds every subset with positive weight, i.e. all non-empty
    subsets of the focal elements of the source.  ``source`` is a free-form
    provenance note naming the originating assignment.
    """

    frame: Frame
    weights: dict[int, float]
    source: str = ""

    def weight(self, subset: int) -> float:
        """Weight of a subset; 0.0 outside the support."""
        self.frame.check_subset(subset)
        return self.weights.get(subset, 0.0)

    def support(self) -> tuple[int, ...]:
        return tuple(self.weights)

    def items(self):
        return self.weights.items()


def transform(m: MassFunction, source: str = "", *,
              max_frame: int | None = None) -> TransformedMeasure:
    """Transform a mass function into its subset weight measure.

    Materializes the full support (the downward closure of the focal
    elements), so it honors the same frame-size guard as the pooling step.
    """
    _check_frame_limit(m.frame, max_frame)
    shares: dict[int, list[float]] = {}
    for focal, mass in m.items():
        share = mass / focal.bit_count()
        sub = focal
        while sub:  # all non-empty submasks of the focal set
            shares.setdefault(sub, []).append(share)
            sub = (sub - 1) & focal
    weights = {s: fsum(parts) for s, parts in sorted(shares.items())}
    return TransformedMeasure(m.frame, weights, source)


def _same_frame(mu1: TransformedMeasure, mu2: TransformedMeasure) -> Frame:
    if mu1.frame != mu2.frame:
        raise FrameMismatch("transformed measures live on different frames")
    return mu1.frame


def alt_conflict(mu1: TransformedMeasure, mu2: TransformedMeasure) -> float:
    """Total weight product over disjoint support pairs.

    Diagnostic counterpart of the Dempster conflict; not bounded by one,
    because subset weights are not a normalized distribution.
    """
    _same_frame(mu1, mu2)
    return fsum(
        w1 * w2 for s1, w1 in mu1.items() for s2, w2 in mu2.items() if not s1 & s2
    )


@dataclass(frozen=True)
class AltFusionResult:
    """Outcome of pooling two transformed measures.

    ``combined`` is a validated mass function.  ``conflict_mu`` is the
    disjoint-pair product total; ``normalizer_k`` the intersecting-pair
    product total, the effective denominator that scales the pooled
    products to sum to one; ``pair_count`` the number of intersecting
    support pairs that contributed.
    """

    combined: MassFunction
    conflict_mu: float
    normalizer_k: float
    pair_count: int


def alt_combine(mu1: TransformedMeasure, mu2: TransformedMeasure, *,
                max_frame: int | None = None) -> AltFusionResult:
    """Pool two transformed measures into a combined mass function.

    Enumerates all ordered pairs from the two supports, routes each weight
    product to the intersection, and normalizes the non-empty buckets.
    Raises :class:`TotalAltConflict` when every cross-support pair is
    disjoint (nothing survives the intersection).
    """
    frame = _same_frame(mu1, mu2)
    _check_frame_limit(frame, max_frame)
    buckets: dict[int, list[float]] = {}
    clash: list[float] = []
    pair_count = 0
    for s1, w1 in mu1.items():
        for s2, w2 in mu2.items():
            inter = s1 & s2
            if inter:
                buckets.setdefault(inter, []).append(w1 * w2)
                pair_count += 1
            else:
                clash.append(w1 * w2)
    conflict_mu = fsum(clash)
    normalizer = fsum(fsum(products) for products in buckets.values())
    if normalizer <= DEGENERACY_THRESHOLD:
        raise TotalAltConflict(
            f"no intersecting support pairs (surviving mass {normalizer!r})"
        )
    combined = MassFunction(
        frame, [(s, fsum(products) / normalizer) for s, products in buckets.items()]
    )
    return AltFusionResult(
        combined=combined,
        conflict_mu=conflict_mu,
        normalizer_k=normalizer,
        pair_count=pair_count,
    )


def fuse(m1: MassFunction, m2: MassFunction, *,
         max_frame: int | None = None) -> AltFusionResult:
    """Transform both assignments and pool them: the drop-in replacement
    for Dempster's rule."""
    if m1.frame != m2.frame:
        raise FrameMismatch("mass functions live on different frames")
    mu1 = transform(m1, "source1", max_frame=max_frame)
    mu2 = transform(m2, "source2", max_frame=max_frame)
    return alt_combine(mu1, mu2, max_frame=max_frame)


def _bayesian_absorbed(candidate: MassFunction, other: MassFunction) -> bool:
    if not is_bayesian(candidate):
        return False
    support = 0
    for s in candidate.focal():
        support |= s
    return all(h & support == 0 or h & support == support for h in other.focal())


def absorbing_pair(m1: MassFunction, m2: MassFunction) -> bool:
    """True when :func:`fuse` provably replicates one of the two inputs.

    That happens exactly when one input is Bayesian (all focal elements are
    singletons) and every focal element of the other input either contains
    or is disjoint from the Bayesian one's support.  Each singleton of the
    support then collects its weight product scaled by one shared factor,
    so normalization reproduces the Bayesian input bit-for-bit (up to
    rounding).  Special cases: a deterministic single-singleton source
    absorbs any compatible partner, and a vacuous source replicates any
    Bayesian partner.  Pairs in these families are structurally immune to
    no-replication guarantees and are reported separately by the
    randomized verifier.
    """
    if m1.frame != m2.frame:
        raise FrameMismatch("mass functions live on different frames")
    return _bayesian_absorbed(m1, m2) or _bayesian_absorbed(m2, m1)
