"""Counterexample generators, paradox sweeps, and the randomized verifier.

The two-doctors template is the parametric input family on the frame
{A, B, C} for which Dempster's rule discards the second source entirely:
the combined assignment equals the first input for every parameter choice,
however low the conflict.  ``paradox_sweep`` reproduces that behaviour over
a parameter grid and checks that the alternative rule stays clear of both
inputs at the same points.

``verify_theorem`` is the randomized check of the alternative rule's
no-replication guarantee: the combined output should differ from both
inputs at some subset.  Exact replication provably survives for two
structural input families (identical pairs, and the absorbing pairs
described in :func:`belfusion.alt.absorbing_pair`); trials in those
families are counted separately instead of being scored, and a flag turns
the exclusion off to expose them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import fsum
from typing import Iterable, Literal, Sequence

from .alt import absorbing_pair, fuse
from .classic import AnomalyVerdict, dempster_combine, detect_anomaly
from .core import Frame, MassFunction, differing_subsets, make_bba, make_frame
from .errors import InvalidParams, TotalAltConflict

DEFAULT_EPSILON = 1e-9
MASS_FLOOR = 1e-12

TWO_DOCTORS_LABELS = ("A", "B", "C")


@dataclass(frozen=True)
class TwoDoctorsParams:
    """Parameters of the two-doctors template.

    ``a`` in [0, 1]; ``b1`` and ``b2`` strictly positive with b1 + b2 <= 1.
    """

    a: float
    b1: float
    b2: float

    def __post_init__(self):
        if not 0.0 <= self.a <= 1.0:
            raise InvalidParams(f"a={self.a!r} outside [0, 1]")
        if self.b1 <= 0.0 or self.b2 <= 0.0:
            raise InvalidParams(f"b1={self.b1!r}, b2={self.b2!r} must be > 0")
        if self.b1 + self.b2 > 1.0:
            raise InvalidParams(f"b1 + b2 = {self.b1 + self.b2!r} exceeds 1")


def two_doctors(params: TwoDoctorsParams) -> tuple[MassFunction, MassFunction]:
    """Instantiate the template: m1 = {A: a, AB: 1-a},
    m2 = {AB: b1, C: 1-b1-b2, ABC: b2}; zero entries are dropped."""
    frame = make_frame(TWO_DOCTORS_LABELS)
    subset_a = frame.encode("A")
    subset_ab = frame.encode(["A", "B"])
    subset_c = frame.encode("C")
    m1 = make_bba(frame, [(subset_a, params.a), (subset_ab, 1.0 - params.a)])
    m2 = make_bba(frame, [
        (subset_ab, params.b1),
        (subset_c, 1.0 - (params.b1 + params.b2)),
        (frame.full, params.b2),
    ])
    return m1, m2


def parameter_grid(a_values: Sequence[float], b1_values: Sequence[float],
                   b2_values: Sequence[float]) -> list[TwoDoctorsParams]:
    """Cross product of parameter values, keeping only valid combinations.

    Individual values must already be admissible (a in [0, 1], b strictly
    positive); combinations with b1 + b2 > 1 are silently dropped.  An
    empty result is an error.
    """
    if not (a_values and b1_values and b2_values):
        raise InvalidParams("grid needs at least one value per parameter")
    for a in a_values:
        if not 0.0 <= a <= 1.0:
            raise InvalidParams(f"a={a!r} outside [0, 1]")
    for b in (*b1_values, *b2_values):
        if b <= 0.0 or b > 1.0:
            raise InvalidParams(f"b={b!r} outside (0, 1]")
    points = [
        TwoDoctorsParams(a, b1, b2)
        for a in a_values for b1 in b1_values for b2 in b2_values
        if b1 + b2 <= 1.0
    ]
    if not points:
        raise InvalidParams("no valid (a, b1, b2) combination in the grid")
    return points


@dataclass(frozen=True)
class SweepPoint:
    """Per-grid-point record of both rules on the two-doctors template."""

    params: TwoDoctorsParams
    conflict: float
    dempster: AnomalyVerdict
    alt: AnomalyVerdict
    alt_distribution: dict[int, float]
    alt_conflict_mu: float
    alt_normalizer: float


@dataclass(frozen=True)
class SweepReport:
    points: tuple[SweepPoint, ...]
    epsilon: float

    @property
    def dempster_anomalous_fraction(self) -> float:
        return sum(p.dempster.anomalous for p in self.points) / len(self.points)

    @property
    def alt_anomalous_fraction(self) -> float:
        return sum(p.alt.anomalous for p in self.points) / len(self.points)


def paradox_sweep(points: Iterable[TwoDoctorsParams],
                  epsilon: float = DEFAULT_EPSILON) -> SweepReport:
    """Run both combination rules over a grid of template parameters."""
    points = tuple(points)
    if not points:
        raise InvalidParams("empty parameter grid")
    records = []
    for params in points:
        m1, m2 = two_doctors(params)
        combined, conflict_value = dempster_combine(m1, m2)
        dempster_verdict = detect_anomaly(m1, m2, combined, epsilon)
        alt_result = fuse(m1, m2)
        alt_verdict = detect_anomaly(m1, m2, alt_result.combined, epsilon)
        records.append(SweepPoint(
            params=params,
            conflict=conflict_value,
            dempster=dempster_verdict,
            alt=alt_verdict,
            alt_distribution=dict(alt_result.combined.items()),
            alt_conflict_mu=alt_result.conflict_mu,
            alt_normalizer=alt_result.normalizer_k,
        ))
    return SweepReport(points=tuple(records), epsilon=epsilon)


def random_bba(frame: Frame, max_focal: int, rng: random.Random) -> MassFunction:
    """Draw a random mass function.

    Picks a focal count k uniformly from [1, max_focal], samples k distinct
    non-empty subsets without replacement, and draws their masses from the
    k-simplex by sorting k-1 uniform cuts and taking the gaps.  Gaps below
    1e-12 are dropped and the rest renormalized.  Fully determined by the
    generator state.
    """
    space = frame.full
    if not 1 <= max_focal <= space:
        raise InvalidParams(f"max_focal={max_focal} outside [1, {space}]")
    k = rng.randint(1, max_focal)
    focals = sorted(rng.sample(range(1, space + 1), k))
    cuts = sorted(rng.random() for _ in range(k - 1))
    bounds = [0.0, *cuts, 1.0]
    gaps = [hi - lo for lo, hi in zip(bounds, bounds[1:])]
    kept = [(s, g) for s, g in zip(focals, gaps) if g >= MASS_FLOOR]
    total = fsum(g for _, g in kept)
    return make_bba(frame, [(s, g / total) for s, g in kept])


TrialOutcome = Literal[
    "pass", "violation", "skipped_identical", "skipped_degenerate",
    "degenerate_conflict",
]


@dataclass(frozen=True)
class TheoremViolation:
    """A counterexample pair: the combined output failed to leave both
    inputs at any subset beyond epsilon."""

    trial: int
    m1: MassFunction
    m2: MassFunction
    combined: MassFunction
    margin: float


@dataclass(frozen=True)
class TheoremTrialReport:
    """Outcome tally of the randomized no-replication check.

    ``trial_outcomes`` holds one (index, outcome, margin) row per trial;
    the margin is the witness margin for scored trials and None for the
    excluded ones.  Counts always satisfy
    passes + violations + skipped_identical + skipped_degenerate +
    degenerate_conflict == trials.
    """

    frame_size: int
    trials: int
    seed: int
    epsilon: float
    witness_mode: str
    skip_degenerate: bool
    passes: int
    violations: tuple[TheoremViolation, ...]
    skipped_identical: int
    skipped_degenerate: int
    degenerate_conflict: int
    trial_outcomes: tuple[tuple[int, TrialOutcome, float | None], ...]

    @property
    def margins(self) -> tuple[float, ...]:
        return tuple(m for _, _, m in self.trial_outcomes if m is not None)


def _witness_margin(combined: MassFunction, m1: MassFunction, m2: MassFunction,
                    mode: str) -> float:
    keys = set(combined.focal()) | set(m1.focal()) | set(m2.focal())
    if mode == "same":
        # best subset at which the output leaves BOTH inputs
        return max(
            min(abs(combined.mass(s) - m1.mass(s)), abs(combined.mass(s) - m2.mass(s)))
            for s in keys
        )
    if mode == "per_input":
        dev1 = max(abs(combined.mass(s) - m1.mass(s)) for s in keys)
        dev2 = max(abs(combined.mass(s) - m2.mass(s)) for s in keys)
        return min(dev1, dev2)
    raise InvalidParams(f"unknown witness mode {mode!r}")


def verify_theorem(frame_size: int, trials: int, seed: int,
                   epsilon: float = DEFAULT_EPSILON, *,
                   witness_mode: str = "same",
                   skip_degenerate: bool = True) -> TheoremTrialReport:
    """Randomized check that fusing two differing assignments leaves both.

    Each trial draws an independent pair via :func:`random_bba` (sub-seeded
    from the trial index, so trials are reproducible and order-independent),
    fuses it, and looks for a witness subset where the output differs from
    both inputs by more than epsilon.  ``witness_mode="same"`` demands one
    subset differing from both at once (the strict reading);
    ``"per_input"`` allows separate witnesses.

    Identical pairs are not scored (the guarantee presupposes differing
    inputs).  With ``skip_degenerate`` (default), pairs for which exact
    replication is provable (:func:`absorbing_pair`) are counted as
    ``skipped_degenerate`` instead of scored; disable to score them, which
    deterministically produces violations.  Trials whose transformed
    supports never intersect cannot be fused and are tallied as
    ``degenerate_conflict``.
    """
    if not 2 <= frame_size <= 8:
        raise InvalidParams(f"frame_size={frame_size} outside [2, 8]")
    if trials < 1:
        raise InvalidParams(f"trials={trials} must be >= 1")
    if epsilon <= 0.0:
        raise InvalidParams("epsilon must be positive")
    if witness_mode not in ("same", "per_input"):
        raise InvalidParams(f"unknown witness mode {witness_mode!r}")
    frame = make_frame("ABCDEFGH"[:frame_size])
    max_focal = frame.full

    passes = 0
    violations: list[TheoremViolation] = []
    skipped_identical = 0
    skipped_degenerate = 0
    degenerate_conflict = 0
    outcomes: list[tuple[int, TrialOutcome, float | None]] = []

    for index in range(trials):
        rng = random.Random((seed << 32) + index)
        m1 = random_bba(frame, max_focal, rng)
        m2 = random_bba(frame, max_focal, rng)
        if not differing_subsets(m1, m2, epsilon):
            skipped_identical += 1
            outcomes.append((index, "skipped_identical", None))
            continue
        if skip_degenerate and absorbing_pair(m1, m2):
            skipped_degenerate += 1
            outcomes.append((index, "skipped_degenerate", None))
            continue
        try:
            result = fuse(m1, m2)
        except TotalAltConflict:
            degenerate_conflict += 1
            outcomes.append((index, "degenerate_conflict", None))
            continue
        margin = _witness_margin(result.combined, m1, m2, witness_mode)
        if margin > epsilon:
            passes += 1
            outcomes.append((index, "pass", margin))
        else:
            violations.append(TheoremViolation(index, m1, m2, result.combined, margin))
            outcomes.append((index, "violation", margin))

    return TheoremTrialReport(
        frame_size=frame_size,
        trials=trials,
        seed=seed,
        epsilon=epsilon,
        witness_mode=witness_mode,
        skip_degenerate=skip_degenerate,
        passes=passes,
        violations=tuple(violations),
        skipped_identical=skipped_identical,
        skipped_degenerate=skipped_degenerate,
        degenerate_conflict=degenerate_conflict,
        trial_outcomes=tuple(outcomes),
    )
