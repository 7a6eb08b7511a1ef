"""Report construction and deterministic serialization.

All emitted text is byte-stable for identical inputs: JSON objects are
key-sorted, floats are rendered with 17 significant digits (enough to
round-trip any double exactly), and no timestamps or environment state
leak into the output.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass

from ._version import __version__
from .classic import AnomalyVerdict
from .core import Frame, MassFunction
from .scenarios import SweepReport, TheoremTrialReport

FLOAT_DIGITS = 17


def format_float(value: float) -> str:
    """Shortest 17-significant-digit rendering; round-trips exactly."""
    return format(float(value), f".{FLOAT_DIGITS}g")


def canonical_json(value, indent: int = 0) -> str:
    """Deterministic JSON: sorted keys, fixed float format, ASCII only."""
    return "".join(_emit(value, indent)) + "\n"


def _emit(value, depth):
    pad = "  " * depth
    inner = "  " * (depth + 1)
    if value is None:
        yield "null"
    elif isinstance(value, bool):
        yield "true" if value else "false"
    elif isinstance(value, int):
        yield repr(value)
    elif isinstance(value, float):
        yield format_float(value)
    elif isinstance(value, str):
        yield _escape(value)
    elif isinstance(value, dict):
        if not value:
            yield "{}"
            return
        yield "{\n"
        for i, key in enumerate(sorted(value)):
            if not isinstance(key, str):
                raise TypeError(f"object keys must be strings, got {key!r}")
            yield f"{inner}{_escape(key)}: "
            yield from _emit(value[key], depth + 1)
            yield ",\n" if i < len(value) - 1 else "\n"
        yield pad + "}"
    elif isinstance(value, (list, tuple)):
        if not value:
            yield "[]"
            return
        yield "[\n"
        for i, item in enumerate(value):
            yield inner
            yield from _emit(item, depth + 1)
            yield ",\n" if i < len(value) - 1 else "\n"
        yield pad + "]"
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def _escape(text: str) -> str:
    return json.dumps(text, ensure_ascii=True)


def text_digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def distribution_rows(m: MassFunction) -> list[dict]:
    """Mass entries as serializable rows, sorted by encoded subset value."""
    return [
        {"subset": list(m.frame.decode(s)), "mass": v} for s, v in m.items()
    ]


def _verdict_dict(verdict: AnomalyVerdict) -> dict:
    return {
        "anomalous": verdict.anomalous,
        "matched_source": verdict.matched_source,
        "vacuous_input": verdict.vacuous_input,
        "max_deviation": verdict.max_deviation,
    }


@dataclass(frozen=True)
class RunReport:
    """Structured result of one combination run."""

    rule: str
    inputs: tuple[str, str]
    frame: Frame
    combined: MassFunction
    conflict: float
    anomaly: AnomalyVerdict
    epsilon: float
    input_digest: str
    normalized_inputs: bool = False
    normalizer: float | None = None
    pair_count: int | None = None

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "inputs": list(self.inputs),
            "frame": list(self.frame.labels),
            "distribution": distribution_rows(self.combined),
            "conflict": self.conflict,
            "normalizer": self.normalizer,
            "pair_count": self.pair_count,
            "anomaly": _verdict_dict(self.anomaly),
            "epsilon": self.epsilon,
            "normalized_inputs": self.normalized_inputs,
            "input_digest": self.input_digest,
            "tool_version": __version__,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())


def _subset_token(frame: Frame, subset: int) -> str:
    return "+".join(frame.decode(subset))


def sweep_report_dict(report: SweepReport) -> dict:
    points = []
    for point in report.points:
        points.append({
            "a": point.params.a,
            "b1": point.params.b1,
            "b2": point.params.b2,
            "conflict": point.conflict,
            "dempster": _verdict_dict(point.dempster),
            "alt": _verdict_dict(point.alt),
            "alt_conflict_mu": point.alt_conflict_mu,
            "alt_normalizer": point.alt_normalizer,
        })
    return {
        "epsilon": report.epsilon,
        "points": points,
        "point_count": len(report.points),
        "dempster_anomalous_fraction": report.dempster_anomalous_fraction,
        "alt_anomalous_fraction": report.alt_anomalous_fraction,
        "tool_version": __version__,
    }


def sweep_report_csv(report: SweepReport, frame: Frame) -> str:
    """One delimited record per grid point."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([
        "a", "b1", "b2", "conflict",
        "dempster_anomalous", "dempster_matched_source", "dempster_max_deviation",
        "alt_anomalous", "alt_max_deviation", "alt_conflict_mu", "alt_normalizer",
        "alt_distribution",
    ])
    for point in report.points:
        digest = ";".join(
            f"{_subset_token(frame, s)}={format_float(v)}"
            for s, v in sorted(point.alt_distribution.items())
        )
        writer.writerow([
            format_float(point.params.a),
            format_float(point.params.b1),
            format_float(point.params.b2),
            format_float(point.conflict),
            int(point.dempster.anomalous),
            point.dempster.matched_source or "",
            format_float(point.dempster.max_deviation),
            int(point.alt.anomalous),
            format_float(point.alt.max_deviation),
            format_float(point.alt_conflict_mu),
            format_float(point.alt_normalizer),
            digest,
        ])
    return buffer.getvalue()


def _bba_rows(m: MassFunction) -> list[dict]:
    return distribution_rows(m)


def theorem_report_dict(report: TheoremTrialReport) -> dict:
    margins = report.margins
    return {
        "frame_size": report.frame_size,
        "trials": report.trials,
        "seed": report.seed,
        "epsilon": report.epsilon,
        "witness_mode": report.witness_mode,
        "skip_degenerate": report.skip_degenerate,
        "passes": report.passes,
        "violation_count": len(report.violations),
        "violations": [
            {
                "trial": v.trial,
                "m1": _bba_rows(v.m1),
                "m2": _bba_rows(v.m2),
                "combined": _bba_rows(v.combined),
                "margin": v.margin,
            }
            for v in report.violations
        ],
        "skipped_identical": report.skipped_identical,
        "skipped_degenerate": report.skipped_degenerate,
        "degenerate_conflict": report.degenerate_conflict,
        "margin_min": min(margins) if margins else None,
        "margin_max": max(margins) if margins else None,
        "tool_version": __version__,
    }


def theorem_report_csv(report: TheoremTrialReport) -> str:
    """One delimited record per trial."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["trial", "outcome", "witness_margin"])
    for index, outcome, margin in report.trial_outcomes:
        writer.writerow([index, outcome, "" if margin is None else format_float(margin)])
    return buffer.getvalue()
