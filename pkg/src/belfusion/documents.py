"""Input document schema: a frame plus named mass assignments.

Documents are JSON objects with exactly two fields::

    {
      "frame": ["head", "hand"],
      "bbas": {
        "m1": [{"subset": ["head"], "mass": 0.9},
               {"subset": ["head", "hand"], "mass": 0.1}]
      }
    }

The frame's label order in the file is the canonical frame order.  Subsets
name their members by label; a label outside the frame is an error, and
every named assignment must pass full mass-function validation (the error
carries the offending name).
"""

from __future__ import annotations

import json
from typing import Mapping

from .core import Frame, MassFunction, make_bba, make_frame
from .errors import ParseError, UnknownLabel, ValidationError
from .reports import canonical_json


def parse_document(text: str, normalize: bool = False) -> tuple[Frame, dict[str, MassFunction]]:
    """Decode and validate a document; returns the frame and named BBAs.

    With ``normalize=True`` each assignment is rescaled to sum to one
    instead of being rejected for a bad sum; this is never done silently.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError("document root must be an object")
    extra = set(raw) - {"frame", "bbas"}
    if extra:
        raise ParseError(f"unknown top-level fields: {sorted(extra)}")
    if "frame" not in raw or "bbas" not in raw:
        raise ParseError("document needs 'frame' and 'bbas' fields")
    if not isinstance(raw["frame"], list):
        raise ParseError("'frame' must be a list of labels")
    frame = make_frame(raw["frame"])
    if not isinstance(raw["bbas"], dict) or not raw["bbas"]:
        raise ParseError("'bbas' must be a non-empty object of named entry lists")
    bbas: dict[str, MassFunction] = {}
    for name, entries in raw["bbas"].items():
        bbas[name] = _parse_bba(frame, name, entries, normalize)
    return frame, bbas


def _parse_bba(frame: Frame, name: str, entries, normalize: bool) -> MassFunction:
    if not isinstance(entries, list):
        raise ParseError(f"bba {name!r}: entries must be a list")
    decoded = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or set(entry) != {"subset", "mass"}:
            raise ParseError(
                f"bba {name!r} entry {i}: expected an object with 'subset' and 'mass'"
            )
        subset, mass = entry["subset"], entry["mass"]
        if not isinstance(subset, list) or not all(isinstance(s, str) for s in subset):
            raise ParseError(f"bba {name!r} entry {i}: 'subset' must be a list of labels")
        if isinstance(mass, bool) or not isinstance(mass, (int, float)):
            raise ParseError(f"bba {name!r} entry {i}: 'mass' must be a number")
        mask = 0
        for label in subset:
            if label not in frame.labels:
                raise UnknownLabel(
                    f"bba {name!r} entry {i}: label {label!r} is not in the frame"
                )
            mask |= 1 << frame.labels.index(label)
        decoded.append((mask, float(mass)))
    try:
        return make_bba(frame, decoded, normalize=normalize)
    except ValidationError as exc:
        raise type(exc)(f"bba {name!r}: {exc}") from exc


def serialize_document(frame: Frame, bbas: Mapping[str, MassFunction]) -> str:
    """Canonical text for a document; parse/serialize round-trips exactly."""
    return canonical_json({
        "frame": list(frame.labels),
        "bbas": {
            name: [
                {"subset": list(frame.decode(s)), "mass": v} for s, v in m.items()
            ]
            for name, m in bbas.items()
        },
    })
