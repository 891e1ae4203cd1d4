"""Canonical JSON encoding for descriptions and reports."""

from __future__ import annotations

import json
from pathlib import Path

from .triangulation import TriangulationDesc, ValidationReport


def canonical_json(obj) -> str:
    """Stable text form: sorted keys, no superfluous whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def encode_desc(desc: TriangulationDesc) -> str:
    return canonical_json(desc.to_json())


def decode_desc(text: str) -> TriangulationDesc:
    return TriangulationDesc.from_json(json.loads(text))


def load_desc(path: str | Path) -> TriangulationDesc:
    return decode_desc(Path(path).read_text())


def save_desc(desc: TriangulationDesc, path: str | Path) -> None:
    Path(path).write_text(encode_desc(desc))


def report_to_json(report: ValidationReport) -> dict:
    out = {
        "noncrossing": report.pairwise_noncrossing,
        "window_maximal": report.window_maximal,
        "maximal": report.certified_maximal,
        "notes": list(report.notes),
    }
    if report.counterexample is not None:
        out["counterexample"] = str(report.counterexample)
    return out
