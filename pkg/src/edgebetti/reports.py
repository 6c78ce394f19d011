"""Machine-readable report documents emitted by the command layer.

Reports are plain JSON-serializable dicts with a pinned schema version.
Betti entries are sorted (i, j, multiplicity) triples, graphs travel as
graph6 strings, and timing lives in a single well-known key so golden-file
comparisons can ignore it.
"""

from __future__ import annotations

import json
from typing import Any

SCHEMA_VERSION = "1"
TIMING_KEY = "timing_seconds"


def make_report(
    command: str,
    inputs: dict[str, Any],
    results: dict[str, Any],
    field_tag: str | None = None,
    elapsed: float | None = None,
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }
    if field_tag is not None:
        doc["field"] = field_tag
    doc[TIMING_KEY] = round(elapsed, 6) if elapsed is not None else None
    return doc


def report_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def strip_timing(doc: dict[str, Any]) -> dict[str, Any]:
    """Copy without the timing key, for stable golden comparisons."""
    return {k: v for k, v in doc.items() if k != TIMING_KEY}
