"""Deterministic JSON reports for the command line front end.

A report is a plain dict with a fixed schema; every value that reaches it
is converted to stable JSON-friendly data, so identical inputs always
render byte-identically.  Timing is recorded only on request, since a
timed report is inherently unrepeatable.
"""

from __future__ import annotations

import json

from .fusion import FusionSystem
from .groups import Group, Subgroup
from .morphisms import Morphism

REPORT_SCHEMA = "fusionkit-report/1"

__all__ = [
    "REPORT_SCHEMA",
    "describe",
    "new_report",
    "add_result",
    "all_hold",
    "render",
]


def describe(value):
    """A stable JSON-friendly description of a result witness."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, Subgroup):
        return {"order": len(value), "elements": list(value.elements)}
    if isinstance(value, FusionSystem):
        return {
            "p": value.p,
            "carrier_order": len(value.P),
            "iso_count": value.iso_count(),
        }
    if isinstance(value, Group):
        return {"order": len(value), "degree": value.degree, "name": value.name}
    if isinstance(value, Morphism):
        return {
            "domain": list(value.domain.elements),
            "mapping": list(value.mapping),
        }
    if isinstance(value, dict):
        return {str(k): describe(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [describe(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items = sorted(items, key=repr)
        return items
    return repr(value)


def new_report(command: str, inputs: dict) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "command": command,
        "inputs": describe(inputs),
        "results": [],
        "timing_ms": None,
    }


def add_result(report: dict, predicate: str, holds: bool, witness=None) -> bool:
    report["results"].append(
        {"predicate": predicate, "holds": bool(holds), "witness": describe(witness)}
    )
    return bool(holds)


def all_hold(report: dict) -> bool:
    return all(r["holds"] for r in report["results"])


def render(report: dict, *, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(report, indent=2, sort_keys=True)
    return json.dumps(report, separators=(",", ":"), sort_keys=True)
