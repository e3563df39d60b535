"""Versioned on-disk cache for polynomial tables (canonical JSON)."""

from __future__ import annotations

import json
from pathlib import Path

from .genpoly import PolyTable
from .polyring import Polynomial
from .rootsys import RootSystem

SCHEMA = "orbitpoly.polytable.v1"


class CacheMiss(Exception):
    """Cache unusable (missing, corrupted, or schema/algebra mismatch)."""


def store_table(path, table: PolyTable) -> None:
    payload = {
        "schema": SCHEMA,
        "algebra": str(table.rs.algebra),
        "kind": table.kind,
        "variable_mode": table.variable_mode,
        "entries": {
            ",".join(map(str, w)): json.loads(p.to_json())
            for w, p in sorted(table.entries.items())
        },
    }
    Path(path).write_text(json.dumps(payload, sort_keys=True, indent=None,
                                     separators=(",", ":")) + "\n")


def load_table(path, rs: RootSystem, kind: str, variable_mode: str = "orbit") -> PolyTable:
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise CacheMiss(f"unreadable cache {path}: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("schema") != SCHEMA:
        raise CacheMiss(f"cache {path} has unknown schema")
    if payload.get("algebra") != str(rs.algebra) or payload.get("kind") != kind \
            or payload.get("variable_mode") != variable_mode:
        raise CacheMiss(f"cache {path} is for a different table")
    try:
        entries = {
            tuple(int(c) for c in key.split(",")): Polynomial.from_json(val)
            for key, val in payload["entries"].items()
        }
    except (KeyError, ValueError, TypeError) as exc:
        raise CacheMiss(f"corrupted cache {path}: {exc}") from exc
    return PolyTable(rs=rs, kind=kind, variable_mode=variable_mode, entries=entries)
