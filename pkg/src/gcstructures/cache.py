"""On-disk JSON cache for root tables and structure constants.

Files are keyed by a format version so stale entries are simply ignored.
The directory comes from the caller or ``$GCSTRUCTURES_CACHE_DIR``.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Dict, Optional

from .rootsys import RootSystem

ROOT_TABLE_VERSION = 1
ENV_VAR = "GCSTRUCTURES_CACHE_DIR"


def resolve_dir(cache_dir=None) -> Optional[Path]:
    d = cache_dir or os.environ.get(ENV_VAR)
    return Path(d) if d else None


def _write(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(payload, sort_keys=True))
    os.replace(tmp, path)


def _read(path: Path) -> Optional[dict]:
    try:
        return json.loads(path.read_text())
    except (OSError, ValueError):
        return None


def root_table(rs: RootSystem) -> dict:
    return {
        "version": ROOT_TABLE_VERSION,
        "series": rs.series,
        "rank": rs.rank,
        "cartan_matrix": [list(r) for r in rs.cartan_matrix],
        "roots": [list(r) for r in rs.roots],
    }


def load_root_table(cache_dir, rs: RootSystem) -> dict:
    """Cached root table for ``rs``; written on a miss or mismatch."""
    d = resolve_dir(cache_dir)
    fresh = root_table(rs)
    if d is None:
        return fresh
    path = d / f"roots-v{ROOT_TABLE_VERSION}-{rs.label}.json"
    data = _read(path)
    if data != fresh:
        _write(path, fresh)
    return fresh


def _sc_path(d: Path, rs: RootSystem) -> Path:
    from .chevalley import CONVENTION_VERSION

    return d / f"structure-v{CONVENTION_VERSION}-{rs.label}.json"


def load_structure_constants(cache_dir, rs: RootSystem) -> Optional[Dict[tuple, int]]:
    d = resolve_dir(cache_dir)
    if d is None:
        return None
    data = _read(_sc_path(d, rs))
    if not data or data.get("roots") != [list(r) for r in rs.roots]:
        return None
    return {(i, j): v for i, j, v in data["N"]}


def store_structure_constants(cache_dir, rs: RootSystem, N: Dict[tuple, int]) -> None:
    d = resolve_dir(cache_dir)
    if d is None:
        return
    payload = {"roots": [list(r) for r in rs.roots], "N": [[i, j, v] for (i, j), v in sorted(N.items())]}
    _write(_sc_path(d, rs), payload)
