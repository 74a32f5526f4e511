"""FamilyFile: one JSON object per file, 1-indexed sorted sets."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .family import Family, FamilyError


class FamilyFileError(FamilyError):
    pass


def family_to_dict(fam: Family, r: int | None = None, t: int | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {"n": fam.n, "k": fam.k}
    if r is not None:
        out["r"] = r
    if t is not None:
        out["t"] = t
    out["sets"] = [list(s) for s in fam.sets()]
    return out


def dumps(fam: Family, r: int | None = None, t: int | None = None) -> str:
    """Deterministic serialization, newline-terminated."""
    return json.dumps(family_to_dict(fam, r, t), separators=(",", ":")) + "\n"


def loads(text: str) -> tuple[Family, dict[str, Any]]:
    """Parse and validate; returns the family and any r/t metadata."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFileError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise FamilyFileError("top level must be an object")
    for key in ("n", "k", "sets"):
        if key not in obj:
            raise FamilyFileError(f"missing field {key!r}")
    n, k, sets = obj["n"], obj["k"], obj["sets"]
    if not (isinstance(n, int) and isinstance(k, int)) or isinstance(n, bool) or isinstance(k, bool):
        raise FamilyFileError("n and k must be integers")
    if not isinstance(sets, list):
        raise FamilyFileError("sets must be a list")
    for s in sets:
        if not isinstance(s, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in s):
            raise FamilyFileError(f"each set must be a list of integers, got {s!r}")
        if len(s) != k:
            raise FamilyFileError(f"set {s} does not have {k} elements")
        if any(a >= b for a, b in zip(s, s[1:])):
            raise FamilyFileError(f"set {s} is not strictly increasing")
        if s and (s[0] < 1 or s[-1] > n):
            raise FamilyFileError(f"set {s} leaves [1, {n}]")
    meta = {key: obj[key] for key in ("r", "t") if key in obj}
    for key, val in meta.items():
        if not isinstance(val, int) or isinstance(val, bool):
            raise FamilyFileError(f"{key} must be an integer")
    try:
        fam = Family.from_sets(n, k, sets)
    except FamilyFileError:
        raise
    except FamilyError as exc:
        raise FamilyFileError(str(exc)) from None
    return fam, meta


def read_family(path: str | Path) -> tuple[Family, dict[str, Any]]:
    return loads(Path(path).read_text(encoding="utf-8"))


def write_family(path: str | Path, fam: Family, r: int | None = None, t: int | None = None) -> None:
    Path(path).write_text(dumps(fam, r, t), encoding="utf-8")
