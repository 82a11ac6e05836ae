"""Encoder files and report serialization.

Encoder files are JSON objects::

    {"field": {"p": 2, "m": 1}, "rows": [[[1, 0, 1], [0, 1]], ...]}

Each entry is an ascending coefficient list of integer-coded field elements.
Entries may also be given in text syntax ("1+z^2", "a*z") for hand-written
files.  Output always uses coefficient lists.
"""

from __future__ import annotations

import hashlib
import json
import math
from collections.abc import Mapping
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import FieldError, ParseError
from .gf import Field, field_create
from .polyalg import Poly, PolyMatrix, parse_poly

DATA_PACKAGE = "convcode.data"


def field_to_json(F: Field) -> dict[str, int]:
    return {"p": F.p, "m": F.m}


def field_from_json(obj: Any) -> Field:
    if not isinstance(obj, Mapping) or "p" not in obj:
        raise ParseError("field must be an object with keys p and m")
    try:
        return field_create(int(obj["p"]), int(obj.get("m", 1)))
    except (TypeError, ValueError, FieldError) as exc:
        raise ParseError(f"bad field: {exc}") from None


def _entry(F: Field, e: Any) -> Poly:
    if isinstance(e, str):
        return parse_poly(F, e)
    if isinstance(e, int) and not isinstance(e, bool):
        e = [e]
    if not isinstance(e, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in e):
        raise ParseError(f"matrix entry {e!r} is neither a coefficient list nor a polynomial string")
    if any(not 0 <= c < F.q for c in e):
        raise ParseError(f"coefficient out of range in {e!r}")
    return Poly(F, e)


def encoder_from_json(obj: Any) -> PolyMatrix:
    if not isinstance(obj, Mapping):
        raise ParseError("encoder file must hold a JSON object")
    F = field_from_json(obj.get("field", {"p": 2, "m": 1}))
    rows = obj.get("rows")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) and r for r in rows):
        raise ParseError("rows must be a nonempty list of nonempty rows")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("rows have different lengths")
    try:
        return PolyMatrix(F, [[_entry(F, e) for e in r] for r in rows])
    except (ValueError, FieldError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None


def encoder_to_json(G: PolyMatrix) -> dict[str, Any]:
    return {"field": field_to_json(G.field), "rows": [[list(p.coeffs) for p in r] for r in G.rows]}


def load_encoder(path: str | Path) -> PolyMatrix:
    text = read_text(path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})") from None
    return encoder_from_json(obj)


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def dump_encoder(G: PolyMatrix, path: str | Path) -> None:
    Path(path).write_text(json.dumps(encoder_to_json(G), sort_keys=True) + "\n")


def digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


# bundled example encoders


def example_names() -> list[str]:
    root = resources.files(DATA_PACKAGE)
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def example_path(name: str):
    return resources.files(DATA_PACKAGE).joinpath(f"{name}.json")


def example_encoder(name: str) -> PolyMatrix:
    ref = example_path(name)
    if not ref.is_file():
        raise KeyError(f"no bundled encoder named {name!r}")
    return encoder_from_json(json.loads(ref.read_text()))


# reports


def jsonable(x: Any) -> Any:
    """Plain JSON value with inf rendered as "inf"."""
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return int(x) if x.is_integer() else x
    if isinstance(x, Mapping):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "tolist"):
        return jsonable(x.tolist())
    return x


def dumps(obj: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(jsonable(obj), indent=2, sort_keys=True)
