"""Nonunital direct decompositions of the 3x3 matrix algebra, in exact arithmetic.

Decompositions, transforms and reports are plain dicts in the ``matdecomp/1``
JSON schema, the same documents the ``matdecomp`` command line tool reads and writes.
"""

from __future__ import annotations

import json
import re
from typing import Any, Iterable, Optional, Union

from . import _core
from ._core import SCHEMA, Error

__all__ = [
    "SCHEMA",
    "Error",
    "LABELS",
    "field",
    "catalog",
    "verify",
    "canonicalize",
    "scramble",
    "fingerprint",
    "separate",
    "rota_baxter",
    "search",
    "selftest",
]

LABELS: tuple[str, ...] = tuple(_core.labels())

FieldLike = Union[str, int, dict, None]


def field(spec: FieldLike = None) -> dict:
    """Field descriptor from "Q", "F5", a prime, or an existing descriptor."""
    if spec is None or spec in ("Q", "QQ"):
        return {"kind": "rational"}
    if isinstance(spec, dict):
        return spec
    if isinstance(spec, int):
        return {"kind": "prime", "p": spec}
    m = re.fullmatch(r"[Ff]_?(\d+)", spec)
    if not m:
        raise ValueError(f"field must be Q or F<p>, got {spec!r}")
    return {"kind": "prime", "p": int(m.group(1))}


def _field_text(spec: FieldLike) -> str:
    return json.dumps(field(spec))


def catalog(label: Optional[str] = None, field: FieldLike = None) -> Union[dict, list[dict]]:
    """One canonical decomposition, or all twelve when label is None."""
    if label is None:
        return [catalog(l, field) for l in LABELS]
    return json.loads(_core.catalog_json(label, _field_text(field)))


def verify(decomposition: dict) -> dict:
    """Four-condition report; raises Error with code NotClosed if a half is not a subalgebra."""
    return json.loads(_core.verify_json(json.dumps(decomposition)))


def canonicalize(decomposition: dict, allow_extension: bool = True) -> dict:
    return json.loads(_core.canonicalize_json(json.dumps(decomposition), allow_extension))


def scramble(label: str, seed: int, field: FieldLike = None) -> dict:
    return json.loads(_core.scramble_json(label, seed, _field_text(field)))


def fingerprint(decomposition: Union[dict, str]) -> dict:
    """Invariants of S; accepts a decomposition or a catalog label."""
    if isinstance(decomposition, str):
        decomposition = catalog(decomposition)
    return json.loads(_core.fingerprint_json(json.dumps(decomposition)))


def separate() -> dict:
    return json.loads(_core.separate_json())


def rota_baxter(label: str, weight: Union[int, str] = 1, field: FieldLike = None) -> dict:
    return json.loads(_core.rb_json(label, str(weight), _field_text(field)))


def search(
    p: int,
    m: str = "M6",
    samples: int = 0,
    seed: int = 0,
    budget: int = 100_000_000,
    threads: int = 0,
) -> dict:
    """Enumerate (or sample, when samples > 0) complements of M over F_p."""
    return json.loads(_core.search_json(p, m, samples, seed, budget, threads))


def selftest(only: Iterable[int] = ()) -> list[dict[str, Any]]:
    return _core.selftest(list(only))
