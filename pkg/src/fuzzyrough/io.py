"""JSON documents for spaces, fuzzy sets and pairs.

Degrees are written as exact rational strings ("3/4", "0", "1"). Output is
deterministic: fixed key order, two-space indent, trailing newline.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .algebra import Algebra, Chain
from .characterize import RoughPair
from .errors import DimensionMismatch, ParseError
from .space import ApproximationSpace, FuzzyRelation, FuzzySet, Universe


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def parse_space(doc: Mapping) -> ApproximationSpace:
    if not isinstance(doc, Mapping):
        raise ParseError("a space document must be a JSON object")
    for key in ("universe", "theta"):
        if key not in doc:
            raise ParseError(f"space document lacks {key!r}")
    universe = Universe(tuple(doc["universe"]))
    chain = Chain.of(doc["chain"]) if doc.get("chain") is not None else None
    algebra = Algebra.from_descriptor(doc.get("algebra", {}), chain)
    rows = doc["theta"]
    n = len(universe)
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise DimensionMismatch(f"theta must be a {n}x{n} matrix")
    theta = FuzzyRelation.of(universe, rows)
    return ApproximationSpace(universe, theta, algebra, chain)


def emit_space(space: ApproximationSpace) -> dict:
    doc: dict = {"universe": list(space.universe.names)}
    if space.chain is not None:
        doc["chain"] = [str(v) for v in space.chain]
    doc["algebra"] = space.algebra.descriptor()
    doc["theta"] = [[str(v) for v in row] for row in space.theta.matrix]
    return doc


def parse_fuzzy_set(space: ApproximationSpace, doc) -> FuzzySet:
    """Accepts {"values": {...}}, a bare name -> degree object, or a list in universe order."""
    if isinstance(doc, Mapping) and "values" in doc:
        doc = doc["values"]
    if isinstance(doc, Mapping):
        return FuzzySet.from_mapping(space.universe, doc)
    if isinstance(doc, list):
        if len(doc) != len(space.universe):
            raise DimensionMismatch(f"{len(doc)} values for {len(space.universe)} elements")
        return FuzzySet.of(space.universe, doc)
    raise ParseError("a fuzzy set document must be an object or a list")


def emit_fuzzy_set(f: FuzzySet) -> dict:
    return {"values": f.as_dict()}


def parse_pair(space: ApproximationSpace, doc: Mapping) -> RoughPair:
    try:
        lower = parse_fuzzy_set(space, doc["lower"])
        upper = parse_fuzzy_set(space, doc["upper"])
    except (KeyError, TypeError) as exc:
        raise ParseError("a pair document needs 'lower' and 'upper'") from exc
    witness = parse_fuzzy_set(space, doc["witness"]) if doc.get("witness") is not None else None
    return RoughPair(lower, upper, witness)


def emit_pair(p: RoughPair) -> dict:
    return p.to_dict()
