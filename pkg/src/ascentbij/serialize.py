"""Text and JSON forms of the objects the CLI reads and writes.

Compact text forms:

* integer sequences: ``0012303222353`` when every entry is a digit, else ``0,1,10``
* partitions: ``∅``, ``21``, or ``[10,1]`` when a part exceeds 9
* partition sequences: ``(∅,2,1,21,∅)``
* set partitions: ``{{1,2,3},{4}}``

Every parser also accepts the JSON form.
"""
from __future__ import annotations

import json
import re
from typing import Any, Sequence

from .errors import InvalidObjectError
from .filling import FerrersShape, Filling01, TriangularFilling
from .partition import Partition
from .setpartition import SetPartition

__all__ = [
    "parse_int_sequence",
    "format_int_sequence",
    "parse_partition",
    "parse_partition_sequence",
    "format_partition_sequence",
    "parse_set_partition",
    "parse_filling",
    "parse_shape",
]

_EMPTY_TOKENS = {"∅", "e", "0", "()", "[]", "{}", ""}


def _json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidObjectError(f"malformed JSON literal: {exc.msg}") from None


def parse_int_sequence(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text.startswith("[") or text.startswith("{"):
        data = _json(text)
        if isinstance(data, dict):
            data = data.get("a", data.get("x"))
        if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
            raise InvalidObjectError("expected a JSON array of integers")
        return tuple(data)
    text = text.strip("()")
    if re.fullmatch(r"\d+", text):
        return tuple(int(c) for c in text)
    if re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*", text):
        return tuple(int(t) for t in text.split(","))
    raise InvalidObjectError(f"cannot read {text!r} as a sequence of nonnegative integers")


def format_int_sequence(seq: Sequence[int]) -> str:
    if all(0 <= v <= 9 for v in seq):
        return "".join(map(str, seq))
    return ",".join(map(str, seq))


def parse_partition(token: Any) -> Partition:
    if isinstance(token, list):
        return Partition(token)
    token = str(token).strip()
    if token in _EMPTY_TOKENS:
        return Partition()
    if token.startswith("["):
        return Partition(_json(token))
    if re.fullmatch(r"\d+", token):
        return Partition(int(c) for c in token)
    raise InvalidObjectError(f"cannot read {token!r} as an integer partition")


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if depth == 0 and (ch == "," or ch.isspace()):
            if cur:
                parts.append("".join(cur))
            cur = []
            continue
        cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return parts


def parse_partition_sequence(text: str) -> tuple[Partition, ...]:
    text = text.strip()
    if text.startswith("[["):
        data = _json(text)
        return tuple(parse_partition(p) for p in data)
    if text.startswith("[") and text.endswith("]") and "[" not in text[1:-1]:
        data = _json(text)
        if all(isinstance(p, list) for p in data):
            return tuple(parse_partition(p) for p in data)
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return tuple(parse_partition(tok) for tok in _split_top_level(text))


def format_partition_sequence(seq: Sequence[Sequence[int]]) -> str:
    return "(" + ",".join(str(Partition(p)) for p in seq) + ")"


def parse_set_partition(text: str) -> SetPartition:
    text = text.strip()
    if text.startswith("{"):
        text = text.replace("{", "[").replace("}", "]")
    data = _json(text)
    if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
        raise InvalidObjectError("expected a list of blocks, e.g. {{1,2},{3}}")
    return SetPartition(data)


def parse_shape(text: str) -> FerrersShape:
    data = _json(text) if text.strip().startswith("[") else [int(t) for t in text.split(",")]
    return FerrersShape.from_bottom_up(data)


def parse_filling(text: str) -> Filling01:
    """A filling as ``{"shape": [...], "ones": [[r, c], ...]}`` or a one-1-per-row
    triangular filling given by its column vector ``a``."""
    text = text.strip()
    if text.startswith("{"):
        data = _json(text)
        if "shape" in data:
            return Filling01(FerrersShape.from_bottom_up(data["shape"]), data.get("ones", []))
        if "a" in data:
            t = TriangularFilling(data["a"])
            return Filling01(FerrersShape.triangle(t.n), [(i, a) for i, a in enumerate(t.a, 1)])
        raise InvalidObjectError('filling JSON needs "shape" and "ones", or "a"')
    t = TriangularFilling(parse_int_sequence(text))
    return Filling01(FerrersShape.triangle(t.n), [(i, a) for i, a in enumerate(t.a, 1)])
