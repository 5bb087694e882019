"""JSON model files.

Layout::

    {"zmodel": {"limit_points": 1},
     "explicit": [[{"arc": 0, "pos": 0}, {"arc": 0, "pos": 5}]],
     "families": [{"left": {"kind": "fixed", "arc": 0, "pos": 0},
                   "right": {"kind": "tail_up", "arc": 0, "base": 2},
                   "min_n": 0}]}

A family-level ``"step"`` is the default step for its tail terms; a term may
carry its own ``"step"``.
"""
from __future__ import annotations

import json
from typing import Any

from .cyclic import Vertex, ZModel
from .diagonals import (Diagonal, DiagonalFamily, DiagonalSet, Fixed, TailDown,
                        TailUp)
from .errors import InvalidInputError, ModelFormatError

_TOP_KEYS = {"zmodel", "explicit", "families"}
_FAMILY_KEYS = {"left", "right", "min_n", "step"}
_TAILS = {"tail_up": TailUp, "tail_down": TailDown}


def _expect(cond, msg, loc):
    if not cond:
        raise ModelFormatError(msg, loc)


def _int(value, loc):
    _expect(isinstance(value, int) and not isinstance(value, bool),
            f"expected an integer, got {value!r}", loc)
    return value


def _keys(obj, allowed, required, loc):
    _expect(isinstance(obj, dict), f"expected an object, got {type(obj).__name__}", loc)
    unknown = sorted(set(obj) - allowed)
    _expect(not unknown, f"unknown key(s) {', '.join(unknown)}", loc)
    missing = sorted(required - set(obj))
    _expect(not missing, f"missing key(s) {', '.join(missing)}", loc)


def _vertex(obj, N, loc) -> Vertex:
    _keys(obj, {"arc", "pos"}, {"arc", "pos"}, loc)
    arc = _int(obj["arc"], f"{loc}.arc")
    _expect(0 <= arc < N, f"arc {arc} out of range for {N} limit point(s)", f"{loc}.arc")
    return Vertex(arc, _int(obj["pos"], f"{loc}.pos"))


def _term(obj, N, default_step, loc):
    _expect(isinstance(obj, dict), "expected a term object", loc)
    kind = obj.get("kind")
    if kind == "fixed":
        _keys(obj, {"kind", "arc", "pos"}, {"kind", "arc", "pos"}, loc)
        return Fixed(_vertex({"arc": obj["arc"], "pos": obj["pos"]}, N, loc))
    _expect(kind in _TAILS, f"unknown term kind {kind!r}", f"{loc}.kind")
    _keys(obj, {"kind", "arc", "base", "step"}, {"kind", "arc", "base"}, loc)
    arc = _int(obj["arc"], f"{loc}.arc")
    _expect(0 <= arc < N, f"arc {arc} out of range for {N} limit point(s)", f"{loc}.arc")
    step = _int(obj.get("step", default_step), f"{loc}.step")
    _expect(step >= 1, f"step must be >= 1, got {step}", f"{loc}.step")
    return _TAILS[kind](arc, _int(obj["base"], f"{loc}.base"), step)


def from_dict(doc: Any) -> DiagonalSet:
    _keys(doc, _TOP_KEYS, {"zmodel"}, "$")
    _keys(doc["zmodel"], {"limit_points"}, {"limit_points"}, "zmodel")
    N = _int(doc["zmodel"]["limit_points"], "zmodel.limit_points")
    _expect(N >= 1, f"a model needs at least one limit point, got {N}", "zmodel.limit_points")
    model = ZModel(N)

    explicit = []
    ex = doc.get("explicit", [])
    _expect(isinstance(ex, list), "expected a list", "explicit")
    for i, pair in enumerate(ex):
        loc = f"explicit[{i}]"
        _expect(isinstance(pair, list) and len(pair) == 2, "expected a pair of vertices", loc)
        a = _vertex(pair[0], N, f"{loc}[0]")
        b = _vertex(pair[1], N, f"{loc}[1]")
        try:
            explicit.append(Diagonal(a, b))
        except InvalidInputError as exc:
            raise ModelFormatError(str(exc), loc) from None

    families = []
    fs = doc.get("families", [])
    _expect(isinstance(fs, list), "expected a list", "families")
    for i, f in enumerate(fs):
        loc = f"families[{i}]"
        _keys(f, _FAMILY_KEYS, {"left", "right"}, loc)
        step = _int(f.get("step", 1), f"{loc}.step")
        _expect(step >= 1, f"step must be >= 1, got {step}", f"{loc}.step")
        left = _term(f["left"], N, step, f"{loc}.left")
        right = _term(f["right"], N, step, f"{loc}.right")
        min_n = _int(f.get("min_n", 0), f"{loc}.min_n")
        try:
            families.append(DiagonalFamily(left, right, min_n))
        except InvalidInputError as exc:
            raise ModelFormatError(str(exc), loc) from None
    return DiagonalSet(model, tuple(explicit), tuple(families))


def parse_model(text: str) -> DiagonalSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    return from_dict(doc)


def load_model(path) -> DiagonalSet:
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read())


def _vertex_dict(v: Vertex) -> dict:
    return {"arc": v.arc, "pos": v.pos}


def _term_dict(t) -> dict:
    if isinstance(t, Fixed):
        return {"kind": "fixed", "arc": t.vertex.arc, "pos": t.vertex.pos}
    kind = "tail_up" if isinstance(t, TailUp) else "tail_down"
    out = {"kind": kind, "arc": t.arc, "base": t.base}
    if t.step != 1:
        out["step"] = t.step
    return out


def to_dict(S: DiagonalSet) -> dict:
    return {
        "zmodel": {"limit_points": S.model.limit_count},
        "explicit": [[_vertex_dict(d.x0), _vertex_dict(d.x1)] for d in S.explicit],
        "families": [{"left": _term_dict(F.left), "right": _term_dict(F.right), "min_n": F.min_n}
                     for F in S.families],
    }


def serialize_model(S: DiagonalSet) -> str:
    return json.dumps(to_dict(S), indent=2) + "\n"


def parse_vertex(text: str) -> Vertex:
    """Command-line vertex syntax ``arc:pos`` (a bare integer means arc 0)."""
    try:
        if ":" in text:
            arc, pos = text.split(":")
            return Vertex(int(arc), int(pos))
        return Vertex(0, int(text))
    except ValueError:
        raise InvalidInputError(f"bad vertex {text!r}; expected arc:pos") from None


def parse_diagonal_arg(text: str) -> Diagonal:
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidInputError(f"bad diagonal {text!r}; expected arc:pos,arc:pos")
    return Diagonal(parse_vertex(parts[0].strip()), parse_vertex(parts[1].strip()))
