"""Tri-state verdicts with witnesses and sub-certificates."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Optional


class Verdict(enum.Enum):
    HOLDS = "Holds"
    HOLDS_UP_TO_BOUND = "HoldsUpToBound"
    FAILS = "Fails"

    @property
    def rank(self) -> int:
        return _RANK[self]


_RANK = {Verdict.HOLDS: 0, Verdict.HOLDS_UP_TO_BOUND: 1, Verdict.FAILS: 2}

EXIT_CODES = {Verdict.HOLDS: 0, Verdict.FAILS: 1, Verdict.HOLDS_UP_TO_BOUND: 2}


def _fmt(w: Any) -> str:
    if isinstance(w, (list, tuple)):
        return "(" + ", ".join(_fmt(x) for x in w) + ")"
    return str(w)


@dataclass(frozen=True)
class Certificate:
    name: str
    verdict: Verdict
    witness: Any = None
    bound: Optional[int] = None
    trace: tuple = ()
    note: str = ""

    def __post_init__(self):
        if self.verdict is Verdict.FAILS and self.witness is None:
            raise ValueError(f"{self.name}: a failing certificate needs a witness")
        if self.verdict is Verdict.HOLDS_UP_TO_BOUND and self.bound is None:
            raise ValueError(f"{self.name}: a bounded certificate needs its bound")
        object.__setattr__(self, "trace", tuple(self.trace))

    @classmethod
    def holds(cls, name, trace=(), note=""):
        return cls(name, Verdict.HOLDS, trace=trace, note=note)

    @classmethod
    def fails(cls, name, witness, trace=(), note=""):
        return cls(name, Verdict.FAILS, witness=witness, trace=trace, note=note)

    @classmethod
    def up_to(cls, name, bound, trace=(), note=""):
        return cls(name, Verdict.HOLDS_UP_TO_BOUND, bound=bound, trace=trace, note=note)

    @property
    def ok(self) -> bool:
        """Not failing (exact or bounded)."""
        return self.verdict is not Verdict.FAILS

    @property
    def exact(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def find(self, name: str) -> Optional["Certificate"]:
        if self.name == name:
            return self
        for sub in self.trace:
            hit = sub.find(name)
            if hit is not None:
                return hit
        return None

    def failing_leaf(self) -> Optional["Certificate"]:
        if self.verdict is not Verdict.FAILS:
            return None
        for sub in self.trace:
            leaf = sub.failing_leaf()
            if leaf is not None:
                return leaf
        return self

    def summary(self) -> str:
        v = self.verdict.value
        if self.verdict is Verdict.FAILS:
            return f"Fails ({_fmt(self.witness)})"
        if self.verdict is Verdict.HOLDS_UP_TO_BOUND:
            return f"{v}({self.bound})"
        return v

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        line = f"{pad}{self.name}: {self.summary()}"
        if self.note:
            line += f"  [{self.note}]"
        lines = [line]
        for sub in self.trace:
            lines.append(sub.render(indent + 1))
        return "\n".join(lines)

    def to_json(self) -> dict:
        out = {"name": self.name, "verdict": self.verdict.value}
        if self.witness is not None:
            out["witness"] = _fmt(self.witness)
        if self.bound is not None:
            out["bound"] = self.bound
        if self.note:
            out["note"] = self.note
        if self.trace:
            out["trace"] = [c.to_json() for c in self.trace]
        return out


def worst(verdicts) -> Verdict:
    return max(verdicts, key=lambda v: v.rank, default=Verdict.HOLDS)


def conjunction(name: str, parts, note="") -> Certificate:
    """Combine sub-certificates: fails if any fails, bounded if any is bounded."""
    parts = tuple(parts)
    v = worst(p.verdict for p in parts)
    if v is Verdict.FAILS:
        leaf = next(p for p in parts if p.verdict is Verdict.FAILS)
        return Certificate(name, v, witness=leaf.witness, trace=parts, note=note)
    if v is Verdict.HOLDS_UP_TO_BOUND:
        bound = min(p.bound for p in parts if p.verdict is v)
        return Certificate(name, v, bound=bound, trace=parts, note=note)
    return Certificate(name, v, trace=parts, note=note)
