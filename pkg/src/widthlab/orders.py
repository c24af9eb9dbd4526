"""Linear orderings and the exact cost vectors they induce.

All p-norm bookkeeping is integer-exact: for finite p a cost vector is
scored as the plain integer sum of p-th powers, for p = infinity as the
integer maximum.  Real p-th roots appear only at presentation time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ParameterError
from .graphs import Graph


@dataclass(frozen=True)
class PNorm:
    """Exponent of an l^p norm: a positive integer, or None for infinity."""

    p: int | None

    def __post_init__(self):
        if self.p is not None and self.p < 1:
            raise ParameterError("p must be >= 1")

    @property
    def is_infinite(self) -> bool:
        return self.p is None

    @classmethod
    def infinity(cls) -> "PNorm":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "PNorm":
        if text.strip().lower() in ("inf", "infinity", "oo"):
            return cls(None)
        try:
            return cls(int(text))
        except ValueError as exc:
            raise ParameterError(f"bad p value {text!r}") from exc

    def __str__(self) -> str:
        return "inf" if self.p is None else str(self.p)


@dataclass(frozen=True)
class LayoutValue:
    """Exact score of a cost vector under a PNorm.

    For finite p this is the integer sum of p-th powers (no root taken);
    for infinity it is the integer max.  Values compare only within the
    same norm.
    """

    norm: PNorm
    value: int

    def root(self) -> float:
        if self.norm.is_infinite or self.value == 0:
            return float(self.value)
        return float(self.value) ** (1.0 / self.norm.p)

    def _check(self, other: "LayoutValue"):
        if self.norm != other.norm:
            raise ParameterError("cannot compare values under different norms")

    def __le__(self, other):
        self._check(other)
        return self.value <= other.value

    def __lt__(self, other):
        self._check(other)
        return self.value < other.value


def score(costs: Sequence[int], norm: PNorm) -> int:
    """Integer score of a cost vector: max for infinity, sum of p-th powers
    otherwise (python big ints, exact for any p)."""
    if norm.is_infinite:
        return max(costs, default=0)
    return sum(c ** norm.p for c in costs)


@dataclass(frozen=True)
class LinearOrdering:
    """Bijection from vertices onto positions 1..n; positions[v] is the
    position of vertex v."""

    positions: tuple[int, ...]

    def __post_init__(self):
        n = len(self.positions)
        if sorted(self.positions) != list(range(1, n + 1)):
            raise ParameterError("positions must be a bijection onto 1..n")

    @property
    def n(self) -> int:
        return len(self.positions)

    def sequence(self) -> tuple[int, ...]:
        """Vertices listed by position (inverse of positions)."""
        seq = [0] * self.n
        for v, pos in enumerate(self.positions):
            seq[pos - 1] = v
        return tuple(seq)

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "LinearOrdering":
        pos = [0] * len(seq)
        for i, v in enumerate(seq):
            if not (0 <= v < len(seq)) or pos[v]:
                raise ParameterError("sequence must list each vertex once")
            pos[v] = i + 1
        return cls(tuple(pos))

    @classmethod
    def identity(cls, n: int) -> "LinearOrdering":
        return cls(tuple(range(1, n + 1)))


def _check_size(g: Graph, f: LinearOrdering):
    if f.n != g.n:
        raise ParameterError(f"ordering has {f.n} positions, graph has {g.n} vertices")


def cut_vector(g: Graph, f: LinearOrdering) -> list[int]:
    """Entry i (1-based) counts edges with one end at position < i and the
    other at position >= i; entry 1 is always 0."""
    _check_size(g, f)
    cuts = [0] * g.n
    for u, v in g.edges:
        lo, hi = sorted((f.positions[u], f.positions[v]))
        for i in range(lo + 1, hi + 1):
            cuts[i - 1] += 1
    return cuts


def band_vector(g: Graph, f: LinearOrdering) -> list[int]:
    """Per-edge position stretch, in g.edges order."""
    _check_size(g, f)
    return [abs(f.positions[u] - f.positions[v]) for u, v in g.edges]


def vs_vector(g: Graph, f: LinearOrdering) -> list[int]:
    """Entry i counts vertices at position <= i with a neighbour at
    position > i; entry n is always 0."""
    _check_size(g, f)
    out = []
    for i in range(1, g.n + 1):
        count = 0
        for x in range(g.n):
            if f.positions[x] <= i and any(f.positions[y] > i for y in g.neighbors[x]):
                count += 1
        out.append(count)
    return out
