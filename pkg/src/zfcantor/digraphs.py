"""Finite digraphs on vertex set 1..n and their file format.

An arrow (u, v) reads "u is an element of v": u contributes to the
in-neighborhood N(v).  The file format is a header line ``vertices <n>``
followed by one arrow per line ``<u> <v>``; ``#`` starts a comment line
and blank lines are ignored.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property


class DigraphError(ValueError):
    pass


class BadHeader(DigraphError):
    pass


class VertexOutOfRange(DigraphError):
    pass


class DuplicateArrowWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Digraph:
    n: int
    arrows: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise DigraphError(f"need at least one vertex, got n={self.n}")
        if not isinstance(self.arrows, frozenset):
            object.__setattr__(self, "arrows", frozenset(self.arrows))
        for u, v in self.arrows:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise VertexOutOfRange(f"arrow ({u}, {v}) leaves the vertex range [1, {self.n}]")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, u: int) -> int:
        if not (1 <= u <= self.n):
            raise VertexOutOfRange(f"vertex {u} is outside [1, {self.n}]")
        return u

    def in_neighbors(self, u: int) -> frozenset[int]:
        """The set of elements of u, that is {v : v -> u}."""
        self.check_vertex(u)
        return self._nbhd[u - 1]

    @cached_property
    def _nbhd(self) -> tuple[frozenset[int], ...]:
        sets: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arrows:
            sets[v - 1].add(u)
        return tuple(frozenset(s) for s in sets)


def all_loops(n: int) -> Digraph:
    return Digraph(n, frozenset((u, u) for u in range(1, n + 1)))


def edgeless(n: int) -> Digraph:
    return Digraph(n, frozenset())


def load_digraph(text: str) -> Digraph:
    """Parse digraph file content.  Duplicate arrows warn and collapse."""
    n: int | None = None
    arrows: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "vertices":
                raise BadHeader(f"line {lineno}: expected `vertices <n>`, got {line!r}")
            try:
                n = int(fields[1])
            except ValueError:
                raise BadHeader(f"line {lineno}: vertex count {fields[1]!r} is not an integer")
            if n < 1:
                raise BadHeader(f"line {lineno}: need at least one vertex")
            continue
        if len(fields) != 2:
            raise DigraphError(f"line {lineno}: expected `<u> <v>`, got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise DigraphError(f"line {lineno}: arrow endpoints must be integers")
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexOutOfRange(f"line {lineno}: arrow ({u}, {v}) leaves [1, {n}]")
        if (u, v) in arrows:
            warnings.warn(f"line {lineno}: duplicate arrow ({u}, {v})", DuplicateArrowWarning)
        arrows.add((u, v))
    if n is None:
        raise BadHeader("missing `vertices <n>` header")
    return Digraph(n, frozenset(arrows))


def dump_digraph(digraph: Digraph) -> str:
    lines = [f"vertices {digraph.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(digraph.arrows))
    return "\n".join(lines) + "\n"
