"""Flow graphs: representation, validation, normalization and the text format.

A graph file looks like::

    # comment
    p <n> <m> <s>
    a <tail> <head>
    ...

Vertices are numbered 1..n.  Arc order in the file is the adjacency order used
by every traversal in this package, so results are a pure function of the file.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Arc = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateGraphError(ValueError):
    """Raised when normalization leaves fewer than two vertices."""


@dataclass(frozen=True)
class FlowGraph:
    n: int
    s: int
    arcs: tuple[Arc, ...]
    out_adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    in_adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_arcs(cls, n: int, s: int, arcs: Iterable[Sequence[int]]) -> "FlowGraph":
        arcs = tuple((int(a[0]), int(a[1])) for a in arcs)
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        if not 1 <= s <= n:
            raise ValueError(f"start vertex {s} out of range 1..{n}")
        out_adj: list[list[int]] = [[] for _ in range(n + 1)]
        in_adj: list[list[int]] = [[] for _ in range(n + 1)]
        for i, (x, y) in enumerate(arcs):
            if not (1 <= x <= n and 1 <= y <= n):
                raise ValueError(f"arc {i} ({x}, {y}) has a vertex out of range 1..{n}")
            out_adj[x].append(i)
            in_adj[y].append(i)
        return cls(n, s, arcs, tuple(map(tuple, out_adj)), tuple(map(tuple, in_adj)))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def successors(self, v: int) -> list[int]:
        arcs = self.arcs
        return [arcs[i][1] for i in self.out_adj[v]]

    def predecessors(self, v: int) -> list[int]:
        arcs = self.arcs
        return [arcs[i][0] for i in self.in_adj[v]]


def parse(text: str | bytes) -> FlowGraph:
    """Parse graph text.  Semantic invariants are not checked; see `validate`."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header = None
    arcs: list[Arc] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if tokens[0] != "p" or len(tokens) != 4:
                raise GraphFormatError("expected header 'p <n> <m> <s>'", lineno)
            n, m, s = (_int(t, lineno) for t in tokens[1:])
            if n < 1:
                raise GraphFormatError(f"vertex count must be positive, got {n}", lineno)
            if m < 0:
                raise GraphFormatError(f"arc count must be non-negative, got {m}", lineno)
            if not 1 <= s <= n:
                raise GraphFormatError(f"start vertex {s} out of range 1..{n}", lineno)
            header = (n, m, s)
            continue
        if tokens[0] != "a" or len(tokens) != 3:
            raise GraphFormatError("expected arc line 'a <tail> <head>'", lineno)
        if len(arcs) == header[1]:
            raise GraphFormatError(f"more arc lines than the {header[1]} declared", lineno)
        x, y = _int(tokens[1], lineno), _int(tokens[2], lineno)
        for v in (x, y):
            if not 1 <= v <= header[0]:
                raise GraphFormatError(f"vertex id {v} out of range 1..{header[0]}", lineno)
        arcs.append((x, y))
    if header is None:
        raise GraphFormatError("missing header line")
    if len(arcs) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} arcs but {len(arcs)} found")
    return FlowGraph.from_arcs(header[0], header[2], arcs)


def _int(token: str, lineno: int) -> int:
    if not token.isdigit():
        raise GraphFormatError(f"expected a decimal integer, got {token!r}", lineno)
    return int(token)


def serialize(g: FlowGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"p {g.n} {g.m} {g.s}")
    lines.extend(f"a {x} {y}" for x, y in g.arcs)
    return "\n".join(lines) + "\n"


def reachable(g: FlowGraph) -> list[bool]:
    seen = [False] * (g.n + 1)
    seen[g.s] = True
    queue = deque([g.s])
    while queue:
        v = queue.popleft()
        for w in g.successors(v):
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return seen


def validate(g: FlowGraph) -> list[str]:
    """Return human-readable violations of the flow-graph invariants."""
    problems = []
    if g.n < 2:
        problems.append(f"graph has {g.n} vertex; at least 2 required")
    seen_arcs: set[Arc] = set()
    for x, y in g.arcs:
        if y == g.s:
            problems.append(f"arc into start vertex: ({x}, {y})")
        if x == y:
            problems.append(f"loop arc: ({x}, {y})")
        elif (x, y) in seen_arcs:
            problems.append(f"duplicate arc: ({x}, {y})")
        seen_arcs.add((x, y))
    seen = reachable(g)
    problems.extend(f"vertex {v} unreachable" for v in range(1, g.n + 1) if not seen[v])
    return problems


def normalize(g: FlowGraph) -> tuple[FlowGraph, dict[int, int]]:
    """Drop loop arcs, arcs into s, duplicates and unreachable vertices.

    Returns the cleaned graph and a map from old to new vertex ids.  Retained
    vertices keep their relative order.
    """
    kept: list[Arc] = []
    seen: set[Arc] = set()
    for x, y in g.arcs:
        if x == y or y == g.s or (x, y) in seen:
            continue
        seen.add((x, y))
        kept.append((x, y))
    stripped = FlowGraph.from_arcs(g.n, g.s, kept)
    live = reachable(stripped)
    mapping: dict[int, int] = {}
    for v in range(1, g.n + 1):
        if live[v]:
            mapping[v] = len(mapping) + 1
    if len(mapping) < 2:
        raise DegenerateGraphError(
            f"only {len(mapping)} vertex reachable from {g.s} after normalization"
        )
    arcs = [(mapping[x], mapping[y]) for x, y in kept if live[x]]
    return FlowGraph.from_arcs(len(mapping), mapping[g.s], arcs), mapping


def format_idom(idom: dict[int, int], n: int, s: int) -> str:
    """Dominator-tree output: one ``v idom(v)`` line per vertex, start vertex maps to 0."""
    lines = [f"{v} {0 if v == s else idom[v]}" for v in range(1, n + 1)]
    return "\n".join(lines) + "\n"
