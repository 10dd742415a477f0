"""Seeded generators of flow-graph families.

Every generator is a pure function of its arguments.  Randomness comes from
SplitMix64 (Steele, Lea and Flood), whose whole state is one 64-bit word::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all arithmetic modulo 2**64.  ``below(k)`` draws a uniform integer in
``[0, k)`` by rejecting draws at or above the largest multiple of ``k`` that
fits in 64 bits, then reducing modulo ``k``.  Shuffles are Fisher-Yates from
the last index down.  With these rules any reimplementation reproduces the
same arc sequences.

Families:

``random``
    random spanning tree (each new vertex hangs off a uniformly chosen earlier
    one) over a shuffled labelling, plus uniformly sampled extra arcs.
``dag``
    as ``random`` but extra arcs go from earlier to later tree vertices.
``nested_loops``
    a chain with ``depth`` properly nested intervals, each closed by a back
    arc to its first vertex; extras never enter a loop below its head.
``ladder``
    two columns joined at every rung; deterministic, ``m`` is ignored.
``complete_dag``
    every arc ``(i, j)`` with ``i < j``; deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Arc, FlowGraph, reachable

MASK = (1 << 64) - 1
KINDS = ("random", "dag", "nested_loops", "ladder", "complete_dag")


class InfeasibleSpecError(ValueError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in [0, k)."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            r = self.next()
            if r < limit:
                return r % k

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    m: int | None = None
    seed: int = 0
    depth: int = 1

    def header(self) -> list[str]:
        parts = [f"kind={self.kind}", f"n={self.n}"]
        if self.kind in ("random", "dag", "nested_loops"):
            parts.append(f"m={self.m}")
            parts.append(f"seed={self.seed}")
        if self.kind == "nested_loops":
            parts.append(f"depth={self.depth}")
        return ["generated " + " ".join(parts)]


def generate(spec: GenSpec) -> FlowGraph:
    if spec.kind not in KINDS:
        raise ValueError(f"unknown kind {spec.kind!r}")
    if spec.n < 2:
        raise InfeasibleSpecError("n must be at least 2")
    if spec.kind == "ladder":
        return _ladder(spec.n)
    if spec.kind == "complete_dag":
        n = spec.n
        return FlowGraph.from_arcs(n, 1, [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)])
    m = spec.m
    if m is None:
        m = spec.n - 1 + (spec.depth if spec.kind == "nested_loops" else 0)
    if m < spec.n - 1:
        raise InfeasibleSpecError(f"m={m} is below n - 1 = {spec.n - 1}")
    rng = SplitMix64(spec.seed)
    if spec.kind == "nested_loops":
        return _nested_loops(spec.n, m, spec.depth, rng)
    return _tree_plus_extras(spec.n, m, rng, acyclic=spec.kind == "dag")


def _sample_extras(rng, arcs, present, k, max_extra, candidate, draw):
    """Add ``k`` distinct arcs accepted by ``draw`` (rejection) or listed by ``candidate``.

    Rejection sampling is used while at most half the admissible arcs are
    taken; beyond that the admissible arcs are listed in lexicographic order,
    shuffled, and the first ``k`` taken.
    """
    if k > max_extra:
        raise InfeasibleSpecError(f"asked for {k} extra arcs but only {max_extra} fit")
    if 2 * k <= max_extra:
        while k:
            arc = draw()
            if arc is not None and arc not in present:
                present.add(arc)
                arcs.append(arc)
                k -= 1
    else:
        pool = [a for a in candidate() if a not in present]
        rng.shuffle(pool)
        for arc in pool[:k]:
            present.add(arc)
            arcs.append(arc)


def _tree_plus_extras(n: int, m: int, rng: SplitMix64, acyclic: bool) -> FlowGraph:
    # order[i] is the label of the i-th tree vertex; the start is always 1
    order = list(range(2, n + 1))
    rng.shuffle(order)
    order.insert(0, 1)
    arcs: list[Arc] = []
    for i in range(1, n):
        arcs.append((order[rng.below(i)], order[i]))
    present = set(arcs)

    if acyclic:
        max_total = n * (n - 1) // 2

        def draw():
            i, j = rng.below(n), rng.below(n)
            if i == j:
                return None
            i, j = min(i, j), max(i, j)
            return (order[i], order[j])

        def candidate():
            return ((order[i], order[j]) for i in range(n) for j in range(i + 1, n))
    else:
        max_total = (n - 1) * (n - 1)

        def draw():
            x, y = rng.below(n) + 1, rng.below(n - 1) + 2
            return None if x == y else (x, y)

        def candidate():
            return ((x, y) for x in range(1, n + 1) for y in range(2, n + 1) if x != y)

    _sample_extras(rng, arcs, present, m - (n - 1), max_total - (n - 1), candidate, draw)
    rng.shuffle(arcs)
    return FlowGraph.from_arcs(n, 1, arcs)


def _nested_loops(n: int, m: int, depth: int, rng: SplitMix64) -> FlowGraph:
    """Chain 1 -> 2 -> ... -> n with ``depth`` nested loops [a_k, b_k].

    Loop k runs from a_k = k + 1 to b_k = n - k + 1 (outermost first) and is
    closed by the back arc (b_k, a_k).  Extra arcs are either forward chain
    arcs (x, y) with x < y that enter no loop below its head, or further back
    arcs (x, a_k) from inside loop k.  Both kinds keep every loop reducible.
    """
    if depth < 1 or n < 2 * depth + 1:
        raise InfeasibleSpecError(f"nested_loops needs n >= 2*depth + 1, got n={n} depth={depth}")
    lo = [k + 2 for k in range(depth)]
    hi = [n - k for k in range(depth)]
    arcs: list[Arc] = [(v, v + 1) for v in range(1, n)]
    arcs += [(b, a) for a, b in zip(lo, hi)]
    present = set(arcs)

    def inside(k: int, v: int) -> bool:
        return lo[k] <= v <= hi[k]

    def ok(x: int, y: int) -> bool:
        if x == y or y == 1:
            return False
        if x < y:
            # forward: y may only be inside a loop x is also inside, or be its head
            return all(inside(k, x) or not inside(k, y) or y == lo[k] for k in range(depth))
        # backward: only to a loop head, from inside that loop
        return any(y == lo[k] and inside(k, x) for k in range(depth))

    admissible = [(x, y) for x in range(1, n + 1) for y in range(2, n + 1) if ok(x, y)]
    k = m - len(arcs)
    if k < 0:
        raise InfeasibleSpecError(f"nested_loops with n={n} depth={depth} needs m >= {len(arcs)}")

    def draw():
        return admissible[rng.below(len(admissible))]

    free = len(admissible) - len(present.intersection(admissible))
    _sample_extras(rng, arcs, present, k, free, lambda: iter(admissible), draw)
    # the chain stays first so the DFS follows it and the loops nest as built
    rest = arcs[n - 1:]
    rng.shuffle(rest)
    return FlowGraph.from_arcs(n, 1, arcs[: n - 1] + rest)


def _ladder(n: int) -> FlowGraph:
    """Rungs of two vertices; each rung's vertices both feed both of the next rung's.

    Vertex 1 feeds the first rung; an odd leftover vertex is a final join.
    """
    arcs: list[Arc] = []
    rungs = [(v, v + 1) for v in range(2, n, 2)]
    if not rungs:
        return FlowGraph.from_arcs(n, 1, [(1, 2)])
    arcs += [(1, rungs[0][0]), (1, rungs[0][1])]
    for (a, b), (c, d) in zip(rungs, rungs[1:]):
        arcs += [(a, c), (a, d), (b, c), (b, d)]
    if n % 2 == 0:
        arcs += [(rungs[-1][0], n), (rungs[-1][1], n)]
    return FlowGraph.from_arcs(n, 1, arcs)


def enumerate_small(n: int) -> Iterator[FlowGraph]:
    """Every flow graph on vertices 1..n with start 1 (no loops, no arcs into 1).

    Candidate arcs are ordered by tail then head; subsets are visited in
    increasing bitmask order.
    """
    if not 2 <= n <= 4:
        raise ValueError("enumerate_small supports 2 <= n <= 4")
    cand = [(x, y) for x in range(1, n + 1) for y in range(2, n + 1) if x != y]
    for mask in range(1 << len(cand)):
        arcs = [a for i, a in enumerate(cand) if mask >> i & 1]
        g = FlowGraph.from_arcs(n, 1, arcs)
        if all(reachable(g)[1:]):
            yield g


def count_small(n: int) -> int:
    return sum(1 for _ in enumerate_small(n))


__all__ = [
    "GenSpec",
    "InfeasibleSpecError",
    "KINDS",
    "SplitMix64",
    "count_small",
    "enumerate_small",
    "generate",
]
