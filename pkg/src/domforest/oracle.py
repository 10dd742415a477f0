"""Brute-force dominators straight from the definition.

``u`` dominates ``w`` iff ``w`` is unreachable from the start once ``u`` is
deleted.  This shares nothing with the contraction algorithms beyond the graph
type, and costs O(n(n + m)); keep it to small graphs.
"""

from __future__ import annotations

from .graph import FlowGraph


def _reach_without(n: int, s: int, succ: list[list[int]], banned: int) -> list[bool]:
    seen = [False] * (n + 1)
    seen[s] = True
    stack = [s]
    while stack:
        v = stack.pop()
        for w in succ[v]:
            if w != banned and not seen[w]:
                seen[w] = True
                stack.append(w)
    return seen


def brute_dominators(g: FlowGraph) -> dict[int, set[int]]:
    n, s = g.n, g.s
    succ: list[list[int]] = [[] for _ in range(n + 1)]
    for x, y in g.arcs:
        succ[x].append(y)
    dom = {w: {s, w} for w in range(1, n + 1)}
    for v in range(1, n + 1):
        if v == s:
            continue
        seen = _reach_without(n, s, succ, v)
        for w in range(1, n + 1):
            if w != v and not seen[w]:
                dom[w].add(v)
    return dom


def brute_idom(g: FlowGraph) -> dict[int, int]:
    dom = brute_dominators(g)
    idom = {}
    for v, ds in dom.items():
        if v == g.s:
            continue
        proper = ds - {v}
        # dominators of v form a chain; the deepest one has the largest dom-set
        best = max(proper, key=lambda u: len(dom[u]))
        for u in proper:
            assert u in dom[best], f"dominators of {v} are not totally ordered"
        idom[v] = best
    return idom


def trees_equal(a: dict[int, int], b: dict[int, int]) -> tuple[bool, int | None]:
    """Compare two idom maps; on mismatch also return the smallest differing vertex."""
    if a.keys() != b.keys():
        raise ValueError("dominator trees cover different vertex sets")
    diff = [v for v in a if a[v] != b[v]]
    if diff:
        return False, min(diff)
    return True, None
