"""Turn a flow graph into an acyclic one with the same dominators.

Starting from the DFS tree and loop nesting forest:

1. every back arc is dropped;
2. for each head ``u`` whose loop shares a non-head entry with the loop of
   ``h(u)``, arc ``(p(h(u)), u)`` is added;
3. for each non-head entry ``(v, w)``, arc ``(v, u)`` is added where
   ``loop(u)`` is the largest loop that ``(v, w)`` enters.

The result may contain parallel arcs; the acyclic algorithm does not mind.
"""

from __future__ import annotations

from dataclasses import dataclass

from .acyclic import compute_ad, find_back_arc
from .dfs import ArcClass, DfsInfo, run_dfs
from .graph import FlowGraph
from .loops import LoopClassification, LoopForest, build_loop_forest, classify_loops


@dataclass(frozen=True)
class Provenance:
    rule: str  # "original", "rule2" or "rule3"
    head: int | None = None
    entry: tuple[int, int] | None = None

    def comment(self) -> str:
        if self.rule == "rule2":
            return f"rule2 u={self.head}"
        if self.rule == "rule3":
            return f"rule3 entry={self.entry[0]},{self.entry[1]} u={self.head}"
        return "original"


@dataclass(frozen=True)
class ReducedGraph:
    graph: FlowGraph
    provenance: tuple[Provenance, ...]
    dropped_back_arcs: int

    def count(self, rule: str) -> int:
        return sum(1 for p in self.provenance if p.rule == rule)


def reduce(
    g: FlowGraph, info: DfsInfo, forest: LoopForest, cls: LoopClassification
) -> ReducedGraph:
    arcs = []
    prov = []
    dropped = 0
    for x, y in g.arcs:
        if info.classify(x, y) is ArcClass.BACK:
            dropped += 1
            continue
        arcs.append((x, y))
        prov.append(Provenance("original"))

    for u in sorted(cls.common_entry_heads):
        arcs.append((info.parent[forest.h[u]], u))
        prov.append(Provenance("rule2", head=u))

    for entry, u in cls.non_head_entries.items():
        arcs.append((entry[0], u))
        prov.append(Provenance("rule3", head=u, entry=entry))

    reduced = FlowGraph.from_arcs(g.n, g.s, arcs)
    back = find_back_arc(reduced, run_dfs(reduced))
    assert back is None, f"reduced graph still has back arc {back}"
    result = ReducedGraph(reduced, tuple(prov), dropped)
    assert result.count("rule2") <= max(g.n - 2, 0)
    assert result.count("rule3") <= g.m
    return result


def reduce_graph(g: FlowGraph) -> ReducedGraph:
    info = run_dfs(g)
    forest = build_loop_forest(g, info)
    return reduce(g, info, forest, classify_loops(g, info, forest))


def dominators_via_reduction(g: FlowGraph) -> dict[int, int]:
    return compute_ad(reduce_graph(g).graph)
