"""Dominators of an acyclic flow graph by repeated contraction into tree parents.

Vertices are processed bottom-up in reverse preorder of a depth-first search.
When the last undeleted arc into a vertex ``v`` is deleted while processing
``u``, ``v`` is contracted into its current parent: if that parent is ``u``
every vertex in ``same(v)`` gets ``u`` as immediate dominator, otherwise
``same(v)`` joins the parent's set and waits.  No nearest-common-ancestor
computation is needed.
"""

from __future__ import annotations

from ._lists import ArcLists, SameSets
from .dfs import DfsInfo, run_dfs
from .dsu import NamedDsu
from .graph import FlowGraph


class CyclicGraphError(ValueError):
    """The acyclic algorithm was handed a graph with a back arc."""

    def __init__(self, arc: tuple[int, int]):
        self.arc = arc
        super().__init__(f"input contains back arc ({arc[0]}, {arc[1]})")


def find_back_arc(g: FlowGraph, info: DfsInfo) -> tuple[int, int] | None:
    post = info.post
    for x, y in g.arcs:
        if post[x] <= post[y]:
            return (x, y)
    return None


def check_acyclic(g: FlowGraph, info: DfsInfo) -> bool:
    return find_back_arc(g, info) is None


def compute_ad(
    g: FlowGraph,
    info: DfsInfo | None = None,
    *,
    stats: dict | None = None,
    check: bool = False,
) -> dict[int, int]:
    """Immediate dominators of an acyclic graph, keyed by vertex (start excluded).

    Duplicate arcs are fine.  Raises `CyclicGraphError` if ``g`` has a back
    arc with respect to ``info``.  With ``check`` set, internal invariants are
    asserted as the algorithm runs.
    """
    if info is None:
        info = run_dfs(g)
    back = find_back_arc(g, info)
    if back is not None:
        raise CyclicGraphError(back)

    n = g.n
    parent = info.parent
    tails = [x for x, _ in g.arcs]
    heads = [y for _, y in g.arcs]
    in_adj = g.in_adj

    dsu = NamedDsu(n, singletons=True)
    dpar, dname, droot = dsu.parent, dsu.name, dsu.rooter()
    total = [0] * (n + 1)
    # out(v) holds arcs (x, y) with find(x) = v, standing for the copy y
    out = ArcLists(n, len(tails))
    ohead, otail, onxt = out.head, out.tail, out.nxt
    same = SameSets(n)
    idom = [0] * (n + 1)

    for u in info.reverse_preorder:
        for a in in_adj[u]:
            total[u] += 1
            x = tails[a]
            r = dpar[x]
            if dpar[r] != r:
                r = droot(x)
            o = dname[r]
            if ohead[o] >= 0:
                onxt[otail[o]] = a
            else:
                ohead[o] = a
            otail[o] = a
        while ohead[u] >= 0:
            a = ohead[u]
            ohead[u] = onxt[a]
            v = heads[a]
            total[v] -= 1
            if check:
                assert total[v] >= 0, f"total({v}) went negative"
            if total[v] == 0:
                x = dsu.find(parent[v])
                if x == u:
                    for w in same.members(v):
                        idom[w] = u
                else:
                    same.absorb(x, v)
                dsu.unite(parent[v], v)
                out.absorb(x, v)

    if stats is not None:
        stats["unites"] = [dsu.unite_count]
    result = {v: idom[v] for v in range(1, n + 1) if v != g.s}
    if check:
        _check_tree(result, info)
        assert all(dsu.find(v) == g.s for v in range(1, n + 1)), "undeleted vertex left"
    return result


def _check_tree(idom: dict[int, int], info: DfsInfo) -> None:
    for v, d in idom.items():
        assert d != 0, f"vertex {v} never received an immediate dominator"
        assert d != v and info.is_ancestor(d, v), f"d({v}) = {d} is not a proper ancestor"

