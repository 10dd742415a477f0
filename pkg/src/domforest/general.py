"""Dominators of a general flow graph in a single depth-first search.

Each vertex is processed at its postorder visit.  Two disjoint set structures
are live at once: ``dsu`` tracks contractions and ``nca`` answers nearest
common ancestor queries online (a vertex joins its parent's set when the
search retreats from it, so the set name of any visited vertex is its nca with
the current vertex).  An arc is added to the working graph when its nca is
processed.

Per-vertex counters:

``total(v)``
    unmarked arcs into ``v``; initialised to the in-degree before the search.
``added(v)``
    unmarked arcs into ``v`` already added to the working graph.  At the end of
    an iteration every such arc into ``u`` is a loop arc, so subtracting
    ``added(u)`` from ``total(u)`` marks them all at once.
"""

from __future__ import annotations

from ._lists import ArcLists, SameSets
from .dfs import DfsInfo
from .dsu import NamedDsu
from .graph import FlowGraph


def compute_gd(
    g: FlowGraph, *, stats: dict | None = None, check: bool = False
) -> tuple[dict[int, int], DfsInfo]:
    """Immediate dominators of ``g`` and the DFS tree the search built."""
    n, s = g.n, g.s
    arcs = g.arcs
    tails = [x for x, _ in arcs]
    heads = [y for _, y in arcs]
    out_adj = g.out_adj

    total = [0] * (n + 1)
    for y in heads:
        total[y] += 1

    parent = [0] * (n + 1)
    pre = [0] * (n + 1)
    post = [0] * (n + 1)
    size = [1] * (n + 1)
    preorder: list[int] = []
    postorder: list[int] = []

    nca = NamedDsu(n, singletons=True)
    npar, nname, nroot = nca.parent, nca.name, nca.rooter()
    # every find on dsu is for a vertex already postvisited, so creating all
    # sets up front changes nothing
    dsu = NamedDsu(n, singletons=True)
    dpar, dname, droot = dsu.parent, dsu.name, dsu.rooter()
    bucket: list[list[int]] = [[] for _ in range(n + 1)]
    added = [0] * (n + 1)
    # out(v): arcs (x, y) with find(x) = v; in(v): arcs (x, y) with find(y) = v
    out = ArcLists(n, len(arcs))
    ohead, otail, onxt = out.head, out.tail, out.nxt
    inb = ArcLists(n, len(arcs))
    ihead, itail, inxt = inb.head, inb.tail, inb.nxt
    same = SameSets(n)
    idom = [0] * (n + 1)

    def contract(v: int) -> int:
        x = dsu.find(parent[v])
        dsu.unite(parent[v], v)
        out.absorb(x, v)
        return x

    def postvisit(u: int) -> None:
        for a in bucket[u]:
            x, y = tails[a], heads[a]
            r = dpar[y]
            if dpar[r] != r:
                r = droot(y)
            fy = dname[r]
            r = dpar[x]
            if dpar[r] != r:
                r = droot(x)
            fx = dname[r]
            if ohead[fx] >= 0:
                onxt[otail[fx]] = a
            else:
                ohead[fx] = a
            otail[fx] = a
            if ihead[fy] >= 0:
                inxt[itail[fy]] = a
            else:
                ihead[fy] = a
            itail[fy] = a
            added[fy] += 1
        bucket[u] = []

        while ohead[u] >= 0:
            a = ohead[u]
            ohead[u] = onxt[a]
            y = heads[a]
            r = dpar[y]
            if dpar[r] != r:
                r = droot(y)
            v = dname[r]
            if v == u:
                continue
            total[v] -= 1
            added[v] -= 1
            if check:
                assert total[v] >= 0, f"total({v}) went negative"
            if total[v] == 0:
                x = contract(v)
                if x == u:
                    for w in same.members(v):
                        idom[w] = u
                else:
                    same.absorb(x, v)

        lo, hi = pre[u], pre[u] + size[u]
        while ihead[u] >= 0:
            a = ihead[u]
            ihead[u] = inxt[a]
            z = tails[a]
            r = dpar[z]
            if dpar[r] != r:
                r = droot(z)
            v = dname[r]
            while v != u:
                if check:
                    assert lo < pre[v] < hi, f"walk from {z} left the subtree of {u}"
                same.absorb(u, v)
                x = contract(v)
                inb.absorb(x, v)
                total[x] += total[v]
                added[x] += added[v]
                v = x

        total[u] -= added[u]
        added[u] = 0
        if check:
            assert total[u] >= 0, f"total({u}) went negative"

    def scan(u: int, a: int) -> None:
        v = heads[a]
        r = npar[v]
        if npar[r] != r:
            r = nroot(v)
        w = nname[r]
        if check:
            assert w == _naive_nca(parent, u, v), f"nca({u}, {v}) wrong"
        bucket[w].append(a)

    def previsit(u: int) -> None:
        preorder.append(u)
        pre[u] = len(preorder)

    previsit(s)
    # frames are [vertex, arc iterator, arc that led to the child being searched]
    stack = [[s, iter(out_adj[s]), -1]]
    while stack:
        frame = stack[-1]
        u = frame[0]
        if frame[2] >= 0:
            scan(u, frame[2])
            frame[2] = -1
        for a in frame[1]:
            v = heads[a]
            if not pre[v]:
                previsit(v)
                parent[v] = u
                frame[2] = a
                stack.append([v, iter(out_adj[v]), -1])
                break
            scan(u, a)
        else:
            stack.pop()
            postvisit(u)
            postorder.append(u)
            post[u] = len(postorder)
            if stack:
                size[parent[u]] += size[u]
                nca.unite(parent[u], u)

    if len(preorder) != n:
        missing = next(v for v in range(1, n + 1) if not pre[v])
        raise ValueError(f"vertex {missing} is unreachable from {s}")

    info = DfsInfo(s, parent, pre, post, preorder, postorder, size)
    if stats is not None:
        stats["unites"] = [dsu.unite_count, nca.unite_count]
    result = {v: idom[v] for v in range(1, n + 1) if v != s}
    if check:
        for v, d in result.items():
            assert d != 0, f"vertex {v} never received an immediate dominator"
            assert d != v and info.is_ancestor(d, v), f"d({v}) = {d} is not a proper ancestor"
    return result, info


def _naive_nca(parent: list[int], u: int, v: int) -> int:
    ancestors = set()
    while u:
        ancestors.add(u)
        u = parent[u]
    while v not in ancestors:
        v = parent[v]
    return v
