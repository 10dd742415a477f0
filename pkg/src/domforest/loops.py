"""Loop nesting forests, dominators driven by them, and reducibility.

The H loop is a depth-first search that, at each postorder visit ``u``, runs a
backward search over the arcs entering the (contracted) vertex ``u``.  Every
vertex the search reaches lies in ``loop(u)``; it is recorded as a child of
``u`` in the forest and contracted into its tree parent, so nested loops are
walked only once.

The D loop then processes vertices in reverse preorder like the acyclic
algorithm, except that after the out-bag of ``u`` is drained, the forest
children of ``u`` are contracted into ``u`` (in place of the in-bags of the
single-pass algorithm).  ``added(v)`` counts unmarked arcs into ``v`` whose
nearest common ancestor has been processed; at the end of iteration ``u`` all
of those entering ``u`` are loop arcs and are marked by one subtraction.  The
H-loop search buckets arcs by nca online for this purpose, with a second
disjoint set structure whose sets are joined as the search retreats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ._lists import ArcLists, SameSets
from .dfs import DfsInfo
from .dsu import NamedDsu
from .graph import FlowGraph


@dataclass(frozen=True)
class LoopForest:
    """Loop nesting forest over the DFS tree it was built from.

    ``h`` maps a vertex to its forest parent; outermost vertices are absent.
    ``exit[v]`` is the arc whose backward search contracted ``v``.
    """

    n: int
    h: dict[int, int]
    heads: frozenset[int]
    exit: dict[int, tuple[int, int]]
    h_arcs: tuple[tuple[int, int], ...]
    # children of u are _kids[_first[u]:_last[u]]; the H loop emits them together
    _kids: list[int] = field(repr=False, compare=False)
    _first: list[int] = field(repr=False, compare=False)
    _last: list[int] = field(repr=False, compare=False)

    def children(self, u: int) -> list[int]:
        """Forest children of ``u`` in the order the H loop found them."""
        return self._kids[self._first[u]:self._last[u]]

    @cached_property
    def _intervals(self) -> tuple[list[int], list[int]]:
        """Preorder number and subtree size of every vertex in H."""
        n, kids, first, last = self.n, self._kids, self._first, self._last
        hpre = [0] * (n + 1)
        hsize = [1] * (n + 1)
        counter = 0
        for root in range(1, n + 1):
            if root in self.h:
                continue
            stack = [root]
            while stack:
                v = stack.pop()
                if v < 0:
                    v = ~v
                    for i in range(first[v], last[v]):
                        hsize[v] += hsize[kids[i]]
                    continue
                counter += 1
                hpre[v] = counter
                stack.append(~v)
                stack.extend(kids[first[v]:last[v]][::-1])
        return hpre, hsize

    def contains(self, head: int, x: int) -> bool:
        """True when ``x`` belongs to ``loop(head)``."""
        pre, size = self._intervals
        p = pre[head]
        return p <= pre[x] < p + size[head]

    def loop(self, head: int) -> set[int]:
        members = {head}
        stack = [head]
        while stack:
            for c in self.children(stack.pop()):
                members.add(c)
                stack.append(c)
        return members

    def depth(self, v: int) -> int:
        """Number of proper forest ancestors of ``v``."""
        d = 0
        while v in self.h:
            v = self.h[v]
            d += 1
        return d


@dataclass(frozen=True)
class LoopClassification:
    irreducible_heads: frozenset[int]
    # (tail, head) of a non-head entry -> head of the largest loop it enters
    non_head_entries: dict[tuple[int, int], int]
    common_entry_heads: frozenset[int]

    @property
    def reducible(self) -> bool:
        return not self.irreducible_heads


def _h_loop(g: FlowGraph, check: bool = False):
    """Run the H-loop search.

    Returns (info, forest, nca buckets, unite counts of the two set structures).  The disjoint set
    lookups and list operations are written out inline; this loop dominates
    the running time.
    """
    n, s = g.n, g.s
    arcs = g.arcs
    tails = [x for x, _ in arcs]
    heads = [y for _, y in arcs]
    out_adj = g.out_adj

    parent = [0] * (n + 1)
    pre = [0] * (n + 1)
    post = [0] * (n + 1)
    size = [1] * (n + 1)
    preorder: list[int] = []
    postorder: list[int] = []

    # Finds only ever touch visited vertices, so all sets can exist up front.
    dsu = NamedDsu(n, singletons=True)
    dpar, dname, droot = dsu.parent, dsu.name, dsu.rooter()
    nca = NamedDsu(n, singletons=True)
    npar, nname, nroot = nca.parent, nca.name, nca.rooter()
    # arcs bucketed by nca, as singly linked lists threaded through the arcs
    bhead = [-1] * (n + 1)
    bnxt = [-1] * len(arcs)
    in_arcs = ArcLists(n, len(arcs))
    ihead, itail, inxt = in_arcs.head, in_arcs.tail, in_arcs.nxt
    h: dict[int, int] = {}
    exits: dict[int, tuple[int, int]] = {}
    h_arcs: list[tuple[int, int]] = []
    kids: list[int] = []
    first = [0] * (n + 1)
    last = [0] * (n + 1)

    def scan(a: int, v: int) -> None:
        # add arc a to in-arcs(find(v)) and bucket it by its nca
        r = dpar[v]
        if dpar[r] != r:
            r = droot(v)
        o = dname[r]
        if ihead[o] >= 0:
            inxt[itail[o]] = a
        else:
            ihead[o] = a
        itail[o] = a
        r = npar[v]
        if npar[r] != r:
            r = nroot(v)
        w = nname[r]
        bnxt[a] = bhead[w]
        bhead[w] = a

    tree_arc = [-1] * (n + 1)
    preorder.append(s)
    pre[s] = 1
    stack = [(s, iter(out_adj[s]))]
    while stack:
        u, it = stack[-1]
        for a in it:
            v = heads[a]
            if not pre[v]:
                preorder.append(v)
                pre[v] = len(preorder)
                parent[v] = u
                tree_arc[v] = a
                stack.append((v, iter(out_adj[v])))
                break
            # scan, written out here as well since this is the hottest line
            r = dpar[v]
            if dpar[r] != r:
                r = droot(v)
            o = dname[r]
            if ihead[o] >= 0:
                inxt[itail[o]] = a
            else:
                ihead[o] = a
            itail[o] = a
            r = npar[v]
            if npar[r] != r:
                r = nroot(v)
            w = nname[r]
            bnxt[a] = bhead[w]
            bhead[w] = a
        else:
            stack.pop()
            # postvisit: backward search from the arcs entering u
            lo, hi = pre[u], pre[u] + size[u]
            first[u] = len(kids)
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
                        assert lo < pre[v] < hi, f"backward search from {u} left its subtree"
                    h[v] = u
                    kids.append(v)
                    h_arcs.append((u, v))
                    exits[v] = arcs[a]
                    p = parent[v]
                    r = dpar[p]
                    if dpar[r] != r:
                        r = droot(p)
                    x = dname[r]
                    dsu.unite(p, v)
                    moved = ihead[v]
                    if moved >= 0:
                        if ihead[x] >= 0:
                            inxt[itail[x]] = moved
                        else:
                            ihead[x] = moved
                        itail[x] = itail[v]
                        ihead[v] = -1
                    v = x
            last[u] = len(kids)
            postorder.append(u)
            post[u] = len(postorder)
            if stack:
                p = parent[u]
                size[p] += size[u]
                nca.unite(p, u)
                # the tree arc (p, u) is scanned once the search returns to p
                scan(tree_arc[u], u)

    if len(preorder) != n:
        missing = next(v for v in range(1, n + 1) if not pre[v])
        raise ValueError(f"vertex {missing} is unreachable from {s}")

    info = DfsInfo(s, parent, pre, post, preorder, postorder, size)
    forest = _make_forest(n, h, exits, h_arcs, kids, first, last)
    return info, forest, (bhead, bnxt), (dsu.unite_count, nca.unite_count)


def _make_forest(n, h, exits, h_arcs, kids, first, last) -> LoopForest:
    heads = frozenset(u for u in range(1, n + 1) if last[u] > first[u])
    return LoopForest(n, h, heads, exits, tuple(h_arcs), kids, first, last)


def _contract(dsu: NamedDsu, out: ArcLists, parent: list[int], v: int) -> int:
    """Contract ``v`` into its current parent; return the parent's set name."""
    x = dsu.find(parent[v])
    dsu.unite(parent[v], v)
    out.absorb(x, v)
    return x


def build_loop_forest(g: FlowGraph, info: DfsInfo, *, check: bool = False) -> LoopForest:
    """Loop nesting forest of ``g`` with respect to the DFS tree in ``info``.

    The H loop performs its own search in adjacency order, which reproduces
    ``run_dfs``; a mismatch means ``info`` belongs to a different graph.
    """
    own, forest, *_ = _h_loop(g, check)
    if own.parent != info.parent:
        raise ValueError("DFS info does not match the graph")
    return forest


def compute_hd(
    g: FlowGraph, *, stats: dict | None = None, check: bool = False
) -> tuple[dict[int, int], LoopForest, DfsInfo]:
    """Immediate dominators, loop nesting forest and DFS tree of ``g``."""
    info, forest, (bhead, bnxt), h_unites = _h_loop(g, check)
    n, s = g.n, g.s
    parent = info.parent
    arcs = g.arcs
    tails = [x for x, _ in arcs]
    heads = [y for _, y in arcs]
    in_adj = g.in_adj
    kids, first, last = forest._kids, forest._first, forest._last
    total = [len(ins) for ins in in_adj]

    # The D loop gets its own singleton sets.  All are created up front because
    # find(x) is asked for tails x that reverse preorder has not reached yet.
    dsu = NamedDsu(n, singletons=True)
    dpar, dname, droot = dsu.parent, dsu.name, dsu.rooter()
    added = [0] * (n + 1)
    # out(v) holds arcs (x, y) with find(x) = v; the copy it stands for is y
    out = ArcLists(n, len(arcs))
    ohead, otail, onxt = out.head, out.tail, out.nxt
    same = SameSets(n)
    idom = [0] * (n + 1)

    for u in info.reverse_preorder:
        for a in in_adj[u]:
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
        a = bhead[u]
        while a >= 0:
            y = heads[a]
            r = dpar[y]
            if dpar[r] != r:
                r = droot(y)
            added[dname[r]] += 1
            a = bnxt[a]

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
                x = _contract(dsu, out, parent, v)
                if x == u:
                    for w in same.members(v):
                        idom[w] = u
                else:
                    same.absorb(x, v)

        for i in range(first[u], last[u]):
            z = kids[i]
            r = dpar[z]
            if dpar[r] != r:
                r = droot(z)
            v = dname[r]
            if v == u:
                continue
            same.absorb(u, v)
            x = _contract(dsu, out, parent, v)
            total[x] += total[v]
            added[x] += added[v]

        total[u] -= added[u]
        added[u] = 0
        if check:
            assert total[u] >= 0, f"total({u}) went negative"

    if stats is not None:
        # H-loop contractions, H-loop nca, D-loop contractions
        stats["unites"] = [*h_unites, dsu.unite_count]
        stats["h_size"] = len(forest.h)
    result = {v: idom[v] for v in range(1, n + 1) if v != s}
    if check:
        for v, d in result.items():
            assert d != 0, f"vertex {v} never received an immediate dominator"
            assert d != v and info.is_ancestor(d, v), f"d({v}) = {d} is not a proper ancestor"
    return result, forest, info


def classify_loops(g: FlowGraph, info: DfsInfo, forest: LoopForest) -> LoopClassification:
    """Find non-head entries of every loop.

    For each arc (v, w) the forest is climbed from ``w`` while the current
    loop excludes ``v``.  Every head passed other than ``w`` itself has (v, w)
    as a non-head entry; the last one passed is the largest such loop.
    """
    h = forest.h
    contains = forest.contains
    irreducible: set[int] = set()
    entries: dict[tuple[int, int], int] = {}
    common: set[int] = set()
    for v, w in g.arcs:
        passed = []
        c = w
        while c and not contains(c, v):
            if c != w:
                passed.append(c)
            c = h.get(c, 0)
        if not passed:
            continue
        irreducible.update(passed)
        entries[(v, w)] = passed[-1]
        # passed is an h-chain, so each head but the last has its h-parent passed too
        common.update(passed[:-1])
    return LoopClassification(frozenset(irreducible), entries, frozenset(common))
