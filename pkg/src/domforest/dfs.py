"""Depth-first search from the start vertex and arc classification.

The search follows adjacency (file) order and runs on an explicit stack, so the
spanning tree is reproducible and deep graphs do not hit the recursion limit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import FlowGraph


class ArcClass(enum.Enum):
    TREE = "tree"
    FORWARD = "forward"
    BACK = "back"
    CROSS = "cross"


@dataclass(frozen=True)
class DfsInfo:
    """Spanning tree and vertex numberings, all indexed by vertex id.

    ``parent[s]`` is 0.  ``pre`` and ``post`` number vertices from 1.
    """

    root: int
    parent: list[int]
    pre: list[int]
    post: list[int]
    preorder: list[int]
    postorder: list[int]
    subtree_size: list[int]

    @property
    def reverse_preorder(self) -> list[int]:
        return self.preorder[::-1]

    def is_ancestor(self, u: int, v: int) -> bool:
        """True when u is an ancestor of v (every vertex is its own ancestor)."""
        pu = self.pre[u]
        return pu <= self.pre[v] < pu + self.subtree_size[u]

    def classify(self, tail: int, head: int) -> ArcClass:
        if tail == head:
            raise ValueError(f"loop arc ({tail}, {head}) has no DFS class")
        if self.post[tail] < self.post[head]:
            return ArcClass.BACK
        if self.parent[head] == tail:
            return ArcClass.TREE
        if self.is_ancestor(tail, head):
            return ArcClass.FORWARD
        return ArcClass.CROSS


def run_dfs(g: FlowGraph) -> DfsInfo:
    n = g.n
    heads = [y for _, y in g.arcs]
    out_adj = g.out_adj
    parent = [0] * (n + 1)
    pre = [0] * (n + 1)
    post = [0] * (n + 1)
    size = [1] * (n + 1)
    preorder: list[int] = []
    postorder: list[int] = []

    s = g.s
    pre[s] = 1
    preorder.append(s)
    stack = [(s, iter(out_adj[s]))]
    while stack:
        u, arcs = stack[-1]
        for a in arcs:
            v = heads[a]
            if not pre[v]:
                parent[v] = u
                preorder.append(v)
                pre[v] = len(preorder)
                stack.append((v, iter(out_adj[v])))
                break
        else:
            stack.pop()
            postorder.append(u)
            post[u] = len(postorder)
            if stack:
                size[parent[u]] += size[u]

    if len(preorder) != n:
        missing = next(v for v in range(1, n + 1) if not pre[v])
        raise ValueError(f"vertex {missing} is unreachable from {s}")
    return DfsInfo(s, parent, pre, post, preorder, postorder, size)


def classify_arc(info: DfsInfo, arc: tuple[int, int]) -> ArcClass:
    return info.classify(*arc)


def is_ancestor(info: DfsInfo, u: int, v: int) -> bool:
    return info.is_ancestor(u, v)
