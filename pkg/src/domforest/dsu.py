"""Disjoint set union with explicit set names.

``unite(x, y)`` names the merged set after the set that held ``x``.  Rank-based
linking decides the structural root independently, so the name lives in a side
table keyed by root.
"""

from __future__ import annotations


class NamedDsu:
    """Union by rank with full path compression over elements ``1..capacity``.

    >>> d = NamedDsu(3)
    >>> for v in (1, 2, 3):
    ...     d.make_set(v)
    >>> d.unite(1, 2); d.unite(3, 1)
    >>> d.find(2)
    3
    """

    __slots__ = ("parent", "rank", "name", "unite_count")

    def __init__(self, capacity: int, singletons: bool = False):
        # parent[x] == 0 marks an element that was never created.
        if singletons:
            self.parent = list(range(capacity + 1))
            self.name = list(range(capacity + 1))
        else:
            self.parent = [0] * (capacity + 1)
            self.name = [0] * (capacity + 1)
        self.rank = [0] * (capacity + 1)
        self.unite_count = 0

    def __contains__(self, x: int) -> bool:
        return 0 < x < len(self.parent) and self.parent[x] != 0

    def make_set(self, x: int) -> None:
        if not 0 < x < len(self.parent):
            raise IndexError(f"element {x} outside capacity {len(self.parent) - 1}")
        if self.parent[x]:
            raise ValueError(f"element {x} already belongs to a set")
        self.parent[x] = x
        self.name[x] = x

    def _root(self, x: int) -> int:
        parent = self.parent
        if not 0 < x < len(parent) or not parent[x]:
            raise KeyError(f"element {x} was never created")
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def find(self, x: int) -> int:
        return self.name[self._root(x)]

    def finder(self):
        """Return an unchecked ``find`` for hot loops.

        Same result as `find` for created elements; an uncreated element
        yields 0 instead of raising.
        """
        parent, name = self.parent, self.name

        def find(x: int) -> int:
            r = parent[x]
            if r == x or parent[r] == r:
                return name[r]
            root = r
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return name[root]

        return find

    def rooter(self):
        """Return an unchecked root lookup with path compression.

        Hot loops test ``parent[parent[x]] == parent[x]`` inline and only call
        this when the path is longer; ``name[root]`` then gives the set name.
        """
        parent = self.parent

        def root(x: int) -> int:
            r = x
            while parent[r] != r:
                r = parent[r]
            while parent[x] != r:
                parent[x], x = r, parent[x]
            return r

        return root

    def unite(self, x: int, y: int) -> None:
        parent = self.parent
        # short paths skip the general lookup; 0 (uncreated) always takes it
        rx = parent[x]
        if not rx or parent[rx] != rx:
            rx = self._root(x)
        ry = parent[y]
        if not ry or parent[ry] != ry:
            ry = self._root(y)
        self.unite_count += 1
        if rx == ry:
            return
        keep = self.name[rx]
        rank = self.rank
        if rank[rx] < rank[ry]:
            rx, ry = ry, rx
        elif rank[rx] == rank[ry]:
            rank[rx] += 1
        parent[ry] = rx
        self.name[rx] = keep
