"""Singly linked lists with O(1) append, pop-front and destructive concatenation.

Both kinds are endogenous: an element is in at most one list, so the link
field lives on the element (an arc or a vertex) and concatenation is O(1).
"""

from __future__ import annotations

from typing import Iterator


class ArcLists:
    """Lists of arc ids ``0..m-1``, each arc in at most one list at a time.

    Every bag in the dominator algorithms receives one entry per arc, so the
    link field can live on the arc and no per-item storage is allocated.  The
    arrays are public because the hot loops manipulate them inline; -1 ends a
    list and marks an empty one.
    """

    __slots__ = ("head", "tail", "nxt")

    def __init__(self, n: int, m: int):
        self.head = [-1] * (n + 1)
        self.tail = [-1] * (n + 1)
        self.nxt = [-1] * m

    def add(self, owner: int, a: int) -> None:
        self.nxt[a] = -1
        if self.head[owner] >= 0:
            self.nxt[self.tail[owner]] = a
        else:
            self.head[owner] = a
        self.tail[owner] = a

    def pop(self, owner: int) -> int:
        a = self.head[owner]
        self.head[owner] = self.nxt[a]
        return a

    def absorb(self, into: int, owner: int) -> None:
        """Move every arc of ``owner``'s list to the back of ``into``'s list."""
        first = self.head[owner]
        if first < 0:
            return
        if self.head[into] >= 0:
            self.nxt[self.tail[into]] = first
        else:
            self.head[into] = first
        self.tail[into] = self.tail[owner]
        self.head[owner] = -1

    def items(self, owner: int) -> Iterator[int]:
        a = self.head[owner]
        while a >= 0:
            yield a
            a = self.nxt[a]


class SameSets:
    __slots__ = ("head", "tail", "nxt")

    def __init__(self, n: int):
        self.head = list(range(n + 1))
        self.tail = list(range(n + 1))
        self.nxt = [0] * (n + 1)

    def absorb(self, into: int, owner: int) -> None:
        self.nxt[self.tail[into]] = self.head[owner]
        self.tail[into] = self.tail[owner]
        self.head[owner] = 0

    def members(self, owner: int) -> Iterator[int]:
        w = self.head[owner]
        while w:
            yield w
            w = self.nxt[w]
