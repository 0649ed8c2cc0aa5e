"""Canonical set partitions of ``0..n-1`` and a small union-find."""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        # smaller root wins so labels stay canonical-ish
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True

    def labels(self):
        return [self.find(x) for x in range(len(self.parent))]


class NotARefinement(ValueError):
    pass


class Partition:
    """A partition of ``range(n)``.

    Blocks are sorted tuples, ordered by their minimum element, so two equal
    partitions have identical ``blocks``.
    """

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        bl = [tuple(sorted(set(b))) for b in blocks]
        bl = [b for b in bl if b]
        bl.sort()
        block_of = [-1] * n
        for i, b in enumerate(bl):
            for x in b:
                if not 0 <= x < n or block_of[x] != -1:
                    raise ValueError(f"blocks do not partition range({n}): {bl}")
                block_of[x] = i
        if -1 in block_of:
            raise ValueError(f"blocks do not cover range({n}): {bl}")
        self.n = n
        self.blocks = tuple(bl)
        self._block_of = tuple(block_of)

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        groups = {}
        for x, lab in enumerate(labels):
            groups.setdefault(lab, []).append(x)
        return cls(len(labels), groups.values())

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, ([x] for x in range(n)))

    @classmethod
    def whole(cls, n: int) -> "Partition":
        return cls(n, [range(n)])

    def block_index(self, x: int) -> int:
        return self._block_of[x]

    def block(self, x: int) -> tuple:
        return self.blocks[self._block_of[x]]

    def labels(self) -> tuple:
        return self._block_of

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return f"Partition({self})"

    def __str__(self):
        return " | ".join(" ".join(map(str, b)) for b in self.blocks)

    @classmethod
    def parse(cls, text: str, n: int = None) -> "Partition":
        blocks = [[int(x) for x in part.split()] for part in text.split("|")]
        if n is None:
            n = sum(len(b) for b in blocks)
        return cls(n, blocks)

    def same_block(self, x: int, y: int) -> bool:
        return self._block_of[x] == self._block_of[y]

    def refines(self, other: "Partition") -> bool:
        """True if every block of self lies inside a block of other."""
        return all(len({other._block_of[x] for x in b}) == 1 for b in self.blocks)

    def join(self, other: "Partition") -> "Partition":
        """Smallest common coarsening."""
        if self.n != other.n:
            raise ValueError("partitions of different sets")
        uf = UnionFind(self.n)
        for part in (self, other):
            for b in part.blocks:
                for x in b[1:]:
                    uf.union(b[0], x)
        return Partition.from_labels(uf.labels())

    def meet(self, other: "Partition") -> "Partition":
        """Largest common refinement."""
        return Partition.from_labels(list(zip(self._block_of, other._block_of)))

    @cached_property
    def singleton_points(self) -> frozenset:
        return frozenset(b[0] for b in self.blocks if len(b) == 1)

    def is_partial_section(self, points: Iterable[int]) -> bool:
        seen = set()
        for x in points:
            i = self._block_of[x]
            if i in seen:
                return False
            seen.add(i)
        return True

    def image(self, f: Sequence[int]) -> "Partition":
        """Partition {f(B)} for a bijection f of range(n)."""
        return Partition(self.n, ([f[x] for x in b] for b in self.blocks))


def kernel(t: Sequence[int]) -> Partition:
    """Kernel partition of a transformation given as an image tuple."""
    return Partition.from_labels(list(t))


def all_partitions(n: int):
    """Every partition of range(n) (restricted growth strings)."""
    if n == 0:
        yield Partition(0, [])
        return
    labels = [0] * n

    def rec(i, m):
        if i == n:
            yield Partition.from_labels(labels)
            return
        for lab in range(m + 1):
            labels[i] = lab
            yield from rec(i + 1, max(m, lab + 1))

    yield from rec(1, 1)
