"""Test corpus: every semigroup of order <= 4 up to isomorphism, plus order-5 samples."""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .constructors import catalog_semigroups, full_transformation_monoid
from .semigroup import FiniteSemigroup, _trusted


def _tables(n: int):
    """All associative n x n tables on range(n), by backtracking over cells."""
    t = [[-1] * n for _ in range(n)]
    cells = [(a, b) for a in range(n) for b in range(n)]

    def consistent(a, b):
        # every triple touching the new cell whose four products are known
        for x in range(n):
            for y in range(n):
                xy = t[x][y]
                if xy < 0:
                    continue
                for z in range(n):
                    yz = t[y][z]
                    if yz < 0:
                        continue
                    l, r = t[xy][z], t[x][yz]
                    if l >= 0 and r >= 0 and l != r:
                        return False
        return True

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        a, b = cells[k]
        for v in range(n):
            t[a][b] = v
            if consistent(a, b):
                yield from rec(k + 1)
        t[a][b] = -1

    yield from rec(0)


def _canonical(table, perms):
    n = len(table)
    best = None
    for p in perms:
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        # relabel x -> inv[x]; entry (i, j) of the new table
        key = tuple(inv[table[p[i]][p[j]]] for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best


def labelled_count(n: int) -> int:
    return sum(1 for _ in _tables(n))


@lru_cache(maxsize=None)
def small_semigroups(n: int) -> tuple:
    """One representative per isomorphism class of semigroups of order n (n <= 4)."""
    if n > 4:
        raise ValueError("exhaustive enumeration is limited to order 4")
    perms = list(permutations(range(n)))
    seen = set()
    out = []
    for table in _tables(n):
        key = _canonical(table, perms)
        if key in seen:
            continue
        seen.add(key)
        out.append(key)
    out.sort()
    return tuple(_trusted(np.array(k).reshape(n, n)) for k in out)


def _closure_in(S: FiniteSemigroup, gens) -> frozenset:
    out = set(gens)
    frontier = list(out)
    while frontier:
        new = []
        for a in frontier:
            for b in list(out):
                for c in (int(S.table[a, b]), int(S.table[b, a])):
                    if c not in out:
                        out.add(c)
                        new.append(c)
        frontier = new
    return frozenset(out)


@lru_cache(maxsize=None)
def order5_samples() -> tuple:
    """Pairwise non-isomorphic 5-element subsemigroups of T(3) and I_3 generated by
    at most three elements."""
    from itertools import combinations
    from .constructors import symmetric_inverse_monoid

    perms = list(permutations(range(5)))
    seen, out = set(), []
    for S in (full_transformation_monoid(3)[0], symmetric_inverse_monoid(3)[0]):
        subs = set()
        for r in (1, 2, 3):
            for gens in combinations(range(S.n), r):
                sub = _closure_in(S, gens)
                if len(sub) == 5:
                    subs.add(sub)
        for sub in sorted(subs, key=sorted):
            els = sorted(sub)
            pos = {x: i for i, x in enumerate(els)}
            table = tuple(tuple(pos[int(S.table[x, y])] for y in els) for x in els)
            key = _canonical(table, perms)
            if key not in seen:
                seen.add(key)
                out.append(key)
    out.sort()
    return tuple(_trusted(np.array(k).reshape(5, 5)) for k in out)


def corpus(max_order: int = 4, with_order5: bool = False, with_catalog: bool = True) -> dict:
    """Named semigroups for the property suites."""
    out = {}
    if with_catalog:
        out.update(catalog_semigroups())
    for n in range(1, min(max_order, 4) + 1):
        for i, S in enumerate(small_semigroups(n)):
            out[f"order{n}#{i}"] = S
    if with_order5 or max_order >= 5:
        for i, S in enumerate(order5_samples()):
            out[f"order5#{i}"] = S
    return out
