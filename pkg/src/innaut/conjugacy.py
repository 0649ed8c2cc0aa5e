"""Natural conjugacy: a ~ b iff ag = gb, bh = ha, hag = b, gbh = a for g, h in S^1."""
from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from .partition import Partition, UnionFind
from .semigroup import FiniteSemigroup, adjoin_identity, monoid_identity


class ConjugacyWitness(NamedTuple):
    g: int
    h: int


def conjugator_order(S: FiniteSemigroup) -> list:
    """Indices of S^1 with the identity first, then ascending."""
    one = monoid_identity(S)
    m = adjoin_identity(S).n
    return [one] + [x for x in range(m) if x != one]


def conditions(S: FiniteSemigroup, a: int, b: int, g: int, h: int) -> tuple:
    """Truth values of the eight conjugator equations (i)-(viii)."""
    t = adjoin_identity(S).table
    gh = t[g, h]
    hg = t[h, g]
    return (
        t[a, g] == t[g, b],            # (i)   ag = gb
        t[b, h] == t[h, a],            # (ii)  bh = ha
        t[t[h, a], g] == b,            # (iii) hag = b
        t[t[g, b], h] == a,            # (iv)  gbh = a
        t[hg, b] == b,                 # (v)   hg.b = b
        t[gh, a] == a,                 # (vi)  gh.a = a
        t[b, hg] == b,                 # (vii) b.hg = b
        t[a, gh] == a,                 # (viii) a.gh = a
    )


def is_witness(S: FiniteSemigroup, a: int, b: int, g: int, h: int) -> bool:
    return all(conditions(S, a, b, g, h)[:4])


def conjugators(S: FiniteSemigroup, a: int, b: int) -> Optional[ConjugacyWitness]:
    """First conjugator pair (g, h) in identity-first lexicographic order, or None."""
    t = adjoin_identity(S).table
    order = np.array(conjugator_order(S))
    # h candidates: bh = ha
    h_ok = order[t[b, order] == t[order, a]]
    if not len(h_ok):
        return None
    ha = t[h_ok, a]
    for g in order:
        if t[a, g] != t[g, b]:
            continue
        gb = t[g, b]
        hit = (t[ha, g] == b) & (t[gb, h_ok] == a)
        idx = np.flatnonzero(hit)
        if len(idx):
            return ConjugacyWitness(int(g), int(h_ok[idx[0]]))
    return None


def are_conjugate(S: FiniteSemigroup, a: int, b: int) -> bool:
    return conjugators(S, a, b) is not None


def _domain_mask(S: FiniteSemigroup, p: int) -> np.ndarray:
    t = adjoin_identity(S).table
    ar = np.arange(S.n)
    return (t[p, :S.n] == ar) & (t[:S.n, p] == ar)


def conjugacy_classes(S: FiniteSemigroup) -> Partition:
    """Partition of S into natural conjugacy classes."""
    cached = S._cache.get("conj")
    if cached is not None:
        return cached
    M = adjoin_identity(S)
    t = M.table
    m = M.n
    uf = UnionFind(S.n)
    masks = {}
    for g in range(m):
        for h in range(m):
            p = int(t[g, h])
            mask = masks.get(p)
            if mask is None:
                mask = masks[p] = _domain_mask(S, p)
            dom = np.flatnonzero(mask)
            if not len(dom):
                continue
            img = t[t[h, dom], g]
            for a, b in zip(dom.tolist(), img.tolist()):
                if a != b:
                    uf.union(a, b)
    P = Partition.from_labels(uf.labels())
    S._cache["conj"] = P
    return P


def conjugacy_class(S: FiniteSemigroup, a: int) -> tuple:
    return conjugacy_classes(S).block(a)


def k_pairs(S: FiniteSemigroup, g: int, h: int) -> frozenset:
    """All (a, b) in S x S conjugate via exactly the conjugators (g, h)."""
    t = adjoin_identity(S).table
    n = S.n
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    ok = (
        (t[a, g] == t[g, b])
        & (t[b, h] == t[h, a])
        & (t[t[h, a], g] == b)
        & (t[t[g, b], h] == a)
    )
    return frozenset((int(x), int(y)) for x, y in np.argwhere(ok))


def identity_class_formula(S: FiniteSemigroup) -> frozenset:
    """For a monoid: {gh : hg = 1}."""
    if S.identity is None:
        raise ValueError("not a monoid")
    t = S.table
    one = S.identity
    return frozenset(int(t[g, h]) for g in range(S.n) for h in range(S.n) if t[h, g] == one)


def centralizer(S: FiniteSemigroup, a: int) -> tuple:
    """C_a = {x in S : xa = ax}."""
    t = S.table
    return tuple(int(x) for x in np.flatnonzero(t[:, a] == t[a, :]))
