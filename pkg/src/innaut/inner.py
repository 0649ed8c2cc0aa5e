"""The partial inner automorphisms a -> hag and the monoid they generate."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .partial_map import DEFAULT_LIMIT, PartialMap, closure
from .semigroup import FiniteSemigroup, adjoin_identity, omega_data


@dataclass(frozen=True)
class InnGenerator:
    g: int
    h: int
    map: PartialMap
    domain: tuple

    def render(self, S: Optional[FiniteSemigroup] = None) -> str:
        lab = adjoin_identity(S).label if S is not None else str
        return f"({lab(self.g)},{lab(self.h)}) : {self.map.render(lab)}"


def domain_dgh(S: FiniteSemigroup, g: int, h: int) -> tuple:
    """D_{g,h} = {a in S : gh.a = a.gh = a}."""
    t = adjoin_identity(S).table
    p = t[g, h]
    ar = np.arange(S.n)
    mask = (t[p, :S.n] == ar) & (t[:S.n, p] == ar)
    return tuple(int(x) for x in np.flatnonzero(mask))


def phi_map(S: FiniteSemigroup, g: int, h: int) -> PartialMap:
    t = adjoin_identity(S).table
    dom = np.array(domain_dgh(S, g, h), dtype=np.int64)
    img = np.full(S.n, -1, dtype=np.int64)
    if len(dom):
        img[dom] = t[t[h, dom], g]
    return PartialMap._raw(S.n, tuple(img.tolist()))


def phi(S: FiniteSemigroup, g: int, h: int) -> InnGenerator:
    """phi_{g,h}: D_{g,h} -> D_{h,g}, a -> hag."""
    return InnGenerator(g, h, phi_map(S, g, h), domain_dgh(S, g, h))


def inn_generators(S: FiniteSemigroup) -> dict:
    """Distinct maps phi_{g,h} over (g, h) in S^1 x S^1, each with its (g, h) provenance."""
    cached = S._cache.get("inn_gens")
    if cached is not None:
        return cached
    M = adjoin_identity(S)
    t = M.table.astype(np.int64)
    n, m = S.n, M.n
    ar = np.arange(n)
    masks = {}
    out = {}
    for g in range(m):
        for h in range(m):
            p = int(t[g, h])
            dom = masks.get(p)
            if dom is None:
                dom = masks[p] = np.flatnonzero((t[p, :n] == ar) & (t[:n, p] == ar))
            img = np.full(n, -1, dtype=np.int64)
            if len(dom):
                img[dom] = t[t[h, dom], g]
            f = PartialMap._raw(n, tuple(img.tolist()))
            out.setdefault(f, []).append((g, h))
    S._cache["inn_gens"] = out
    return out


def inn(S: FiniteSemigroup, limit: Optional[int] = DEFAULT_LIMIT) -> frozenset:
    """Inn(S): the inverse monoid generated by all phi_{g,h}."""
    key = ("inn", limit)
    cached = S._cache.get(key)
    if cached is not None:
        return cached
    result = closure(inn_generators(S), limit=limit)
    S._cache[key] = result
    return result


def reduce_conjugators(S: FiniteSemigroup, g: int, h: int) -> tuple:
    """Mutually inverse (g_bar, h_bar) with phi_{g,h} contained in phi_{g_bar,h_bar}.

    g_bar = (gh)^w g and h_bar = h (gh)'.
    """
    M = adjoin_identity(S)
    t = M.table
    gh = int(t[g, h])
    w = omega_data(M, gh)
    return int(t[w.omega, g]), int(t[h, w.pseudo_inverse])


def is_mutually_inverse(S: FiniteSemigroup, g: int, h: int) -> bool:
    t = adjoin_identity(S).table
    return int(t[t[g, h], g]) == g and int(t[t[h, g], h]) == h
