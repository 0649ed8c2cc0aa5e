"""Finite abelian G-sets, End_G(X), standard pairs and the G-set version of the W(X) calculus.

The classification of Inn(End_G(X)) is usually written with right-to-left
composition.  Internally everything stays left to right, so the textbook
phi_{g,h}: t -> h o t o g is our ``phi(S, h, g)``: for an internal pair (g, h)
the domain is read off the product g*h (x -> h[g[x]]), and phi_{g,h}(t) sends
x to g[t[h[x]]].  This is the only place the flip happens.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Optional, Sequence

import numpy as np

from .partial_map import PartialMap
from .partition import Partition, UnionFind, all_partitions, kernel
from .semigroup import FiniteSemigroup, SemigroupError, _trusted, is_commutative, is_group
from .tx import (
    NotInDomain,
    PartitionBijection,
    WElement,
    apply_w,
    components,
    fixed_points,
    in_d_set,
    tmul,
    w_compose_raw,
)


class GSetError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GSet:
    """A finite abelian group acting on range(x_size); action[k][x] = k.x."""

    group: FiniteSemigroup
    x_size: int
    action: tuple

    def __post_init__(self):
        G = self.group
        if not is_group(G):
            raise GSetError("acting semigroup is not a group")
        if not is_commutative(G):
            raise GSetError("only abelian groups are supported")
        act = tuple(tuple(int(y) for y in row) for row in self.action)
        if len(act) != G.n or any(len(r) != self.x_size for r in act):
            raise GSetError("action must be |G| rows of |X| entries")
        for k, row in enumerate(act):
            if sorted(row) != list(range(self.x_size)):
                raise GSetError(f"group element {k} does not act as a permutation")
        if act[G.identity] != tuple(range(self.x_size)):
            raise GSetError("identity does not act trivially")
        for k in range(G.n):
            for l in range(G.n):
                kl = G.mul(k, l)
                for x in range(self.x_size):
                    if act[kl][x] != act[k][act[l][x]]:
                        raise GSetError(f"(kl).x != k.(l.x) for k={k}, l={l}, x={x}")
        object.__setattr__(self, "action", act)

    def act(self, k: int, x: int) -> int:
        return self.action[k][x]

    def act_set(self, k: int, B) -> frozenset:
        return frozenset(self.action[k][x] for x in B)

    @cached_property
    def orbits(self) -> Partition:
        uf = UnionFind(self.x_size)
        for row in self.action:
            for x, y in enumerate(row):
                uf.union(x, y)
        return Partition.from_labels(uf.labels())

    @cached_property
    def point_stabilizers(self) -> tuple:
        return tuple(frozenset(k for k in range(self.group.n) if self.action[k][x] == x)
                     for x in range(self.x_size))

    def stab(self, x: int) -> frozenset:
        return self.point_stabilizers[x]

    def setwise_stabilizer(self, B) -> frozenset:
        B = frozenset(B)
        return frozenset(k for k in range(self.group.n) if self.act_set(k, B) == B)

    @cached_property
    def whole(self) -> frozenset:
        return frozenset(range(self.group.n))

    def is_equivariant(self, f: Sequence[int]) -> bool:
        return all(f[row[x]] == row[f[x]] for row in self.action for x in range(self.x_size))

    def is_invariant_partition(self, P: Partition) -> bool:
        return all(P.image(row) == P for row in self.action) if P.n else True

    def is_union_of_orbits(self, I) -> bool:
        I = set(I)
        return all(row[x] in I for row in self.action for x in I)

    def subgroup_generated(self, gens) -> frozenset:
        G = self.group
        out = {G.identity}
        frontier = list(out)
        gens = list(gens)
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = G.mul(a, g)
                    if b not in out:
                        out.add(b)
                        new.append(b)
            frontier = new
        return frozenset(out)


def coset_gset(group: FiniteSemigroup, subgroups) -> GSet:
    """Disjoint union of the coset spaces G/H, H in ``subgroups`` (element sets).

    Every finite abelian G-set arises this way up to isomorphism.
    """
    points = []
    for j, H in enumerate(subgroups):
        H = frozenset(H)
        seen = []
        for a in range(group.n):
            coset = frozenset(group.mul(a, x) for x in H)
            if coset not in seen:
                seen.append(coset)
        points.extend((j, c) for c in seen)
    pos = {c: i for i, c in enumerate(points)}
    action = tuple(tuple(pos[(j, frozenset(group.mul(k, x) for x in c))] for j, c in points)
                   for k in range(group.n))
    return GSet(group, len(points), action)


def trivial_gset(k: int) -> GSet:
    return GSet(_trusted(np.zeros((1, 1), dtype=np.int32)), k, (tuple(range(k)),))


def z2_example() -> GSet:
    """Z_2 on four points: the generator swaps 0 and 1 and fixes 2 and 3."""
    from .constructors import cyclic_group
    return GSet(cyclic_group(2), 4, ((0, 1, 2, 3), (1, 0, 2, 3)))


# End_G(X) ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class EndG:
    """End_G(X) as a list of image tuples (sorted by T(X) code) plus its semigroup."""

    gset: GSet
    maps: tuple
    semigroup: FiniteSemigroup

    @cached_property
    def index(self) -> dict:
        return {f: i for i, f in enumerate(self.maps)}

    def encode(self, f) -> int:
        return self.index[tuple(f)]

    def decode(self, i: int) -> tuple:
        return self.maps[i]

    @property
    def x_size(self) -> int:
        return self.gset.x_size

    def d_set(self, P: Partition, I) -> frozenset:
        """D_{P,I} inside End_G(X), as carrier indices."""
        return frozenset(i for i, t in enumerate(self.maps) if in_d_set(t, P, I))


def _code(f, k):
    return sum(y * k ** x for x, y in enumerate(f))


def end_g(gs: GSet) -> EndG:
    """All G-endomorphisms, built from orbit representatives with G_x <= G_f(x)."""
    k = gs.x_size
    reps = [b[0] for b in gs.orbits.blocks]
    choices = [[y for y in range(k) if gs.stab(x) <= gs.stab(y)] for x in reps]
    maps = set()
    for pick in product(*choices):
        f = [0] * k
        for x, y in zip(reps, pick):
            for row in gs.action:
                f[row[x]] = row[y]
        maps.add(tuple(f))
    maps = sorted(maps, key=lambda f: _code(f, k))
    pos = {f: i for i, f in enumerate(maps)}
    t = [[pos[tmul(f, g)] for g in maps] for f in maps]
    labels = tuple("".join(map(str, f)) for f in maps)
    return EndG(gs, tuple(maps), _trusted(np.array(t), labels))


def phi_right_to_left(E: EndG, g: int, h: int) -> PartialMap:
    """phi_{g,h}: t -> h o t o g evaluated literally with right-to-left composition."""
    def rl(f, g2):  # (f o g2)(x) = f(g2(x))
        return tuple(f[g2[x]] for x in range(len(g2)))

    G, H = E.decode(g), E.decode(h)
    p = rl(G, H)
    img = [-1] * len(E.maps)
    for i, t in enumerate(E.maps):
        if rl(p, t) == t and rl(t, p) == t:
            img[i] = E.encode(rl(rl(H, t), G))
    return PartialMap(len(E.maps), img)


# stabilizer machinery ------------------------------------------------------


@dataclass(frozen=True)
class StabilizerData:
    point: tuple          # G_x per point
    orbit: dict           # orbit (as tuple) -> G_O
    block: dict           # block -> G_B
    block_max: dict       # block -> G^B, or None for null blocks
    block_prime: dict     # block -> G'_B relative to I (only when I is given)


def max_stabilizer(gs: GSet, B) -> Optional[frozenset]:
    """G^B: a point stabilizer in B containing every other one, if it exists."""
    stabs = {gs.stab(x) for x in B}
    for s in stabs:
        if all(t <= s for t in stabs):
            return s
    return None


def prime_stabilizer(gs: GSet, GB: frozenset, I) -> frozenset:
    out = gs.whole
    for i in I:
        if GB <= gs.stab(i):
            out = out & gs.stab(i)
    return out


def stabilizers(gs: GSet, p: Optional[Partition] = None, i=None) -> StabilizerData:
    orbit = {b: gs.stab(b[0]) for b in gs.orbits.blocks}
    block, block_max, block_prime = {}, {}, {}
    if p is not None:
        for B in p.blocks:
            block[B] = gs.setwise_stabilizer(B)
            block_max[B] = max_stabilizer(gs, B)
            if i is not None:
                block_prime[B] = prime_stabilizer(gs, block[B], i)
    return StabilizerData(gs.point_stabilizers, orbit, block, block_max, block_prime)


def is_non_null(gs: GSet, P: Partition) -> bool:
    return all(max_stabilizer(gs, B) is not None for B in P.blocks)


def is_accessible(gs: GSet, P: Partition, I) -> bool:
    return all(any(gs.setwise_stabilizer(B) <= gs.stab(i) for i in I) for B in P.blocks)


def sink(gs: GSet, I) -> Optional[int]:
    full = [i for i in sorted(I) if gs.stab(i) == gs.whole]
    return full[0] if len(full) == 1 else None


def quotient_is_cyclic(gs: GSet, GB: frozenset, H: frozenset) -> bool:
    return any(gs.subgroup_generated(list(H) + [l]) == GB for l in sorted(GB))


# standard pairs ------------------------------------------------------------


@dataclass(frozen=True)
class StandardPair:
    p: Partition
    i: frozenset

    def is_degenerate(self) -> bool:
        return not self.i and len(self.p) == 1

    def __str__(self):
        return f"P = {self.p}; I = {{{', '.join(map(str, sorted(self.i)))}}}"


def degenerate_pair(k: int) -> StandardPair:
    return StandardPair(Partition.whole(k), frozenset())


def tau_conditions(gs: GSet, P: Partition, I) -> dict:
    """Conditions (1)-(4) on a descriptor plus the structural requirements."""
    I = frozenset(I)
    out = {
        "invariant": gs.is_invariant_partition(P),
        "orbit_union": gs.is_union_of_orbits(I),
        "non_null": is_non_null(gs, P),
        "section": P.is_partial_section(I),
    }
    c2 = True
    for i in I:
        Gi = gs.stab(i)
        if not all(gs.stab(x) <= Gi for x in P.block(i)):
            c2 = False
    out["stabilizer_bound"] = c2
    c3 = True
    for x in range(gs.x_size):
        Gx = gs.stab(x)
        if all(gs.stab(y) < Gx for y in P.block(x) if y != x) and x not in I:
            c3 = False
    out["forced_points"] = c3
    c4 = True
    for B in P.blocks:
        H = max_stabilizer(gs, B)
        if H is None or not quotient_is_cyclic(gs, gs.setwise_stabilizer(B), H):
            c4 = False
    out["cyclic"] = c4
    return out


def tau_descriptor(gs: GSet, g: Sequence[int], h: Sequence[int]) -> tuple:
    """Raw (P, I) of D_{g,h} and D_{h,g} from fixed points and components of g*h, h*g."""
    p, q = tmul(g, h), tmul(h, g)
    return (StandardPair(components(p), fixed_points(p)),
            StandardPair(components(q), fixed_points(q)))


def merge_classes(gs: GSet, P: Partition, I) -> Partition:
    """P / ~_P: merge B with l.B for l in G'_B, and all blocks that can only reach a sink."""
    I = frozenset(I)
    uf = UnionFind(gs.x_size)
    for B in P.blocks:
        for x in B[1:]:
            uf.union(B[0], x)
    GB = {B: gs.setwise_stabilizer(B) for B in P.blocks}
    for B in P.blocks:
        for l in sorted(prime_stabilizer(gs, GB[B], I)):
            uf.union(B[0], gs.act(l, B[0]))
    s = sink(gs, I)
    if s is not None:
        others = [gs.stab(i) for i in I if i != s]
        lonely = [B for B in P.blocks if not any(GB[B] <= Gi for Gi in others)]
        for B in lonely[1:]:
            uf.union(lonely[0][0], B[0])
    return Partition.from_labels(uf.labels())


def standardize(gs: GSet, p: Partition, i) -> StandardPair:
    """The bar operator: ({X}, {}) when I is not accessible, else (P/~_P, I)."""
    i = frozenset(i)
    if not is_accessible(gs, p, i):
        return degenerate_pair(gs.x_size)
    return StandardPair(merge_classes(gs, p, i), i)


def is_standard(gs: GSet, sp: StandardPair) -> bool:
    if sp.is_degenerate():
        return True
    c = tau_conditions(gs, sp.p, sp.i)
    ok = all(c[k] for k in ("invariant", "orbit_union", "non_null", "section",
                            "stabilizer_bound", "forced_points"))
    return ok and is_accessible(gs, sp.p, sp.i) and standardize(gs, sp.p, sp.i) == sp


def find_l_b(gs: GSet, B, I) -> Optional[int]:
    """First l in G_B (index order) with <l, G^B> <= G_i  =>  G_B <= G_i for all i in I."""
    GB = gs.setwise_stabilizer(B)
    H = max_stabilizer(gs, B)
    for l in sorted(GB):
        L = gs.subgroup_generated(list(H) + [l])
        if all(GB <= gs.stab(i) for i in I if L <= gs.stab(i)):
            return l
    return None


def is_valid_standard_pair(gs: GSet, sp: StandardPair) -> bool:
    if sp.is_degenerate():
        return sum(1 for s in gs.point_stabilizers if s == gs.whole) != 1
    return all(find_l_b(gs, B, sp.i) is not None for B in sp.p.blocks if not set(B) & sp.i)


def g_invariant_partitions(gs: GSet) -> list:
    return [P for P in all_partitions(gs.x_size) if gs.is_invariant_partition(P)]


def orbit_unions(gs: GSet) -> list:
    orbs = gs.orbits.blocks
    out = []
    for r in range(len(orbs) + 1):
        for combo in combinations(orbs, r):
            out.append(frozenset(x for o in combo for x in o))
    return out


def standard_pairs(gs: GSet) -> list:
    seen = {degenerate_pair(gs.x_size)}
    for P in g_invariant_partitions(gs):
        for I in orbit_unions(gs):
            sp = StandardPair(P, I)
            if sp not in seen and is_standard(gs, sp):
                seen.add(sp)
    return sorted(seen, key=lambda sp: (sorted(sp.i), sp.p.blocks))


def valid_standard_pairs(gs: GSet) -> list:
    return [sp for sp in standard_pairs(gs) if is_valid_standard_pair(gs, sp)]


# G-set W calculus ----------------------------------------------------------


def reachable_points(gs: GSet, P: Partition, I) -> frozenset:
    """Points of I that some block of P can be mapped onto: the union of images of D_{P,I}."""
    GB = [gs.setwise_stabilizer(B) for B in P.blocks]
    return frozenset(i for i in I if any(H <= gs.stab(i) for H in GB))


def gw_normalize(gs: GSet, w: WElement, trim: bool = True) -> WElement:
    """The bar operator on (alpha, beta): collapse when dom alpha is inaccessible,
    else induce beta on the merged partitions.

    With ``trim``, alpha is first cut down to the reachable part of its domain;
    without it, composites can keep points no transformation in the domain hits.
    """
    k = gs.x_size
    P, I = w.beta.dom, w.dom_alpha
    if not is_accessible(gs, P, I):
        return WElement.small(PartialMap.empty(k))
    alpha = w.alpha
    if trim:
        R = reachable_points(gs, P, I)
        if R != I:
            alpha = PartialMap.from_pairs(k, [(i, alpha(i)) for i in sorted(R)])
            I = R
    Q = merge_classes(gs, P, I)
    return WElement(alpha, _lift(w.beta, Q))


def _lift(beta: PartitionBijection, Q: Partition) -> PartitionBijection:
    from .tx import bar_lift
    return bar_lift(beta, Q)


def gw_compose(gs: GSet, w1: WElement, w2: WElement, trim: bool = True) -> WElement:
    return gw_normalize(gs, w_compose_raw(w1, w2), trim)


def gw_inverse(gs: GSet, w: WElement) -> WElement:
    return gw_normalize(gs, w.inverse())


def gw_translate(gs: GSet, w: WElement, k: int) -> WElement:
    """(k.alpha, k.beta).  Describes the same map as w, since every t in the
    domain commutes with k."""
    alpha = PartialMap.from_pairs(gs.x_size, [(i, gs.act(k, y)) for i, y in w.alpha.pairs])
    beta = PartitionBijection.from_block_map(
        w.beta.dom, w.beta.im,
        {B[0]: gs.act(k, w.beta.image_block(j)[0]) for j, B in enumerate(w.beta.dom.blocks)})
    return WElement(alpha, beta)


def gw_canonical(gs: GSet, w: WElement) -> WElement:
    """Representative with the smallest key among the G-translates of w."""
    return min((gw_translate(gs, w, k) for k in range(gs.group.n)), key=WElement.key)


@dataclass(frozen=True)
class TauGeneratorTuple:
    p: Partition
    p_prime: Partition
    i: frozenset
    i_prime: frozenset
    alpha: PartialMap
    beta: PartitionBijection

    def w(self) -> WElement:
        return WElement(self.alpha, self.beta)


def raw_pair_w(g: Sequence[int], h: Sequence[int]) -> WElement:
    """(g on I, [x]_P -> [g x]_P') before standardization."""
    p, q = tmul(g, h), tmul(h, g)
    I = fixed_points(p)
    P, Pp = components(p), components(q)
    k = len(g)
    alpha = PartialMap.from_pairs(k, [(i, g[i]) for i in sorted(I)])
    beta = PartitionBijection.from_block_map(P, Pp, {b[0]: g[b[0]] for b in P.blocks})
    return WElement(alpha, beta)


def tau_generator_tuple(gs: GSet, g: Sequence[int], h: Sequence[int]) -> TauGeneratorTuple:
    w = gw_normalize(gs, raw_pair_w(g, h))
    return TauGeneratorTuple(w.beta.dom, w.beta.im, w.dom_alpha, w.im_alpha, w.alpha, w.beta)


def tuple_properties(gs: GSet, tt: TauGeneratorTuple) -> dict:
    """G-compatibility of alpha and beta, and preservation of G_B and G^B."""
    out = {
        "alpha_equivariant": all(
            tt.alpha(gs.act(k, i)) == gs.act(k, tt.alpha(i))
            for k in range(gs.group.n) for i in tt.alpha.domain),
        "beta_equivariant": all(
            tt.beta.of_point(gs.act(k, B[0])) == tuple(sorted(gs.act_set(k, tt.beta.image_block(j))))
            for k in range(gs.group.n) for j, B in enumerate(tt.p.blocks)),
        "alpha_stabilizers": all(gs.stab(i) == gs.stab(tt.alpha(i)) for i in tt.alpha.domain),
    }
    same = True
    for j, B in enumerate(tt.p.blocks):
        C = tt.beta.image_block(j)
        if gs.setwise_stabilizer(B) != gs.setwise_stabilizer(C):
            same = False
        if max_stabilizer(gs, B) != max_stabilizer(gs, C):
            same = False
    out["beta_stabilizers"] = same
    return out


def orbit_signature(gs: GSet, I) -> Counter:
    """Number of orbits in I per point stabilizer."""
    return Counter(gs.stab(o[0]) for o in gs.orbits.blocks if o[0] in I)


def block_signature(gs: GSet, P: Partition) -> Counter:
    """Number of G-orbits of blocks per (G_B, G^B)."""
    seen, out = set(), Counter()
    for B in P.blocks:
        if B in seen:
            continue
        orbit = {tuple(sorted(gs.act_set(k, B))) for k in range(gs.group.n)}
        seen |= orbit
        out[(gs.setwise_stabilizer(B), max_stabilizer(gs, B))] += 1
    return out


def tuple_exists(gs: GSet, sp1: StandardPair, sp2: StandardPair) -> bool:
    """Existence criteria for alpha, beta between two valid standard pairs."""
    if sp1.is_degenerate() or sp2.is_degenerate():
        return sp1.is_degenerate() and sp2.is_degenerate()
    return (orbit_signature(gs, sp1.i) == orbit_signature(gs, sp2.i)
            and block_signature(gs, sp1.p) == block_signature(gs, sp2.p))


def apply_gw(E: EndG, w: WElement, t: Sequence[int]) -> tuple:
    return apply_w(w, t)


def gw_domain(E: EndG, w: WElement) -> frozenset:
    return E.d_set(w.beta.dom, w.dom_alpha)


def describes(E: EndG, w: WElement, f: PartialMap) -> bool:
    """Does w reproduce the concrete map f on End_G(X) (domain and values)?"""
    dom = gw_domain(E, w)
    if dom != frozenset(f.domain):
        return False
    return all(E.encode(apply_w(w, E.decode(x))) == f(x) for x in dom)
