"""Structure of Inn(T(X)): domain descriptors, generator tuples and the W(X) calculus.

Transformations are image tuples; products are left to right, so
``(g*h)(x) = h[g[x]]`` and phi_{g,h}(t) = h*t*g sends x to g[t[h[x]]].
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import NamedTuple, Optional, Sequence

from .partial_map import PartialMap, compose, invert, symmetric_inverse_monoid_maps
from .partition import NotARefinement, Partition, UnionFind, all_partitions, kernel


class SmallDomain(ValueError):
    pass


class NotInDomain(ValueError):
    pass


def tmul(f: Sequence[int], g: Sequence[int]) -> tuple:
    """Left-to-right product: apply f, then g."""
    return tuple(g[y] for y in f)


def constant(i: int, k: int) -> tuple:
    return (i,) * k


def fixed_points(p: Sequence[int]) -> frozenset:
    return frozenset(x for x, y in enumerate(p) if x == y)


def components(p: Sequence[int]) -> Partition:
    """Weakly connected components of the function graph x -> p[x]."""
    uf = UnionFind(len(p))
    for x, y in enumerate(p):
        uf.union(x, y)
    return Partition.from_labels(uf.labels())


# partition bijections ----------------------------------------------------


@dataclass(frozen=True)
class PartitionBijection:
    """A bijection from the blocks of ``dom`` onto the blocks of ``im``.

    ``beta[j]`` is the index in ``im.blocks`` of the image of ``dom.blocks[j]``.
    """

    dom: Partition
    im: Partition
    beta: tuple

    def __post_init__(self):
        if len(self.dom) != len(self.im) or sorted(self.beta) != list(range(len(self.im))):
            raise ValueError("not a bijection between the partitions")

    @classmethod
    def identity(cls, P: Partition) -> "PartitionBijection":
        return cls(P, P, tuple(range(len(P))))

    @classmethod
    def from_block_map(cls, dom: Partition, im: Partition, mapping: dict) -> "PartitionBijection":
        """Build from a dict sending (any point of) a dom block to a point of its image block."""
        beta = tuple(im.block_index(mapping[b[0]]) for b in dom.blocks)
        return cls(dom, im, beta)

    def image_block(self, block_index: int) -> tuple:
        return self.im.blocks[self.beta[block_index]]

    def of_point(self, x: int) -> tuple:
        """Image block of the dom block containing x."""
        return self.im.blocks[self.beta[self.dom.block_index(x)]]

    def inverse(self) -> "PartitionBijection":
        inv = [0] * len(self.beta)
        for j, k in enumerate(self.beta):
            inv[k] = j
        return PartitionBijection(self.im, self.dom, tuple(inv))

    def compose(self, other: "PartitionBijection") -> "PartitionBijection":
        """self then other; requires self.im == other.dom."""
        if self.im != other.dom:
            raise ValueError("partitions do not match")
        return PartitionBijection(self.dom, other.im, tuple(other.beta[k] for k in self.beta))

    def key(self) -> tuple:
        return tuple((b, self.image_block(j)) for j, b in enumerate(self.dom.blocks))

    def __str__(self):
        return "[" + str(self.dom) + "]->[" + " | ".join(
            " ".join(map(str, self.image_block(j))) for j in range(len(self.dom))) + "]"


def partition_join(p1: Partition, p2: Partition) -> Partition:
    return p1.join(p2)


def bar_lift(beta: PartitionBijection, coarser: Partition) -> PartitionBijection:
    """Induced bijection on a partition coarser than beta.dom: union of images."""
    if not beta.dom.refines(coarser):
        raise NotARefinement(f"{beta.dom} does not refine {coarser}")
    blocks = []
    for C in coarser.blocks:
        members = {beta.dom.block_index(x) for x in C}
        blocks.append(sorted(y for j in members for y in beta.image_block(j)))
    im = Partition(coarser.n, blocks)
    return PartitionBijection(coarser, im, tuple(im.block_index(b[0]) for b in blocks))


# descriptors and generator tuples -------------------------------------------


class TxDescriptor(NamedTuple):
    p: Partition
    i: frozenset

    def __str__(self):
        return f"P = {self.p}; I = {{{', '.join(map(str, sorted(self.i)))}}}"


def descriptor(p: Sequence[int]) -> TxDescriptor:
    """(P, I) for D_{g,h} from the product p = g*h."""
    return TxDescriptor(components(p), fixed_points(p))


def descriptor_from_pair(g: Sequence[int], h: Sequence[int]) -> tuple:
    """Descriptors of D_{g,h} (from g*h) and D_{h,g} (from h*g)."""
    return descriptor(tmul(g, h)), descriptor(tmul(h, g))


def is_valid_descriptor(d: TxDescriptor) -> bool:
    return d.p.is_partial_section(d.i) and d.p.singleton_points <= d.i


def d_set(P: Partition, I, k: Optional[int] = None) -> frozenset:
    """D_{P,I}: all t with im t in I and P inside ker t, as image tuples."""
    I = sorted(I)
    out = set()
    for choice in product(I, repeat=len(P)):
        t = [0] * P.n
        for b, v in zip(P.blocks, choice):
            for x in b:
                t[x] = v
        out.add(tuple(t))
    return frozenset(out)


def in_d_set(t: Sequence[int], P: Partition, I) -> bool:
    if not set(t) <= set(I):
        return False
    return all(len({t[x] for x in b}) == 1 for b in P.blocks)


def recover_descriptor(D, k: int) -> TxDescriptor:
    """(P, I) read back from a set of transformations: I is the union of images,
    P the meet of all kernels (meaningful when |D| >= 2)."""
    I = frozenset(y for t in D for y in t)
    P = Partition.whole(k)
    for t in D:
        P = P.meet(kernel(t))
    return TxDescriptor(P, I)


@dataclass(frozen=True)
class GeneratorTuple:
    p: Partition
    p_prime: Partition
    i: frozenset
    i_prime: frozenset
    alpha: PartialMap
    beta: PartitionBijection

    def w(self) -> "WElement":
        return WElement(self.alpha, self.beta).normalized()


def generator_tuple(g: Sequence[int], h: Sequence[int]) -> GeneratorTuple:
    """(P, P', I, I', alpha, beta) of phi_{g,h}: alpha = g on I, beta: [x]_P -> [g x]_P'."""
    d, dp = descriptor_from_pair(g, h)
    if len(d.i) <= 1:
        raise SmallDomain(f"|I| = {len(d.i)}")
    k = len(g)
    alpha = PartialMap.from_pairs(k, [(i, g[i]) for i in sorted(d.i)])
    mapping = {}
    for b in d.p.blocks:
        targets = {dp.p.block_index(g[x]) for x in b}
        if len(targets) != 1:
            raise AssertionError(f"block {b} is split by g")
        mapping[b[0]] = g[b[0]]
    beta = PartitionBijection.from_block_map(d.p, dp.p, mapping)
    return GeneratorTuple(d.p, dp.p, d.i, dp.i, alpha, beta)


# W(X) --------------------------------------------------------------------


@dataclass(frozen=True)
class WElement:
    """A compatible pair (alpha, beta); normalized when |dom alpha| <= 1 forces beta = id on {X}."""

    alpha: PartialMap
    beta: PartitionBijection

    @property
    def k(self) -> int:
        return self.alpha.n

    @classmethod
    def small(cls, alpha: PartialMap) -> "WElement":
        return cls(alpha, PartitionBijection.identity(Partition.whole(alpha.n)))

    @classmethod
    def identity(cls, k: int) -> "WElement":
        return cls(PartialMap.identity(k), PartitionBijection.identity(Partition.singletons(k)))

    def normalized(self) -> "WElement":
        if len(self.alpha) <= 1:
            return WElement.small(self.alpha)
        return self

    def is_compatible(self) -> bool:
        return all(self.beta.of_point(i) == self.beta.im.block(self.alpha(i)) for i in self.alpha.domain)

    def key(self) -> tuple:
        return (self.alpha.img, self.beta.key())

    @property
    def dom_alpha(self) -> frozenset:
        return frozenset(self.alpha.domain)

    @property
    def im_alpha(self) -> frozenset:
        return frozenset(self.alpha.image)

    def __str__(self):
        return f"alpha: {self.alpha}; beta: {self.beta}"

    def inverse(self) -> "WElement":
        return WElement(invert(self.alpha), self.beta.inverse())


def w_compose_raw(w1: WElement, w2: WElement) -> WElement:
    """(alpha1 alpha2, lift(beta1) lift(beta2)) over the join im beta1 v dom beta2."""
    alpha = compose(w1.alpha, w2.alpha)
    J = w1.beta.im.join(w2.beta.dom)
    left = bar_lift(w1.beta.inverse(), J).inverse()   # dom: (J)beta1^-1 -> J
    right = bar_lift(w2.beta, J)                      # J -> (J)beta2
    return WElement(alpha, left.compose(right))


def w_compose(w1: WElement, w2: WElement) -> WElement:
    alpha = compose(w1.alpha, w2.alpha)
    if len(alpha) <= 1:
        return WElement.small(alpha)
    return w_compose_raw(w1, w2).normalized()


def apply_w(w: WElement, t: Sequence[int]) -> tuple:
    """x -> alpha(i) where i is the unique element of t(beta^-1([x]_P'))."""
    I = w.dom_alpha
    if not in_d_set(t, w.beta.dom, I):
        raise NotInDomain(f"{t} is not in D_(dom beta, dom alpha)")
    inv = w.beta.inverse()
    out = []
    for x in range(len(t)):
        B = inv.of_point(x)
        i = t[B[0]]
        out.append(w.alpha(i))
    return tuple(out)


def w_domain(w: WElement) -> frozenset:
    return d_set(w.beta.dom, w.dom_alpha)


def w_as_map(w: WElement) -> dict:
    """The concrete partial map on transformations described by w."""
    return {t: apply_w(w, t) for t in w_domain(w)}


def finite_membership(w: WElement, x_size: int) -> bool:
    """Is w in the image of Inn(T(X)) for finite X?"""
    d = len(w.alpha)
    if d <= 1:
        return not (x_size == 1 and d == 0)
    dom_a = w.dom_alpha
    P = w.beta.dom
    cond1 = len(dom_a) == x_size and len(P) == x_size
    cond2 = any(len(B) >= 2 and not set(B) <= dom_a for B in P.blocks)
    return cond1 or cond2


def enumerate_w(k: int) -> list:
    """Every normalized element of W(X) for |X| = k."""
    out = []
    parts = list(all_partitions(k))
    by_size = {}
    for P in parts:
        by_size.setdefault(len(P), []).append(P)
    for alpha in symmetric_inverse_monoid_maps(k):
        if len(alpha) <= 1:
            out.append(WElement.small(alpha))
            continue
        for P in parts:
            for Q in by_size[len(P)]:
                # alpha must induce a partial injection on blocks
                forced = {}
                ok = True
                for i in alpha.domain:
                    a, b = P.block_index(i), Q.block_index(alpha(i))
                    if forced.setdefault(a, b) != b:
                        ok = False
                        break
                if not ok or len(set(forced.values())) != len(forced):
                    continue
                free_src = [j for j in range(len(P)) if j not in forced]
                free_dst = [j for j in range(len(Q)) if j not in set(forced.values())]
                for perm in permutations(free_dst):
                    beta = dict(forced)
                    beta.update(zip(free_src, perm))
                    out.append(WElement(alpha, PartitionBijection(P, Q, tuple(beta[j] for j in range(len(P))))))
    return out


# concrete maps <-> W -------------------------------------------------------


def pair_w(g: Sequence[int], h: Sequence[int]) -> WElement:
    """Normalized W element of phi_{g,h}."""
    d, dp = descriptor_from_pair(g, h)
    k = len(g)
    if len(d.i) <= 1:
        return WElement.small(PartialMap.from_pairs(k, [(i, g[i]) for i in d.i]))
    return generator_tuple(g, h).w()


def extract_w(phi: PartialMap, codec) -> WElement:
    """Read the normalized (alpha, beta) off a concrete element of Inn(T(X)).

    ``phi`` acts on carrier indices of T(X); ``codec`` decodes them.
    """
    k = codec.x_size
    dom = [codec.decode(x) for x in phi.domain]
    if not dom:
        return WElement.small(PartialMap.empty(k))
    I = sorted({y for t in dom for y in t})
    pairs = []
    for i in I:
        img = codec.decode(phi(codec.encode(constant(i, k))))
        if len(set(img)) != 1:
            raise AssertionError("constant not sent to a constant")
        pairs.append((i, img[0]))
    alpha = PartialMap.from_pairs(k, pairs)
    if len(I) <= 1:
        return WElement.small(alpha)
    P = recover_descriptor(dom, k).p
    Pp = recover_descriptor([codec.decode(phi(x)) for x in phi.domain], k).p
    i, j = I[0], I[1]
    mapping = {}
    for B in P.blocks:
        tB = tuple(i if x in B else j for x in range(k))
        s = codec.decode(phi(codec.encode(tB)))
        target = tuple(x for x in range(k) if s[x] == alpha(i))
        if Pp.block(target[0]) != target:
            raise AssertionError("image of a block is not a block")
        mapping[B[0]] = target[0]
    return WElement(alpha, PartitionBijection.from_block_map(P, Pp, mapping))
