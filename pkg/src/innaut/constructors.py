"""Example semigroups and families: named tables, groups, T(X), I_k, Rees matrix semigroups."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .inner import InnGenerator, domain_dgh
from .partial_map import PartialMap, compose, symmetric_inverse_monoid_maps
from .semigroup import (
    FiniteSemigroup,
    SemigroupError,
    _trusted,
    group_inverse,
    is_group,
    validate,
)

CLIFFORD_LABELS = ("e", "r1", "r2", "s1", "s2", "s3", "f", "c")
_CLIFFORD_ROWS = [
    "e   r1  r2  s1  s2  s3  e   s1",
    "r1  r2  e   s3  s1  s2  r1  s3",
    "r2  e   r1  s2  s3  s1  r2  s2",
    "s1  s2  s3  e   r1  r2  s1  e",
    "s2  s3  s1  r2  e   r1  s2  r2",
    "s3  s1  s2  r1  r2  e   s3  r1",
    "e   r1  r2  s1  s2  s3  f   c",
    "s1  s2  s3  e   r1  r2  c   f",
]

STRICT_LABELS = ("1", "2", "3", "4")
_STRICT_ROWS = [
    "1 1 4 4",
    "2 2 3 3",
    "3 3 2 2",
    "4 4 1 1",
]


def _from_labelled_rows(labels, rows) -> FiniteSemigroup:
    pos = {lab: i for i, lab in enumerate(labels)}
    return validate(len(labels), [[pos[x] for x in r.split()] for r in rows], labels)


def clifford8() -> FiniteSemigroup:
    """The 8-element Clifford monoid, a semilattice of the groups {e, r1, ..., s3} and {f, c}."""
    return _from_labelled_rows(CLIFFORD_LABELS, _CLIFFORD_ROWS)


def strict4() -> FiniteSemigroup:
    """A 4-element semigroup where conjugator reduction strictly enlarges phi."""
    return _from_labelled_rows(STRICT_LABELS, _STRICT_ROWS)


def left_zero(k: int) -> FiniteSemigroup:
    return _trusted(np.repeat(np.arange(k)[:, None], k, axis=1))


def right_zero(k: int) -> FiniteSemigroup:
    return _trusted(np.repeat(np.arange(k)[None, :], k, axis=0))


def cyclic_group(k: int) -> FiniteSemigroup:
    ar = np.arange(k)
    return _trusted((ar[:, None] + ar[None, :]) % k)


def trivial_semigroup() -> FiniteSemigroup:
    return _trusted(np.zeros((1, 1), dtype=np.int32))


def symmetric_group(k: int) -> FiniteSemigroup:
    """S_k acting on the right, elements in lexicographic order of image tuples."""
    perms = sorted(permutations(range(k)))
    pos = {p: i for i, p in enumerate(perms)}
    t = [[pos[tuple(q[p[x]] for x in range(k))] for q in perms] for p in perms]
    labels = tuple("".join(map(str, p)) for p in perms)
    return _trusted(np.array(t), labels)


def symmetric_inverse_monoid(k: int):
    """I_k on range(k); returns (semigroup, list of PartialMap per index)."""
    maps = symmetric_inverse_monoid_maps(k)
    pos = {f: i for i, f in enumerate(maps)}
    t = [[pos[compose(f, g)] for g in maps] for f in maps]
    return _trusted(np.array(t), tuple(str(f) for f in maps)), maps


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    n, m = S.n, T.n
    a = np.arange(n * m)
    i, j = a // m, a % m
    t = S.table[i[:, None], i[None, :]].astype(np.int64) * m + T.table[j[:, None], j[None, :]]
    return _trusted(t)


# full transformation monoid ---------------------------------------------

MAX_TX = 5


@dataclass(frozen=True)
class TransformationCodec:
    """Carrier index <-> image tuple, base-|X| little-endian: index = sum f[x] k^x."""

    x_size: int
    maps: tuple = field(repr=False)

    def decode(self, index: int) -> tuple:
        return self.maps[index]

    def encode(self, f: Sequence[int]) -> int:
        k = self.x_size
        return sum(int(y) * k ** x for x, y in enumerate(f))

    def __len__(self):
        return len(self.maps)


def encode_transformation(f: Sequence[int], k: int) -> int:
    return sum(int(y) * k ** x for x, y in enumerate(f))


def all_transformations(k: int) -> list:
    # little-endian: x = 0 varies fastest
    return [tuple(reversed(p)) for p in product(range(k), repeat=k)]


def full_transformation_monoid(x_size: int):
    """T(X) for |X| = x_size with left-to-right composition."""
    if x_size < 1:
        raise SemigroupError("x_size must be positive")
    if x_size > MAX_TX:
        raise SemigroupError(f"T({x_size}) has {x_size ** x_size} elements; cap is T({MAX_TX})")
    k = x_size
    maps = all_transformations(k)
    arr = np.array(maps, dtype=np.int64)          # arr[i, x] = image of x under map i
    powers = k ** np.arange(k)
    # product (f, g): x -> g[f[x]]
    comp = arr[:, None, :]                        # f images
    prod = arr[np.arange(len(maps))[None, :, None], comp]   # prod[f, g, x] = g[f[x]]
    t = (prod * powers).sum(axis=2)
    S = _trusted(t, tuple("".join(map(str, f)) for f in maps))
    return S, TransformationCodec(k, tuple(maps))


def units(S: FiniteSemigroup) -> list:
    if S.identity is None:
        return []
    e = S.identity
    return [x for x in range(S.n) if np.any(S.table[x] == e) and np.any(S.table[:, x] == e)]


# Rees matrix semigroups -------------------------------------------------


@dataclass(frozen=True, eq=False)
class ReesSpec:
    """M(group; I, Lambda; P) with sandwich[lam][i] in the group."""

    group: FiniteSemigroup
    i_size: int
    lambda_size: int
    sandwich: tuple

    def __post_init__(self):
        if not is_group(self.group):
            raise SemigroupError("Rees matrix construction needs a group")
        if self.i_size < 1 or self.lambda_size < 1:
            raise SemigroupError("index sets must be nonempty")
        sw = tuple(tuple(int(x) for x in row) for row in self.sandwich)
        if len(sw) != self.lambda_size or any(len(r) != self.i_size for r in sw):
            raise SemigroupError("sandwich matrix must be |Lambda| x |I|")
        if any(not 0 <= x < self.group.n for r in sw for x in r):
            raise SemigroupError("sandwich entry out of range")
        object.__setattr__(self, "sandwich", sw)

    @property
    def size(self) -> int:
        return self.i_size * self.group.n * self.lambda_size

    def encode(self, i: int, g: int, lam: int) -> int:
        return (i * self.group.n + g) * self.lambda_size + lam

    def decode(self, x: int) -> tuple:
        x, lam = divmod(x, self.lambda_size)
        i, g = divmod(x, self.group.n)
        return i, g, lam

    def p(self, lam: int, i: int) -> int:
        return self.sandwich[lam][i]

    def inv(self, g: int) -> int:
        return group_inverse(self.group, g)

    def mul(self, *gs: int) -> int:
        return self.group.product(*gs)


def rees_matrix(spec: ReesSpec) -> FiniteSemigroup:
    """(G,g,gamma)(H,h,eta) = (G, g p_{gamma,H} h, eta)."""
    N = spec.size
    t = np.empty((N, N), dtype=np.int64)
    for x in range(N):
        G, g, gam = spec.decode(x)
        for y in range(N):
            H, h, eta = spec.decode(y)
            t[x, y] = spec.encode(G, spec.mul(g, spec.p(gam, H), h), eta)
    labels = tuple(f"({i},{spec.group.label(g)},{lam})" for i, g, lam in map(spec.decode, range(N)))
    return validate(N, t.tolist(), labels)


def rees_domain_nonempty(spec: ReesSpec, a: tuple, b: tuple) -> bool:
    """D_{(G,g,gamma),(H,h,eta)} is nonempty iff h = (p_{eta,G} g p_{gamma,H})^-1."""
    G, g, gam = a
    H, h, eta = b
    return h == spec.inv(spec.mul(spec.p(eta, G), g, spec.p(gam, H)))


def rees_domain(spec: ReesSpec, a: tuple, b: tuple) -> tuple:
    """Predicted domain: {G} x group x {eta} when nonempty."""
    if not rees_domain_nonempty(spec, a, b):
        return ()
    G, _, _ = a
    _, _, eta = b
    return tuple(sorted(spec.encode(G, x, eta) for x in range(spec.group.n)))


def rees_generators(spec: ReesSpec) -> list:
    """Generators (G,a,eta) -> (H, (g p_{gamma,H})^-1 a (p_{eta,G} g), gamma) as InnGenerators."""
    out = []
    N = spec.size
    for g in range(spec.group.n):
        for G in range(spec.i_size):
            for H in range(spec.i_size):
                for gam in range(spec.lambda_size):
                    for eta in range(spec.lambda_size):
                        left = spec.inv(spec.mul(g, spec.p(gam, H)))
                        right = spec.mul(spec.p(eta, G), g)
                        img = [-1] * N
                        for a in range(spec.group.n):
                            img[spec.encode(G, a, eta)] = spec.encode(H, spec.mul(left, a, right), gam)
                        hh = spec.inv(spec.mul(spec.p(eta, G), g, spec.p(gam, H)))
                        x = spec.encode(G, g, gam)
                        y = spec.encode(H, hh, eta)
                        f = PartialMap(N, img)
                        out.append(InnGenerator(x, y, f, f.domain))
    return out


def z2_rees_example() -> ReesSpec:
    return ReesSpec(cyclic_group(2), 2, 2, ((0, 0), (0, 1)))


# catalog ---------------------------------------------------------------


def named_examples() -> dict:
    """Fixed catalog entries plus the parametrised builders."""
    return {
        "clifford8": clifford8,
        "strict4": strict4,
        "leftzero": left_zero,
        "rightzero": right_zero,
        "cyclic": cyclic_group,
        "S": symmetric_group,
        "T": lambda k: full_transformation_monoid(k)[0],
        "I": lambda k: symmetric_inverse_monoid(k)[0],
    }


def catalog_lookup(name: str) -> FiniteSemigroup:
    """Resolve ``clifford8``, ``strict4``, ``leftzero:k``, ``cyclic:k``, ``S:k``, ``T:k``, ``I:k``."""
    builders = named_examples()
    base, _, arg = name.partition(":")
    if base not in builders:
        raise KeyError(name)
    if base in ("clifford8", "strict4"):
        if arg:
            raise KeyError(name)
        return builders[base]()
    if not arg.isdigit() or int(arg) < 1:
        raise KeyError(name)
    return builders[base](int(arg))


def catalog_semigroups() -> dict:
    """Small catalog instances used by the property suites."""
    out = {
        "clifford8": clifford8(),
        "strict4": strict4(),
        "I:2": symmetric_inverse_monoid(2)[0],
        "T:2": full_transformation_monoid(2)[0],
        "S:3": symmetric_group(3),
        "rees:z2": rees_matrix(z2_rees_example()),
    }
    for k in (1, 2, 3, 4):
        out[f"leftzero:{k}"] = left_zero(k)
        out[f"cyclic:{k}"] = cyclic_group(k)
    out["rightzero:3"] = right_zero(3)
    return out

