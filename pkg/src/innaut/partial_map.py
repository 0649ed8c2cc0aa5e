"""Partial bijections of a finite set and inverse-monoid closure.

Composition is left to right: ``x(fg) = (xf)g``.
"""
from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from .semigroup import _trusted

DEFAULT_LIMIT = 1_000_000


class AmbientMismatch(ValueError):
    pass


class LimitExceeded(RuntimeError):
    def __init__(self, limit):
        super().__init__(f"closure exceeded {limit} elements")
        self.limit = limit


class NotClosed(ValueError):
    def __init__(self, f, g):
        super().__init__(f"composition of {f} and {g} is not in the set")
        self.witness = (f, g)


class PartialMap:
    """An injective partial map on ``range(n)``.

    Stored as an image tuple ``img`` with ``-1`` marking undefined points.
    """

    __slots__ = ("n", "img", "_hash")

    def __init__(self, n: int, img: Iterable[int]):
        img = tuple(int(y) for y in img)
        if len(img) != n:
            raise ValueError(f"image tuple has length {len(img)}, expected {n}")
        seen = set()
        for y in img:
            if y == -1:
                continue
            if not 0 <= y < n or y in seen:
                raise ValueError(f"not a partial bijection of range({n}): {img}")
            seen.add(y)
        self.n = n
        self.img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, n, img):
        obj = object.__new__(cls)
        obj.n = n
        obj.img = img
        obj._hash = hash(img)
        return obj

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "PartialMap":
        img = [-1] * n
        for x, y in (pairs.items() if isinstance(pairs, dict) else pairs):
            if img[x] != -1:
                raise ValueError(f"source {x} repeated")
            img[x] = y
        return cls(n, img)

    @classmethod
    def identity(cls, n: int, domain: Optional[Iterable[int]] = None) -> "PartialMap":
        if domain is None:
            return cls._raw(n, tuple(range(n)))
        img = [-1] * n
        for x in domain:
            img[x] = x
        return cls._raw(n, tuple(img))

    @classmethod
    def empty(cls, n: int) -> "PartialMap":
        return cls._raw(n, (-1,) * n)

    @property
    def pairs(self) -> tuple:
        return tuple((x, y) for x, y in enumerate(self.img) if y != -1)

    @property
    def domain(self) -> tuple:
        return tuple(x for x, y in enumerate(self.img) if y != -1)

    @property
    def image(self) -> tuple:
        return tuple(sorted(y for y in self.img if y != -1))

    def __call__(self, x: int) -> int:
        y = self.img[x]
        if y == -1:
            raise KeyError(x)
        return y

    def get(self, x, default=None):
        y = self.img[x]
        return default if y == -1 else y

    def __len__(self):
        return sum(1 for y in self.img if y != -1)

    @property
    def is_empty(self) -> bool:
        return all(y == -1 for y in self.img)

    def __eq__(self, other):
        return isinstance(other, PartialMap) and self.img == other.img

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.img < other.img

    def __repr__(self):
        return f"PartialMap({self})"

    def __str__(self):
        return "{" + ", ".join(f"{x}->{y}" for x, y in self.pairs) + "}"

    def render(self, label=str) -> str:
        return "{" + ", ".join(f"{label(x)}->{label(y)}" for x, y in self.pairs) + "}"

    def __mul__(self, other: "PartialMap") -> "PartialMap":
        return compose(self, other)


def compose(f: PartialMap, g: PartialMap) -> PartialMap:
    """Left-to-right composition: apply f, then g."""
    if f.n != g.n:
        raise AmbientMismatch(f"ambient sizes {f.n} and {g.n} differ")
    gg = g.img + (-1,)
    return PartialMap._raw(f.n, tuple(gg[y] for y in f.img))


def invert(f: PartialMap) -> PartialMap:
    img = [-1] * f.n
    for x, y in enumerate(f.img):
        if y != -1:
            img[y] = x
    return PartialMap._raw(f.n, tuple(img))


def subset_of(f: PartialMap, g: PartialMap) -> bool:
    if f.n != g.n:
        raise AmbientMismatch(f"ambient sizes {f.n} and {g.n} differ")
    return all(y == -1 or y == z for y, z in zip(f.img, g.img))


def closure(generators: Iterable[PartialMap], limit: Optional[int] = DEFAULT_LIMIT) -> frozenset:
    """Smallest set containing ``generators`` closed under compose and invert."""
    gens = list(dict.fromkeys(generators))
    if not gens:
        return frozenset()
    n = gens[0].n
    for f in gens:
        if f.n != n:
            raise AmbientMismatch("generators live on different sets")
    # words in generators and their inverses, built by right multiplication
    letters = list(dict.fromkeys(gens + [invert(f) for f in gens]))
    if n * len(letters) > 20_000:
        return _closure_np(n, letters, limit)
    letter_tables = [f.img + (-1,) for f in letters]
    seen = {f.img for f in letters}
    if limit is not None and len(seen) > limit:
        raise LimitExceeded(limit)
    frontier = list(seen)
    while frontier:
        new = []
        for fi in frontier:
            for gg in letter_tables:
                img = tuple(gg[y] for y in fi)
                if img not in seen:
                    seen.add(img)
                    new.append(img)
        if limit is not None and len(seen) > limit:
            raise LimitExceeded(limit)
        frontier = new
    return frozenset(PartialMap._raw(n, img) for img in seen)


def _closure_np(n, letters, limit, chunk_cells=8_000_000):
    """Same worklist as closure, vectorized: a whole frontier times a batch of letters at once.

    Maps are rows of an int16 array with -1 stored as n, so a letter table of
    length n + 1 sends undefined to undefined.  Rows are deduplicated by a pair of
    64-bit hashes before the exact byte-level check.
    """
    L = np.array([[n if y == -1 else y for y in f.img] + [n] for f in letters], dtype=np.int16)
    rng = np.random.default_rng(0)
    weights = rng.integers(1, 2**62, size=(n, 2), dtype=np.int64)

    def hashes(rows):
        h = rows.astype(np.int64) @ weights             # wraps mod 2^64
        return h.view(np.dtype((np.void, 16))).ravel()

    seen = {}
    seen_h = set()
    frontier = []
    for row in L[:, :n]:
        key = row.tobytes()
        if key not in seen:
            seen[key] = row
            frontier.append(row)
    if frontier:
        seen_h.update(h.tobytes() for h in hashes(np.stack(frontier)))
    while frontier:
        F = np.stack(frontier)
        step = max(1, chunk_cells // (len(F) * n))
        new = []
        for s in range(0, len(L), step):
            C = L[s:s + step][:, F].reshape(-1, n)         # C[l, f, x] = letter_l[f[x]]
            H = hashes(C)
            _, first = np.unique(H, return_index=True)
            for idx in first.tolist():
                hk = H[idx].tobytes()
                if hk in seen_h:
                    continue
                row = C[idx]
                key = row.tobytes()
                if key not in seen:
                    seen[key] = row
                    seen_h.add(hk)
                    new.append(row)
            if limit is not None and len(seen) > limit:
                raise LimitExceeded(limit)
        frontier = new
    out = []
    for row in seen.values():
        out.append(PartialMap._raw(n, tuple(-1 if y == n else int(y) for y in row)))
    return frozenset(out)


def sorted_maps(maps: Iterable[PartialMap]) -> list:
    return sorted(maps, key=lambda f: f.img)


def abstract_cayley(maps: Iterable[PartialMap]):
    """Cayley table of a compose-closed set of partial maps, indexed in sorted order."""
    els = sorted_maps(set(maps))
    pos = {f: i for i, f in enumerate(els)}
    m = len(els)
    t = np.empty((m, m), dtype=np.int32)
    for i, f in enumerate(els):
        for j, g in enumerate(els):
            h = compose(f, g)
            k = pos.get(h)
            if k is None:
                raise NotClosed(f, g)
            t[i, j] = k
    S = _trusted(t, tuple(str(f) for f in els))
    return S, els


def symmetric_inverse_monoid_maps(k: int) -> list:
    """All partial bijections of range(k), sorted."""
    out = []

    def rec(i, img, used):
        if i == k:
            out.append(PartialMap._raw(k, tuple(img)))
            return
        img.append(-1)
        rec(i + 1, img, used)
        img.pop()
        for y in range(k):
            if not used[y]:
                used[y] = True
                img.append(y)
                rec(i + 1, img, used)
                img.pop()
                used[y] = False

    rec(0, [], [False] * k)
    return sorted_maps(out)
