"""Finite semigroups given by a dense Cayley table.

Elements are the indices ``0..n-1``; ``table[a, b]`` is the product ``ab``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .partition import Partition


class SemigroupError(ValueError):
    pass


class NonAssociative(SemigroupError):
    def __init__(self, a, b, c):
        super().__init__(f"(ab)c != a(bc) for a={a}, b={b}, c={c}")
        self.witness = (a, b, c)


class OutOfRangeEntry(SemigroupError):
    def __init__(self, row, col, value=None):
        super().__init__(f"table entry at row {row}, column {col} is out of range: {value!r}")
        self.row = row
        self.col = col


class NotSquare(SemigroupError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """A validated finite semigroup.

    Build instances with :func:`validate`; the constructor does no checking.
    """

    n: int
    table: np.ndarray
    identity: Optional[int] = None
    element_labels: Optional[tuple] = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, *xs: int) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = int(self.table[acc, x])
        return acc

    def power(self, a: int, k: int) -> int:
        acc = a
        for _ in range(k - 1):
            acc = int(self.table[acc, a])
        return acc

    def label(self, x: int) -> str:
        if self.element_labels is not None and x < len(self.element_labels):
            return str(self.element_labels[x])
        return str(x)

    def index(self, label) -> int:
        """Index of an element given by label (or by index)."""
        if self.element_labels is not None and label in self.element_labels:
            return self.element_labels.index(label)
        if isinstance(label, (int, np.integer)) and 0 <= label < self.n:
            return int(label)
        if isinstance(label, str) and label.isdigit() and int(label) < self.n:
            return int(label)
        raise KeyError(label)

    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    def rows(self) -> list:
        return self.table.tolist()

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        return f"FiniteSemigroup(n={self.n}, identity={self.identity})"


def _find_identity(t: np.ndarray) -> Optional[int]:
    n = t.shape[0]
    ar = np.arange(n)
    for e in range(n):
        if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar):
            return e
    return None


def find_nonassociative(t: np.ndarray):
    """Return a witness triple ``(a, b, c)`` with ``(ab)c != a(bc)``, or None."""
    n = t.shape[0]
    # chunked over a to keep memory at O(n^2) per step
    for a in range(n):
        left = t[t[a]]                 # left[b, c] = (ab)c
        right = t[a][t]                # right[b, c] = a(bc)
        bad = np.argwhere(left != right)
        if len(bad):
            b, c = bad[0]
            return a, int(b), int(c)
    return None


def validate(n: int, table, element_labels: Optional[Sequence] = None) -> FiniteSemigroup:
    """Check ``table`` is an associative n x n table and wrap it."""
    rows = list(table)
    if n < 1:
        raise SemigroupError("carrier must be nonempty")
    if len(rows) != n:
        raise NotSquare(f"expected {n} rows, got {len(rows)}")
    for r, row in enumerate(rows):
        row = list(row)
        if len(row) != n:
            raise NotSquare(f"row {r} has {len(row)} entries, expected {n}")
        for c, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise OutOfRangeEntry(r, c, v)
    dtype = np.int32 if n > 32000 else np.int16
    t = np.array(rows, dtype=dtype).reshape(n, n)
    witness = find_nonassociative(t)
    if witness is not None:
        raise NonAssociative(*witness)
    t.setflags(write=False)
    labels = tuple(str(x) for x in element_labels) if element_labels is not None else None
    if labels is not None and len(labels) != n:
        raise SemigroupError(f"expected {n} labels, got {len(labels)}")
    return FiniteSemigroup(n, t, _find_identity(t), labels)


def _trusted(t: np.ndarray, labels=None) -> FiniteSemigroup:
    # for tables associative by construction
    t = np.ascontiguousarray(t, dtype=np.int32 if t.shape[0] > 32000 else np.int16)
    t.setflags(write=False)
    return FiniteSemigroup(t.shape[0], t, _find_identity(t), labels)


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S^1: S itself if it is a monoid, else S with a new identity at index n."""
    if S.identity is not None:
        return S
    cached = S._cache.get("monoid")
    if cached is not None:
        return cached
    n = S.n
    t = np.empty((n + 1, n + 1), dtype=np.int32)
    t[:n, :n] = S.table
    t[n, :] = np.arange(n + 1)
    t[:, n] = np.arange(n + 1)
    old = tuple(S.label(x) for x in range(n))
    labels = old + ("id" if "1" in old else "1",)
    M = _trusted(t, labels)
    S._cache["monoid"] = M
    return M


def monoid_identity(S: FiniteSemigroup) -> int:
    """Index of the identity of S^1 (n when it had to be adjoined)."""
    return S.identity if S.identity is not None else S.n


def idempotents(S: FiniteSemigroup) -> list:
    d = S.table[np.arange(S.n), np.arange(S.n)]
    return [int(x) for x in np.flatnonzero(d == np.arange(S.n))]


def is_idempotent(S: FiniteSemigroup, x: int) -> bool:
    return int(S.table[x, x]) == x


@dataclass(frozen=True)
class GreenData:
    L: Partition
    R: Partition
    H: Partition
    D: Partition
    J: Partition
    group_h_flags: tuple  # per H-block, in H.blocks order

    def group_h_class(self, x: int) -> bool:
        return self.group_h_flags[self.H.block_index(x)]


def _ideal_sets(S: FiniteSemigroup):
    M = adjoin_identity(S)
    n = S.n
    t = M.table
    # rows of M restricted to columns of S: x S^1 contains x itself
    right = np.zeros((n, n), dtype=bool)  # right[x, y]: y in x S^1
    left = np.zeros((n, n), dtype=bool)   # left[x, y]: y in S^1 x
    ar = np.arange(n)
    for x in range(n):
        right[x, t[x, :n]] = True
        left[x, t[:n, x]] = True
    right[ar, ar] = True
    left[ar, ar] = True
    # two-sided: S^1 x S^1 = union over y in x S^1 of S^1 y
    two = (right.astype(np.int32) @ left.astype(np.int32)) > 0
    return left, right, two


def _partition_by_rows(mat: np.ndarray) -> Partition:
    keys = {}
    labels = []
    for row in mat:
        k = row.tobytes()
        labels.append(keys.setdefault(k, len(keys)))
    return Partition.from_labels(labels)


def green(S: FiniteSemigroup) -> GreenData:
    cached = S._cache.get("green")
    if cached is not None:
        return cached
    left, right, two = _ideal_sets(S)
    L = _partition_by_rows(left)
    R = _partition_by_rows(right)
    H = L.meet(R)
    D = L.join(R)
    J = _partition_by_rows(two)
    flags = tuple(any(is_idempotent(S, x) for x in b) for b in H.blocks)
    g = GreenData(L, R, H, D, J, flags)
    S._cache["green"] = g
    return g


def natural_leq(S: FiniteSemigroup, a: int, b: int) -> bool:
    """a <= b in the natural partial order: sa = a = at and sb = a = bt."""
    t = adjoin_identity(S).table
    s_ok = np.any((t[:, a] == a) & (t[:, b] == a))
    t_ok = np.any((t[a, :] == a) & (t[b, :] == a))
    return bool(s_ok and t_ok)


def h_preorder_leq(S: FiniteSemigroup, a: int, b: int) -> bool:
    """a below b in the H-preorder: sb = a = bt for some s, t in S^1."""
    t = adjoin_identity(S).table
    return bool(np.any(t[:, b] == a) and np.any(t[b, :] == a))


class OmegaData(NamedTuple):
    omega: int
    omega_plus_one: int
    pseudo_inverse: int


def omega_data(S: FiniteSemigroup, a: int) -> OmegaData:
    """Idempotent power of a, a * a^omega, and the pseudo-inverse of a."""
    t = S.table
    x = a
    while int(t[x, x]) != x:
        x = int(t[x, a])
    e = x
    u = int(t[a, e])
    # u generates a cyclic group with identity e; inverse of u is u^(m-1)
    inv = e
    y = u
    while y != e:
        inv = y
        y = int(t[y, u])
    return OmegaData(e, u, inv)


def pseudo_inverse(S: FiniteSemigroup, a: int) -> int:
    return omega_data(S, a).pseudo_inverse


def omega(S: FiniteSemigroup, a: int) -> int:
    return omega_data(S, a).omega


def is_group(S: FiniteSemigroup) -> bool:
    if S.identity is None:
        return False
    return all(S.identity in S.table[x] for x in range(S.n))


def group_inverse(S: FiniteSemigroup, x: int) -> int:
    row = S.table[x]
    idx = np.flatnonzero(row == S.identity)
    if not len(idx):
        raise SemigroupError(f"{x} has no inverse")
    return int(idx[0])


def is_commutative(S: FiniteSemigroup) -> bool:
    return bool(np.array_equal(S.table, S.table.T))


def subsemigroup_closed(S: FiniteSemigroup, elements) -> bool:
    els = sorted(set(elements))
    if not els:
        return True
    sub = S.table[np.ix_(els, els)]
    return bool(np.isin(sub, els).all())


def restrict(S: FiniteSemigroup, elements) -> FiniteSemigroup:
    """The subsemigroup on ``elements`` (must be closed), reindexed in sorted order."""
    els = sorted(set(elements))
    pos = {x: i for i, x in enumerate(els)}
    t = [[pos[int(S.table[x, y])] for y in els] for x in els]
    labels = tuple(S.label(x) for x in els) if S.element_labels else None
    return validate(len(els), t, labels)


def find_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup):
    """Exhaustive bijection search; returns a list ``f`` with f[x] in T, or None."""
    if S.n != T.n:
        return None
    n = S.n

    def invariant(U):
        idem = [int(U.table[x, x]) == x for x in range(n)]
        sq = U.table[np.arange(n), np.arange(n)]
        sizes = [len(set(U.table[x].tolist())) for x in range(n)]
        csizes = [len(set(U.table[:, x].tolist())) for x in range(n)]
        return [(idem[x], idem[int(sq[x])], sizes[x], csizes[x]) for x in range(n)]

    inv_s, inv_t = invariant(S), invariant(T)
    if sorted(inv_s) != sorted(inv_t):
        return None
    ts, tt = S.table, T.table
    f = [-1] * n
    used = [False] * n

    def consistent(k):
        # check all products among assigned elements 0..k
        for x in range(k + 1):
            for y in (k,) if x < k else range(k + 1):
                for a, b in ((x, y), (y, x)):
                    p = int(ts[a, b])
                    if f[p] != -1 and f[p] != int(tt[f[a], f[b]]):
                        return False
        return True

    def rec(k):
        if k == n:
            return all(int(tt[f[a], f[b]]) == f[int(ts[a, b])] for a in range(n) for b in range(n))
        for y in range(n):
            if not used[y] and inv_s[k] == inv_t[y]:
                f[k] = y
                used[y] = True
                if consistent(k) and rec(k + 1):
                    return True
                used[y] = False
                f[k] = -1
        return False

    return list(f) if rec(0) else None
