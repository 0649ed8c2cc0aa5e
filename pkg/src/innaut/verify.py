"""Property suites.  Each returns a ``SuiteResult``: per-property counts of checked
cases and violations, with the first few counterexamples kept for reports."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .conjugacy import conditions, conjugacy_classes, identity_class_formula, is_witness, k_pairs
from .constructors import (
    ReesSpec,
    full_transformation_monoid,
    rees_domain,
    rees_domain_nonempty,
    rees_generators,
    rees_matrix,
)
from .inner import domain_dgh, inn, inn_generators, is_mutually_inverse, phi_map, reduce_conjugators
from .partial_map import closure, compose, invert, subset_of
from .semigroup import (
    FiniteSemigroup,
    adjoin_identity,
    green,
    idempotents,
    omega_data,
)

MAX_EXAMPLES = 3

# the 16 equation sets implying (i)-(viii); item (5) read as {(i),(iv),(v)}
ALTERNATIVES = (
    (0, 2, 3), (1, 2, 3), (0, 2, 7), (1, 3, 6),
    (0, 3, 4), (1, 2, 5), (0, 4, 7), (1, 5, 6),
    (2, 3, 4), (2, 3, 5), (2, 3, 6), (2, 3, 7),
    (2, 5, 7), (3, 4, 6), (0, 1, 4, 6), (0, 1, 5, 7),
)
# (15) and (16) fail as printed (f, e, e, e in clifford8 satisfies (15) but not (iv));
# these readings pair (v) with (viii) and (vi) with (vii) and do hold
LITERAL_FALSE = {15: (0, 1, 4, 7), 16: (0, 1, 5, 6)}


@dataclass
class PropertyResult:
    checked: int = 0
    violations: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, example=None):
        self.checked += 1
        if not ok:
            self.violations += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(example)


@dataclass
class SuiteResult:
    name: str
    properties: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)
    seconds: float = 0.0

    def prop(self, key) -> PropertyResult:
        return self.properties.setdefault(key, PropertyResult())

    def check(self, key, ok, example=None):
        self.prop(key).record(bool(ok), example)

    def bulk(self, key, checked: int, bad: int, example=None):
        p = self.prop(key)
        p.checked += int(checked)
        p.violations += int(bad)
        if bad and len(p.examples) < MAX_EXAMPLES:
            p.examples.append(example)

    @property
    def ok(self) -> bool:
        return all(p.violations == 0 for p in self.properties.values())

    def merge(self, other: "SuiteResult"):
        for k, p in other.properties.items():
            q = self.prop(k)
            q.checked += p.checked
            q.violations += p.violations
            q.examples.extend(p.examples[:MAX_EXAMPLES - len(q.examples)])
        self.seconds += other.seconds

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "properties": {k: {"checked": p.checked, "violations": p.violations,
                               "examples": [repr(e) for e in p.examples]}
                           for k, p in sorted(self.properties.items())},
            "info": self.info,
        }


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _label(name, *xs):
    return (name,) + tuple(int(x) for x in xs)


# shared relation matrices ----------------------------------------------------


def h_preorder_matrix(S: FiniteSemigroup) -> np.ndarray:
    """M[a, b] true iff a is below b in the H-preorder (a in S^1 b and in b S^1)."""
    t = adjoin_identity(S).table
    n = S.n
    left = np.zeros((n, n), dtype=bool)   # left[a, b]: a in S^1 b
    right = np.zeros((n, n), dtype=bool)
    for b in range(n):
        left[t[:, b], b] = True
        right[t[b, :], b] = True
    return left & right


def natural_order_matrix(S: FiniteSemigroup) -> np.ndarray:
    t = adjoin_identity(S).table
    n = S.n
    ar = np.arange(n)
    col = t[:, :n]                                   # col[s, a] = s a
    row = t[:n, :].T                                  # row[s, a] = a s
    fix_l = col[:, :, None] == ar[None, :, None]      # s a = a
    hit_l = col[:, None, :] == ar[None, :, None]      # s b = a
    fix_r = row[:, :, None] == ar[None, :, None]
    hit_r = row[:, None, :] == ar[None, :, None]
    return np.any(fix_l & hit_l, axis=0) & np.any(fix_r & hit_r, axis=0)


def _relation(P) -> np.ndarray:
    lab = np.array(P.labels())
    return lab[:, None] == lab[None, :]


# core ---------------------------------------------------------------------


@_timed
def verify_core(S: FiniteSemigroup, name: str = "") -> SuiteResult:
    """Green's relations, omega powers, (uv)'u = u(vu)', natural order inside the H-preorder."""
    r = SuiteResult("core")
    gd = green(S)
    Lm, Rm = _relation(gd.L), _relation(gd.R)
    LR = (Lm.astype(np.int32) @ Rm.astype(np.int32)) > 0
    r.check("green_D_is_L_o_R", np.array_equal(LR, _relation(gd.D)), name)
    r.check("green_D_is_J", gd.D == gd.J, name)
    t = S.table
    for a in range(S.n):
        w = omega_data(S, a)
        ok = int(t[w.omega, w.omega]) == w.omega and gd.group_h_class(w.omega)
        ok = ok and gd.H.same_block(w.omega, w.omega_plus_one) and gd.H.same_block(w.omega, w.pseudo_inverse)
        ok = ok and int(t[w.omega_plus_one, w.pseudo_inverse]) == w.omega
        r.check("omega_group_element", ok, _label(name, a))
    pinv = [omega_data(S, a).pseudo_inverse for a in range(S.n)]
    uv, vu = t, t.T
    lhs = t[np.array(pinv)[uv], np.arange(S.n)[:, None]]     # (uv)' u
    rhs = t[np.arange(S.n)[:, None], np.array(pinv)[vu]]     # u (vu)'
    bad = np.argwhere(lhs != rhs)
    r.bulk("lemma_xyx", S.n * S.n, len(bad), _label(name, *bad[0]) if len(bad) else None)
    nat, hpre = natural_order_matrix(S), h_preorder_matrix(S)
    bad = np.argwhere(nat & ~hpre)
    r.bulk("natural_refines_h_preorder", S.n * S.n, len(bad), _label(name, *bad[0]) if len(bad) else None)
    both = hpre & hpre.T
    bad = np.argwhere(both & ~_relation(gd.H))
    r.bulk("h_preorder_antisymmetric_mod_H", S.n * S.n, len(bad), _label(name, *bad[0]) if len(bad) else None)
    return r


# conjugacy ---------------------------------------------------------


def condition_tensor(S: FiniteSemigroup) -> np.ndarray:
    """C[k, a, b, g, h] = truth of condition k for (a, b, g, h), over S x S x S^1 x S^1."""
    t = adjoin_identity(S).table.astype(np.int64)
    n, m = S.n, t.shape[0]
    a = np.arange(n)[:, None, None, None]
    b = np.arange(n)[None, :, None, None]
    g = np.arange(m)[None, None, :, None]
    h = np.arange(m)[None, None, None, :]
    gh, hg = t[g, h], t[h, g]
    shape = (n, n, m, m)
    return np.stack([
        np.broadcast_to(t[a, g] == t[g, b], shape),
        np.broadcast_to(t[b, h] == t[h, a], shape),
        np.broadcast_to(t[t[h, a], g] == b, shape),
        np.broadcast_to(t[t[g, b], h] == a, shape),
        np.broadcast_to(t[hg, b] == b, shape),
        np.broadcast_to(t[gh, a] == a, shape),
        np.broadcast_to(t[b, hg] == b, shape),
        np.broadcast_to(t[a, gh] == a, shape),
    ])


@_timed
def verify_conjugacy(S: FiniteSemigroup, name: str = "") -> SuiteResult:
    r = SuiteResult("conjugacy")
    M = adjoin_identity(S)
    t = M.table.astype(np.int64)
    n, m = S.n, M.n
    C = condition_tensor(S)
    allc = C.all(axis=0)
    refuted = {}
    for idx, eqs in enumerate(ALTERNATIVES, 1):
        hyp = C[list(eqs)].all(axis=0)
        bad = np.argwhere(hyp & ~allc)
        if idx in LITERAL_FALSE:
            if len(bad):
                refuted[idx] = [_label(name, *x) for x in bad[:MAX_EXAMPLES]]
            eqs = LITERAL_FALSE[idx]
            hyp = C[list(eqs)].all(axis=0)
            bad = np.argwhere(hyp & ~allc)
            r.bulk(f"alternatives_{idx:02d}_amended", int(hyp.sum()), len(bad),
                   _label(name, *bad[0]) if len(bad) else None)
            continue
        r.bulk(f"alternatives_{idx:02d}", int(hyp.sum()), len(bad),
               _label(name, *bad[0]) if len(bad) else None)
    if refuted:
        r.info["literal_alternatives_refuted"] = refuted
    K = C[:4].all(axis=0)                       # K[a, b, g, h]
    # symmetric witnesses: (a, b) via (g, h)  <=>  (b, a) via (h, g)
    sym = np.transpose(K, (1, 0, 3, 2))
    bad = np.argwhere(K != sym)
    r.bulk("witness_symmetry", K.size, len(bad), _label(name, *bad[0]) if len(bad) else None)
    tS = t[:n, :n]
    for g in range(m):
        for h in range(m):
            pairs = np.argwhere(K[:, :, g, h])
            if not len(pairs):
                continue
            A, B = pairs[:, 0], pairs[:, 1]
            prod_ok = K[tS[A[:, None], A[None, :]], tS[B[:, None], B[None, :]], g, h]
            r.bulk("subsemigroup_K", prod_ok.size, int((~prod_ok).sum()), _label(name, g, h))
            pa, pb = A.copy(), B.copy()
            for k in range(2, n + 1):
                pa, pb = tS[pa, A], tS[pb, B]
                ok = K[pa, pb, g, h]
                r.bulk("powers", len(ok), int((~ok).sum()), _label(name, g, h, k))
    conj = conjugacy_classes(S)
    gd = green(S)
    r.check("conjugacy_inside_D", conj.refines(gd.D), name)
    idem = set(idempotents(S))
    for e in idem:
        r.check("idempotent_class_idempotent", set(conj.block(e)) <= idem, _label(name, e))
    for e in idem:
        for f in idem:
            same = conj.same_block(e, f)
            r.check("idempotents_conj_iff_D", same == gd.D.same_block(e, f), _label(name, e, f))
            if same:
                Dcls = gd.D.block(e)
                found = False
                for g in Dcls:
                    for h in Dcls:
                        if K[e, f, g, h] and is_mutually_inverse(S, g, h):
                            found = True
                            break
                    if found:
                        break
                r.check("d_idem_mutually_inverse_witness", found, _label(name, e, f))
    Hm, Cm = _relation(gd.H).astype(np.int32), _relation(conj).astype(np.int32)
    r.check("h_commutes_with_conjugacy", np.array_equal((Hm @ Cm) > 0, (Cm @ Hm) > 0), name)
    if S.identity is not None:
        r.check("identity_class", frozenset(conj.block(S.identity)) == identity_class_formula(S), name)
    zeros = [z for z in range(n) if np.all(tS[z] == z) and np.all(tS[:, z] == z)]
    for z in zeros:
        r.check("zero_class_singleton", conj.block(z) == (z,), _label(name, z))
    # classes agree with the pairwise witness relation
    related = K.any(axis=(2, 3))
    r.check("classes_match_witnesses", np.array_equal(related, _relation(conj)), name)
    return r


# inner automorphisms -------------------------------------------------


@_timed
def verify_inner(S: FiniteSemigroup, name: str = "", quadruples: bool = True) -> SuiteResult:
    r = SuiteResult("inner")
    M = adjoin_identity(S)
    t = M.table.astype(np.int64)
    tS = t[:S.n, :S.n]
    n, m = S.n, M.n
    gd = green(S)
    Hlab = np.array(gd.H.labels())
    nat, hpre = natural_order_matrix(S), h_preorder_matrix(S)
    idem = set(idempotents(S))
    maps = {}
    for g in range(m):
        for h in range(m):
            dom = np.array(domain_dgh(S, g, h), dtype=np.int64)
            f = phi_map(S, g, h)
            maps[g, h] = f
            lab = _label(name, g, h)
            img = np.array([f(x) for x in dom], dtype=np.int64)
            # isomorphism onto D_{h,g}
            target = domain_dgh(S, h, g)
            r.check("phi_onto_reverse_domain", tuple(sorted(img.tolist())) == target, lab)
            r.check("phi_inverse_is_reverse_phi", invert(f) == phi_map(S, h, g), lab)
            if len(dom):
                mult = img[np.searchsorted(dom, tS[dom[:, None], dom[None, :]])] if np.isin(
                    tS[dom[:, None], dom[None, :]], dom).all() else None
                closed = mult is not None
                r.check("domain_subsemigroup", closed, lab)
                if closed:
                    ok = mult == tS[img[:, None], img[None, :]]
                    r.bulk("phi_multiplicative", ok.size, int((~ok).sum()), lab)
            inD = np.zeros(n, dtype=bool)
            inD[dom] = True
            # downward closed in both orders, union of H-classes
            below_h = hpre[:, dom].any(axis=1)
            r.check("domain_down_h_preorder", not (below_h & ~inD).any(), lab)
            below_n = nat[:, dom].any(axis=1)
            r.check("domain_down_natural_order", not (below_n & ~inD).any(), lab)
            r.check("domain_union_of_H", np.isin(Hlab, Hlab[dom]).sum() == len(dom), lab)
            for a in dom.tolist():
                b = f(a)
                Ha = gd.H.block(a)
                r.check("h_class_bijection",
                        sorted(f(x) for x in Ha) == list(gd.H.block(b)), _label(name, g, h, a))
                if gd.group_h_class(a):
                    e = next(x for x in Ha if x in idem)
                    r.check("group_h_class_identity", f(e) in idem, _label(name, g, h, a))
            gb, hb = reduce_conjugators(S, g, h)
            r.check("reduction_mutually_inverse", is_mutually_inverse(S, gb, hb), lab)
            r.check("reduction_enlarges_phi", subset_of(f, phi_map(S, gb, hb)), lab)
    if quadruples:
        for (g1, h1), f1 in maps.items():
            for (g2, h2), f2 in maps.items():
                ok = subset_of(compose(f1, f2), maps[int(t[g1, g2]), int(t[h2, h1])])
                r.check("aut_comp_inclusion", ok, _label(name, g1, h1, g2, h2))
    # mutually inverse witnesses for every conjugate pair
    conj = conjugacy_classes(S)
    from .conjugacy import conjugators
    for blk in conj.blocks:
        for a in blk:
            for b in blk:
                w = conjugators(S, a, b)
                gb, hb = reduce_conjugators(S, w.g, w.h)
                ok = is_witness(S, a, b, gb, hb) and is_mutually_inverse(S, gb, hb)
                r.check("mutually_inverse_conjugators", ok, _label(name, a, b))
    return r


def aut_comp_strict_on_z2() -> bool:
    from .constructors import cyclic_group
    Z = cyclic_group(2)
    lhs = compose(phi_map(Z, 0, 1), phi_map(Z, 0, 1))
    rhs = phi_map(Z, 0, 0)
    return subset_of(lhs, rhs) and lhs != rhs


# Rees matrix semigroups ----------------------------------------------


@_timed
def verify_rees(spec: ReesSpec) -> SuiteResult:
    r = SuiteResult("rees")
    S = rees_matrix(spec)
    r.check("single_D_class", len(green(S).D) == 1)
    for x in range(S.n):
        for y in range(S.n):
            a, b = spec.decode(x), spec.decode(y)
            dom = domain_dgh(S, x, y)
            pred = rees_domain_nonempty(spec, a, b)
            r.check("domain_nonempty_formula", pred == bool(dom), (x, y))
            if pred:
                r.check("domain_shape", rees_domain(spec, a, b) == dom, (x, y))
    gens = rees_generators(spec)
    for gen in gens:
        r.check("generator_matches_phi", gen.map == phi_map(S, gen.g, gen.h), (gen.g, gen.h))
    from .partial_map import PartialMap
    ident = PartialMap.identity(S.n)
    predicted = closure([g.map for g in gens] + [ident])
    actual = inn(S)
    r.check("closure_matches_inn", predicted == actual)
    r.info = {"order": S.n, "generators": len({g.map for g in gens}), "inn_size": len(actual)}
    return r


# T(X) ------------------------------------------------------------


@_timed
def verify_tx(n: int, full: bool = False, closure_checks: bool = True) -> SuiteResult:
    """Descriptors, generator tuples, the W(X) embedding and finite membership for T(n).

    With ``closure_checks`` the brute-force Inn(T(n)) is built (n <= 3 by default,
    n = 4 only with ``full``); otherwise only generator-level checks run.
    """
    from . import tx

    r = SuiteResult("tx")
    S, codec = full_transformation_monoid(n)
    ident = tuple(range(n))
    one = adjoin_identity(S).identity

    def dec(i):
        return ident if i == S.n else codec.decode(i)

    gens = inn_generators(S)
    for f, prov in gens.items():
        g, h = prov[0]
        G, H = dec(g), dec(h)
        d, dp = tx.descriptor_from_pair(G, H)
        lab = (G, H)
        r.check("descriptor_valid", tx.is_valid_descriptor(d) and tx.is_valid_descriptor(dp), lab)
        dom = {codec.encode(x) for x in tx.d_set(d.p, d.i)}
        r.check("descriptor_domain", dom == set(f.domain), lab)
        if len(f.domain) >= 2:
            rec = tx.recover_descriptor([codec.decode(x) for x in f.domain], n)
            r.check("descriptor_recovered", rec == d, lab)
        w = tx.pair_w(G, H)
        for x in f.domain:
            i = codec.decode(x)
            if len(set(i)) == 1:
                img = codec.decode(f(x))
                r.check("constants_to_constants", img == tx.constant(w.alpha(i[0]), n), lab)
        r.check("generator_action", all(codec.encode(tx.apply_w(w, codec.decode(x))) == f(x)
                                        for x in f.domain), lab)
        r.check("generator_w_extracted", tx.extract_w(f, codec).key() == w.key(), lab)
        if len(d.i) >= 2:
            gt = tx.generator_tuple(G, H)
            ok = (len(gt.p) == len(gt.p_prime) and len(gt.i) == len(gt.i_prime)
                  and WElement_ok(gt.w()))
            r.check("generator_tuple_invariants", ok, lab)
        for g2, h2 in prov[1:]:
            r.check("generator_w_provenance_independent",
                    tx.pair_w(dec(g2), dec(h2)).key() == w.key(), (dec(g2), dec(h2)))
    # generator-level composition
    glist = list(gens)
    gw = [tx.extract_w(f, codec) for f in glist]
    cache = {}

    def wof(f):
        w = cache.get(f)
        if w is None:
            w = cache[f] = tx.extract_w(f, codec)
        return w

    for i, j, f12 in pairwise_products(glist):
        ok = tx.w_compose(gw[i], gw[j]).key() == wof(f12).key()
        r.check("generator_compose_homomorphism", ok, (i, j))
    r.info["generators"] = len(glist)
    keys = [w.key() for w in gw]
    r.check("generator_embedding_injective", len(set(keys)) == len(keys))
    if closure_checks and (n <= 3 or full):
        I = sorted(inn(S), key=lambda f: f.img)
        ws = [wof(f) for f in I]
        keys = {w.key() for w in ws}
        r.check("embedding_injective", len(keys) == len(ws))
        for f, w in zip(I, ws):
            r.check("embedding_describes", tx.w_domain(w) == {codec.decode(x) for x in f.domain}
                    and all(codec.encode(tx.apply_w(w, codec.decode(x))) == f(x) for x in f.domain), f)
        # every element is a product of generators, so closure x generators suffices for n >= 4
        right, wr = (I, ws) if n <= 3 else (glist, gw)
        for i, j, f12 in pairwise_products(I, right):
            r.check("embedding_homomorphism", tx.w_compose(ws[i], wr[j]).key() == wof(f12).key(), (i, j))
        members = {w.key() for w in tx.enumerate_w(n) if tx.finite_membership(w, n)}
        r.check("finite_membership_exact", members == keys)
        r.info.update({"inn_size": len(I), "members": len(members)})
    return r


def pairwise_products(maps, right=None):
    """Yield (i, j, compose(maps[i], right[j])) for all index pairs, batched per row."""
    from .partial_map import PartialMap

    right = maps if right is None else right
    if not maps or not right:
        return
    n = maps[0].n

    def table(fs):
        return np.array([[n if y == -1 else y for y in f.img] + [n] for f in fs], dtype=np.int32)

    A, B = table(maps), table(right)
    known = {}
    for i in range(len(maps)):
        C = B[:, A[i, :n]]                      # row j: x -> g_j(f_i(x))
        for j, row in enumerate(C):
            key = row.tobytes()
            f = known.get(key)
            if f is None:
                f = known[key] = PartialMap._raw(n, tuple(-1 if y == n else int(y) for y in row))
            yield i, j, f


def WElement_ok(w) -> bool:
    return w.is_compatible() and len(w.beta.dom) == len(w.beta.im)


# G-sets ---------------------------------------------------------------


@_timed
def verify_gset(gs, closure_checks: bool = True) -> SuiteResult:
    from . import gset as G

    r = SuiteResult("gset")
    E = G.end_g(gs)
    S = E.semigroup
    r.check("end_g_equivariant", all(gs.is_equivariant(f) for f in E.maps))
    r.info["end_g"] = len(E.maps)
    domains = {}
    for g in range(S.n):
        for h in range(S.n):
            Gm, Hm = E.decode(g), E.decode(h)
            lab = (Gm, Hm)
            d1, d2 = G.tau_descriptor(gs, Gm, Hm)
            cond = G.tau_conditions(gs, d1.p, d1.i)
            for k, v in cond.items():
                r.check(f"descriptor_{k}", v, lab)
            f = phi_map(S, g, h)
            r.check("flip_matches_right_to_left", f == G.phi_right_to_left(E, h, g), lab)
            r.check("descriptor_domain", E.d_set(d1.p, d1.i) == frozenset(f.domain), lab)
            sp = G.standardize(gs, d1.p, d1.i)
            r.check("standardize_idempotent", G.standardize(gs, sp.p, sp.i) == sp, lab)
            r.check("standardize_preserves_domain", E.d_set(sp.p, sp.i) == frozenset(f.domain), lab)
            r.check("standard_pair_valid", G.is_standard(gs, sp) and G.is_valid_standard_pair(gs, sp), lab)
            domains.setdefault(frozenset(f.domain), set()).add(sp)
            tt = G.tau_generator_tuple(gs, Gm, Hm)
            for k, v in G.tuple_properties(gs, tt).items():
                r.check(f"tuple_{k}", v, lab)
            r.check("tuple_describes_phi", G.describes(E, tt.w(), f), lab)
            sp2 = G.standardize(gs, d2.p, d2.i)
            r.check("tuple_existence_criteria", G.tuple_exists(gs, sp, sp2), lab)
    valid = G.valid_standard_pairs(gs)
    vd = {}
    for sp in valid:
        vd.setdefault(E.d_set(sp.p, sp.i), []).append(sp)
    r.check("taudomains_injective", all(len(v) == 1 for v in vd.values()))
    r.check("taudomains_surjective", set(vd) == set(domains))
    r.check("domains_single_standard_pair", all(len(v) == 1 for v in domains.values()))
    r.info.update({"standard_pairs": len(G.standard_pairs(gs)), "valid_standard_pairs": len(valid),
                   "domains": len(domains)})
    if closure_checks:
        emb = gset_embedding(gs, E)
        r.merge(emb)
        r.info.update(emb.info)
    return r


def gset_embedding(gs, E=None, keep: bool = False) -> SuiteResult:
    """Track canonical G-set W elements through the closure of the generators."""
    from . import gset as G

    r = SuiteResult("gset_embedding")
    E = E or G.end_g(gs)
    S = E.semigroup
    W = {}
    ambiguous = 0
    for f, prov in inn_generators(S).items():
        tuples = [G.tau_generator_tuple(gs, E.decode(g), E.decode(h)).w() for g, h in prov]
        canon = {G.gw_canonical(gs, w).key() for w in tuples}
        if len({w.key() for w in tuples}) > 1:
            ambiguous += 1
        r.check("generator_canonical_unique", len(canon) == 1, f)
        W[f] = G.gw_canonical(gs, tuples[0])
    letters = list(W.items()) + [(invert(f), G.gw_canonical(gs, G.gw_inverse(gs, w))) for f, w in W.items()]
    for f, w in letters:
        W.setdefault(f, w)
    frontier = list(W)
    while frontier:
        new = []
        for f in frontier:
            for g, wg in letters:
                fg = compose(f, g)
                if fg not in W:
                    W[fg] = G.gw_canonical(gs, G.gw_compose(gs, W[f], wg))
                    new.append(fg)
        frontier = new
    r.check("closure_matches_inn", set(W) == set(inn(S)))
    r.check("embedding_injective", len({w.key() for w in W.values()}) == len(W))
    for f, w in W.items():
        r.check("embedding_describes", G.describes(E, w, f), f)
    raw = 0
    for f1, w1 in W.items():
        for f2, w2 in W.items():
            c = G.gw_compose(gs, w1, w2)
            f12 = compose(f1, f2)
            r.check("composite_describes", G.describes(E, c, f12), (f1, f2))
            # composites agree with the tracked element up to a G-translation
            raw += c.key() != W[f12].key()
            r.check("embedding_homomorphism", G.gw_canonical(gs, c).key() == W[f12].key(), (f1, f2))
    r.info = {"inn_size": len(W), "generators_with_several_tuples": ambiguous,
              "untranslated_mismatches": raw}
    if keep:
        r.info["elements"] = list(W.values())
    return r


def verify_corpus(semigroups: dict, suites=("core", "conjugacy", "inner")) -> SuiteResult:
    total = SuiteResult("corpus")
    fns = {"core": verify_core, "conjugacy": verify_conjugacy, "inner": verify_inner}
    refuted = {}
    for name, S in semigroups.items():
        for s in suites:
            res = fns[s](S, name)
            total.merge(res)
            for k, v in res.info.get("literal_alternatives_refuted", {}).items():
                refuted.setdefault(k, []).extend(v)
    total.info["semigroups"] = len(semigroups)
    if refuted:
        total.info["literal_alternatives_refuted"] = {
            k: {"semigroups": len({e[0] for e in v}), "examples": [repr(e) for e in v[:MAX_EXAMPLES]]}
            for k, v in sorted(refuted.items())}
    return total


@_timed
def verify_trivial_collapse(n: int) -> SuiteResult:
    """With G trivial every G-set construction must reduce to its T(X) counterpart."""
    from . import gset as G
    from . import tx

    r = SuiteResult("trivial_collapse")
    gs = G.trivial_gset(n)
    E = G.end_g(gs)
    S, codec = full_transformation_monoid(n)
    r.check("end_g_is_tx", sorted(E.maps) == sorted(codec.decode(i) for i in range(S.n)))
    valid_tx = set()
    for g in E.maps:
        for h in E.maps:
            d, _ = tx.descriptor_from_pair(g, h)
            sp, _ = G.tau_descriptor(gs, g, h)
            r.check("descriptor_agrees", (sp.p, sp.i) == (d.p, d.i), (g, h))
            st = G.standardize(gs, sp.p, sp.i)
            if len(d.i) >= 2:
                r.check("standardize_is_identity", st == sp, (g, h))
                valid_tx.add((d.p, d.i))
            r.check("tuple_agrees", G.tau_generator_tuple(gs, g, h).w().key() == tx.pair_w(g, h).key(), (g, h))
    big = {(sp.p, sp.i) for sp in G.valid_standard_pairs(gs) if len(sp.i) >= 2}
    r.check("valid_pairs_are_descriptors", big == valid_tx)
    pool = tx.enumerate_w(n) if n <= 2 else [tx.pair_w(g, h) for g in E.maps for h in E.maps]
    ws = list({w.key(): w for w in pool}.values())
    for w1 in ws:
        for w2 in ws:
            r.check("compose_agrees", G.gw_compose(gs, w1, w2).key() == tx.w_compose(w1, w2).key())
    emb = gset_embedding(gs, E, keep=True)
    r.merge(emb)
    # same maps, same W elements, once both sides are read as maps on transformations
    tracked = {w.key() for w in emb.info.pop("elements")}
    ours = {tx.extract_w(f, codec).key() for f in inn(S)}
    r.check("embedding_agrees", tracked == ours)
    r.info = {"inn_size": len(ours)}
    return r
