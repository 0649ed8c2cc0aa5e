import pytest

from innaut import gset as G
from innaut import tx
from innaut.constructors import cyclic_group, direct_product, full_transformation_monoid
from innaut.inner import inn, inn_generators, phi_map
from innaut.partial_map import PartialMap
from innaut.partition import Partition
from innaut.verify import gset_embedding

ID4 = (0, 1, 2, 3)


@pytest.fixture(scope="module")
def z2():
    gs = G.z2_example()
    return gs, G.end_g(gs)


def test_end_g(z2):
    gs, E = z2
    assert len(E.maps) == 16
    assert all(gs.is_equivariant(f) for f in E.maps)
    triv = G.end_g(G.trivial_gset(3))
    assert sorted(triv.maps) == sorted(full_transformation_monoid(3)[1].maps)


def test_gset_validation():
    with pytest.raises(G.GSetError):
        G.GSet(cyclic_group(2), 2, ((0, 1), (0, 0)))


def test_stabilizers(z2):
    gs, _ = z2
    assert gs.stab(0) == {0}
    assert gs.stab(2) == gs.whole
    sd = G.stabilizers(gs, Partition.singletons(4), {2, 3})
    assert sd.block_prime[(0,)] == gs.whole


def test_tau_descriptor_examples(z2):
    gs, E = z2
    sp, _ = G.tau_descriptor(gs, ID4, ID4)
    assert sp.i == {0, 1, 2, 3} and sp.p == Partition.singletons(4)
    assert all(G.tau_conditions(gs, sp.p, sp.i).values())
    h = (0, 1, 2, 2)
    sp, _ = G.tau_descriptor(gs, ID4, h)
    assert sp.i == {0, 1, 2}
    assert sp.p == Partition(4, [[0], [1], [2, 3]])
    assert E.d_set(sp.p, sp.i) == frozenset(phi_map(E.semigroup, E.encode(ID4), E.encode(h)).domain)


def test_standardize_examples(z2):
    gs, E = z2
    P = Partition.singletons(4)
    I = frozenset({2, 3})
    st = G.standardize(gs, P, I)
    # {0} and swap.{0} = {1} merge: the swap lies in G'_{0}
    assert st.p == Partition(4, [[0, 1], [2], [3]])
    assert E.d_set(st.p, st.i) == E.d_set(P, I)
    assert G.standardize(gs, st.p, st.i) == st
    # I = {} is inaccessible
    assert G.standardize(gs, P, frozenset()) == G.degenerate_pair(4)


def test_valid_degenerate_pair():
    gs = G.z2_example()
    assert G.is_valid_standard_pair(gs, G.degenerate_pair(4))
    one_fixed = G.GSet(cyclic_group(2), 3, ((0, 1, 2), (1, 0, 2)))
    assert not G.is_valid_standard_pair(one_fixed, G.degenerate_pair(3))


def test_taudomains_bijection(z2):
    gs, E = z2
    S = E.semigroup
    domains = {frozenset(phi_map(S, g, h).domain) for g in range(S.n) for h in range(S.n)}
    valid = G.valid_standard_pairs(gs)
    assert len(valid) == 9 == len(domains)
    assert {E.d_set(sp.p, sp.i) for sp in valid} == domains


def test_identity_tuple(z2):
    gs, _ = z2
    tt = G.tau_generator_tuple(gs, ID4, ID4)
    assert tt.w().key() == tx.WElement.identity(4).key()
    w = tt.w()
    assert G.gw_compose(gs, tx.WElement.identity(4), w).key() == w.key()


def test_tuples_describe_every_phi(z2):
    gs, E = z2
    S = E.semigroup
    for g in range(S.n):
        for h in range(S.n):
            tt = G.tau_generator_tuple(gs, E.decode(g), E.decode(h))
            assert G.describes(E, tt.w(), phi_map(S, g, h))
            assert all(G.tuple_properties(gs, tt).values())


def test_flip_against_right_to_left(z2):
    _, E = z2
    S = E.semigroup
    for g in range(S.n):
        for h in range(S.n):
            assert phi_map(S, g, h) == G.phi_right_to_left(E, h, g)


def test_embedding_on_z2_example(z2):
    gs, E = z2
    r = gset_embedding(gs, E)
    assert r.ok
    assert r.info["inn_size"] == len(inn(E.semigroup)) == 23
    assert r.info["untranslated_mismatches"] == 0


def test_translation_non_uniqueness(z2):
    # (k.alpha, k.beta) describes the same map; for the Z_2 example phi_{s,s} = id
    # has alpha = s, so the literal assignment phi -> (alpha, beta) needs a representative
    gs, E = z2
    S = E.semigroup
    s = E.encode((1, 0, 2, 3))
    f = phi_map(S, s, s)
    assert f == PartialMap.identity(S.n)
    w = G.tau_generator_tuple(gs, E.decode(s), E.decode(s)).w()
    assert w.alpha(0) == 1
    assert w.key() != tx.WElement.identity(4).key()
    assert G.describes(E, w, f)
    assert G.gw_canonical(gs, w).key() == tx.WElement.identity(4).key()


def test_unreachable_points_need_trimming():
    # Z_2 on two free orbits and a fixed point; untrimmed composites keep points of I
    # that no transformation in the domain can reach
    gs = G.coset_gset(cyclic_group(2), [frozenset({0}), frozenset({0}), frozenset({0, 1})])
    E = G.end_g(gs)
    W = {}
    for f, prov in inn_generators(E.semigroup).items():
        g, h = prov[0]
        W[f] = G.tau_generator_tuple(gs, E.decode(g), E.decode(h)).w()
    seen = False
    for f1, w1 in W.items():
        for f2, w2 in W.items():
            u = G.gw_compose(gs, w1, w2, trim=False)
            if u.dom_alpha != G.reachable_points(gs, u.beta.dom, u.dom_alpha):
                seen = True
                t = G.gw_compose(gs, w1, w2)
                assert t.dom_alpha == G.reachable_points(gs, u.beta.dom, u.dom_alpha)
                assert G.gw_domain(E, t) == G.gw_domain(E, u)
    assert seen
    r = gset_embedding(gs, E)
    assert r.ok and r.info["untranslated_mismatches"] > 0


def test_per_orbit_twist_beyond_translation():
    # Klein four-group on three coset spaces: the identity map has generator tuples
    # that differ orbit by orbit, which no single translation relates
    K = direct_product(cyclic_group(2), cyclic_group(2))
    gs = G.coset_gset(K, [frozenset({0, 1}), frozenset({0, 2}), frozenset({0, 3})])
    E = G.end_g(gs)
    r = gset_embedding(gs, E)
    assert r.properties["generator_canonical_unique"].violations == 1
    assert r.properties["embedding_describes"].violations == 0
    assert r.properties["composite_describes"].violations == 0


def test_trivial_group_collapse():
    gs = G.trivial_gset(3)
    ws = tx.enumerate_w(3)[::37]
    for a in ws:
        for b in ws:
            assert G.gw_compose(gs, a, b).key() == tx.w_compose(a, b).key()
