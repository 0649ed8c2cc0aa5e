from innaut.constructors import cyclic_group, left_zero, symmetric_group, symmetric_inverse_monoid
from innaut.inner import (
    domain_dgh,
    inn,
    inn_generators,
    is_mutually_inverse,
    phi,
    phi_map,
    reduce_conjugators,
)
from innaut.partial_map import PartialMap, abstract_cayley, compose, invert, subset_of
from innaut.semigroup import adjoin_identity, find_isomorphism, group_inverse, restrict


def test_clifford_domain_and_phi(cliff):
    ix = cliff.index
    s3 = ix("s3")
    assert {cliff.label(x) for x in domain_dgh(cliff, s3, s3)} == {"e", "r1", "r2", "s1", "s2", "s3"}
    assert phi_map(cliff, s3, s3)(ix("s1")) == ix("s2")


def test_strict_example(strict):
    # labels 1..4 are indices 0..3
    assert domain_dgh(strict, 0, 2) == ()
    assert domain_dgh(strict, 0, 1) == (0, 3)
    assert reduce_conjugators(strict, 0, 2) == (0, 1)
    assert phi_map(strict, 0, 2).is_empty
    f = phi_map(strict, 0, 1)
    assert f == PartialMap.from_pairs(4, [(0, 1), (3, 2)])
    assert subset_of(phi_map(strict, 0, 2), f) and phi_map(strict, 0, 2) != f


def test_identity_generator(cliff):
    one = adjoin_identity(cliff).identity
    assert phi_map(cliff, one, one) == PartialMap.identity(cliff.n)


def test_render(cliff):
    g = phi(cliff, cliff.index("s3"), cliff.index("s3"))
    assert g.render(cliff).startswith("(s3,s3) : {e->e, r1->r2")


def test_inn_groups():
    Z2 = cyclic_group(2)
    assert inn(Z2) == {PartialMap.identity(2), PartialMap.empty(2)}
    S3 = symmetric_group(3)
    I = inn(S3)
    assert len(I) == 7
    autos = [f for f in I if not f.is_empty]
    T, _ = abstract_cayley(autos)
    assert find_isomorphism(T, S3) is not None
    # each automorphism is conjugation by some group element
    inv = lambda g: group_inverse(S3, g)
    conj = {PartialMap(6, [S3.product(inv(g), a, g) for a in range(6)]) for g in range(6)}
    assert set(autos) == conj


def test_inn_left_zero():
    for k in (2, 3):
        L = left_zero(k)
        I = inn(L)
        assert len(I) == k * k + 2
        points = {PartialMap.from_pairs(k, [(g, h)]) for g in range(k) for h in range(k)}
        assert I == points | {PartialMap.identity(k), PartialMap.empty(k)}


def test_inn_inverse_monoid_self_description():
    I2, maps = symmetric_inverse_monoid(2)
    T, _ = abstract_cayley(inn(I2))
    assert T.n == 7 and find_isomorphism(T, I2) is not None


def test_mutually_inverse_reduction_in_groups():
    S3 = symmetric_group(3)
    for g in range(6):
        h = group_inverse(S3, g)
        assert reduce_conjugators(S3, g, h) == (g, h)
        assert is_mutually_inverse(S3, g, h)


def test_generators_and_composition(cliff):
    gens = inn_generators(cliff)
    M = adjoin_identity(cliff)
    for f, prov in gens.items():
        for g, h in prov:
            assert invert(f) == phi_map(cliff, h, g)
    for (g1, h1) in [(3, 4), (5, 5), (7, 7)]:
        for (g2, h2) in [(1, 2), (6, 6), (3, 3)]:
            lhs = compose(phi_map(cliff, g1, h1), phi_map(cliff, g2, h2))
            assert subset_of(lhs, phi_map(cliff, M.mul(g1, g2), M.mul(h2, h1)))


def test_aut_comp_strict_on_z2():
    Z = cyclic_group(2)
    lhs = compose(phi_map(Z, 0, 1), phi_map(Z, 0, 1))
    assert lhs.is_empty and phi_map(Z, 0, 0) == PartialMap.identity(2)


def test_restricted_domain_is_subsemigroup(cliff):
    s3 = cliff.index("s3")
    R = restrict(cliff, domain_dgh(cliff, s3, s3))
    assert R.n == 6
