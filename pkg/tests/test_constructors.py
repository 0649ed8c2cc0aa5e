import pytest

from innaut.constructors import (
    MAX_TX,
    ReesSpec,
    catalog_lookup,
    clifford8,
    cyclic_group,
    full_transformation_monoid,
    left_zero,
    rees_domain,
    rees_domain_nonempty,
    rees_generators,
    rees_matrix,
    strict4,
    trivial_semigroup,
    units,
    z2_rees_example,
)
from innaut.inner import domain_dgh, inn, phi_map
from innaut.partial_map import PartialMap, closure
from innaut.semigroup import SemigroupError, find_isomorphism, green


def test_printed_tables():
    C = clifford8()
    assert C.label(C.mul(C.index("c"), C.index("c"))) == "f"
    S = strict4()
    assert S.label(S.mul(S.index("3"), S.index("3"))) == "2"


def test_left_zero_table():
    L = left_zero(3)
    assert all(L.mul(a, b) == a for a in range(3) for b in range(3))


def test_transformation_monoids():
    assert full_transformation_monoid(1)[0].n == 1
    T2, codec = full_transformation_monoid(2)
    assert sorted(codec.maps) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    T3, codec = full_transformation_monoid(3)
    assert T3.n == 27 and T3.identity == codec.encode((0, 1, 2))
    assert len(units(T3)) == 6
    # left-to-right: (f g)(x) = g(f(x))
    f, g = (1, 1, 2), (2, 0, 0)
    assert codec.decode(T3.mul(codec.encode(f), codec.encode(g))) == (0, 0, 0)
    with pytest.raises(SemigroupError):
        full_transformation_monoid(MAX_TX + 1)


def test_rees_basics():
    band = rees_matrix(ReesSpec(trivial_semigroup(), 2, 2, ((0, 0), (0, 0))))
    assert band.n == 4 and all(band.mul(x, x) == x for x in range(4))
    Z3 = cyclic_group(3)
    copy = rees_matrix(ReesSpec(Z3, 1, 1, ((0,),)))
    assert find_isomorphism(copy, Z3) is not None
    S = rees_matrix(z2_rees_example())
    assert S.n == 8 and len(green(S).D) == 1
    with pytest.raises(SemigroupError):
        ReesSpec(left_zero(2), 1, 1, ((0,),))


def test_rees_domains():
    spec = z2_rees_example()
    S = rees_matrix(spec)
    for x in range(S.n):
        for y in range(S.n):
            a, b = spec.decode(x), spec.decode(y)
            dom = domain_dgh(S, x, y)
            assert rees_domain_nonempty(spec, a, b) == bool(dom)
            if dom:
                assert rees_domain(spec, a, b) == dom


def test_rees_trivial_group_always_nonempty():
    spec = ReesSpec(trivial_semigroup(), 2, 3, ((0, 0), (0, 0), (0, 0)))
    S = rees_matrix(spec)
    assert all(rees_domain_nonempty(spec, spec.decode(x), spec.decode(y))
               for x in range(S.n) for y in range(S.n))


def test_rees_generators():
    spec = z2_rees_example()
    S = rees_matrix(spec)
    gens = rees_generators(spec)
    for g in gens:
        assert g.map == phi_map(S, g.g, g.h)
    # the identity phi_{1,1} of S^1 is not of the triple form and must be added
    maps = [g.map for g in gens]
    assert closure(maps + [PartialMap.identity(S.n)]) == inn(S)
    single = rees_generators(ReesSpec(trivial_semigroup(), 1, 1, ((0,),)))
    assert [g.map for g in single] == [PartialMap.identity(1)]


def test_catalog():
    assert catalog_lookup("leftzero:3").n == 3
    assert catalog_lookup("T:2").n == 4
    assert catalog_lookup("I:2").n == 7
    for bad in ("leftzero", "nope", "clifford8:2", "cyclic:0"):
        with pytest.raises(KeyError):
            catalog_lookup(bad)
