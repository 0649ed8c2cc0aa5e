import pytest
from hypothesis import given, settings, strategies as st

from innaut.partial_map import (
    AmbientMismatch,
    LimitExceeded,
    NotClosed,
    PartialMap,
    _closure_np,
    abstract_cayley,
    closure,
    compose,
    invert,
    subset_of,
    symmetric_inverse_monoid_maps,
)
from innaut.semigroup import find_isomorphism, validate


def pm(n, pairs):
    return PartialMap.from_pairs(n, pairs)


def test_compose_left_to_right():
    assert compose(pm(2, [(0, 1)]), pm(2, [(1, 0)])) == pm(2, [(0, 0)])
    assert compose(pm(2, [(0, 1)]), pm(2, [(0, 1)])).is_empty


def test_invert_and_subset():
    assert invert(PartialMap.empty(3)) == PartialMap.empty(3)
    assert invert(pm(2, [(0, 1)])) == pm(2, [(1, 0)])
    f = pm(3, [(0, 1), (2, 2)])
    assert subset_of(PartialMap.empty(3), f)
    assert subset_of(f, f)
    assert not subset_of(f, pm(3, [(0, 1)]))


def test_rendering():
    assert str(PartialMap.empty(2)) == "{}"
    assert str(pm(3, [(2, 0), (0, 1)])) == "{0->1, 2->0}"


def test_errors():
    with pytest.raises(ValueError):
        pm(3, [(0, 1), (1, 1)])
    with pytest.raises(AmbientMismatch):
        compose(PartialMap.identity(2), PartialMap.identity(3))
    with pytest.raises(LimitExceeded):
        closure(symmetric_inverse_monoid_maps(3), limit=10)


def test_closure_examples():
    assert closure([PartialMap.identity(3)]) == {PartialMap.identity(3)}
    I2 = symmetric_inverse_monoid_maps(2)
    assert len(I2) == 7 and closure(I2) == frozenset(I2)
    assert len(symmetric_inverse_monoid_maps(3)) == 34


def test_abstract_cayley():
    S, els = abstract_cayley([PartialMap.identity(2), PartialMap.empty(2)])
    chain = validate(2, [[0, 0], [0, 1]])
    assert find_isomorphism(S, chain) is not None
    S, _ = abstract_cayley([PartialMap.identity(1)])
    assert S.n == 1
    with pytest.raises(NotClosed):
        abstract_cayley([pm(2, [(0, 1)])])


maps3 = st.lists(st.integers(-1, 2), min_size=3, max_size=3).filter(
    lambda img: len([y for y in img if y >= 0]) == len({y for y in img if y >= 0}))


@settings(max_examples=60, deadline=None)
@given(st.lists(maps3, min_size=1, max_size=3))
def test_closure_paths_agree(imgs):
    gens = [PartialMap(3, img) for img in imgs]
    letters = list(dict.fromkeys(gens + [invert(f) for f in gens]))
    pure = closure(gens, limit=None)
    assert _closure_np(3, letters, None) == pure
    # closed under composition and inverse
    for f in pure:
        assert invert(f) in pure
    for f in list(pure)[:8]:
        for g in pure:
            assert compose(f, g) in pure


@given(maps3, maps3, maps3)
def test_compose_associative(a, b, c):
    f, g, h = (PartialMap(3, x) for x in (a, b, c))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(compose(f, invert(f)), f) == f
