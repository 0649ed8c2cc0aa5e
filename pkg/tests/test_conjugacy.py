import numpy as np

from innaut.conjugacy import (
    are_conjugate,
    centralizer,
    conditions,
    conjugacy_class,
    conjugacy_classes,
    conjugators,
    identity_class_formula,
    is_witness,
    k_pairs,
)
from innaut.constructors import clifford8, full_transformation_monoid, symmetric_group
from innaut.semigroup import adjoin_identity, green, validate
from innaut.verify import ALTERNATIVES, LITERAL_FALSE, condition_tensor


def names(S, xs):
    return {S.label(x) for x in xs}


def test_clifford_classes(cliff):
    ix = cliff.index
    assert are_conjugate(cliff, ix("s1"), ix("s2"))
    assert conjugacy_class(cliff, ix("c")) == (ix("c"),)
    assert conjugators(cliff, ix("c"), ix("s1")) is None
    w = conjugators(cliff, ix("s1"), ix("s2"))
    assert is_witness(cliff, ix("s1"), ix("s2"), w.g, w.h)
    # the conjugators named in the example also work
    assert is_witness(cliff, ix("s1"), ix("s2"), ix("s3"), ix("s3"))
    assert (ix("s1"), ix("s2")) in k_pairs(cliff, ix("s3"), ix("s3"))


def test_clifford_centralizers(cliff):
    ix = cliff.index
    assert names(cliff, centralizer(cliff, ix("s1"))) == {"e", "f", "s1", "c"}
    assert names(cliff, centralizer(cliff, ix("s2"))) == {"e", "f", "s2"}


def test_trivial_witness(cliff):
    one = adjoin_identity(cliff).identity
    for a in range(cliff.n):
        assert conjugators(cliff, a, a) == (one, one)
    assert k_pairs(cliff, one, one) == {(a, a) for a in range(cliff.n)}


def test_zero_class_is_singleton():
    S = validate(3, [[0, 0, 0], [0, 1, 2], [0, 2, 1]])    # Z_2 with a zero
    assert conjugacy_class(S, 0) == (0,)


def test_identity_class_formula():
    S3 = symmetric_group(3)
    assert identity_class_formula(S3) == frozenset(conjugacy_class(S3, S3.identity))
    T, _ = full_transformation_monoid(3)
    assert identity_class_formula(T) == frozenset(conjugacy_class(T, T.identity))


def test_group_conjugacy_is_usual():
    S3 = symmetric_group(3)
    t = S3.table
    inv = [int(np.flatnonzero(t[x] == S3.identity)[0]) for x in range(6)]
    usual = {frozenset(int(t[t[inv[g], a], g]) for g in range(6)) for a in range(6)}
    assert {frozenset(b) for b in conjugacy_classes(S3).blocks} == usual


def test_classes_inside_D(cliff):
    assert conjugacy_classes(cliff).refines(green(cliff).D)


def test_condition_tensor_matches_scalar(cliff):
    C = condition_tensor(cliff)
    for a, b, g, h in [(3, 4, 5, 5), (6, 0, 0, 0), (1, 2, 3, 3)]:
        assert tuple(bool(x) for x in C[:, a, b, g, h]) == tuple(bool(x) for x in conditions(cliff, a, b, g, h))


def test_printed_alternatives_15_16_are_refuted():
    # (15) {(i),(ii),(v),(vii)} holds for a=f, b=e, g=h=e but gbh = e != f; (16) is its mirror
    S = clifford8()
    f, e = S.index("f"), S.index("e")
    c = conditions(S, f, e, e, e)
    assert all(c[k] for k in ALTERNATIVES[14]) and not c[3]
    c = conditions(S, e, f, e, e)
    assert all(c[k] for k in ALTERNATIVES[15]) and not c[2]
    # the amended readings hold everywhere on this table
    C = condition_tensor(S)
    for eqs in LITERAL_FALSE.values():
        hyp = C[list(eqs)].all(axis=0)
        assert not (hyp & ~C.all(axis=0)).any()
