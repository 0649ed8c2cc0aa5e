from innaut.corpus import corpus, labelled_count, order5_samples, small_semigroups
from innaut.semigroup import find_isomorphism


def test_known_counts():
    # semigroups up to isomorphism or anti-isomorphism: 1, 4, 18, 126; up to isomorphism 1, 5, 24, 188
    assert [len(small_semigroups(n)) for n in (1, 2, 3, 4)] == [1, 5, 24, 188]
    assert [labelled_count(n) for n in (1, 2, 3)] == [1, 8, 113]


def test_order3_pairwise_non_isomorphic():
    reps = small_semigroups(3)
    for i, S in enumerate(reps):
        for T in reps[i + 1:]:
            assert find_isomorphism(S, T) is None


def test_order5_samples():
    samples = order5_samples()
    assert len(samples) == 65 and all(S.n == 5 for S in samples)


def test_corpus_composition():
    assert len(corpus(max_order=4)) == 233
    assert len(corpus(max_order=5)) == 298
