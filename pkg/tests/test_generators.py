import random

import pytest

from kanext import chain_category, discrete_category
from kanext.generators import (
    arrow_category,
    corpus,
    enumerate_set_functors,
    idempotent_category,
    iso_classes,
    random_poset,
    random_set_functor,
    set_functors_with_sizes,
    square_category,
)
from kanext.sets import set_functor


def test_corpus_shapes():
    names = {C.name for C in corpus(4)}
    assert {"chain4", "discrete4", "arrow", "square"} <= names
    assert all(len(C.objects) <= 4 for C in corpus(4))


def test_square_commutes():
    S = square_category()
    assert S.compose("h", "f") == S.compose("k", "g") == "diag"


def test_arrow_functor_count():
    # maps from an m-set to an n-set, m, n ≤ 2
    total = sum(n ** m for m in range(3) for n in range(3))
    assert len(list(enumerate_set_functors(arrow_category(), 2))) == total


def test_discrete_count():
    assert len(list(enumerate_set_functors(discrete_category(["a", "b"]), 3))) == 16


def test_idempotent_functors_are_idempotent_maps():
    # idempotent self-maps of a 3-set: sum over image size k of C(3, k) k^(3-k) = 3 + 6 + 1
    found = list(set_functors_with_sizes(idempotent_category(), {"0": 3}))
    assert len(found) == 10


@pytest.mark.parametrize("seed", range(20))
def test_random_set_functor_validates(seed):
    rng = random.Random(seed)
    C = rng.choice(corpus(4))
    X = random_set_functor(C, 3, rng)
    set_functor(C, X.sets, X.fns)


def test_random_poset_is_a_poset():
    rng = random.Random(3)
    for _ in range(20):
        P = random_poset(4, rng)
        for a in P.objects:
            for b in P.objects:
                assert len(P.hom(a, b)) <= 1
                if a != b:
                    assert not (P.hom(a, b) and P.hom(b, a))


def test_iso_classes_on_chain():
    reps = iso_classes(enumerate_set_functors(chain_category(2), 1))
    # sizes (0,0), (0,1), (1,1); a 1-set has no map to the empty set
    assert len(reps) == 3
