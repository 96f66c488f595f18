import random

import pytest
from hypothesis import given, strategies as st

from kanext import (
    chain_category,
    compose_functors,
    comma_left,
    comma_right,
    identity_functor,
    induced_comma_functor,
    opposite,
    opposite_functor,
    point_functor,
    validate_category,
)
from kanext.generators import corpus, random_functor


def test_identity_comma_left():
    C = chain_category(3)
    K = comma_left(identity_functor(C), "1")
    assert sorted(K.cat.objects) == ["(0,0->1)", "(1,id_1)"]


def test_identity_comma_right():
    C = chain_category(3)
    K = comma_right("1", identity_functor(C))
    assert sorted(K.cat.objects) == ["(1->2,2)", "(id_1,1)"]


@pytest.mark.parametrize("C", corpus(4), ids=lambda C: C.name)
def test_point_functor_comma_is_discrete(C):
    for c in C.objects:
        for b in C.objects:
            K = comma_left(point_functor(C, c), b)
            assert len(K.cat.objects) == len(C.hom(c, b))
            assert all(K.cat.is_identity(m) for m in K.cat.morphisms)


@pytest.mark.parametrize("C", corpus(4), ids=lambda C: C.name)
def test_comma_categories_validate(C):
    from kanext.workspace import dump_category
    for b in C.objects:
        for side in (comma_left(identity_functor(C), b), comma_right(b, identity_functor(C))):
            validate_category(dump_category(side.cat))


def _check_functorial(F):
    A = F.source
    for (g, f), gf in A.composition.items():
        assert F.target.composition[(F.morphism_map[g], F.morphism_map[f])] == F.morphism_map[gf]


@given(st.integers(min_value=0, max_value=2 ** 32))
def test_induced_functors_compose(seed):
    rng = random.Random(seed)
    A = rng.choice(corpus(3))
    B = rng.choice(corpus(3))
    K = random_functor(A, B, rng)
    for g, (b, b2) in B.morphisms.items():
        for side in ("left", "right"):
            I = induced_comma_functor(K, g, side)
            _check_functorial(I)
    # g' ∘ g induces the composite of the induced functors
    for (g2, g), gg in B.composition.items():
        lhs = induced_comma_functor(K, gg, "left")
        rhs = compose_functors(induced_comma_functor(K, g2, "left"), induced_comma_functor(K, g, "left"))
        assert lhs.object_map == rhs.object_map


def test_identity_induces_identity():
    C = chain_category(3)
    K = identity_functor(C)
    for b in C.objects:
        I = induced_comma_functor(K, C.identities[b], "left")
        assert all(I.object_map[o] == o for o in I.source.objects)


@given(st.integers(min_value=0, max_value=2 ** 32))
def test_comma_duality(seed):
    """b↓K and (K^op↓b)^op have the same objects up to relabelling and the same morphism count."""
    rng = random.Random(seed)
    A = rng.choice(corpus(3))
    B = rng.choice(corpus(3))
    K = random_functor(A, B, rng)
    Kop = opposite_functor(K)
    for b in B.objects:
        right = comma_right(b, K)
        left = comma_left(Kop, b)
        assert sorted(right.witnesses.values()) == sorted(left.witnesses.values())
        assert len(right.cat.morphisms) == len(opposite(left.cat).morphisms)
