import random

from hypothesis import given, strategies as st

from kanext import Functor, chain_category, enumerate_functors, opposite, poset_category
from kanext.constructions import nerve, nerve_realization
from kanext.generators import enumerate_set_functors, random_set_functor
from kanext.sets import representable, set_functor


def diamond():
    order = {("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top"), ("bot", "top")}
    return poset_category(["bot", "a", "b", "top"], lambda p, q: p == q or (p, q) in order, name="diamond")


def F_into_diamond():
    C, E = chain_category(3), diamond()
    return Functor(C, E, {"0": "bot", "1": "a", "2": "top"},
                   {"id_0": "id_bot", "id_1": "id_a", "id_2": "id_top",
                    "0->1": "bot->a", "1->2": "a->top", "0->2": "bot->top"})


def test_nerve_values():
    R = nerve(F_into_diamond(), "a")
    assert R.sizes() == {"0": 1, "1": 1, "2": 0}


def test_realization_of_representable_is_image():
    F = F_into_diamond()
    X = representable(F.source, "1", variance="contra")
    rep = nerve_realization(F, X, "b")
    assert rep.realization == "a"
    assert rep.holds


def test_empty_presheaf_realizes_to_bottom():
    F = F_into_diamond()
    X = set_functor(opposite(F.source), {"0": [], "1": [], "2": []})
    rep = nerve_realization(F, X, "top")
    assert rep.realization == "bot" and rep.hom_size == 1 and rep.holds


def test_all_small_presheaves():
    F = F_into_diamond()
    for X in enumerate_set_functors(opposite(F.source), 2):
        for e in F.target.objects:
            assert nerve_realization(F, X, e).holds


@given(st.integers(min_value=0, max_value=2 ** 32))
def test_random_functor_into_diamond(seed):
    rng = random.Random(seed)
    C = chain_category(3)
    F = rng.choice(list(enumerate_functors(C, diamond())))
    X = random_set_functor(opposite(C), 2, rng)
    for e in F.target.objects:
        assert nerve_realization(F, X, e).holds
