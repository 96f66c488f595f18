import random

from hypothesis import given, strategies as st

from kanext import Functor, chain_category, enumerate_functors, identity_functor
from kanext.constructions import adjunction_check, hom_adjunction
from kanext.generators import random_poset


def galois():
    A, B = chain_category(3), chain_category(2)
    L = Functor(A, B, {"0": "0", "1": "1", "2": "1"},
                {"id_0": "id_0", "id_1": "id_1", "id_2": "id_1", "0->1": "0->1", "1->2": "id_1", "0->2": "0->1"})
    R = Functor(B, A, {"0": "0", "1": "2"}, {"id_0": "id_0", "id_1": "id_2", "0->1": "0->2"})
    return L, R


def test_galois_instance():
    L, R = galois()
    rep = adjunction_check(L, R)
    assert rep.condition1 and rep.condition2
    assert rep.triangle_left and rep.triangle_right
    assert rep.eta.components == {"0": "id_0", "1": "1->2", "2": "id_2"}
    assert set(rep.epsilon.components.values()) == {"id_0", "id_1"}


def test_swapped_pair_fails_condition_one():
    L, R = galois()
    rep = adjunction_check(R, L)
    assert not rep.condition1
    assert not rep.holds
    assert "condition1" in rep.witness


def test_identity_adjunction():
    C = chain_category(3)
    rep = adjunction_check(identity_functor(C), identity_functor(C))
    assert rep.holds and rep.triangle_left and rep.triangle_right


@given(st.integers(min_value=0, max_value=2 ** 32))
def test_agrees_with_hom_definition(seed):
    rng = random.Random(seed)
    A = random_poset(rng.randint(1, 3), rng, density=0.5)
    B = random_poset(rng.randint(1, 3), rng, density=0.5)
    Ls = list(enumerate_functors(A, B))
    Rs = list(enumerate_functors(B, A))
    L, R = rng.choice(Ls), rng.choice(Rs)
    rep = adjunction_check(L, R)
    assert rep.holds == hom_adjunction(L, R)
    if rep.holds:
        assert rep.triangle_left and rep.triangle_right
