import random

import pytest
from hypothesis import given, strategies as st

from kanext import chain_category, discrete_category, terminal_category
from kanext.errors import GuardExceeded, ValidationError
from kanext.generators import arrow_category, corpus, parallel_pair, random_set_functor
from kanext.sets import (
    SetNatTrans,
    colimit,
    elements_category,
    find_natural_iso,
    identity_set_nat,
    limit,
    nat_hom,
    representable,
    set_functor,
)

seeds = st.integers(min_value=0, max_value=2 ** 32)


def test_equalizer_oracle():
    P = parallel_pair()
    D = set_functor(P, {"0": ["0", "1", "2"], "1": ["0", "1"]},
                    {"s": {"0": "0", "1": "1", "2": "0"}, "t": {"0": "0", "1": "0", "2": "1"}})
    L = limit(D)
    assert len(L.apex) == 1
    assert L.project(L.apex[0], "0") == "0"


def test_coequalizer_oracle():
    P = parallel_pair()
    D = set_functor(P, {"0": ["a", "b"], "1": ["x", "y", "z"]},
                    {"s": {"a": "x", "b": "y"}, "t": {"a": "y", "b": "z"}})
    assert len(colimit(D).apex) == 1


def test_discrete_product_and_coproduct():
    D = set_functor(discrete_category(["p", "q"]), {"p": ["1", "2"], "q": ["1", "2", "3"]})
    assert len(limit(D).apex) == 6
    assert len(colimit(D).apex) == 5


def test_empty_diagram():
    D = set_functor(discrete_category([]), {})
    assert len(limit(D).apex) == 1
    assert colimit(D).apex == ()


def test_limit_guard():
    D = set_functor(discrete_category(["p", "q"]), {"p": list("abcd"), "q": list("abcd")})
    with pytest.raises(GuardExceeded):
        limit(D, cap=10)


def test_representable_on_chain():
    X = representable(chain_category(3), "0")
    assert X.sizes() == {"0": 1, "1": 1, "2": 1}


def test_contravariant_representable():
    X = representable(chain_category(3), "1", variance="contra")
    assert X.sizes() == {"0": 1, "1": 1, "2": 0}


def test_nat_hom_arrow_example():
    A = arrow_category()
    H = representable(A, "0")
    G = set_functor(A, {"0": ["u", "v"], "1": ["w"]}, {"f": {"u": "w", "v": "w"}})
    assert len(nat_hom(H, G)) == 2


def test_nat_hom_guard_message():
    A = discrete_category(["a"])
    F = set_functor(A, {"a": [str(i) for i in range(8)]})
    with pytest.raises(GuardExceeded) as exc:
        nat_hom(F, F, cap=100)
    assert "100" in str(exc.value)


def test_function_must_be_total():
    A = arrow_category()
    with pytest.raises(ValidationError):
        set_functor(A, {"0": ["u", "v"], "1": ["w"]}, {"f": {"u": "w"}})


def test_non_natural_components_rejected():
    A = arrow_category()
    X = set_functor(A, {"0": ["u", "v"], "1": ["w", "z"]}, {"f": {"u": "w", "v": "z"}})
    with pytest.raises(ValidationError):
        SetNatTrans(X, X, {"0": {"u": "v", "v": "u"}, "1": {"w": "w", "z": "z"}})


def test_empty_presheaf_accepted():
    X = set_functor(arrow_category(), {"0": [], "1": []})
    assert X.fns["f"] == {}


@given(seeds)
def test_elements_count(seed):
    rng = random.Random(seed)
    C = rng.choice(corpus(3))
    X = random_set_functor(C, 3, rng)
    E, proj = elements_category(X, variance="co")
    assert len(E.objects) == sum(len(X.sets[c]) for c in C.objects)


@given(seeds)
def test_self_iso_exists(seed):
    rng = random.Random(seed)
    C = rng.choice(corpus(3))
    X = random_set_functor(C, 3, rng)
    alpha = find_natural_iso(X, X)
    assert alpha is not None and alpha.is_iso()


def test_find_natural_iso_of_same_functor_is_identity():
    X = set_functor(terminal_category(), {"*": ["a", "b", "c"]})
    alpha = find_natural_iso(X, X)
    assert alpha.components == identity_set_nat(X).components


def test_no_iso_between_different_sizes():
    A = arrow_category()
    X = set_functor(A, {"0": ["u"], "1": ["w"]}, {"f": {"u": "w"}})
    Y = set_functor(A, {"0": ["u"], "1": ["w", "z"]}, {"f": {"u": "w"}})
    assert find_natural_iso(X, Y) is None


@given(seeds)
def test_limit_families_are_compatible(seed):
    rng = random.Random(seed)
    C = rng.choice(corpus(4))
    X = random_set_functor(C, 3, rng)
    L = limit(X)
    for lab in L.apex:
        for f, (a, b) in C.morphisms.items():
            assert X.fns[f][L.project(lab, a)] == L.project(lab, b)


@given(seeds)
def test_colimit_factor_is_unique_cocone_map(seed):
    rng = random.Random(seed)
    C = rng.choice(corpus(4))
    X = random_set_functor(C, 3, rng)
    Q = colimit(X)
    legs = {j: {x: Q.coprojection(j, x) for x in X.sets[j]} for j in C.objects}
    assert Q.factor(Q.apex, legs) == {lab: lab for lab in Q.apex}


@given(seeds)
def test_limit_factor_through_itself(seed):
    rng = random.Random(seed)
    C = rng.choice(corpus(4))
    X = random_set_functor(C, 3, rng)
    L = limit(X)
    legs = {j: {lab: L.project(lab, j) for lab in L.apex} for j in C.objects}
    assert L.factor(L.apex, legs) == {lab: lab for lab in L.apex}


@given(seeds)
def test_colimit_classes_partition(seed):
    rng = random.Random(seed)
    C = rng.choice(corpus(4))
    X = random_set_functor(C, 3, rng)
    Q = colimit(X)
    members = [p for cls in Q.classes for p in cls]
    assert sorted(members) == sorted((j, x) for j in C.objects for x in X.sets[j])
