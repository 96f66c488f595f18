import dataclasses
import random

import pytest
from hypothesis import given, strategies as st

from kanext import (
    chain_category,
    discrete_category,
    full_subcategory,
    identity_functor,
    inclusion_functor,
    point_functor,
    terminal_category,
    to_terminal,
)
from kanext.errors import GuardExceeded, UniversalityError
from kanext.generators import corpus, random_functor, random_set_functor
from kanext.kan import (
    HomFunctor,
    IdentityEndofunctor,
    ProductFunctor,
    hom_bijection_check,
    lan,
    pointwise_check,
    preservation_check,
    ran,
    restriction_iso,
    verify_universal,
)
from kanext.sets import (
    SetNatTrans,
    find_natural_iso,
    identity_set_nat,
    representable,
    set_functor,
)

seeds = st.integers(min_value=0, max_value=2 ** 32)
CAP = 20000


def random_instance(rng, max_size=2):
    A = rng.choice(corpus(3))
    B = rng.choice(corpus(3))
    K = random_functor(A, B, rng)
    X = random_set_functor(A, max_size, rng)
    return K, X


def test_chain_inclusion_sizes(ends_inclusion):
    K, X = ends_inclusion
    assert lan(K, X).ext.sizes() == {"0": 1, "1": 1, "2": 3}
    assert ran(K, X).ext.sizes() == {"0": 2, "1": 2, "2": 2}


@pytest.mark.parametrize("C", corpus(4), ids=lambda C: C.name)
def test_representable_is_lan_of_point(C):
    star = set_functor(terminal_category(), {"*": ["*"]})
    for c in C.objects:
        L = lan(point_functor(C, c), star)
        assert find_natural_iso(L.ext, representable(C, c)) is not None
        # the unit picks the class of id_c
        (x,) = L.unit.components["*"].values()
        assert L.certificates[c].coprojection(f"(*,{C.identities[c]})", "*") == x


def test_ran_along_identity_is_identity():
    C = chain_category(3)
    X = set_functor(C, {"0": ["a"], "1": ["a", "b"], "2": ["c"]},
                    {"0->1": {"a": "a"}, "1->2": {"a": "c", "b": "c"}, "0->2": {"a": "c"}})
    R = ran(identity_functor(C), X)
    assert R.counit.is_iso()
    L = lan(identity_functor(C), X)
    assert L.unit.is_iso()


@given(seeds)
def test_mediator_is_natural(seed):
    K, X = random_instance(random.Random(seed))
    for kan in (lan(K, X), ran(K, X)):
        m = kan.mediator
        SetNatTrans(m.source, m.target, m.components)


@given(seeds)
def test_universal_with_self(seed):
    K, X = random_instance(random.Random(seed))
    for kan in (lan(K, X), ran(K, X)):
        try:
            alpha = verify_universal(kan, kan.ext, kan.mediator, cap=CAP)
        except GuardExceeded:
            continue
        assert alpha.components == identity_set_nat(kan.ext).components


@given(seeds)
def test_hom_bijection_representables(seed):
    rng = random.Random(seed)
    K, X = random_instance(rng)
    B = K.target
    H = representable(B, rng.choice(B.objects))
    for kan in (lan(K, X), ran(K, X)):
        try:
            assert hom_bijection_check(kan, H, cap=CAP)
        except GuardExceeded:
            pass


def test_universal_detects_two_factorisations(ends_inclusion):
    # E agrees with Lan on the image of K but has a spare point j over 1 that
    # maps like u; posing (E, η) as the extension, E ⇒ E may swap or keep j
    K, X = ends_inclusion
    L = lan(K, X)
    sets = {b: list(L.ext.sets[b]) for b in L.ext.shape.objects}
    sets["1"] = sets["1"] + ["j"]
    fns = {f: dict(t) for f, t in L.ext.fns.items()}
    (u,) = L.ext.sets["1"]
    fns["id_1"]["j"] = "j"
    fns["1->2"]["j"] = fns["1->2"][u]
    E = set_functor(L.ext.shape, sets, fns)
    eta = SetNatTrans(X, E.precompose(K), L.unit.components)
    fake = dataclasses.replace(L, ext=E, mediator=eta)
    with pytest.raises(UniversalityError) as exc:
        verify_universal(fake, E, eta)
    assert exc.value.survivors == 2
    assert verify_universal(L, E, eta) is not None


@given(seeds)
def test_fully_faithful_restriction(seed):
    rng = random.Random(seed)
    B = rng.choice(corpus(4))
    objs = rng.sample(list(B.objects), rng.randint(1, len(B.objects)))
    K = inclusion_functor(full_subcategory(B, objs), B)
    X = random_set_functor(K.source, 3, rng)
    assert restriction_iso(ran(K, X)) is not None
    assert restriction_iso(lan(K, X)) is not None


@given(seeds)
def test_pointwise_hom_preservation(seed):
    K, X = random_instance(random.Random(seed))
    reports = pointwise_check(ran(K, X), max_size=2, cap=CAP)
    assert all(r.iso_found for r in reports)


@given(seeds)
def test_identity_preserves_everything(seed):
    K, X = random_instance(random.Random(seed))
    assert preservation_check(IdentityEndofunctor(), lan(K, X))
    assert preservation_check(IdentityEndofunctor(), ran(K, X))


def test_product_preserves_lan(ends_inclusion):
    K, X = ends_inclusion
    assert preservation_check(ProductFunctor(["0", "1"]), lan(K, X))


def test_hom_does_not_preserve_every_lan(ends_inclusion):
    # Lan(2) = X(0) + X(2) has 3 points; hom(2, -) of it has 9, Lan of hom(2, X) has 1 + 4
    K, X = ends_inclusion
    assert not preservation_check(HomFunctor(["0", "1"]), lan(K, X)).iso_found


def test_restriction_needs_fully_faithful():
    A = discrete_category(["a", "b"])
    X = set_functor(A, {"a": ["x"], "b": ["y"]})
    with pytest.raises(ValueError):
        restriction_iso(lan(to_terminal(A), X))
