import itertools

import pytest
from hypothesis import given, strategies as st

from kanext import (
    Functor,
    NatTrans,
    ValidationError,
    chain_category,
    compose_functors,
    constant_functor,
    discrete_category,
    enumerate_functors,
    identity_functor,
    identity_nat,
    nat_transformations,
    opposite,
    terminal_category,
    validate_category,
    validate_functor,
    vcompose,
    whisker_right,
)
from kanext.generators import corpus, random_poset


def chain_raw(drop=None):
    C = chain_category(3)
    comp = [[g, f, gf] for (g, f), gf in C.composition.items() if (g, f) != drop]
    return {"objects": list(C.objects), "morphisms": [[f, d, c] for f, (d, c) in C.morphisms.items()],
            "identities": dict(C.identities), "composition": comp}


def codes(exc):
    return {v.code for v in exc.value.violations}


def test_terminal():
    T = terminal_category()
    assert len(T.objects) == 1 and len(T.morphisms) == 1


def test_chain3_counts():
    C = chain_category(3)
    assert len(C.objects) == 3
    assert len(C.morphisms) == 6


@pytest.mark.parametrize("n", range(1, 6))
def test_chain_morphism_count(n):
    assert len(chain_category(n).morphisms) == n * (n + 1) // 2


def test_missing_composite_is_reported():
    with pytest.raises(ValidationError) as exc:
        validate_category(chain_raw(drop=("1->2", "0->1")))
    assert "composition-not-total" in codes(exc)


def test_all_violations_collected():
    raw = {"objects": ["a"], "morphisms": [["id_a", "a", "a"], ["f", "a", "b"], ["g", "c", "a"]],
           "identities": {"a": "id_a"}, "composition": []}
    with pytest.raises(ValidationError) as exc:
        validate_category(raw)
    assert len(exc.value.violations) == 2
    assert codes(exc) == {"dangling-reference"}


def test_associativity_violation():
    # one object, two non-identity endomorphisms e, z with e∘e = z but z∘e != e∘z
    raw = {"objects": ["0"], "morphisms": [["i", "0", "0"], ["e", "0", "0"], ["z", "0", "0"]],
           "identities": {"0": "i"},
           "composition": [["e", "e", "z"], ["e", "z", "e"], ["z", "e", "z"], ["z", "z", "z"]]}
    with pytest.raises(ValidationError) as exc:
        validate_category(raw, infer_identity_compositions=True)
    assert "associativity" in codes(exc)


def test_identity_law_violation():
    raw = {"objects": ["0", "1"], "morphisms": [["i0", "0", "0"], ["i1", "1", "1"], ["f", "0", "1"], ["g", "0", "1"]],
           "identities": {"0": "i0", "1": "i1"},
           "composition": [["i0", "i0", "i0"], ["i1", "i1", "i1"], ["f", "i0", "g"], ["i1", "f", "f"],
                           ["g", "i0", "g"], ["i1", "g", "g"]]}
    with pytest.raises(ValidationError) as exc:
        validate_category(raw)
    assert "identity-law" in codes(exc)


def test_functor_identity_not_preserved():
    C = chain_category(2)
    with pytest.raises(ValidationError) as exc:
        Functor(C, C, {"0": "0", "1": "1"}, {"id_0": "0->1", "id_1": "id_1", "0->1": "0->1"})
    assert "dom-cod-mismatch" in codes(exc) or "identity-not-preserved" in codes(exc)


def test_functor_identity_sent_to_loop():
    # an endomorphism that is not the identity, so only the identity law can catch it
    from kanext.generators import idempotent_category
    E = idempotent_category()
    with pytest.raises(ValidationError) as exc:
        Functor(E, E, {"0": "0"}, {"id_0": "e", "e": "e"})
    assert codes(exc) == {"identity-not-preserved"}


def test_constant_and_identity_functors_validate():
    C = chain_category(3)
    assert identity_functor(C).object_map == {a: a for a in C.objects}
    D = constant_functor(discrete_category(["x", "y"]), C, "1")
    assert set(D.object_map.values()) == {"1"}


def test_validate_functor_infers_identities():
    A, B = chain_category(2), chain_category(3)
    F = validate_functor({"source": A, "target": B, "objects": {"0": "0", "1": "2"}, "morphisms": {"0->1": "0->2"}})
    assert F.morphism_map["id_1"] == "id_2"


def test_naturality_violation_lists_square():
    from kanext.generators import arrow_category
    C = chain_category(2)
    F = constant_functor(arrow_category(), C, "0")
    G = Functor(arrow_category(), C, {"0": "0", "1": "1"}, {"id_0": "id_0", "id_1": "id_1", "f": "0->1"})
    with pytest.raises(ValidationError) as exc:
        NatTrans(F, G, {"0": "id_0", "1": "0->1"}).components  # fine
        NatTrans(G, G, {"0": "0->1", "1": "id_1"})
    assert "component-type" in codes(exc)


def test_opposite_involution():
    for C in corpus(4):
        assert opposite(opposite(C)) == C


@pytest.mark.parametrize("C", corpus(4), ids=lambda C: C.name)
def test_associativity_exhaustive(C):
    out_of = {a: [m for m in C.morphisms if C.dom(m) == a] for a in C.objects}
    for f in C.morphisms:
        for g in out_of[C.cod(f)]:
            for h in out_of[C.cod(g)]:
                assert C.compose(h, C.compose(g, f)) == C.compose(C.compose(h, g), f)


def test_whisker_identity():
    A, B = chain_category(2), chain_category(3)
    L = identity_functor(B)
    K = Functor(A, B, {"0": "0", "1": "2"}, {"id_0": "id_0", "id_1": "id_2", "0->1": "0->2"})
    assert whisker_right(identity_nat(L), K).components == identity_nat(compose_functors(L, K)).components


def test_vcompose_identity_laws():
    B = chain_category(3)
    A = chain_category(2)
    funcs = list(enumerate_functors(A, B))
    for F, G in itertools.product(funcs, repeat=2):
        for alpha in nat_transformations(F, G):
            assert vcompose(identity_nat(G), alpha).components == alpha.components
            assert vcompose(alpha, identity_nat(F)).components == alpha.components


@given(st.integers(min_value=0, max_value=10 ** 6), st.integers(min_value=2, max_value=4))
def test_whisker_distributes_over_vcompose(seed, n):
    import random
    rng = random.Random(seed)
    B = random_poset(n, rng)
    A = chain_category(2)
    funcs = list(enumerate_functors(B, B))
    F, G, H = (rng.choice(funcs) for _ in range(3))
    alphas = list(nat_transformations(F, G))
    betas = list(nat_transformations(G, H))
    Ks = list(enumerate_functors(A, B))
    if not (alphas and betas and Ks):
        return
    a, b, K = rng.choice(alphas), rng.choice(betas), rng.choice(Ks)
    lhs = whisker_right(vcompose(b, a), K)
    rhs = vcompose(whisker_right(b, K), whisker_right(a, K))
    assert lhs.components == rhs.components


def test_vcompose_associative_three_stacked():
    A = chain_category(2)
    B = chain_category(3)
    funcs = list(enumerate_functors(A, B))
    checked = 0
    for F, G, H, J in itertools.product(funcs, repeat=4):
        for a in nat_transformations(F, G):
            for b in nat_transformations(G, H):
                for c in nat_transformations(H, J):
                    assert vcompose(c, vcompose(b, a)).components == vcompose(vcompose(c, b), a).components
                    checked += 1
                    if checked > 400:
                        return


def test_enumerate_functors_chain2_chain3():
    # monotone maps 2 → 3: pairs i ≤ j
    assert len(list(enumerate_functors(chain_category(2), chain_category(3)))) == 6
