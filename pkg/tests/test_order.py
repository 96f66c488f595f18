import random

from hypothesis import given, strategies as st

from kanext import chain_category, full_subcategory, poset_category
from kanext.constructions import extremal_extensions, monotone_functor, order_extension
from kanext.constructions.order import monotone_maps


def chain_values(n):
    return poset_category([str(v) for v in range(n)], lambda a, b: int(a) <= int(b), name=f"V{n}")


def test_two_point_example():
    R = chain_category(3)
    Q = full_subcategory(R, ["0", "2"])
    V = poset_category(["1", "4"], lambda a, b: int(a) <= int(b))
    X = monotone_functor(Q, V, {"0": "1", "2": "4"})
    rep = order_extension(Q, R, X)
    assert rep.lan == {"0": "1", "1": "1", "2": "4"}
    assert rep.ran == {"0": "1", "1": "4", "2": "4"}
    assert rep.holds


def test_undefined_directions():
    R = chain_category(3)
    Q = full_subcategory(R, ["1"])
    V = poset_category(["1", "4"], lambda a, b: int(a) <= int(b))
    X = monotone_functor(Q, V, {"1": "4"})
    rep = order_extension(Q, R, X)
    assert rep.undefined == {"left": ["0"], "right": ["2"]}
    assert not rep.holds


@given(st.integers(min_value=0, max_value=2 ** 32))
def test_matches_extremal_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    R = chain_category(n)
    # keep the endpoints so both directions are defined
    inner = [str(i) for i in range(1, n - 1) if rng.random() < 0.5]
    Q = full_subcategory(R, ["0", *inner, str(n - 1)])
    V = chain_values(rng.randint(1, 4))
    X = monotone_functor(Q, V, rng.choice(list(monotone_maps(Q, V))))
    rep = order_extension(Q, R, X)
    assert rep.holds
    least, greatest = extremal_extensions(Q, R, X)
    assert rep.lan == least
    assert rep.ran == greatest
