"""Small categories and functors for tests, demos and exhaustive corpora."""

from __future__ import annotations

import itertools
import random

from .category import (
    category_from_generators,
    chain_category,
    discrete_category,
    enumerate_functors,
    poset_category,
)
from .sets import SetFunctor, find_natural_iso


def arrow_category():
    """0 → 1."""
    return category_from_generators(["0", "1"], [("f", "0", "1")], name="arrow")


def square_category():
    """The commutative square a → b → d, a → c → d with both paths equal."""
    return category_from_generators(
        ["a", "b", "c", "d"],
        [("f", "a", "b"), ("g", "a", "c"), ("h", "b", "d"), ("k", "c", "d"), ("diag", "a", "d")],
        [("h", "f", "diag"), ("k", "g", "diag")],
        name="square",
    )


def parallel_pair():
    """Two arrows s, t: 0 ⇉ 1 (equalizer / coequalizer shape)."""
    return category_from_generators(["0", "1"], [("s", "0", "1"), ("t", "0", "1")], name="parallel")


def span_category():
    """b ← a → c (pushout shape)."""
    return category_from_generators(["a", "b", "c"], [("f", "a", "b"), ("g", "a", "c")], name="span")


def cospan_category():
    """a → c ← b (pullback shape)."""
    return category_from_generators(["a", "b", "c"], [("f", "a", "c"), ("g", "b", "c")], name="cospan")


def idempotent_category():
    """One object with an idempotent e∘e = e."""
    return category_from_generators(["0"], [("e", "0", "0")], [("e", "e", "e")], name="idempotent")


def corpus(max_objects=4):
    """Chains and discrete categories up to ``max_objects``, plus the named shapes."""
    out = []
    for n in range(1, max_objects + 1):
        out.append(chain_category(n))
    for n in range(1, max_objects + 1):
        out.append(discrete_category([chr(ord("a") + i) for i in range(n)]))
    out += [arrow_category(), square_category(), parallel_pair(), span_category(),
            cospan_category(), idempotent_category()]
    return [C for C in out if len(C.objects) <= max_objects]


def random_poset(n, rng, density=0.4, name=""):
    """A random partial order on n points (transitive closure of a random DAG)."""
    rel = {(i, j): i == j for i in range(n) for j in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rel[(i, j)] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if rel[(i, k)] and rel[(k, j)]:
                    rel[(i, j)] = True
    return poset_category([f"p{i}" for i in range(n)], lambda x, y: rel[(int(x[1:]), int(y[1:]))], name=name)


def _labels(n):
    return tuple(str(i) for i in range(n))


def set_functors_with_sizes(C, sizes, rng=None):
    """Every set functor C → FinSet with |X(a)| = sizes[a] and elements "0", "1", ...

    Backtracks over the non-identity morphisms; a morphism that is a
    composite of already chosen ones is forced.  With ``rng`` the choices are
    shuffled, so the first result is a random functor.
    """
    sets = {a: _labels(sizes[a]) for a in C.objects}
    free = [f for f in C.morphisms if not C.is_identity(f)]
    factorings = {f: [] for f in free}
    for (g, f), gf in C.composition.items():
        if gf in factorings and not C.is_identity(g) and not C.is_identity(f):
            factorings[gf].append((g, f))
    fns = {C.identities[a]: {x: x for x in sets[a]} for a in C.objects}
    touching = {m: [] for m in C.morphisms}
    for (g, f), gf in C.composition.items():
        for m in {g, f, gf}:
            touching[m].append((g, f, gf))

    def consistent(m):
        for g, f, gf in touching[m]:
            if g in fns and f in fns and gf in fns:
                fg, ff, fgf = fns[g], fns[f], fns[gf]
                if any(fg[ff[x]] != fgf[x] for x in ff):
                    return False
        return True

    def search(remaining):
        if not remaining:
            yield {k: dict(v) for k, v in fns.items()}
            return
        forced = next((m for m in remaining if any(g in fns and f in fns for g, f in factorings[m])), None)
        m = forced or remaining[0]
        rest = [r for r in remaining if r != m]
        d, c = C.morphisms[m]
        if forced is not None:
            g, f = next((g, f) for g, f in factorings[m] if g in fns and f in fns)
            options = [{x: fns[g][fns[f][x]] for x in sets[d]}]
        else:
            tables = list(itertools.product(sets[c], repeat=len(sets[d])))
            if rng is not None:
                rng.shuffle(tables)
            options = [dict(zip(sets[d], t)) for t in tables]
        for table in options:
            fns[m] = table
            if consistent(m):
                yield from search(rest)
            del fns[m]

    for fam in search(free):
        yield SetFunctor._trusted(C, sets, fam)


def enumerate_set_functors(C, max_size):
    """All set functors on C with every |X(a)| ≤ max_size, labels fixed."""
    for combo in itertools.product(range(max_size + 1), repeat=len(C.objects)):
        yield from set_functors_with_sizes(C, dict(zip(C.objects, combo)))


def invariant(X):
    """An isomorphism invariant of a set functor: sizes, image sizes, fibre profiles."""
    parts = [tuple(len(X.sets[a]) for a in X.shape.objects)]
    for f in X.shape.morphisms:
        fn = X.fns[f]
        fibres = sorted(sum(1 for v in fn.values() if v == y) for y in X.sets[X.shape.cod(f)])
        parts.append((f, tuple(fibres)))
    return tuple(parts)


def iso_classes(functors):
    """One representative per isomorphism class, in order of first appearance."""
    buckets, reps = {}, []
    for X in functors:
        bucket = buckets.setdefault(invariant(X), [])
        if any(find_natural_iso(Y, X) is not None for Y in bucket):
            continue
        bucket.append(X)
        reps.append(X)
    return reps


def random_set_functor(C, max_size, rng, min_size=0, attempts=100):
    """A random set functor on C with value sizes in [min_size, max_size]."""
    for _ in range(attempts):
        sizes = {a: rng.randint(min_size, max_size) for a in C.objects}
        for X in set_functors_with_sizes(C, sizes, rng):
            return X
    raise RuntimeError("no set functor found with the requested sizes")


def random_functor(A, B, rng):
    """A uniformly random functor A → B (all functors are enumerated first)."""
    functors = list(enumerate_functors(A, B))
    if not functors:
        raise RuntimeError("no functor between the given categories")
    return rng.choice(functors)


def default_rng(seed=0):
    return random.Random(seed)
