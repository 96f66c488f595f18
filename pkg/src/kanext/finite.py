"""(Co)limits inside a finite category, found by exhaustive cocone search, and
the Kan extensions valued in a finite category that they make possible."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .category import Functor, NatTrans, compose_functors
from .comma import comma_left, comma_right, induced_comma_functor, left_label, right_label
from .errors import NoColimit
from .kan import KanExtension


@dataclass(frozen=True)
class Cocone:
    apex: str
    legs: Mapping[str, str]  # diagram object -> morphism (into apex for cocones, out of it for cones)


def cocones(D, apex):
    """All cocones from the diagram D: J → C to ``apex``."""
    J, C = D.source, D.target
    objs = J.objects
    choices = [C.hom(D.object_map[j], apex) for j in objs]
    arrows = [(f, j, j2) for f, (j, j2) in J.morphisms.items() if f != J.identities[j]]
    for pick in itertools.product(*choices):
        legs = dict(zip(objs, pick))
        if all(C.composition[(legs[j2], D.morphism_map[f])] == legs[j] for f, j, j2 in arrows):
            yield Cocone(apex, legs)


def cones(D, apex):
    """All cones from ``apex`` over the diagram D: J → C."""
    J, C = D.source, D.target
    objs = J.objects
    choices = [C.hom(apex, D.object_map[j]) for j in objs]
    arrows = [(f, j, j2) for f, (j, j2) in J.morphisms.items() if f != J.identities[j]]
    for pick in itertools.product(*choices):
        legs = dict(zip(objs, pick))
        if all(C.composition[(D.morphism_map[f], legs[j])] == legs[j2] for f, j, j2 in arrows):
            yield Cocone(apex, legs)


def cocone_factorizations(C, colim, other):
    """Morphisms u: colim.apex → other.apex with u∘leg = leg' at every object."""
    return [u for u in C.hom(colim.apex, other.apex)
            if all(C.composition[(u, leg)] == other.legs[j] for j, leg in colim.legs.items())]


def cone_factorizations(C, lim, other):
    return [u for u in C.hom(other.apex, lim.apex)
            if all(C.composition[(leg, u)] == other.legs[j] for j, leg in lim.legs.items())]


def colimit_in(D):
    """A colimiting cocone of D: J → C, by exhaustive search; raises :class:`NoColimit`."""
    C = D.target
    every = [cc for c in C.objects for cc in cocones(D, c)]
    for cand in every:
        if all(len(cocone_factorizations(C, cand, other)) == 1 for other in every):
            return cand
    raise NoColimit(f"diagram over {D.source!r} has no colimit in {C!r}")


def limit_in(D):
    C = D.target
    every = [cc for c in C.objects for cc in cones(D, c)]
    for cand in every:
        if all(len(cone_factorizations(C, cand, other)) == 1 for other in every):
            return cand
    raise NoColimit(f"diagram over {D.source!r} has no limit in {C!r}")


def lan_in(K, X):
    """Pointwise left Kan extension of X: A → C (C finite) along K: A → B."""
    if X.source != K.source:
        raise ValueError("lan_in: X and K have different domains")
    B, C = K.target, X.target
    commas = {b: comma_left(K, b) for b in B.objects}
    certs = {}
    for b in B.objects:
        try:
            certs[b] = colimit_in(compose_functors(X, commas[b].projection))
        except NoColimit:
            raise NoColimit(f"Lan undefined at {b!r}: the colimit over K↓{b} does not exist in {C!r}") from None
    om = {b: certs[b].apex for b in B.objects}
    mm = {}
    for g, (b, b2) in B.morphisms.items():
        I = induced_comma_functor(K, g, "left", commas[b], commas[b2])
        other = Cocone(om[b2], {j: certs[b2].legs[I.object_map[j]] for j in commas[b].cat.objects})
        (u,) = cocone_factorizations(C, certs[b], other)
        mm[g] = u
    ext = Functor(B, C, om, mm)
    unit = NatTrans(X, compose_functors(ext, K),
                    {a: certs[K.object_map[a]].legs[left_label(a, B.identities[K.object_map[a]])] for a in K.source.objects})
    return KanExtension("left", K, X, ext, unit, certs, commas)


def ran_in(K, X):
    """Pointwise right Kan extension of X: A → C (C finite) along K: A → B."""
    if X.source != K.source:
        raise ValueError("ran_in: X and K have different domains")
    B, C = K.target, X.target
    commas = {b: comma_right(b, K) for b in B.objects}
    certs = {}
    for b in B.objects:
        try:
            certs[b] = limit_in(compose_functors(X, commas[b].projection))
        except NoColimit:
            raise NoColimit(f"Ran undefined at {b!r}: the limit over {b}↓K does not exist in {C!r}") from None
    om = {b: certs[b].apex for b in B.objects}
    mm = {}
    for g, (b, b2) in B.morphisms.items():
        I = induced_comma_functor(K, g, "right", commas[b2], commas[b])
        other = Cocone(om[b], {j2: certs[b].legs[I.object_map[j2]] for j2 in commas[b2].cat.objects})
        (u,) = cone_factorizations(C, certs[b2], other)
        mm[g] = u
    ext = Functor(B, C, om, mm)
    counit = NatTrans(compose_functors(ext, K), X,
                      {a: certs[K.object_map[a]].legs[right_label(B.identities[K.object_map[a]], a)] for a in K.source.objects})
    return KanExtension("right", K, X, ext, counit, certs, commas)
