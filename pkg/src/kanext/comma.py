"""The one-sided comma categories K↓b and b↓K, with projections and the
functors induced between them by morphisms of B."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .category import FinCategory, Functor


@dataclass(frozen=True)
class CommaCategory:
    cat: FinCategory
    projection: Functor
    witnesses: Mapping[str, str]  # comma object -> witness morphism in B
    side: str  # "left" for K↓b, "right" for b↓K
    K: Functor
    b: str

    def underlying(self, obj):
        return self.projection.object_map[obj]

    def object_for(self, a, w):
        return left_label(a, w) if self.side == "left" else right_label(w, a)


def left_label(a, w):
    return f"({a},{w})"


def right_label(w, a):
    return f"({w},{a})"


def _comma_morphism(f, src, tgt):
    return f"{f}:{src}->{tgt}"


def _build(K, b, side):
    A, B = K.source, K.target
    B.require_object(b)
    om, mm = K.object_map, K.morphism_map
    objects, witness, base = [], {}, {}
    for a in A.objects:
        ws = B.hom(om[a], b) if side == "left" else B.hom(b, om[a])
        for w in ws:
            o = left_label(a, w) if side == "left" else right_label(w, a)
            objects.append(o)
            witness[o] = w
            base[o] = a
    by_a = {}
    for o in objects:
        by_a.setdefault(base[o], []).append(o)
    morphisms, base_mor, key = {}, {}, {}
    identities = {}
    for f, (a, a2) in A.morphisms.items():
        Kf = mm[f]
        for src in by_a.get(a, ()):
            for tgt in by_a.get(a2, ()):
                if side == "left":
                    ok = B.composition[(witness[tgt], Kf)] == witness[src]
                else:
                    ok = B.composition[(Kf, witness[src])] == witness[tgt]
                if not ok:
                    continue
                mid = _comma_morphism(f, src, tgt)
                morphisms[mid] = (src, tgt)
                base_mor[mid] = f
                key[(f, src, tgt)] = mid
                if f == A.identities[a] and src == tgt:
                    identities[src] = mid
    into = {o: [] for o in objects}
    for m, (s, t) in morphisms.items():
        into[t].append(m)
    composition = {}
    for g, (mid_obj, t) in morphisms.items():
        for f in into[mid_obj]:
            s = morphisms[f][0]
            composition[(g, f)] = key[(A.composition[(base_mor[g], base_mor[f])], s, t)]
    name = f"{K.name or 'K'}↓{b}" if side == "left" else f"{b}↓{K.name or 'K'}"
    cat = FinCategory(objects, morphisms, identities, composition, name=name)
    projection = Functor(cat, A, base, base_mor)
    return CommaCategory(cat, projection, witness, side, K, b)


def comma_left(K, b):
    """K↓b: objects (a, w: K a → b); morphisms the A-morphisms f with w'∘K f = w."""
    return _build(K, b, "left")


def comma_right(b, K):
    """b↓K: objects (w: b → K a, a); morphisms the A-morphisms f with K f∘w = w'."""
    return _build(K, b, "right")


def induced_comma_functor(K, g, side, source=None, target=None):
    """For g: b → b', the functor K↓b → K↓b' (left, postcompose with g) or
    b'↓K → b↓K (right, precompose with g).

    Pre-built comma categories may be passed to avoid rebuilding them.
    """
    B = K.target
    B.require_morphism(g)
    b, b2 = B.morphisms[g]
    if side == "left":
        src = source or comma_left(K, b)
        tgt = target or comma_left(K, b2)
        obj = {o: left_label(src.underlying(o), B.composition[(g, w)]) for o, w in src.witnesses.items()}
    elif side == "right":
        src = source or comma_right(b2, K)
        tgt = target or comma_right(b, K)
        obj = {o: right_label(B.composition[(w, g)], src.underlying(o)) for o, w in src.witnesses.items()}
    else:
        raise ValueError(f"unknown side {side!r}")
    mor = {}
    for m, (s, t) in src.cat.morphisms.items():
        f = src.projection.morphism_map[m]
        mor[m] = _comma_morphism(f, obj[s], obj[t])
    return Functor(src.cat, tgt.cat, obj, mor)
