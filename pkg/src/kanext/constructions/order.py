"""Kan extensions of monotone maps between finite chains.

Along an inclusion Q ⊂ R of chains, Lan sends x to the largest X(q) with
q ≤ x and Ran to the smallest X(q) with q ≥ x.  Both are computed by the
generic finite-target engine, then compared against those formulas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..category import Functor, inclusion_functor
from ..finite import lan_in, ran_in


def leq(C, x, y):
    return bool(C.hom(x, y))


@dataclass
class OrderExtension:
    lan: dict | None  # Rsup object -> V object
    ran: dict | None
    undefined: dict = field(default_factory=dict)  # "left"/"right" -> points with empty approximation
    lan_matches_sup: bool | None = None
    ran_matches_inf: bool | None = None

    @property
    def holds(self):
        return not self.undefined and bool(self.lan_matches_sup) and bool(self.ran_matches_inf)

    def as_dict(self):
        return {"lan": self.lan, "ran": self.ran, "undefined": self.undefined,
                "lan_matches_sup": self.lan_matches_sup, "ran_matches_inf": self.ran_matches_inf,
                "holds": self.holds}


def _extreme(V, values, top):
    best = None
    for v in values:
        if best is None or (leq(V, best, v) if top else leq(V, v, best)):
            best = v
    return best


def sup_table(Qsub, Rsup, X):
    """x ↦ max{X(q) : q ≤ x}; points with nothing below are omitted."""
    V = X.target
    out = {}
    for x in Rsup.objects:
        below = [X.object_map[q] for q in Qsub.objects if leq(Rsup, q, x)]
        if below:
            out[x] = _extreme(V, below, top=True)
    return out


def inf_table(Qsub, Rsup, X):
    V = X.target
    out = {}
    for x in Rsup.objects:
        above = [X.object_map[q] for q in Qsub.objects if leq(Rsup, x, q)]
        if above:
            out[x] = _extreme(V, above, top=False)
    return out


def order_extension(Qsub, Rsup, X):
    """Both extensions of the monotone map X: Qsub → V along Qsub ⊂ Rsup.

    A point with no element of Qsub below it (resp. above it) leaves Lan
    (resp. Ran) undefined; that direction is then reported as ``None``.
    """
    K = inclusion_functor(Qsub, Rsup)
    sup, inf = sup_table(Qsub, Rsup, X), inf_table(Qsub, Rsup, X)
    report = OrderExtension(None, None)
    missing_left = [x for x in Rsup.objects if x not in sup]
    missing_right = [x for x in Rsup.objects if x not in inf]
    if missing_left:
        report.undefined["left"] = missing_left
    else:
        report.lan = dict(lan_in(K, X).ext.object_map)
        report.lan_matches_sup = report.lan == sup
    if missing_right:
        report.undefined["right"] = missing_right
    else:
        report.ran = dict(ran_in(K, X).ext.object_map)
        report.ran_matches_inf = report.ran == inf
    return report


def monotone_maps(P, V):
    """Every monotone map between finite posets, as object tables."""
    objs = P.objects
    for images in itertools.product(V.objects, repeat=len(objs)):
        m = dict(zip(objs, images))
        if all(leq(V, m[a], m[b]) for f, (a, b) in P.morphisms.items()):
            yield m


def extremal_extensions(Qsub, Rsup, X):
    """(least F with F ≥ X on Qsub, greatest F with F ≤ X on Qsub), by enumeration.

    Either entry is ``None`` when no such extremal monotone map exists.
    """
    V = X.target
    above = [m for m in monotone_maps(Rsup, V) if all(leq(V, X.object_map[q], m[q]) for q in Qsub.objects)]
    below = [m for m in monotone_maps(Rsup, V) if all(leq(V, m[q], X.object_map[q]) for q in Qsub.objects)]

    def pick(maps, least):
        for m in maps:
            if all(all(leq(V, m[x], n[x]) if least else leq(V, n[x], m[x]) for x in Rsup.objects) for n in maps):
                return m
        return None

    return pick(above, True), pick(below, False)


def monotone_functor(P, V, table):
    """The functor P → V of a monotone object map between posets."""
    mm = {f: V.hom(table[a], table[b])[0] for f, (a, b) in P.morphisms.items()}
    return Functor(P, V, dict(table), mm)
