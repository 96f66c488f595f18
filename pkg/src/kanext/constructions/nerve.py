"""Realization and nerve for a functor into a finite category."""

from __future__ import annotations

from dataclasses import dataclass

from ..category import compose_functors, opposite
from ..errors import NoColimit
from ..finite import colimit_in
from ..sets import DEFAULT_NATHOM_CAP, SetFunctor, elements_category, nat_hom, pair_label


@dataclass
class NerveReport:
    realization: str | None  # |X| as an object of E, None if the colimit is missing
    e: str
    hom_size: int | None  # |E(|X|, e)|
    nathom_size: int | None  # |Nat(X, R_e)|
    bijective: bool
    detail: str = ""

    @property
    def holds(self):
        return self.bijective

    def as_dict(self):
        return {"realization": self.realization, "e": self.e, "hom_size": self.hom_size,
                "nathom_size": self.nathom_size, "bijective": self.bijective, "detail": self.detail}


def nerve(F, e):
    """R_e = E(F(-), e) as a presheaf on the source of F."""
    C, E = F.source, F.target
    E.require_object(e)
    sets = {c: E.hom(F.object_map[c], e) for c in C.objects}
    # g: c → c' acts E(F c', e) → E(F c, e) by h ↦ h∘F(g)
    fns = {g: {h: E.composition[(h, F.morphism_map[g])] for h in sets[c2]}
           for g, (c, c2) in C.morphisms.items()}
    return SetFunctor(opposite(C), sets, fns, name=f"N_{e}")


def realization(F, X):
    """|X| = colim over ∫X of F∘Π, as a universal cocone in the target of F."""
    _, proj = elements_category(X, "contra")
    return colimit_in(compose_functors(F, proj))


def nerve_realization(F, X, e, cap=DEFAULT_NATHOM_CAP):
    """Check E(|X|, e) ≅ Nat(X, R_e) through u ↦ (u ∘ leg_{(c, x)})."""
    E = F.target
    E.require_object(e)
    try:
        cocone = realization(F, X)
    except NoColimit as exc:
        return NerveReport(None, e, None, None, False, str(exc))
    R = nerve(F, e)
    alphas = nat_hom(X, R, cap=cap)
    targets = {tuple(sorted((c, tuple(sorted(comp.items()))) for c, comp in a.components.items())) for a in alphas}
    C = F.source
    images = []
    for u in E.hom(cocone.apex, e):
        comps = {c: {x: E.composition[(u, cocone.legs[pair_label(c, x)])] for x in X.sets[c]} for c in C.objects}
        images.append(tuple(sorted((c, tuple(sorted(comp.items()))) for c, comp in comps.items())))
    bijective = len(set(images)) == len(images) == len(alphas) and set(images) == targets
    return NerveReport(cocone.apex, e, len(images), len(alphas), bijective)
