"""Yoneda, coYoneda and density checks at explicit finite functors."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..category import identity_functor
from ..comma import comma_left, comma_right
from ..sets import (
    DEFAULT_NATHOM_CAP,
    SetFunctor,
    colimit,
    elements_category,
    find_natural_iso,
    limit,
    nat_hom,
    pair_label,
    representable,
)


@dataclass
class YonedaReport:
    obj: str
    value_size: int  # |X(a)|
    limit_size: int  # |lim over a↓A of XΠ|, or the coYoneda colimit
    nathom_size: int | None  # |Nat(H^a, X)|, None for coYoneda
    bijective: bool  # the explicit maps are bijections

    @property
    def holds(self):
        sizes = {self.value_size, self.limit_size}
        if self.nathom_size is not None:
            sizes.add(self.nathom_size)
        return self.bijective and len(sizes) == 1

    def as_dict(self):
        return {"object": self.obj, "value_size": self.value_size, "limit_size": self.limit_size,
                "nathom_size": self.nathom_size, "bijective": self.bijective, "holds": self.holds}


def yoneda_check(X, a, cap=DEFAULT_NATHOM_CAP):
    """X(a) ≅ lim_{a↓A} XΠ ≅ Nat(H^a, X), with explicit maps.

    x ↦ (X(w)(x))_{(w, a')} into the limit, and α ↦ α_a(id_a) out of Nat.
    """
    A = X.shape
    A.require_object(a)
    comma = comma_right(a, identity_functor(A))
    lim = limit(X.precompose(comma.projection))
    to_lim = {}
    for x in X.sets[a]:
        fam = {o: X.fns[w][x] for o, w in comma.witnesses.items()}
        to_lim[x] = lim.label_of(fam)
    alphas = nat_hom(representable(A, a), X, cap=cap)
    ida = A.identities[a]
    from_nat = [alpha.components[a][ida] for alpha in alphas]
    bijective = (len(set(to_lim.values())) == len(X.sets[a]) == len(lim.apex)
                 and sorted(from_nat) == sorted(X.sets[a]))
    return YonedaReport(a, len(X.sets[a]), len(lim.apex), len(alphas), bijective)


def coyoneda_check(X, a):
    """colim_{A↓a} XΠ ≅ X(a): the class of (b, w, x) goes to X(w)(x)."""
    A = X.shape
    A.require_object(a)
    comma = comma_left(identity_functor(A), a)
    col = colimit(X.precompose(comma.projection))
    legs = {o: {x: X.fns[w][x] for x in X.sets[comma.underlying(o)]} for o, w in comma.witnesses.items()}
    try:
        out = col.factor(X.sets[a], legs)
    except ValueError:
        return YonedaReport(a, len(X.sets[a]), len(col.apex), None, False)
    bijective = sorted(out.values()) == sorted(X.sets[a])
    return YonedaReport(a, len(X.sets[a]), len(col.apex), None, bijective)


@dataclass
class DensityReport:
    sizes: dict  # object -> |F(c)|
    reconstructed_sizes: dict  # object -> |colim_{∫F} H_c'(c)|
    canonical_iso: bool  # the comparison class(c', x, h) ↦ F(h)(x) is a natural bijection
    iso_found: bool  # find_natural_iso succeeded independently
    reconstruction: SetFunctor = field(repr=False, default=None)

    @property
    def holds(self):
        return self.canonical_iso and self.iso_found

    def as_dict(self):
        return {"sizes": dict(sorted(self.sizes.items())),
                "reconstructed_sizes": dict(sorted(self.reconstructed_sizes.items())),
                "canonical_iso": self.canonical_iso, "iso_found": self.iso_found, "holds": self.holds}


def density_check(F, cap=None):
    """Rebuild the presheaf F (a set functor on C^op) as colim_{(c', x) ∈ ∫F} H_{c'}.

    The colimit is taken objectwise: at c it is over ∫F of C(c, c'), with
    f: (c', x) → (c'', x') acting by postcomposition.
    """
    E, proj = elements_category(F, "contra")
    C = proj.target
    certs, comparison = {}, {}
    element_of = {pair_label(c, x): x for c in C.objects for x in F.sets[c]}
    for c in C.objects:
        sets = {o: C.hom(c, proj.object_map[o]) for o in E.objects}
        fns = {m: {h: C.composition[(proj.morphism_map[m], h)] for h in sets[E.dom(m)]} for m in E.morphisms}
        col = colimit(SetFunctor(E, sets, fns))
        certs[c] = col
        legs = {}
        for o in E.objects:
            legs[o] = {h: F.fns[h][element_of[o]] for h in sets[o]}
        try:
            comparison[c] = col.factor(F.sets[c], legs)
        except ValueError:
            comparison[c] = None
    # R(g) for g: c0 → c1 maps classes of h: c1 → c' to classes of h∘g
    fns = {}
    for g, (c0, c1) in C.morphisms.items():
        legs = {o: {h: certs[c0].coprojection(o, C.composition[(h, g)]) for h in C.hom(c1, proj.object_map[o])}
                for o in E.objects}
        fns[g] = certs[c1].factor(certs[c0].apex, legs)
    R = SetFunctor(F.shape, {c: certs[c].apex for c in C.objects}, fns)
    canonical = all(comparison[c] is not None and sorted(comparison[c].values()) == sorted(F.sets[c])
                    for c in C.objects)
    if canonical:
        # naturality of the comparison: F(g)∘φ_{c1} = φ_{c0}∘R(g)
        canonical = all(F.fns[g][comparison[c1][r]] == comparison[c0][fns[g][r]]
                        for g, (c0, c1) in C.morphisms.items() for r in R.sets[c1])
    iso = find_natural_iso(R, F, cap=cap) is not None
    return DensityReport(F.sizes(), R.sizes(), canonical, iso, R)

