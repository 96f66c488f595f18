"""Pointwise Kan extensions of finite-set-valued functors.

``lan`` takes the colimit of X over each comma category K↓b, ``ran`` the
limit of X over each b↓K.  The action on morphisms of B comes from the
comma functors induced by g: b → b' together with the universal property of
the (co)limit certificates, so every ``ext(g)`` is a factorisation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Mapping

from .category import Functor, is_fully_faithful, nat_transformations, vcompose, whisker_right
from .comma import comma_left, comma_right, induced_comma_functor, left_label, right_label
from .errors import GuardExceeded, KanError, UniversalityError
from .sets import (
    DEFAULT_NATHOM_CAP,
    SetFunctor,
    SetNatTrans,
    colimit,
    encode,
    find_natural_iso,
    limit,
    nat_hom,
)


@dataclass(frozen=True)
class KanExtension:
    direction: str  # "left" or "right"
    K: Functor
    X: Any  # SetFunctor, or Functor for finite-category targets
    ext: Any
    mediator: Any  # unit X ⇒ ext∘K (left) or counit ext∘K ⇒ X (right)
    certificates: Mapping[str, Any] = field(repr=False)
    commas: Mapping[str, Any] = field(repr=False)

    @property
    def unit(self):
        if self.direction != "left":
            raise AttributeError("a right extension has a counit, not a unit")
        return self.mediator

    @property
    def counit(self):
        if self.direction != "right":
            raise AttributeError("a left extension has a unit, not a counit")
        return self.mediator


def lan(K, X):
    """Left Kan extension of X: A → FinSet along K: A → B."""
    if X.shape != K.source:
        raise ValueError("lan: X and K have different domains")
    B = K.target
    commas = {b: comma_left(K, b) for b in B.objects}
    certs = {b: colimit(X.precompose(commas[b].projection)) for b in B.objects}
    fns = {}
    for g, (b, b2) in B.morphisms.items():
        I = induced_comma_functor(K, g, "left", commas[b], commas[b2])
        target = certs[b2]
        legs = {j: {x: target.coprojection(I.object_map[j], x) for x in X.sets[commas[b].underlying(j)]}
                for j in commas[b].cat.objects}
        fns[g] = certs[b].factor(target.apex, legs)
    ext = SetFunctor(B, {b: certs[b].apex for b in B.objects}, fns, name=f"Lan_{K.name}({X.name})" if K.name or X.name else "")
    A = K.source
    comps = {}
    for a in A.objects:
        Ka = K.object_map[a]
        j = left_label(a, B.identities[Ka])
        comps[a] = {x: certs[Ka].coprojection(j, x) for x in X.sets[a]}
    unit = SetNatTrans(X, ext.precompose(K), comps)
    return KanExtension("left", K, X, ext, unit, certs, commas)


def ran(K, X):
    """Right Kan extension of X: A → FinSet along K: A → B."""
    if X.shape != K.source:
        raise ValueError("ran: X and K have different domains")
    B = K.target
    commas = {b: comma_right(b, K) for b in B.objects}
    certs = {b: limit(X.precompose(commas[b].projection)) for b in B.objects}
    fns = {}
    for g, (b, b2) in B.morphisms.items():
        I = induced_comma_functor(K, g, "right", commas[b2], commas[b])
        source = certs[b]
        # cone from ext(b) over the diagram at b': reindex each family along I
        legs = {j2: {lab: source.project(lab, I.object_map[j2]) for lab in source.apex}
                for j2 in commas[b2].cat.objects}
        fns[g] = certs[b2].factor(source.apex, legs)
    ext = SetFunctor(B, {b: certs[b].apex for b in B.objects}, fns, name=f"Ran_{K.name}({X.name})" if K.name or X.name else "")
    A = K.source
    comps = {}
    for a in A.objects:
        Ka = K.object_map[a]
        j = right_label(B.identities[Ka], a)
        comps[a] = {lab: certs[Ka].project(lab, j) for lab in certs[Ka].apex}
    counit = SetNatTrans(ext.precompose(K), X, comps)
    return KanExtension("right", K, X, ext, counit, certs, commas)


def transformations(F, G, cap=DEFAULT_NATHOM_CAP):
    """All transformations F ⇒ G for set functors or functors into a finite category."""
    if isinstance(F, SetFunctor):
        return nat_hom(F, G, cap=cap)
    return list(nat_transformations(F, G))


def nat_key(alpha):
    """Hashable canonical form of a transformation's components."""
    comps = alpha.components
    if comps and isinstance(next(iter(comps.values())), Mapping):
        return tuple((a, tuple(sorted(c.items()))) for a, c in sorted(comps.items()))
    return tuple(sorted(comps.items()))


def factorizations(kan, Lp, mediator_p, cap=DEFAULT_NATHOM_CAP):
    """Every α with η' = αK∘η (left) or γ = ε∘αK (right), by full enumeration."""
    K = kan.K
    target = nat_key(mediator_p)
    if kan.direction == "left":
        candidates = transformations(kan.ext, Lp, cap)
        return [alpha for alpha in candidates
                if nat_key(vcompose(whisker_right(alpha, K), kan.mediator)) == target]
    candidates = transformations(Lp, kan.ext, cap)
    return [alpha for alpha in candidates
            if nat_key(vcompose(kan.mediator, whisker_right(alpha, K))) == target]


def verify_universal(kan, Lp, mediator_p, cap=DEFAULT_NATHOM_CAP):
    """Return the unique transformation through which ``mediator_p`` factors.

    Raises :class:`UniversalityError` when there is no factorisation or more
    than one.
    """
    survivors = factorizations(kan, Lp, mediator_p, cap)
    if len(survivors) != 1:
        what = "no factorisation" if not survivors else f"{len(survivors)} factorisations"
        raise UniversalityError(f"universal property violated: {what}", len(survivors))
    return survivors[0]


@dataclass(frozen=True)
class HomBijectionReport:
    direction: str
    lhs_count: int  # |C^B(Lan X, H)| or |C^B(H, Ran X)|
    rhs_count: int  # |C^A(X, HK)| or |C^A(HK, X)|
    injective: bool
    bijective: bool
    witness: Any = None  # a collision or a missed element when not bijective

    def __bool__(self):
        return self.bijective

    def as_dict(self):
        return {"direction": self.direction, "lhs_count": self.lhs_count, "rhs_count": self.rhs_count,
                "injective": self.injective, "bijective": self.bijective}


def hom_bijection_check(kan, H, cap=DEFAULT_NATHOM_CAP):
    """Check that α ↦ αK∘η (left) or β ↦ ε∘βK (right) is a bijection."""
    K = kan.K
    HK = H.precompose(K)
    if kan.direction == "left":
        lhs = transformations(kan.ext, H, cap)
        rhs = transformations(kan.X, HK, cap)
        images = [vcompose(whisker_right(alpha, K), kan.mediator) for alpha in lhs]
    else:
        lhs = transformations(H, kan.ext, cap)
        rhs = transformations(HK, kan.X, cap)
        images = [vcompose(kan.mediator, whisker_right(beta, K)) for beta in lhs]
    keys = [nat_key(t) for t in images]
    rhs_keys = {nat_key(t) for t in rhs}
    seen, witness, injective = {}, None, True
    for i, k in enumerate(keys):
        if k in seen:
            injective = False
            witness = {"collision": [seen[k], i]}
            break
        seen[k] = i
    bijective = injective and len(lhs) == len(rhs) and set(keys) == rhs_keys
    if injective and not bijective:
        missed = rhs_keys - set(keys)
        witness = {"missed": len(missed)}
    return HomBijectionReport(kan.direction, len(lhs), len(rhs), injective, bijective, witness)


# -- endofunctors of finite sets, for preservation checks ------------------


class HomFunctor:
    """hom(c, -) on finite sets; a function c → Y is labelled by its image tuple."""

    def __init__(self, c):
        self.c = tuple(c)

    def on_set(self, Y):
        return tuple(encode(*imgs) for imgs in itertools.product(Y, repeat=len(self.c)))

    def on_fn(self, f, dom, cod):
        return {encode(*imgs): encode(*(f[y] for y in imgs)) for imgs in itertools.product(dom, repeat=len(self.c))}

    def __repr__(self):
        return f"hom({len(self.c)}, -)"


class ProductFunctor:
    """- × c on finite sets (left adjoint to hom(c, -))."""

    def __init__(self, c):
        self.c = tuple(c)

    def on_set(self, Y):
        return tuple(encode(y, k) for y in Y for k in self.c)

    def on_fn(self, f, dom, cod):
        return {encode(y, k): encode(f[y], k) for y in dom for k in self.c}

    def __repr__(self):
        return f"- x {len(self.c)}"


class IdentityEndofunctor:
    def on_set(self, Y):
        return tuple(Y)

    def on_fn(self, f, dom, cod):
        return dict(f)

    def __repr__(self):
        return "identity"


class UnsupportedFunctor(KanError):
    code = "unsupported-functor"


class TabulatedEndofunctor:
    """An endofunctor given by explicit tables on a finite full subcategory of
    finite sets.  ``objects`` maps label tuples to label tuples; ``arrows``
    maps ``(dom, cod, images)`` to a function table."""

    def __init__(self, objects, arrows):
        self.objects = {tuple(k): tuple(v) for k, v in objects.items()}
        self.arrows = {(tuple(d), tuple(c), tuple(i)): dict(t) for (d, c, i), t in arrows.items()}

    def on_set(self, Y):
        try:
            return self.objects[tuple(Y)]
        except KeyError:
            raise UnsupportedFunctor(f"tabulated functor undefined on set {tuple(Y)}") from None

    def on_fn(self, f, dom, cod):
        key = (tuple(dom), tuple(cod), tuple(f[y] for y in dom))
        try:
            return self.arrows[key]
        except KeyError:
            raise UnsupportedFunctor(f"tabulated functor undefined on function {key}") from None


def apply_endofunctor(G, X):
    """G∘X for an endofunctor G of finite sets."""
    C = X.shape
    sets = {a: G.on_set(X.sets[a]) for a in C.objects}
    fns = {f: G.on_fn(X.fns[f], X.sets[d], X.sets[c]) for f, (d, c) in C.morphisms.items()}
    return SetFunctor(C, sets, fns)


def apply_endofunctor_nat(G, alpha):
    """Gα for an endofunctor G of finite sets."""
    F, H = alpha.source, alpha.target
    comps = {a: G.on_fn(c, F.sets[a], H.sets[a]) for a, c in alpha.components.items()}
    return SetNatTrans(apply_endofunctor(G, F), apply_endofunctor(G, H), comps)


@dataclass(frozen=True)
class PreservationReport:
    functor: str
    direction: str
    iso_found: bool
    mediated: Any  # True/False when the mediator check ran, None if guarded out
    detail: str = ""

    @property
    def holds(self):
        return self.iso_found and self.mediated is not False

    def __bool__(self):
        return self.holds

    def as_dict(self):
        return {"functor": self.functor, "direction": self.direction, "iso_found": self.iso_found,
                "mediated": self.mediated, "holds": self.holds, "detail": self.detail}


def preservation_check(G, kan, cap=DEFAULT_NATHOM_CAP):
    """Does G preserve ``kan``?  Compares the extension of G∘X with G∘ext.

    ``mediated`` additionally checks that (G∘ext, Gη) (or Gε) is itself
    universal, i.e. the unique comparison transformation is invertible.
    """
    GX = apply_endofunctor(G, kan.X)
    other = (lan if kan.direction == "left" else ran)(kan.K, GX)
    Gext = apply_endofunctor(G, kan.ext)
    iso = find_natural_iso(other.ext, Gext)
    mediated, detail = None, ""
    try:
        Gmed = apply_endofunctor_nat(G, kan.mediator)
        alpha = verify_universal(other, Gext, Gmed, cap)
        mediated = alpha.is_iso()
    except GuardExceeded as exc:
        detail = str(exc)
    except UniversalityError as exc:
        mediated, detail = False, str(exc)
    return PreservationReport(repr(G), kan.direction, iso is not None, mediated, detail)


def pointwise_check(kan, max_size=2, cap=DEFAULT_NATHOM_CAP):
    """Preservation by hom(c, -) for every finite set c with |c| ≤ ``max_size``."""
    return [preservation_check(HomFunctor([str(i) for i in range(n)]), kan, cap) for n in range(max_size + 1)]


def restriction_iso(kan):
    """For fully faithful K, a natural iso ext∘K ≅ X (or ``None``)."""
    if not is_fully_faithful(kan.K):
        raise ValueError("restriction_iso needs a fully faithful K")
    return find_natural_iso(kan.ext.precompose(kan.K), kan.X)
