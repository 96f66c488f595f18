"""Finite categories, functors and natural transformations given by explicit tables.

Everything here is validated on construction: a :class:`FinCategory`,
:class:`Functor` or :class:`NatTrans` that exists satisfies the axioms.
Identifiers are opaque strings and equality is identifier equality.

Composition is keyed ``(g, f)`` meaning ``g`` after ``f``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, singledispatch
from typing import Mapping

from .errors import NotFound, ValidationError, Violation


@dataclass(frozen=True)
class FinCategory:
    objects: tuple
    morphisms: Mapping[str, tuple]  # id -> (dom, cod), in declaration order
    identities: Mapping[str, str]
    composition: Mapping[tuple, str]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "morphisms", {m: tuple(dc) for m, dc in dict(self.morphisms).items()})
        object.__setattr__(self, "identities", dict(self.identities))
        object.__setattr__(self, "composition", {tuple(k): v for k, v in dict(self.composition).items()})
        violations = _category_violations(self)
        if violations:
            raise ValidationError(f"category {self.name!r}" if self.name else "category", violations)

    def dom(self, f):
        return self.morphisms[f][0]

    def cod(self, f):
        return self.morphisms[f][1]

    def identity(self, a):
        return self.identities[a]

    def compose(self, *fs):
        """``compose(h, g, f)`` is h∘g∘f."""
        result = fs[-1]
        for g in reversed(fs[:-1]):
            result = self.composition[(g, result)]
        return result

    def hom(self, a, b):
        return self._homs.get((a, b), ())

    def is_identity(self, f):
        return self.identities[self.dom(f)] == f

    @cached_property
    def _homs(self):
        homs = {}
        for f, (d, c) in self.morphisms.items():
            homs.setdefault((d, c), []).append(f)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def out_of(self):
        out = {a: [] for a in self.objects}
        for f, (d, _) in self.morphisms.items():
            out[d].append(f)
        return out

    @cached_property
    def into(self):
        into = {a: [] for a in self.objects}
        for f, (_, c) in self.morphisms.items():
            into[c].append(f)
        return into

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FinCategory{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def __contains__(self, a):
        return a in self.identities

    def require_object(self, a):
        if a not in self.identities:
            raise NotFound(f"object {a!r} not in {self!r}")
        return a

    def require_morphism(self, f):
        if f not in self.morphisms:
            raise NotFound(f"morphism {f!r} not in {self!r}")
        return f


def _category_violations(C):
    out = []
    objs = set(C.objects)
    if len(objs) != len(C.objects):
        dups = sorted({a for a in C.objects if C.objects.count(a) > 1})
        out.append(Violation("duplicate-id", f"duplicate objects {dups}", tuple(dups)))
    for f, (d, c) in C.morphisms.items():
        for end in (d, c):
            if end not in objs:
                out.append(Violation("dangling-reference", f"morphism {f!r} refers to undeclared object {end!r}", (f, end)))
    for a in C.objects:
        i = C.identities.get(a)
        if i is None:
            out.append(Violation("missing-identity", f"object {a!r} has no identity", (a,)))
        elif C.morphisms.get(i) != (a, a):
            out.append(Violation("missing-identity", f"identity {i!r} of {a!r} is not a morphism {a}->{a}", (a, i)))
    for a in C.identities:
        if a not in objs:
            out.append(Violation("dangling-reference", f"identity given for undeclared object {a!r}", (a,)))
    if out:
        return out

    for (g, f), gf in C.composition.items():
        if g not in C.morphisms or f not in C.morphisms or gf not in C.morphisms:
            out.append(Violation("dangling-reference", f"composition entry ({g}, {f}) -> {gf} names unknown morphisms", (g, f, gf)))
            continue
        if C.morphisms[f][1] != C.morphisms[g][0]:
            out.append(Violation("composition-undefined-pair", f"composition defined on non-composable pair ({g}, {f})", (g, f)))
        elif C.morphisms[gf] != (C.morphisms[f][0], C.morphisms[g][1]):
            out.append(Violation("composite-type", f"{g}∘{f} = {gf} has wrong domain/codomain", (g, f, gf)))
    if out:
        return out

    into = {a: [] for a in C.objects}
    for f, (_, c) in C.morphisms.items():
        into[c].append(f)
    out_of = {a: [] for a in C.objects}
    for f, (d, _) in C.morphisms.items():
        out_of[d].append(f)

    for f, (d, c) in C.morphisms.items():
        for g in out_of[c]:
            if (g, f) not in C.composition:
                out.append(Violation("composition-not-total", f"composition not total on composable pair ({g}, {f})", (g, f)))
    if out:
        return out

    for f, (d, c) in C.morphisms.items():
        if C.composition[(f, C.identities[d])] != f or C.composition[(C.identities[c], f)] != f:
            out.append(Violation("identity-law", f"identity law fails for {f!r}", (f,)))

    comp = C.composition
    for f, (_, c) in C.morphisms.items():
        for g in out_of[c]:
            gf = comp[(g, f)]
            for h in out_of[C.morphisms[g][1]]:
                if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                    out.append(Violation("associativity", f"associativity fails for ({h}, {g}, {f})", (h, g, f)))
    return out


def validate_category(raw, infer_identity_compositions=False, name=None):
    """Build a :class:`FinCategory` from a mapping with keys ``objects``,
    ``morphisms``, ``identities`` and ``composition``.

    ``morphisms`` may be a list of ``[id, dom, cod]`` triples or of mappings
    with those keys; ``composition`` a list of ``[g, f, g∘f]`` triples or a
    mapping ``(g, f) -> g∘f``.  Raises :class:`ValidationError` listing every
    violated axiom.
    """
    objects = list(raw["objects"])
    morphisms = {}
    dup_morphisms = []
    for m in _morphism_records(raw.get("morphisms", ())):
        if m[0] in morphisms:
            dup_morphisms.append(m[0])
        morphisms[m[0]] = (m[1], m[2])
    if dup_morphisms:
        raise ValidationError("category", [Violation("duplicate-id", f"duplicate morphism ids {sorted(set(dup_morphisms))}", tuple(dup_morphisms))])
    identities = dict(raw.get("identities", {}))
    comp = raw.get("composition", ())
    if isinstance(comp, Mapping):
        composition = {tuple(k): v for k, v in comp.items()}
    else:
        composition = {}
        for entry in comp:
            g, f, gf = entry
            composition[(g, f)] = gf
    if infer_identity_compositions:
        for f, (d, c) in morphisms.items():
            if d in identities:
                composition.setdefault((f, identities[d]), f)
            if c in identities:
                composition.setdefault((identities[c], f), f)
    return FinCategory(objects, morphisms, identities, composition, name=name or raw.get("name", ""))


def _morphism_records(items):
    for m in items:
        if isinstance(m, Mapping):
            yield (m["id"], m["dom"], m["cod"])
        else:
            yield tuple(m)


def category_from_generators(objects, morphisms, composites=(), name=""):
    """Convenience: add identities ``id_<obj>`` and identity compositions."""
    identities = {a: f"id_{a}" for a in objects}
    mors = {identities[a]: (a, a) for a in objects}
    for m in _morphism_records(morphisms):
        mors[m[0]] = (m[1], m[2])
    raw = {"objects": list(objects), "morphisms": [(k, *v) for k, v in mors.items()],
           "identities": identities, "composition": list(composites)}
    return validate_category(raw, infer_identity_compositions=True, name=name)


def terminal_category():
    return FinCategory(("*",), {"id_*": ("*", "*")}, {"*": "id_*"}, {("id_*", "id_*"): "id_*"}, name="1")


def discrete_category(names, name=None):
    names = [str(n) for n in names]
    return category_from_generators(names, (), name=name or f"discrete{len(names)}")


def chain_category(n, name=None):
    """The poset 0 < 1 < ... < n-1 as a category."""
    if n < 1:
        raise ValueError("chain_category needs n >= 1")
    objs = [str(i) for i in range(n)]

    def arrow(i, j):
        return f"id_{i}" if i == j else f"{i}->{j}"

    morphisms = {arrow(i, j): (objs[i], objs[j]) for i in range(n) for j in range(i, n)}
    identities = {objs[i]: arrow(i, i) for i in range(n)}
    composition = {}
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                composition[(arrow(j, k), arrow(i, j))] = arrow(i, k)
    return FinCategory(objs, morphisms, identities, composition, name=name or f"chain{n}")


def poset_category(elements, leq, name=""):
    """Category of a finite preorder; ``leq(x, y)`` must be reflexive and transitive."""
    elements = [str(e) for e in elements]
    morphisms, identities, composition = {}, {}, {}

    def arrow(x, y):
        return f"id_{x}" if x == y else f"{x}->{y}"

    for x in elements:
        for y in elements:
            if leq(x, y):
                morphisms[arrow(x, y)] = (x, y)
        identities[x] = arrow(x, x)
    for x, y, z in itertools.product(elements, repeat=3):
        if leq(x, y) and leq(y, z):
            composition[(arrow(y, z), arrow(x, y))] = arrow(x, z)
    return FinCategory(elements, morphisms, identities, composition, name=name)


def opposite(A):
    morphisms = {f: (c, d) for f, (d, c) in A.morphisms.items()}
    composition = {(f, g): gf for (g, f), gf in A.composition.items()}
    name = A.name[:-3] if A.name.endswith("^op") else (A.name + "^op" if A.name else "")
    return FinCategory(A.objects, morphisms, A.identities, composition, name=name)


# -- functors ---------------------------------------------------------------


@dataclass(frozen=True)
class Functor:
    source: FinCategory
    target: FinCategory
    object_map: Mapping[str, str]
    morphism_map: Mapping[str, str]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "object_map", dict(self.object_map))
        object.__setattr__(self, "morphism_map", dict(self.morphism_map))
        violations = _functor_violations(self)
        if violations:
            raise ValidationError(f"functor {self.name!r}" if self.name else "functor", violations)

    def ob(self, a):
        return self.object_map[a]

    def ar(self, f):
        return self.morphism_map[f]

    def precompose(self, K):
        """``self ∘ K``."""
        return compose_functors(self, K)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Functor{label}: {self.source!r} -> {self.target!r}>"


def _functor_violations(F):
    A, B = F.source, F.target
    out = []
    for a in A.objects:
        if a not in F.object_map:
            out.append(Violation("missing-object", f"object {a!r} not mapped", (a,)))
        elif F.object_map[a] not in B:
            out.append(Violation("dangling-reference", f"{a!r} mapped to unknown object {F.object_map[a]!r}", (a,)))
    for f in A.morphisms:
        if f not in F.morphism_map:
            out.append(Violation("missing-morphism", f"morphism {f!r} not mapped", (f,)))
        elif F.morphism_map[f] not in B.morphisms:
            out.append(Violation("dangling-reference", f"{f!r} mapped to unknown morphism {F.morphism_map[f]!r}", (f,)))
    if out:
        return out
    om, mm = F.object_map, F.morphism_map
    for f, (d, c) in A.morphisms.items():
        if B.morphisms[mm[f]] != (om[d], om[c]):
            out.append(Violation("dom-cod-mismatch", f"F({f}) = {mm[f]} is not a morphism {om[d]}->{om[c]}", (f,)))
    if out:
        return out
    for a in A.objects:
        if mm[A.identities[a]] != B.identities[om[a]]:
            out.append(Violation("identity-not-preserved", f"identity not preserved at {a!r}", (a,)))
    for (g, f), gf in A.composition.items():
        if mm[gf] != B.composition[(mm[g], mm[f])]:
            out.append(Violation("composition-not-preserved", f"composition not preserved on ({g}, {f})", (g, f)))
    return out


def validate_functor(raw, categories=None, infer_identities=True, name=None):
    """Build a :class:`Functor` from a mapping with ``source``, ``target``,
    ``objects`` and ``morphisms``.  ``source``/``target`` may be category
    names resolved through ``categories``.  Identity morphisms may be omitted.
    """
    A, B = raw["source"], raw["target"]
    if categories is not None:
        A = categories[A] if isinstance(A, str) else A
        B = categories[B] if isinstance(B, str) else B
    om = dict(raw.get("objects", {}))
    mm = dict(raw.get("morphisms", {}))
    if infer_identities:
        for a in A.objects:
            if a in om and om[a] in B:
                mm.setdefault(A.identities[a], B.identities[om[a]])
    return Functor(A, B, om, mm, name=name or raw.get("name", ""))


def identity_functor(A):
    return Functor(A, A, {a: a for a in A.objects}, {f: f for f in A.morphisms}, name=f"1_{A.name}" if A.name else "")


def compose_functors(G, F):
    """``G ∘ F``."""
    if F.target != G.source:
        raise ValueError("functors are not composable")
    return Functor(F.source, G.target,
                   {a: G.object_map[F.object_map[a]] for a in F.source.objects},
                   {f: G.morphism_map[F.morphism_map[f]] for f in F.source.morphisms})


def constant_functor(I, A, a):
    """Δ_a: I → A."""
    A.require_object(a)
    i = A.identities[a]
    return Functor(I, A, {x: a for x in I.objects}, {f: i for f in I.morphisms}, name=f"Δ_{a}")


def point_functor(A, a):
    """The object ``a`` viewed as a functor 1 → A."""
    return constant_functor(terminal_category(), A, a)


def to_terminal(I):
    """The unique functor I → 1."""
    return constant_functor(I, terminal_category(), "*")


def opposite_functor(F):
    return Functor(opposite(F.source), opposite(F.target), F.object_map, F.morphism_map)


def inclusion_functor(A, B):
    """Inclusion of a subcategory whose identifiers are shared with ``B``."""
    return Functor(A, B, {a: a for a in A.objects}, {f: f for f in A.morphisms})


def full_subcategory(B, objects, name=""):
    objects = [a for a in B.objects if a in set(objects)]
    keep = set(objects)
    morphisms = {f: dc for f, dc in B.morphisms.items() if dc[0] in keep and dc[1] in keep}
    composition = {k: v for k, v in B.composition.items() if k[0] in morphisms and k[1] in morphisms}
    return FinCategory(objects, morphisms, {a: B.identities[a] for a in objects}, composition, name=name)


def is_fully_faithful(K):
    A, B = K.source, K.target
    for a in A.objects:
        for a2 in A.objects:
            images = [K.morphism_map[f] for f in A.hom(a, a2)]
            if sorted(images) != sorted(B.hom(K.object_map[a], K.object_map[a2])):
                return False
    return True


def is_iso(C, f):
    d, c = C.morphisms[f]
    return any(C.composition[(g, f)] == C.identities[d] and C.composition[(f, g)] == C.identities[c]
               for g in C.hom(c, d))


def enumerate_functors(A, B):
    """All functors A → B, by backtracking over object then morphism images."""
    objs = A.objects
    non_id = [f for f in A.morphisms if not A.is_identity(f)]
    for images in itertools.product(B.objects, repeat=len(objs)):
        om = dict(zip(objs, images))
        choices = [B.hom(om[A.dom(f)], om[A.cod(f)]) for f in non_id]
        for pick in itertools.product(*choices):
            mm = {A.identities[a]: B.identities[om[a]] for a in objs}
            mm.update(zip(non_id, pick))
            if all(mm[gf] == B.composition[(mm[g], mm[f])] for (g, f), gf in A.composition.items()):
                yield Functor(A, B, om, mm)


# -- natural transformations ------------------------------------------------


@dataclass(frozen=True)
class NatTrans:
    """α: F ⇒ G between functors into a finite category; components are morphisms."""

    source: Functor
    target: Functor
    components: Mapping[str, str]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))
        violations = _nat_violations(self)
        if violations:
            raise ValidationError(f"transformation {self.name!r}" if self.name else "transformation", violations)

    def __getitem__(self, a):
        return self.components[a]

    def __repr__(self):
        return f"<NatTrans {self.components}>"


def _nat_violations(alpha):
    F, G = alpha.source, alpha.target
    if F.source != G.source or F.target != G.target:
        return [Violation("not-parallel", "source and target functors are not parallel")]
    A, B = F.source, F.target
    out = []
    for a in A.objects:
        c = alpha.components.get(a)
        if c is None:
            out.append(Violation("missing-component", f"no component at {a!r}", (a,)))
        elif B.morphisms.get(c) != (F.object_map[a], G.object_map[a]):
            out.append(Violation("component-type", f"component at {a!r} is not a morphism F{a}->G{a}", (a,)))
    if out:
        return out
    for f, (a, a2) in A.morphisms.items():
        if B.composition[(G.morphism_map[f], alpha.components[a])] != B.composition[(alpha.components[a2], F.morphism_map[f])]:
            out.append(Violation("naturality", f"naturality square fails for {f!r}: {a}->{a2}", (a, a2)))
    return out


def validate_nat_trans(raw, functors=None, name=None):
    F, G = raw["source"], raw["target"]
    if functors is not None:
        F = functors[F] if isinstance(F, str) else F
        G = functors[G] if isinstance(G, str) else G
    return NatTrans(F, G, raw["components"], name=name or raw.get("name", ""))


def identity_nat(F):
    return NatTrans(F, F, {a: F.target.identities[F.object_map[a]] for a in F.source.objects})


def whisker_right(alpha, K):
    """αK: LK ⇒ L'K with (αK)_a = α_{K a}.  Works for any transformation type."""
    if alpha.source.source != K.target:
        raise ValueError("whiskering: K does not land in the domain of α")
    comps = {a: alpha.components[K.object_map[a]] for a in K.source.objects}
    return type(alpha)(alpha.source.precompose(K), alpha.target.precompose(K), comps)


def whisker_left(H, alpha):
    """Hα: HF ⇒ HG with (Hα)_a = H(α_a)."""
    if H.source != alpha.source.target:
        raise ValueError("whiskering: H does not start at the codomain of α")
    return NatTrans(compose_functors(H, alpha.source), compose_functors(H, alpha.target),
                    {a: H.morphism_map[c] for a, c in alpha.components.items()})


@singledispatch
def vcompose(beta, alpha):
    """Vertical composite β∘α."""
    raise TypeError(f"cannot compose {type(beta).__name__}")


@vcompose.register
def _(beta: NatTrans, alpha):
    if alpha.target != beta.source:
        raise ValueError("vertical composition: endpoints do not match")
    B = alpha.source.target
    return NatTrans(alpha.source, beta.target,
                    {a: B.composition[(beta.components[a], alpha.components[a])] for a in alpha.components})


def nat_transformations(F, G):
    """All natural transformations F ⇒ G between functors into a finite category."""
    A, B = F.source, F.target
    objs = A.objects
    choices = [B.hom(F.object_map[a], G.object_map[a]) for a in objs]
    comps = {}

    def square_ok(a):
        for f in A.out_of[a]:
            a2 = A.cod(f)
            if a2 in comps and B.composition[(G.morphism_map[f], comps[a])] != B.composition[(comps[a2], F.morphism_map[f])]:
                return False
        for f in A.into[a]:
            a0 = A.dom(f)
            if a0 in comps and B.composition[(G.morphism_map[f], comps[a0])] != B.composition[(comps[a], F.morphism_map[f])]:
                return False
        return True

    def search(k):
        if k == len(objs):
            yield NatTrans(F, G, dict(comps))
            return
        a = objs[k]
        for c in choices[k]:
            comps[a] = c
            if square_ok(a):
                yield from search(k + 1)
            del comps[a]

    yield from search(0)


def find_functor_iso(F, G):
    """A natural isomorphism F ⇒ G with invertible components, or ``None``."""
    B = F.target
    for alpha in nat_transformations(F, G):
        if all(is_iso(B, c) for c in alpha.components.values()):
            return alpha
    return None
