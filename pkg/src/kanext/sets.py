"""Functors into finite sets: limits, colimits, representables and hom enumeration.

A finite set is a tuple of distinct string labels.  Functions between finite
sets are dicts from labels to labels.  Labels produced by the engine (limit
families, colimit classes, pairs) are compact JSON so they never collide.
"""

from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass, field
from typing import Mapping

from .category import FinCategory, Functor, opposite, vcompose
from .errors import GuardExceeded, ValidationError, Violation

DEFAULT_NATHOM_CAP = 10 ** 6
REFINE_ABOVE = 16  # iso search refines colours only past this many elements


def encode(*parts):
    """Canonical label for a tuple of labels."""
    return json.dumps(list(parts), ensure_ascii=False, separators=(",", ":"))


def finset(labels):
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise ValidationError("finite set", [Violation("duplicate-id", f"duplicate labels in {labels}", labels)])
    return labels


def compose_fns(g, f):
    return {x: g[y] for x, y in f.items()}


@dataclass(frozen=True)
class SetFunctor:
    shape: FinCategory
    sets: Mapping[str, tuple]
    fns: Mapping[str, Mapping[str, str]]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sets", {a: tuple(v) for a, v in dict(self.sets).items()})
        object.__setattr__(self, "fns", {f: dict(v) for f, v in dict(self.fns).items()})
        violations = _set_functor_violations(self)
        if violations:
            raise ValidationError(f"set functor {self.name!r}" if self.name else "set functor", violations)

    @classmethod
    def _trusted(cls, shape, sets, fns, name=""):
        self = object.__new__(cls)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "fns", fns)
        object.__setattr__(self, "name", name)
        return self

    @property
    def source(self):
        return self.shape

    def __call__(self, a):
        return self.sets[a]

    def fn(self, f):
        return self.fns[f]

    def precompose(self, K):
        """``self ∘ K`` for a functor K into the shape."""
        if K.target != self.shape:
            raise ValueError("precompose: K does not land in the shape")
        return SetFunctor._trusted(K.source,
                                   {a: self.sets[K.object_map[a]] for a in K.source.objects},
                                   {f: self.fns[K.morphism_map[f]] for f in K.source.morphisms})

    def sizes(self):
        return {a: len(v) for a, v in self.sets.items()}

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<SetFunctor{label} on {self.shape!r}: {self.sizes()}>"


def _set_functor_violations(X):
    C = X.shape
    out = []
    for a in C.objects:
        if a not in X.sets:
            out.append(Violation("missing-object", f"no set at {a!r}", (a,)))
        elif len(set(X.sets[a])) != len(X.sets[a]):
            out.append(Violation("duplicate-id", f"duplicate labels at {a!r}", (a,)))
    if out:
        return out
    for f, (d, c) in C.morphisms.items():
        fn = X.fns.get(f)
        if fn is None:
            out.append(Violation("missing-morphism", f"no function for {f!r}", (f,)))
            continue
        cod = set(X.sets[c])
        if set(fn) != set(X.sets[d]) or any(y not in cod for y in fn.values()):
            out.append(Violation("dom-cod-mismatch", f"function for {f!r} is not a total map X({d}) -> X({c})", (f,)))
    if out:
        return out
    for a in C.objects:
        if any(k != v for k, v in X.fns[C.identities[a]].items()):
            out.append(Violation("identity-not-preserved", f"identity not preserved at {a!r}", (a,)))
    for (g, f), gf in C.composition.items():
        if compose_fns(X.fns[g], X.fns[f]) != X.fns[gf]:
            out.append(Violation("composition-not-preserved", f"composition not preserved on ({g}, {f})", (g, f)))
    return out


def set_functor(shape, sets, fns=None, name=""):
    """Build a :class:`SetFunctor`, filling in identities and empty functions when omitted."""
    fns = {f: dict(v) for f, v in (fns or {}).items()}
    sets = {a: finset(v) for a, v in sets.items()}
    for a in shape.objects:
        if a in sets:
            fns.setdefault(shape.identities[a], {x: x for x in sets[a]})
    for f, (a, _) in shape.morphisms.items():
        if a in sets and not sets[a]:
            fns.setdefault(f, {})
    return SetFunctor(shape, sets, fns, name=name)


def constant_set_functor(shape, labels, name=""):
    labels = finset(labels)
    ident = {x: x for x in labels}
    return SetFunctor(shape, {a: labels for a in shape.objects}, {f: ident for f in shape.morphisms}, name=name)


def set_functor_from_functor(F, values):
    """Compose a functor F: A → C with a set functor on C."""
    return values.precompose(F)


# -- transformations between set functors -----------------------------------


@dataclass(frozen=True)
class SetNatTrans:
    source: SetFunctor
    target: SetFunctor
    components: Mapping[str, Mapping[str, str]]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", {a: dict(v) for a, v in dict(self.components).items()})
        violations = _set_nat_violations(self)
        if violations:
            raise ValidationError(f"transformation {self.name!r}" if self.name else "transformation", violations)

    @classmethod
    def _trusted(cls, source, target, components, name=""):
        self = object.__new__(cls)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "name", name)
        return self

    def __getitem__(self, a):
        return self.components[a]

    def is_iso(self):
        return all(len(set(c.values())) == len(c) == len(self.target.sets[a])
                   for a, c in self.components.items())

    def inverse(self):
        return SetNatTrans._trusted(self.target, self.source,
                                    {a: {y: x for x, y in c.items()} for a, c in self.components.items()})

    def __repr__(self):
        return f"<SetNatTrans {self.components}>"


def _set_nat_violations(alpha):
    F, G = alpha.source, alpha.target
    if F.shape != G.shape:
        return [Violation("not-parallel", "set functors have different shapes")]
    C = F.shape
    out = []
    for a in C.objects:
        comp = alpha.components.get(a)
        if comp is None:
            out.append(Violation("missing-component", f"no component at {a!r}", (a,)))
            continue
        target = set(G.sets[a])
        if set(comp) != set(F.sets[a]) or any(y not in target for y in comp.values()):
            out.append(Violation("component-type", f"component at {a!r} is not a map F({a}) -> G({a})", (a,)))
    if out:
        return out
    for f, (a, a2) in C.morphisms.items():
        Ff, Gf = F.fns[f], G.fns[f]
        ca, ca2 = alpha.components[a], alpha.components[a2]
        bad = [x for x in F.sets[a] if Gf[ca[x]] != ca2[Ff[x]]]
        if bad:
            out.append(Violation("naturality", f"naturality square fails for {f!r}: {a}->{a2}", (a, a2)))
    return out


def identity_set_nat(F):
    return SetNatTrans._trusted(F, F, {a: {x: x for x in v} for a, v in F.sets.items()})


@vcompose.register
def _(beta: SetNatTrans, alpha):
    if alpha.target != beta.source:
        raise ValueError("vertical composition: endpoints do not match")
    return SetNatTrans._trusted(alpha.source, beta.target,
                                {a: compose_fns(beta.components[a], c) for a, c in alpha.components.items()})


# -- limits and colimits ----------------------------------------------------


@dataclass(frozen=True)
class ConeCert:
    apex: tuple
    legs: Mapping[str, Mapping[str, str]]  # shape object -> (apex -> D(j)) or (D(j) -> apex)


@dataclass(frozen=True)
class LimitResult:
    diagram: SetFunctor
    cert: ConeCert
    families: tuple  # embedding into the product, aligned with cert.apex

    @property
    def apex(self):
        return self.cert.apex

    def project(self, label, j):
        return self.cert.legs[j][label]

    def label_of(self, family):
        """Apex element for a family given as {object: element}."""
        fam = tuple(family[j] for j in self.diagram.shape.objects)
        return self._index[fam]

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = dict(zip(self.families, self.cert.apex))
            object.__setattr__(self, "_idx", idx)
        return idx

    def factor(self, apex, legs):
        """The unique map ``apex -> limit`` through which the cone ``legs`` factors."""
        objs = self.diagram.shape.objects
        return {y: self._index[tuple(legs[j][y] for j in objs)] for y in apex}


@dataclass(frozen=True)
class ColimitResult:
    diagram: SetFunctor
    cert: ConeCert
    classes: tuple  # partition of the disjoint union, aligned with cert.apex

    @property
    def apex(self):
        return self.cert.apex

    def coprojection(self, j, x):
        return self.cert.legs[j][x]

    def factor(self, apex, legs):
        """The unique map ``colimit -> apex`` induced by the cocone ``legs``.

        Raises ``ValueError`` if ``legs`` is not constant on some class.
        """
        out = {}
        for label, members in zip(self.cert.apex, self.classes):
            values = {legs[j][x] for j, x in members}
            if len(values) != 1:
                raise ValueError(f"cocone not constant on class {label}")
            out[label] = values.pop()
        return out


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[y] = x


def limit(D, cap=None):
    """Limit of a finite diagram of finite sets: all compatible families."""
    C = D.shape
    objs = C.objects
    if cap is not None:
        estimate = math.prod(len(D.sets[j]) for j in objs)
        if estimate > cap:
            raise GuardExceeded("limit", estimate, cap)
    pos = {j: k for k, j in enumerate(objs)}
    # constraints checked once both ends are assigned, attached to the later end
    checks = [[] for _ in objs]
    for f, (j, j2) in C.morphisms.items():
        if f == C.identities[j]:
            continue
        checks[max(pos[j], pos[j2])].append((pos[j], pos[j2], D.fns[f]))
    families = []
    current = [None] * len(objs)

    def search(k):
        if k == len(objs):
            families.append(tuple(current))
            return
        for x in D.sets[objs[k]]:
            current[k] = x
            if all(fn[current[s]] == current[t] for s, t, fn in checks[k]):
                search(k + 1)
        current[k] = None

    search(0)
    apex = tuple(encode(*fam) for fam in families)
    legs = {j: {label: fam[k] for label, fam in zip(apex, families)} for k, j in enumerate(objs)}
    return LimitResult(D, ConeCert(apex, legs), tuple(families))


def colimit(D):
    """Colimit of a finite diagram of finite sets: quotient of the disjoint union.

    Classes are labelled by their least member in (object order, element order).
    """
    C = D.shape
    points = [(j, x) for j in C.objects for x in D.sets[j]]
    order = {p: k for k, p in enumerate(points)}
    uf = UnionFind(points)
    for f, (j, j2) in C.morphisms.items():
        if f == C.identities[j]:
            continue
        fn = D.fns[f]
        for x in D.sets[j]:
            uf.union((j, x), (j2, fn[x]))
    groups = {}
    for p in points:
        groups.setdefault(uf.find(p), []).append(p)
    classes = sorted(groups.values(), key=lambda members: order[members[0]])
    apex = tuple(encode(*members[0]) for members in classes)
    legs = {j: {} for j in C.objects}
    for label, members in zip(apex, classes):
        for j, x in members:
            legs[j][x] = label
    return ColimitResult(D, ConeCert(apex, legs), tuple(tuple(m) for m in classes))


# -- representables ---------------------------------------------------------


def representable(C, c, variance="co"):
    """H^c = C(c, -) (``variance="co"``) or H_c = C(-, c) on C^op (``"contra"``)."""
    C.require_object(c)
    if variance == "co":
        sets = {x: C.hom(c, x) for x in C.objects}
        fns = {f: {h: C.composition[(f, h)] for h in C.hom(c, d)} for f, (d, _) in C.morphisms.items()}
        return SetFunctor(C, sets, fns, name=f"H^{c}")
    if variance == "contra":
        Cop = opposite(C)
        sets = {x: C.hom(x, c) for x in C.objects}
        # f: x -> y in C acts C(y, c) -> C(x, c) by precomposition
        fns = {f: {h: C.composition[(h, f)] for h in C.hom(y, c)} for f, (x, y) in C.morphisms.items()}
        return SetFunctor(Cop, sets, fns, name=f"H_{c}")
    raise ValueError(f"unknown variance {variance!r}")


# -- enumeration of transformations ----------------------------------------


def nathom_estimate(F, G):
    return math.prod(len(G.sets[a]) ** len(F.sets[a]) for a in F.shape.objects)


def _object_order(C):
    """Objects with codomains before domains where the morphisms allow it.

    A component at a is then checked against the already fixed component at
    the target of every arrow out of a, so naturality prunes early.
    """
    out = {a: {C.cod(f) for f in C.out_of[a] if C.cod(f) != a} for a in C.objects}
    order, placed = [], set()
    while len(order) < len(C.objects):
        ready = [a for a in C.objects if a not in placed and out[a] <= placed]
        if not ready:  # a cycle: take the remaining object with fewest open targets
            ready = [min((a for a in C.objects if a not in placed), key=lambda a: len(out[a] - placed))]
        for a in ready:
            order.append(a)
            placed.add(a)
    return order


def _variable_order(F):
    """Elements (a, x) of F, each placed as soon as it is linked to a placed one.

    Two elements are linked when a morphism sends one to the other.  Greedy
    most-linked-first keeps every new choice under a naturality check; ties
    follow the object order of :func:`_object_order`.
    """
    C = F.shape
    base = [(a, x) for a in _object_order(C) for x in F.sets[a]]
    rank = {v: k for k, v in enumerate(base)}
    links = {v: set() for v in base}
    for f, (a, a2) in C.morphisms.items():
        if f == C.identities[a]:
            continue
        for x in F.sets[a]:
            u, w = (a, x), (a2, F.fns[f][x])
            if u != w:
                links[u].add(w)
                links[w].add(u)
    score = {v: 0 for v in base}
    heap = [(0, rank[v], v) for v in base]
    heapq.heapify(heap)
    order, placed = [], set()
    while heap:
        neg, _, v = heapq.heappop(heap)
        if v in placed or -neg != score[v]:
            continue
        order.append(v)
        placed.add(v)
        for w in links[v]:
            if w not in placed:
                score[w] += 1
                heapq.heappush(heap, (-score[w], rank[w], w))
    return order


def _colours(F, G):
    """Colour refinement on the elements of F and G with one shared palette.

    Elements of the same colour in F and G are the only candidates for each
    other under a natural isomorphism.
    """
    C = F.shape
    points = [(side, a, x) for side, X in ((0, F), (1, G)) for a in C.objects for x in X.sets[a]]
    fibres = {}
    for side, X in ((0, F), (1, G)):
        for f in C.morphisms:
            fib = fibres[(side, f)] = {}
            for z, x in X.fns[f].items():
                fib.setdefault(x, []).append(z)
    colour = {p: p[1] for p in points}
    while True:
        sig = {}
        for side, a, x in points:
            X = F if side == 0 else G
            outs = tuple(colour[(side, C.cod(f), X.fns[f][x])] for f in C.out_of[a])
            ins = tuple(
                tuple(sorted(colour[(side, C.dom(f), z)] for z in fibres[(side, f)].get(x, ())))
                for f in C.into[a]
            )
            sig[(side, a, x)] = (colour[(side, a, x)], outs, ins)
        palette = {s: i for i, s in enumerate(sorted(set(sig.values()), key=repr))}
        new = {p: palette[sig[p]] for p in points}
        if len(set(new.values())) == len(set(colour.values())):
            return new
        colour = new


def _search_transformations(F, G, bijective=False):
    """Element-wise backtracking over component values with naturality pruning.

    Variables are elements of F in :func:`_variable_order`.  When a variable
    is linked to an assigned one its candidates come straight from G: the
    single forced image, or a fibre of G(f).
    """
    C = F.shape
    variables = _variable_order(F)
    n = len(variables)
    pos = {v: k for k, v in enumerate(variables)}
    checks = [[] for _ in variables]
    fibres = {}
    for f, (a, a2) in C.morphisms.items():
        if f == C.identities[a]:
            continue
        Ff, Gf = F.fns[f], G.fns[f]
        fib = fibres[f] = {}
        for y, y2 in Gf.items():
            fib.setdefault(y2, []).append(y)
        for x in F.sets[a]:
            s, t = pos[(a, x)], pos[(a2, Ff[x])]
            checks[max(s, t)].append((s, t, Gf, fib))
    if bijective and n > REFINE_ABOVE:
        colour = _colours(F, G)
        buckets = {}
        for a in C.objects:
            for y in G.sets[a]:
                buckets.setdefault((a, colour[(1, a, y)]), []).append(y)
        keys = [(a, colour[(0, a, x)]) for a, x in variables]
        if any(key not in buckets for key in keys):
            return
        domains = [buckets[key] for key in keys]
        bucket_sets = {key: set(v) for key, v in buckets.items()}
        allowed = [bucket_sets[key] for key in keys]
    else:
        domains = [list(G.sets[a]) for a, _ in variables]
        allowed = None
        if bijective and any(len(F.sets[a]) != len(G.sets[a]) for a in C.objects):
            return
    owner = [a for a, _ in variables]
    values = [None] * n
    used = {a: set() for a in C.objects}

    def candidates(k):
        best = domains[k]
        for s, t, Gf, fib in checks[k]:
            if s == t:
                continue
            if t == k:  # the value is forced: G(f)(value at s)
                opts = [Gf[values[s]]]
            else:  # value at k must lie over the value at t
                opts = fib.get(values[t], [])
            if len(opts) < len(best):
                best = opts
            if len(best) <= 1:
                break
        if allowed is not None and best is not domains[k]:
            best = [y for y in best if y in allowed[k]]
        return best

    stack = [None] * (n + 1)  # per depth: (candidate list, next index)
    k = 0
    if n:
        stack[0] = [candidates(0), 0]
    while k >= 0:
        if k == n:
            comps = {a: {} for a in C.objects}
            for (a, x), y in zip(variables, values):
                comps[a][x] = y
            yield {a: {x: comps[a][x] for x in F.sets[a]} for a in C.objects}
            k -= 1
            if bijective and k >= 0:
                used[owner[k]].discard(values[k])
            continue
        frame = stack[k]
        opts, i = frame
        placed = False
        while i < len(opts):
            y = opts[i]
            i += 1
            if bijective and y in used[owner[k]]:
                continue
            values[k] = y
            if all(Gf[values[s]] == values[t] for s, t, Gf, _ in checks[k]):
                placed = True
                break
        frame[1] = i
        if placed:
            if bijective:
                used[owner[k]].add(values[k])
            k += 1
            if k < n:
                stack[k] = [candidates(k), 0]
        else:
            values[k] = None
            k -= 1
            if bijective and k >= 0:
                used[owner[k]].discard(values[k])


def nat_hom(F, G, cap=DEFAULT_NATHOM_CAP):
    """Every natural transformation F ⇒ G, in a deterministic order."""
    if F.shape != G.shape:
        raise ValueError("nat_hom: functors have different shapes")
    if cap is not None:
        estimate = nathom_estimate(F, G)
        if estimate > cap:
            raise GuardExceeded("nat_hom", estimate, cap)
    return [SetNatTrans._trusted(F, G, comps) for comps in _search_transformations(F, G)]


def find_natural_iso(F, G, cap=None):
    """A natural isomorphism F ⇒ G, or ``None`` if there is none."""
    if F.shape != G.shape:
        raise ValueError("find_natural_iso: functors have different shapes")
    if any(len(F.sets[a]) != len(G.sets[a]) for a in F.shape.objects):
        return None
    if cap is not None:
        estimate = math.prod(math.factorial(len(F.sets[a])) for a in F.shape.objects)
        if estimate > cap:
            raise GuardExceeded("find_natural_iso", estimate, cap)
    for comps in _search_transformations(F, G, bijective=True):
        return SetNatTrans._trusted(F, G, comps)
    return None


# -- category of elements ---------------------------------------------------


def pair_label(a, x):
    return f"({a},{x})"


def elements_category(F, variance="contra"):
    """∫F with its projection functor.

    For a presheaf (``variance="contra"``, F a set functor on C^op) a morphism
    (c, x) → (c', x') is f: c → c' in C with F(f)(x') = x.  For a covariant F
    it is f: c → c' with F(f)(x) = x'.
    """
    if variance == "contra":
        C = opposite(F.shape)
    elif variance == "co":
        C = F.shape
    else:
        raise ValueError(f"unknown variance {variance!r}")
    objects = [pair_label(c, x) for c in C.objects for x in F.sets[c]]
    base_obj = {pair_label(c, x): c for c in C.objects for x in F.sets[c]}
    morphisms, base_mor, identities = {}, {}, {}
    by_underlying = {}
    for f, (c, c2) in C.morphisms.items():
        fn = F.fns[f]
        if variance == "contra":
            pairs = [(fn[x2], x2) for x2 in F.sets[c2]]
        else:
            pairs = [(x, fn[x]) for x in F.sets[c]]
        for x, x2 in pairs:
            src, tgt = pair_label(c, x), pair_label(c2, x2)
            mid = f"{f}:{src}->{tgt}"
            morphisms[mid] = (src, tgt)
            base_mor[mid] = f
            by_underlying[(f, src, tgt)] = mid
            if f == C.identities[c]:
                identities[src] = mid
    into = {o: [] for o in objects}
    for f, (s, t) in morphisms.items():
        into[t].append(f)
    composition = {}
    for g, (m, t) in morphisms.items():
        for f in into[m]:
            s = morphisms[f][0]
            composition[(g, f)] = by_underlying[(C.composition[(base_mor[g], base_mor[f])], s, t)]
    E = FinCategory(objects, morphisms, identities, composition, name=f"∫{F.name}" if F.name else "")
    projection = Functor(E, C, base_obj, base_mor)
    return E, projection
