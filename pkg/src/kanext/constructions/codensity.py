"""Codensity monads T = Ran_G(G) of a finite-set-valued functor G: D → FinSet.

The ambient category of finite sets is infinite, so T is materialised only at
probe sets b.  At a set Y the value T(Y) is the limit of G∘π over Y↓G, whose
objects are pairs (d, f: Y → G d).  An element of T(Y) is therefore a family
indexed by such pairs; internally a family is a tuple aligned with the index
list of a :class:`Level`.

Unit and multiplication are the canonical cone factorisations:

* η_Y(y) = (f(y))_{(d, f)}
* μ_Y(z) = (z at (d, proj_{(d, f)}))_{(d, f)}

``Monad.mult_by_uniqueness`` recomputes μ independently, by searching T(b)
for the unique family through which the cone ε∘Tε factors.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from ..category import FinCategory
from ..errors import GuardExceeded, UniversalityError
from ..sets import SetFunctor, encode, finset, limit

DEFAULT_CAP = 10 ** 6


class Level:
    """T(Y) for an enumerated finite set Y (elements may be labels or families)."""

    def __init__(self, G, Y, cap=DEFAULT_CAP):
        self.G = G
        self.Y = tuple(Y)
        self.pos = {y: i for i, y in enumerate(self.Y)}
        D = G.shape
        n = sum(len(G.sets[d]) ** len(self.Y) for d in D.objects)
        if cap is not None and n > cap:
            raise GuardExceeded(f"index set of T at a set of size {len(self.Y)}", n, cap)
        self.keys = [(d, f) for d in D.objects for f in itertools.product(G.sets[d], repeat=len(self.Y))]
        self.key_pos = {k: i for i, k in enumerate(self.keys)}
        self.discrete = all(D.is_identity(u) for u in D.morphisms)
        self._elements = None

    def estimate(self):
        """Upper bound on |T(Y)|: the size of the product over all indices."""
        return math.prod(len(self.G.sets[d]) for d, _ in self.keys)

    def comma_diagram(self):
        """The diagram G∘π on Y↓G, with comma objects in index order."""
        G, D = self.G, self.G.shape
        names = [encode(d, *f) for d, f in self.keys]
        objects = list(names)
        morphisms, identities, composition = {}, {}, {}
        for (d, f), o in zip(self.keys, names):
            for u in D.out_of[d]:
                d2 = D.cod(u)
                t = names[self.key_pos[(d2, tuple(G.fns[u][v] for v in f))]]
                morphisms[f"{u}:{o}"] = (o, t)
            identities[o] = f"{D.identities[d]}:{o}"
        for (d, f), o in zip(self.keys, names):
            for u in D.out_of[d]:
                d2 = D.cod(u)
                f2 = tuple(G.fns[u][v] for v in f)
                o2 = names[self.key_pos[(d2, f2)]]
                for v in D.out_of[d2]:
                    composition[(f"{v}:{o2}", f"{u}:{o}")] = f"{D.composition[(v, u)]}:{o}"
        cat = FinCategory(objects, morphisms, identities, composition)
        base = {o: d for (d, _), o in zip(self.keys, names)}
        sets = {o: G.sets[base[o]] for o in objects}
        fns = {m: G.fns[m.split(":", 1)[0]] for m in morphisms}
        return SetFunctor(cat, sets, fns)

    def elements(self, cap=DEFAULT_CAP):
        if self._elements is None:
            if cap is not None and self.estimate() > cap:
                raise GuardExceeded(f"T at a set of size {len(self.Y)}", self.estimate(), cap)
            self._elements = [tuple(fam) for fam in limit(self.comma_diagram()).families]
            self.elem_pos = {x: i for i, x in enumerate(self._elements)}
        return self._elements

    def eta(self, y):
        i = self.pos[y]
        return tuple(f[i] for _, f in self.keys)

    def is_element(self, fam):
        G, D = self.G, self.G.shape
        for k, (d, f) in enumerate(self.keys):
            for u in D.out_of[d]:
                if D.is_identity(u):
                    continue
                f2 = tuple(G.fns[u][v] for v in f)
                if G.fns[u][fam[k]] != fam[self.key_pos[(D.cod(u), f2)]]:
                    return False
        return True


def projection_table(level, k):
    """proj_k: T(Y) → G d tabulated over the enumerated elements of T(Y)."""
    return tuple(x[k] for x in level.elements())


def reindexing(source, target, h):
    """T(h): T(source.Y) → T(target.Y) for h: source.Y → target.Y, as an index map.

    T(h)(x) at (d, f) is x at (d, f∘h).
    """
    return [source.key_pos[(d, tuple(f[target.pos[h(y)]] for y in source.Y))] for d, f in target.keys]


def apply_reindexing(rho, fam):
    return tuple(fam[i] for i in rho)


def multiplication_index(inner, outer):
    """Index map of μ_Y: T(T Y) → T(Y), where inner = Level(Y) and outer = Level(T Y)."""
    rho = []
    for k, (d, f) in enumerate(inner.keys):
        rho.append(outer.key_pos[(d, projection_table(inner, k))])
    return rho


@dataclass
class LawReport:
    probe: tuple
    size: int
    left_unit: bool
    right_unit: bool
    associativity: bool
    associativity_mode: str
    unit_natural: bool = True
    mult_natural: bool = True
    mult_matches_uniqueness: bool = True
    uniqueness_mode: str = ""
    uniqueness_checked: int = 0
    notes: list = field(default_factory=list)

    @property
    def holds(self):
        return (self.left_unit and self.right_unit and self.associativity and self.unit_natural
                and self.mult_natural and self.mult_matches_uniqueness)

    def as_dict(self):
        return {
            "probe": list(self.probe), "size": self.size, "left_unit": self.left_unit,
            "right_unit": self.right_unit, "associativity": self.associativity,
            "associativity_mode": self.associativity_mode, "unit_natural": self.unit_natural,
            "mult_natural": self.mult_natural, "mult_matches_uniqueness": self.mult_matches_uniqueness,
            "uniqueness_mode": self.uniqueness_mode, "uniqueness_checked": self.uniqueness_checked,
            "holds": self.holds, "notes": list(self.notes),
        }


class Monad:
    """The codensity monad of G, tabulated at the probe sets."""

    def __init__(self, G, probes, cap=DEFAULT_CAP):
        self.G = G
        self.cap = cap
        self.probes = tuple(finset(b) for b in probes)
        self._levels = {}
        self._outer = {}
        self.T = {}
        self.unit = {}
        self.mult = {}
        for b in self.probes:
            L0 = self.level(b)
            E1 = L0.elements(cap)
            self.T[b] = tuple(encode(*x) for x in E1)
            self.unit[b] = {y: encode(*L0.eta(y)) for y in b}
            try:
                L1 = self.outer(b)
                E2 = L1.elements(cap)
            except GuardExceeded:
                continue
            rho = multiplication_index(L0, L1)
            self.mult[b] = {encode(*y): encode(*apply_reindexing(rho, y)) for y in E2}

    def level(self, b):
        if b not in self._levels:
            self._levels[b] = Level(self.G, b, self.cap)
        return self._levels[b]

    def outer(self, b):
        """Level(T b), whose index set is all (d, g: T b → G d)."""
        if b not in self._outer:
            self._outer[b] = Level(self.G, self.level(b).elements(self.cap), self.cap)
        return self._outer[b]

    def size(self, b):
        return len(self.T[finset(b)])

    def mu(self, b):
        """μ_b as a function on families over Level(T b)."""
        L0, L1 = self.level(b), self.outer(b)
        rho = multiplication_index(L0, L1)
        return lambda y: apply_reindexing(rho, y)

    def mult_by_uniqueness(self, b, y):
        """The unique x ∈ T(b) through which the cone ε∘T(ε) at y factors.

        The leg at (d, f) is ε_d ∘ T(proj_{(d,f)}); ε_d reads the index
        (d, id_{G d}).  Raises UniversalityError unless exactly one x fits.
        """
        L0 = self.level(b)
        E1 = L0.elements(self.cap)
        legs = [y[i] for i in self._cone_indices(b)]
        survivors = [x for x in E1 if all(x[k] == v for k, v in enumerate(legs))]
        if len(survivors) != 1:
            raise UniversalityError(f"{len(survivors)} factorisations of the cone at a T²(b) element", len(survivors))
        return survivors[0]

    def _cone_indices(self, b):
        """For each index (d, f) of T(b), the T²(b) index read by ε_d ∘ T(proj_{(d,f)})."""
        cache = self.__dict__.setdefault("_cone_cache", {})
        if b not in cache:
            G = self.G
            L0, L1 = self.level(b), self.outer(b)
            E1 = L0.elements(self.cap)
            out = []
            for k, (d, f) in enumerate(L0.keys):
                Gd = Level(G, G.sets[d], self.cap)
                proj = {x: x[k] for x in E1}
                rho = reindexing(L1, Gd, proj.__getitem__)
                out.append(rho[Gd.key_pos[(d, tuple(G.sets[d]))]])
            cache[b] = out
        return cache[b]

    # -- law checks ---------------------------------------------------------

    def check_laws(self, b, samples=64, seed=0, functions_cap=64):
        b = finset(b)
        L0 = self.level(b)
        E1 = L0.elements(self.cap)
        L1 = self.outer(b)
        mu = self.mu(b)
        report = LawReport(b, len(E1), False, False, False, "")

        # left unit: μ_b ∘ T(η_b) = 1
        t_eta = reindexing(L0, L1, L0.eta)
        report.left_unit = all(mu(apply_reindexing(t_eta, x)) == x for x in E1)
        # right unit: μ_b ∘ η_{T b} = 1
        report.right_unit = all(mu(L1.eta(x)) == x for x in E1)

        E2 = None
        try:
            E2 = L1.elements(self.cap)
        except GuardExceeded as exc:
            report.notes.append(f"T²(b) not enumerable: {exc}")

        report.associativity, report.associativity_mode = self._associativity(b, E2)
        report.mult_matches_uniqueness, report.uniqueness_mode, report.uniqueness_checked = \
            self._uniqueness(b, E2, samples, seed)
        report.unit_natural, report.mult_natural = self._naturality(b, functions_cap)
        return report

    def _associativity(self, b, E2):
        L0, L1 = self.level(b), self.outer(b)
        L0.elements(self.cap)  # fills elem_pos for the table lookups below
        mu = self.mu(b)
        if E2 is not None:
            try:
                L2 = Level(self.G, E2, self.cap)
                E3 = L2.elements(self.cap)
            except GuardExceeded:
                E3 = None
            if E3 is not None:
                mu_table = {y: mu(y) for y in E2}
                t_mu = reindexing(L2, L1, mu_table.__getitem__)
                mu_outer = multiplication_index(L1, L2)
                ok = all(mu(apply_reindexing(t_mu, z)) == mu(apply_reindexing(mu_outer, z)) for z in E3)
                return ok, "exhaustive"

        # Generic element of T³(b): the family whose entry at (d, φ) records (d, φ).
        # T(μ_b) and μ_{T b} only move entries around, so LHS and RHS agree on
        # every z iff they read the same index, i.e. φ_L = φ_R as maps T²(b) → G d.
        def generic(key):
            return ("?", key[0], key[1])

        def t_mu_generic(z):
            # T(μ_b)(z) at (d, g) = z at (d, g∘μ_b)
            return lambda key: z((key[0], lambda y, g=key[1]: self._apply_table(L0, g, mu(y))))

        def mu_outer_generic(z):
            # μ_{T b}(z) at (d, g) = z at (d, proj_{(d, g)})
            return lambda key: z((key[0], lambda y, i=L1.key_pos[key]: y[i]))

        def mu_lazy(w):
            return [w((d, projection_table(L0, k))) for k, (d, f) in enumerate(L0.keys)]

        lhs = mu_lazy(t_mu_generic(generic))
        rhs = mu_lazy(mu_outer_generic(generic))
        if E2 is not None:
            test_points, mode = E2, "generic element of T³(b), compared on all of T²(b)"
        else:
            test_points = [tuple(("?y", i) for i in range(len(L1.keys)))]
            mode = "generic element of T³(b) and of T²(b)"
        ok = True
        for (_, dl, phi_l), (_, dr, phi_r) in zip(lhs, rhs):
            if dl != dr or any(phi_l(y) != phi_r(y) for y in test_points):
                ok = False
                break
        return ok, mode

    @staticmethod
    def _apply_table(level, g, x):
        """Apply g: T(Y) → G d, tabulated over T(Y), to a family that may be symbolic."""
        i = level.elem_pos.get(x) if all(isinstance(v, str) for v in x) else None
        if i is not None:
            return g[i]
        for k in range(len(level.keys)):
            if projection_table(level, k) == g:
                return x[k]
        raise ValueError("cannot apply a non-projection table to a symbolic family")

    def _uniqueness(self, b, E2, samples, seed):
        mu = self.mu(b)
        L0, L1 = self.level(b), self.outer(b)
        if E2 is not None:
            points, mode = E2, "exhaustive"
        else:
            rng = random.Random(seed)
            if L1.discrete:
                G = self.G
                blocks = [(d, sum(1 for k in L1.keys if k[0] == d)) for d in G.shape.objects]
                points = [tuple(v for d, n in blocks for v in rng.choices(G.sets[d], k=n)) for _ in range(samples)]
                mode = f"sampled ({samples} random elements of T²(b))"
            else:
                E1 = L0.elements(self.cap)
                t_eta = reindexing(L0, L1, L0.eta)
                points = [L1.eta(x) for x in E1] + [apply_reindexing(t_eta, x) for x in E1]
                mode = "sampled (images of η and T(η))"
        checked = 0
        for y in points:
            try:
                if self.mult_by_uniqueness(b, y) != mu(y):
                    return False, mode, checked
            except UniversalityError:
                return False, mode, checked
            checked += 1
        return True, mode, checked

    def _naturality(self, b, functions_cap):
        """η and μ natural along every function between probe sets (up to a cap)."""
        unit_ok = mult_ok = True
        for b2 in self.probes:
            if len(b2) ** len(b) > functions_cap:
                continue
            L0, M0 = self.level(b), self.level(b2)
            for images in itertools.product(b2, repeat=len(b)):
                h = dict(zip(b, images))
                th = reindexing(L0, M0, h.__getitem__)
                if any(apply_reindexing(th, L0.eta(y)) != M0.eta(h[y]) for y in b):
                    unit_ok = False
                if b in self.mult and b2 in self.mult:
                    L1, M1 = self.outer(b), self.outer(b2)
                    E1 = L0.elements(self.cap)
                    th_table = {x: apply_reindexing(th, x) for x in E1}
                    tth = reindexing(L1, M1, th_table.__getitem__)
                    mu_b, mu_b2 = self.mu(b), self.mu(b2)
                    if any(mu_b2(apply_reindexing(tth, y)) != th_table[mu_b(y)] for y in L1.elements(self.cap)):
                        mult_ok = False
        return unit_ok, mult_ok


def codensity(G, probes, cap=DEFAULT_CAP):
    """The codensity monad of G materialised at ``probes`` (finite sets)."""
    return Monad(G, probes, cap)
