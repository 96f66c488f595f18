"""Adjunctions recognised through two left Kan extension conditions.

L ⊣ R exactly when Lan_L(1_A) ≅ R and L∘Lan_L(1_A) ≅ Lan_L(L), the second
iso being the canonical comparison.  Both extensions take values in finite
categories, so they come from :func:`kanext.finite.lan_in`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..category import (
    compose_functors,
    find_functor_iso,
    identity_functor,
    identity_nat,
    is_iso,
    vcompose,
    whisker_left,
    whisker_right,
)
from ..errors import NoColimit, UniversalityError
from ..finite import lan_in
from ..kan import KanExtension, nat_key, verify_universal


@dataclass
class AdjunctionReport:
    L: Any
    R: Any
    condition1: bool
    condition2: bool
    eta: Any = None
    epsilon: Any = None
    triangle_left: bool | None = None  # εL ∘ Lη = 1_L
    triangle_right: bool | None = None  # Rε ∘ ηR = 1_R
    witness: dict = field(default_factory=dict)

    @property
    def holds(self):
        return self.condition1 and self.condition2

    def as_dict(self):
        out = {"condition1": self.condition1, "condition2": self.condition2, "holds": self.holds,
               "triangle_left": self.triangle_left, "triangle_right": self.triangle_right,
               "witness": self.witness}
        if self.eta is not None:
            out["eta"] = dict(sorted(self.eta.components.items()))
        if self.epsilon is not None:
            out["epsilon"] = dict(sorted(self.epsilon.components.items()))
        return out


def _table(F):
    return dict(sorted(F.object_map.items()))


def adjunction_check(L, R):
    """Decide L ⊣ R for L: A → B, R: B → A between finite categories."""
    A, B = L.source, L.target
    if R.source != B or R.target != A:
        raise ValueError("adjunction_check: need L: A → B and R: B → A")
    report = AdjunctionReport(L, R, False, False)

    # condition (1): Lan_L(1_A) ≅ R
    phi = None
    try:
        lan1 = lan_in(L, identity_functor(A))
    except NoColimit as exc:
        report.witness["condition1"] = {"reason": "no-colimit", "message": str(exc)}
    else:
        phi = find_functor_iso(lan1.ext, R)
        report.condition1 = phi is not None
        if phi is None:
            report.witness["condition1"] = {"lan": _table(lan1.ext), "R": _table(R)}

    # condition (2): the comparison Lan_L(L) ⇒ L∘R is invertible
    LR = compose_functors(L, R)
    try:
        lan2 = lan_in(L, L)
    except NoColimit as exc:
        report.witness["condition2"] = {"reason": "no-colimit", "message": str(exc)}
        return report
    if phi is None:
        report.condition2 = find_functor_iso(lan2.ext, LR) is not None
        if not report.condition2:
            report.witness["condition2"] = {"lan": _table(lan2.ext), "LR": _table(LR)}
        return report

    eta = vcompose(whisker_right(phi, L), lan1.unit)  # 1_A ⇒ R∘L
    L_eta = whisker_left(L, eta)  # L ⇒ L∘R∘L
    try:
        alpha = verify_universal(lan2, LR, L_eta)
    except UniversalityError as exc:
        report.witness["condition2"] = {"reason": "universality", "message": str(exc)}
        return report
    report.condition2 = all(is_iso(B, c) for c in alpha.components.values())
    if not report.condition2:
        report.witness["condition2"] = {"comparison": dict(sorted(alpha.components.items()))}
        return report

    # ε from the universal property of (L∘R, Lη) applied to (1_B, 1_L)
    universal = KanExtension("left", L, L, LR, L_eta, {}, {})
    epsilon = verify_universal(universal, identity_functor(B), identity_nat(L))
    report.eta, report.epsilon = eta, epsilon
    left = vcompose(whisker_right(epsilon, L), L_eta)
    right = vcompose(whisker_left(R, epsilon), whisker_right(eta, R))
    report.triangle_left = nat_key(left) == nat_key(identity_nat(L))
    report.triangle_right = nat_key(right) == nat_key(identity_nat(R))
    return report


def hom_adjunction(L, R):
    """The hom-set definition for posets: |B(L a, b)| = |A(a, R b)| for all a, b.

    On posets naturality is automatic, so equal counts decide adjointness.
    """
    A, B = L.source, L.target
    return all(len(B.hom(L.object_map[a], b)) == len(A.hom(a, R.object_map[b]))
               for a in A.objects for b in B.objects)
