"""Limits as right Kan extensions along I → 1."""

from __future__ import annotations

from dataclasses import dataclass

from ..category import to_terminal
from ..kan import ran
from ..sets import limit


@dataclass(frozen=True)
class LimitComparison:
    ran_size: int
    limit_size: int
    bijection: dict  # Ran value label -> limit label
    commutes: bool

    @property
    def holds(self):
        return self.commutes and self.ran_size == self.limit_size == len(set(self.bijection.values()))

    def as_dict(self):
        return {"ran_size": self.ran_size, "limit_size": self.limit_size,
                "commutes": self.commutes, "holds": self.holds,
                "bijection": dict(sorted(self.bijection.items()))}


def limit_as_ran(D, cap=None):
    """Compare Ran_{I→1}(D) at the point with lim D.

    Each element of the Ran value projects, through the counit-side
    certificate legs at (id, j), to a family of D; that family names a limit
    element.  The map must be a bijection and commute with every projection.
    """
    I = D.shape
    K = to_terminal(I)
    R = ran(K, D)
    (point,) = K.target.objects
    ident = K.target.identities[point]
    cert = R.certificates[point]
    comma = R.commas[point]
    lim = limit(D, cap=cap)
    index = {j: comma.object_for(j, ident) for j in I.objects}
    bij = {}
    commutes = True
    for lab in cert.apex:
        fam = {j: cert.project(lab, index[j]) for j in I.objects}
        target = lim.label_of(fam)
        bij[lab] = target
        if any(lim.project(target, j) != fam[j] for j in I.objects):
            commutes = False
    return LimitComparison(len(cert.apex), len(lim.apex), bij, commutes)
