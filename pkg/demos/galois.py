"""An adjunction recognised by two extension conditions.

L sends 0 < 1 < 2 to 0 < 1 < 1 and R sends 0 < 1 to 0 < 2.  Swapping the
roles breaks the first condition.
"""

from _common import workspace

from kanext.constructions import adjunction_check, hom_adjunction

ws = workspace("galois.json")
for l, r in (("L", "R"), ("swapL", "swapR")):
    L, R = ws.functor(l), ws.functor(r)
    rep = adjunction_check(L, R)
    print(f"{l} ⊣ {r}: condition1={rep.condition1} condition2={rep.condition2} "
          f"(hom-set count says {hom_adjunction(L, R)})")
    if rep.holds:
        print("  unit:", rep.eta.components)
        print("  counit:", rep.epsilon.components)
        print("  triangles:", rep.triangle_left, rep.triangle_right)
