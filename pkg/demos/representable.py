"""A representable functor is a left Kan extension of the point.

Extend the one-point set along c: 1 → C and compare with C(c, -).
"""

from _common import show_functor, workspace

from kanext import lan, representable
from kanext.sets import find_natural_iso

ws = workspace("representable.json")
C = ws.category("chain3")
point = ws.setfunctor("point")

for name in ("c0", "c1"):
    K = ws.functor(name)
    c = K.object_map["*"]
    L = lan(K, point)
    print(f"Lan along {name} (the object {c}):")
    show_functor(L.ext)
    iso = find_natural_iso(L.ext, representable(C, c))
    (x,) = L.unit.components["*"].values()
    print(f"  iso to H^{c}: {iso is not None}; the unit picks {iso.components[c][x]}")
