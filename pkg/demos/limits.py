"""Limits are right Kan extensions along the functor to the point."""

from _common import workspace

from kanext import colimit, limit
from kanext.constructions import limit_as_ran

ws = workspace("limits.json")
for name in ("product", "equalizer", "pullback", "nothing"):
    D = ws.setfunctor(name)
    cmp = limit_as_ran(D)
    print(f"{name:10} lim={len(limit(D).apex)} Ran={cmp.ran_size} colim={len(colimit(D).apex)} "
          f"bijection commutes: {cmp.commutes}")
