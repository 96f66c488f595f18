"""Realization and nerve for the chain 0 < 1 < 2 sent into a diamond lattice."""

from _common import workspace

from kanext.constructions import nerve_realization

ws = workspace("nerve.json")
F = ws.functor("F")
for name in ("X", "empty"):
    X = ws.setfunctor(name)
    for e in F.target.objects:
        rep = nerve_realization(F, X, e)
        print(f"|{name}| = {rep.realization}; E(|{name}|, {e}) has {rep.hom_size}, "
              f"Nat({name}, R_{e}) has {rep.nathom_size}")
