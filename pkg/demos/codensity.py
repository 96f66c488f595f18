"""The codensity monad of a two-element set.

For G picking S = {s0, s1}, T(b) = S^(S^b): the continuation monad.  Laws
are checked element by element where the sets allow it.
"""

from _common import workspace

from kanext.constructions import codensity

ws = workspace("codensity.json")
G = ws.setfunctor("two")
M = codensity(G, [[f"y{i}" for i in range(n)] for n in range(3)])
for b in M.probes:
    rep = M.check_laws(b)
    print(f"|b|={len(b)}: |T(b)|={M.size(b)} laws hold={rep.holds}")
    print(f"  associativity via {rep.associativity_mode}; μ vs uniqueness: {rep.uniqueness_mode}")

single = codensity(ws.setfunctor("single"), [["y"]])
print("one-element S, |b|=1: |T(b)| =", single.size(["y"]))
