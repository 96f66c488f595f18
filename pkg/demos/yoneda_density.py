"""Yoneda, coYoneda and density on small functors."""

from _common import workspace

from kanext.constructions import coyoneda_check, density_check, yoneda_check

X = workspace("yoneda.json").setfunctor("X")
for a in X.shape.objects:
    y, c = yoneda_check(X, a), coyoneda_check(X, a)
    print(f"a={a}: |X(a)|={y.value_size} |Nat(H^a, X)|={y.nathom_size} "
          f"|lim|={y.limit_size} coYoneda classes={c.limit_size}")

ws = workspace("density.json")
for name in ("sizes21", "terminal", "H1"):
    rep = density_check(ws.setfunctor(name))
    print(f"{name}: rebuilt sizes {rep.reconstructed_sizes}, canonical iso={rep.canonical_iso}")
