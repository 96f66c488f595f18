"""Both extensions along {0, 2} ⊂ 0 < 1 < 2, and their universal properties."""

from _common import show_functor, workspace

from kanext import hom_bijection_check, lan, ran, verify_universal

ws = workspace("chain_inclusion.json")
K, X = ws.functor("inc"), ws.setfunctor("xfun")

L, R = lan(K, X), ran(K, X)
print("Lan: colimits over K↓b")
show_functor(L.ext)
print("Ran: limits over b↓K")
show_functor(R.ext)

# The extension factors through itself only via the identity.
alpha = verify_universal(L, L.ext, L.unit)
print("Lan factors through itself via the identity:", alpha.is_iso())

H = ws.setfunctor("probe")
for kan in (L, R):
    rep = hom_bijection_check(kan, H)
    print(f"{kan.direction}: {rep.lhs_count} maps on B, {rep.rhs_count} on A, bijective={rep.bijective}")
