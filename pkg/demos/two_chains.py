"""Two chains glued at the ends: the join-meet ideal has a squarefree initial ideal."""

from jmlat import build_Lk, certify_radical, groebner_basis, initial_ideal, joinmeet_generators, paper_order

L = build_Lk(3, 2)
print("elements:", " ".join(L.elements))

I = joinmeet_generators(L)
print(f"{len(I.generators)} join-meet binomials, one per incomparable pair:")
for g in I.generators:
    print("  ", g)

gb = groebner_basis(I, paper_order(L))
print("reduced basis has", len(gb), "elements")
print("initial ideal:", ", ".join(initial_ideal(gb).strings()))

cert = certify_radical(L)
print("verdict:", cert.verdict)
