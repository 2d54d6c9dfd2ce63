"""A glued two-chain lattice: not modular, radical, but the listed basis is incomplete."""

from jmlat import (
    PaperBasisSpec,
    FamilySpec,
    build_L2_glued,
    certify_radical,
    find_forbidden_sublattice,
    is_groebner,
    paper_basis,
    paper_order,
    rank_order,
)

params = (5, 5, 3, 2, 4)
L = build_L2_glued(*params)
w = find_forbidden_sublattice(L, containing=["s", "a1", "b1", "b2", "b3"])
print("pentagon:", w.to_dict()["embedding"])

basis = paper_basis(PaperBasisSpec(FamilySpec("L2Glued", params), "GluedSets"))
for name, order in (("grevlex", paper_order(L)), ("rank-grevlex", rank_order(L))):
    chk = is_groebner(basis, order)
    print(f"{name}: basis closed under S-pairs? {chk.ok}")
    if not chk.ok:
        i, j = chk.failing_pair
        print(f"  pair {basis[i]} | {basis[j]}")
        print(f"  remainder {chk.remainder}")

print("computed basis verdict:", certify_radical(L, rank_order(L)).verdict)
