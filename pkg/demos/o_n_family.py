"""The distributive family O_n: Birkhoff representation and an impure poset."""

from jmlat import (
    birkhoff,
    birkhoff_map,
    build_On,
    check_distributive_via_gb,
    gorenstein_report,
    join_irreducibles,
    rank_report,
    verify_isomorphism,
)

for n in (4, 6, 8):
    L = build_On(n)
    P = join_irreducibles(L)
    B = birkhoff(P)
    iso = verify_isomorphism(L, B, birkhoff_map(L))
    print(f"O_{n}: {len(L)} elements, join-irreducibles {' '.join(P.elements)}")
    print(f"  distributive via basis: {check_distributive_via_gb(L)}, Birkhoff iso: {iso.verdict}")
    rep = rank_report(P)
    if not rep.pure:
        short, long_ = rep.witness["chains"]
        print(f"  maximal chains of different length: {short} vs {long_}")
    print("  Hibi ring:", gorenstein_report(L).verdict)
