"""Join-irreducibles, order ideals, pureness, and the divisor-lattice isomorphism."""

from __future__ import annotations

from dataclasses import dataclass, field

from .families import build_divisor_Lpqk, build_On, canonical_h_maps
from .lattice import Lattice, Poset, is_distributive, verify_isomorphism

__all__ = [
    "join_irreducibles",
    "birkhoff",
    "birkhoff_map",
    "maximal_chains",
    "RankReport",
    "rank_report",
    "GorensteinReport",
    "gorenstein_report",
    "DivisorIsomorphismCertificate",
    "verify_divisor_isomorphism",
]


def join_irreducibles(L: Lattice) -> Poset:
    """Elements covering exactly one element, with the induced order."""
    return L.subposet(x for x in L.elements if len(L.lower_covers(x)) == 1)


def _ideal_name(P: Poset, members) -> str:
    return "{" + ",".join(sorted(members, key=P.index)) + "}"


def birkhoff(P: Poset) -> Lattice:
    """Lattice of down-sets of ``P`` ordered by inclusion.

    Element ids are the down-sets written as ``{x,y}``, members in ``P``'s
    element order.
    """
    ideals = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for D in frontier:
            for x in P.elements:
                if x not in D and P.down_set(x) - {x} <= D:
                    E = D | {x}
                    if E not in ideals:
                        ideals.add(E)
                        nxt.append(E)
        frontier = nxt
    ordered = sorted(ideals, key=lambda D: (len(D), sorted(P.index(x) for x in D)))
    names = [_ideal_name(P, D) for D in ordered]
    relations = [
        (names[i], names[j])
        for i, D in enumerate(ordered)
        for j, E in enumerate(ordered)
        if len(E) == len(D) + 1 and D < E
    ]
    return Lattice(names, relations)


def birkhoff_map(L: Lattice) -> dict[str, str]:
    """``x -> {p join-irreducible : p <= x}`` as ids of ``birkhoff(join_irreducibles(L))``."""
    P = join_irreducibles(L)
    return {x: _ideal_name(P, [p for p in P.elements if L.leq(p, x)]) for x in L.elements}


def maximal_chains(P: Poset) -> list[list[str]]:
    out = []

    def walk(chain):
        ups = P.upper_covers(chain[-1])
        if not ups:
            out.append(chain)
        for y in ups:
            walk(chain + [y])

    for x in P.minimal_elements():
        walk([x])
    return out


@dataclass
class RankReport:
    poset: Poset
    pure: bool
    rank: dict[str, int] | None = None
    witness: dict = field(default_factory=dict)

    def validate(self) -> bool:
        P = self.poset
        if self.pure:
            if self.rank is None or set(self.rank) != set(P.elements):
                return False
            if any(self.rank[x] != 0 for x in P.minimal_elements()):
                return False
            return all(self.rank[hi] == self.rank[lo] + 1 for lo, hi in P.covers)
        chains = self.witness.get("chains")
        if not chains or len(chains) != 2:
            return False
        maximal = {tuple(c) for c in maximal_chains(P)}
        if any(tuple(c) not in maximal for c in chains):
            return False
        if len(chains[0]) == len(chains[1]):
            return False
        conflict = self.witness.get("conflict")
        if conflict:
            for path in conflict["paths"]:
                if path[-1] != conflict["element"] or path[0] not in P.minimal_elements():
                    return False
                if any((lo, hi) not in set(P.covers) for lo, hi in zip(path, path[1:])):
                    return False
            if len({len(p) for p in conflict["paths"]}) != 2:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "rank",
            "poset": self.poset.to_dict(),
            "pure": self.pure,
            "rank": self.rank,
            "witness": self.witness,
        }


def _saturated_paths(P: Poset, x: str) -> list[list[str]]:
    """All saturated chains from a minimal element up to ``x``."""
    lows = P.lower_covers(x)
    if not lows:
        return [[x]]
    return [p + [x] for y in lows for p in _saturated_paths(P, y)]


def rank_report(P: Poset) -> RankReport:
    """Pureness by maximal-chain enumeration, with a checkable witness."""
    chains = maximal_chains(P)
    lengths = {len(c) for c in chains}
    if len(lengths) <= 1:
        rank = {x: P.height(x) for x in P.elements}
        return RankReport(P, True, rank)
    short = min(chains, key=len)
    long_ = max(chains, key=len)
    witness: dict = {"chains": [short, long_], "lengths": [len(short) - 1, len(long_) - 1]}
    for x in P.elements:
        paths = _saturated_paths(P, x)
        by_len = {len(p) - 1: p for p in paths}
        if len(by_len) > 1:
            hi, lo = max(by_len), min(by_len)
            witness["conflict"] = {"element": x, "paths": [by_len[hi], by_len[lo]], "ranks": [hi, lo]}
            break
    return RankReport(P, False, None, witness)


@dataclass
class GorensteinReport:
    lattice: Lattice
    join_irreducibles: Poset
    distributive: bool
    rank: RankReport

    @property
    def pure(self) -> bool:
        return self.rank.pure

    @property
    def verdict(self) -> str:
        if not self.distributive:
            return "NotApplicable"
        return "GorensteinByPureness" if self.pure else "NotGorenstein"

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "gorenstein",
            "verdict": self.verdict,
            "lattice": self.lattice.to_dict(),
            "distributive": self.distributive,
            "pure": self.pure,
            "join_irreducibles": self.join_irreducibles.to_dict(),
            "rank": self.rank.to_dict(),
        }


def gorenstein_report(L: Lattice) -> GorensteinReport:
    """Rule application: a distributive lattice's Hibi ring is Gorenstein iff its join-irreducible poset is pure."""
    P = join_irreducibles(L)
    return GorensteinReport(L, P, is_distributive(L), rank_report(P))


@dataclass
class DivisorIsomorphismCertificate:
    params: tuple[int, int, int]
    forward: dict
    backward: dict
    h21_identity: bool
    h12_identity: bool
    sizes: tuple[int, int]
    maps: tuple[dict, dict]

    @property
    def verdict(self) -> bool:
        return bool(
            self.forward["verdict"] and self.backward["verdict"] and self.h21_identity and self.h12_identity
        )

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> dict:
        k, p, q = self.params
        return {
            "schema": 1,
            "kind": "divisor-isomorphism",
            "params": {"k": k, "p": p, "q": q},
            "verdict": self.verdict,
            "sizes": list(self.sizes),
            "h1": self.forward,
            "h2": self.backward,
            "h2_after_h1_is_identity": self.h21_identity,
            "h1_after_h2_is_identity": self.h12_identity,
            "h1_map": self.maps[0],
            "h2_map": self.maps[1],
        }


def verify_divisor_isomorphism(k: int, p: int, q: int) -> DivisorIsomorphismCertificate:
    """Check that the explicit maps are mutually inverse order isomorphisms O_{2k} <-> L_{p,q,k}."""
    O = build_On(2 * k)
    D = build_divisor_Lpqk(p, q, k)
    h1, h2 = canonical_h_maps(k, p, q)
    fwd = verify_isomorphism(O, D, h1).to_dict()
    bwd = verify_isomorphism(D, O, h2).to_dict()
    h21 = all(h2.get(h1[x]) == x for x in O.elements)
    h12 = all(h1.get(h2[y]) == y for y in D.elements)
    return DivisorIsomorphismCertificate((k, p, q), fwd, bwd, h21, h12, (len(O), len(D)), (h1, h2))
