"""Canonical JSON output and independent re-verification of certificates."""

from __future__ import annotations

import json

from .decomposition import certify_prime
from .groebner import Ideal, MonomialIdeal, groebner_basis, initial_ideal, is_groebner, is_squarefree
from .joinmeet import joinmeet_generators
from .lattice import Lattice, Poset, is_distributive, verify_isomorphism
from .polyring import VariableSet, order_from_dict, parse_polynomial

__all__ = ["SCHEMA", "dumps", "recheck"]

SCHEMA = 1


def dumps(payload: dict) -> str:
    """Stable JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _lattice(data) -> Lattice:
    return Lattice(data["elements"], [tuple(c) for c in data["covers"]])


def _poset(data) -> Poset:
    return Poset(data["elements"], [tuple(c) for c in data["covers"]])


def recheck(cert: dict) -> tuple[bool, str]:
    """Replay the reductions a certificate's verdict depends on.

    Only data stored in the certificate is used (plus the lattice it embeds),
    so a tampered basis or initial ideal is detected.
    """
    kind = cert.get("kind")
    if cert.get("schema") != SCHEMA:
        return False, f"unsupported schema {cert.get('schema')!r}"
    if kind in ("radicality", "groebner"):
        L = _lattice(cert["lattice"])
        V = VariableSet(L.elements)
        order = order_from_dict(cert["order_spec"], V)
        basis = [parse_polynomial(t, V) for t in cert["basis"]]
        if not basis:
            ok = not joinmeet_generators(L).generators
            return ok, "empty basis" if ok else "basis missing"
        check = is_groebner(basis, order)
        if not check.ok:
            return False, f"S-pair {check.failing_pair} leaves {check.remainder}"
        I = joinmeet_generators(L)
        if groebner_basis(I, order).basis != groebner_basis(Ideal(basis, V), order).basis:
            return False, "basis does not generate the join-meet ideal"
        init = MonomialIdeal.from_strings(V, cert["initial_ideal"])
        if init != initial_ideal(groebner_basis(Ideal(basis, V), order)):
            return False, "initial ideal mismatch"
        if kind == "radicality" and cert["verdict"] == "RadicalBySquarefree" and not is_squarefree(init):
            return False, "verdict claims squarefree but initial ideal is not"
        return True, "replayed"
    if kind == "decomposition":
        from .families import build_Lk

        n, m, r = cert["params"]
        L = build_Lk(n, m, r)
        V = VariableSet(L.elements)
        for p in cert["primes"]:
            ideal = Ideal([parse_polynomial(t, V) for t in p["generators"]], V, p["ideal"])
            if certify_prime(ideal).method != p["method"]:
                return False, f"prime certificate mismatch for {p['ideal']}"
        stored = [parse_polynomial(t, V) for t in cert["intersection_basis"]]
        same = groebner_basis(Ideal(stored, V)).basis == groebner_basis(joinmeet_generators(L)).basis
        if same != cert["equality"]:
            return False, "equality verdict does not replay"
        return True, "replayed"
    if kind == "gorenstein":
        from .structure import RankReport, join_irreducibles

        L = _lattice(cert["lattice"])
        rank = cert["rank"]
        P = _poset(rank["poset"])
        if P != join_irreducibles(L):
            return False, "join-irreducible poset does not match the lattice"
        if not RankReport(P, rank["pure"], rank["rank"], rank["witness"]).validate():
            return False, "rank evidence does not validate"
        if cert["distributive"] != is_distributive(L):
            return False, "distributivity flag does not replay"
        return True, "replayed"
    if kind == "divisor-isomorphism":
        from .families import build_divisor_Lpqk, build_On

        k, p, q = (cert["params"][x] for x in "kpq")
        O, D = build_On(2 * k), build_divisor_Lpqk(p, q, k)
        h1, h2 = cert["h1_map"], cert["h2_map"]
        ok = (
            bool(verify_isomorphism(O, D, h1))
            and bool(verify_isomorphism(D, O, h2))
            and all(h2[h1[x]] == x for x in O.elements)
        )
        return (ok == cert["verdict"]), "replayed" if ok == cert["verdict"] else "verdict does not replay"
    if kind == "basis-check":
        L = _lattice(cert["lattice"])
        V = VariableSet(L.elements)
        order = order_from_dict(cert["order_spec"], V)
        polys = [parse_polynomial(t, V) for t in cert["polynomials"]]
        if is_groebner(polys, order).ok != cert["is_groebner"]:
            return False, "S-pair verdict does not replay"
        return True, "replayed"
    if kind == "claim":
        inner = cert["payload"].get("certificate") or cert["payload"].get("report")
        if inner is None:
            return True, "no embedded certificate"
        return recheck(inner)
    return False, f"no recheck procedure for kind {kind!r}"
