"""Prime components of I_{L_3(n,m,r)} and the four-fold intersection identity.

The identity ``I = E ∩ X ∩ Y ∩ Z`` is checked by comparing reduced Groebner
bases; each component is certified prime by one of two structural
arguments (a variable-generated ideal, or linear identifications plus one
rank-3 quadric).  A finite intersection of primes is radical, which is the
conclusion recorded in :class:`DecompositionCertificate`.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidParams, ResourceLimit, ShapeNotRecognized
from .families import build_Lk
from .groebner import (
    DEFAULT_BUDGET,
    Budget,
    Ideal,
    MonomialIdeal,
    groebner_basis,
    ideal_equal,
    intersect_many,
    intersect_monomial,
)
from .joinmeet import joinmeet_generators, variables_of
from .polyring import Polynomial, VariableSet, parse_polynomial

__all__ = [
    "chain_names",
    "build_E",
    "VariableIntersection",
    "build_XYZ",
    "PrimalityCertificate",
    "certify_prime",
    "quadratic_form_rank",
    "DecompositionCertificate",
    "verify_decomposition",
    "DEFAULT_INSTANCES",
    "EXTENDED_INSTANCES",
    "REFERENCE_COMPONENTS_311",
    "parse_component_listing",
]

DEFAULT_INSTANCES = [(n, 1, 1) for n in range(2, 7)] + [(2, 2, 1), (2, 3, 1), (3, 2, 1), (3, 3, 1), (2, 2, 2)]
EXTENDED_INSTANCES = (
    [(n, 1, 1) for n in range(2, 11)]
    + [(n, m, 1) for n in range(2, 5) for m in range(2, 5)]
    + [(n, m, r) for n in (2, 3) for m in (2, 3) for r in (2, 3)]
)

# Prime components of I_{L_3(3,1,1)} as printed by an external primary
# decomposition run (each entry is [primary, associated prime]).
REFERENCE_COMPONENTS_311 = """
[[[a_1-a_2,a_1-a_3,a_1-b_1,a_1-c_1,t*s-a_1^2],[a_1-a_2,a_1-a_3,a_1-b_1,a_1-c_1,t*s-a_1^2]],
[[a_1,a_2,a_3,b_1,t],[a_1,a_2,a_3,b_1,t]],[[s,a_1,a_2,a_3,b_1],[s,a_1,a_2,a_3,b_1]],
[[a_1,a_2,a_3,c_1,t],[a_1,a_2,a_3,c_1,t]],[[s,a_1,a_2,a_3,c_1],[s,a_1,a_2,a_3,c_1]],
[[b_1,c_1,t],[b_1,c_1,t]],[[s,b_1,c_1],[s,b_1,c_1]]]
"""


def parse_component_listing(text: str, variables: VariableSet) -> set[frozenset[Polynomial]]:
    """Associated primes from a nested ``[[primary, prime], ...]`` listing.

    Variable names like ``a_1`` are read as ``a1``.
    """
    text = re.sub(r"([a-z])_(\d+)", r"\1\2", "".join(text.split()))
    out = set()
    for pair in re.findall(r"\[\[([^\[\]]*)\],\[([^\[\]]*)\]\]", text):
        out.add(frozenset(parse_polynomial(g, variables) for g in pair[1].split(",")))
    return out


def _check(n, m, r):
    for v in (n, m, r):
        if not isinstance(v, int) or v < 1:
            raise InvalidParams(f"chain lengths must be integers >= 1, got {(n, m, r)}")


def chain_names(n, m, r):
    return (
        [f"a{i}" for i in range(1, n + 1)],
        [f"b{i}" for i in range(1, m + 1)],
        [f"c{i}" for i in range(1, r + 1)],
    )


def _variables(n, m, r) -> VariableSet:
    return variables_of(build_Lk(n, m, r))


def build_E(n: int, m: int, r: int) -> Ideal:
    """All middle elements identified with a1, plus ``s*t - a1^2``."""
    _check(n, m, r)
    V = _variables(n, m, r)
    x = {v: Polynomial.variable(V, v) for v in V}
    A, B, C = chain_names(n, m, r)
    others = A[:0:-1] + B[::-1] + C[::-1]
    gens = [x["a1"] - x[v] for v in others] + [x["s"] * x["t"] - x["a1"] ** 2]
    return Ideal(gens, V, label=f"E({n},{m},{r})")


@dataclass
class VariableIntersection:
    """A monomial ideal given as the intersection of two variable ideals."""

    label: str
    primes: tuple[tuple[str, ...], tuple[str, ...]]
    ideal: MonomialIdeal

    def prime_ideals(self) -> list[Ideal]:
        V = self.ideal.variables
        return [
            Ideal([Polynomial.variable(V, v) for v in p], V, label=f"({','.join(p)})") for p in self.primes
        ]


def build_XYZ(n: int, m: int, r: int) -> tuple[VariableIntersection, VariableIntersection, VariableIntersection]:
    _check(n, m, r)
    V = _variables(n, m, r)
    A, B, C = chain_names(n, m, r)

    def make(label, middle):
        lo = tuple(["s"] + middle)
        hi = tuple(middle + ["t"])
        mi = intersect_monomial(
            MonomialIdeal(V, [V.monomial({v: 1}) for v in lo]),
            MonomialIdeal(V, [V.monomial({v: 1}) for v in hi]),
        )
        return VariableIntersection(label, (lo, hi), mi)

    return make(f"X({n},{m})", A + B), make(f"Y({m},{r})", B + C), make(f"Z({n},{r})", A + C)


# -- primality ----------------------------------------------------------------

@dataclass
class PrimalityCertificate:
    label: str
    method: str
    evidence: dict

    def to_dict(self) -> dict:
        return {"ideal": self.label, "method": self.method, "evidence": self.evidence}


def quadratic_form_rank(q: Polynomial) -> tuple[int, list[str], list[list[Fraction]]]:
    """Rank over Q of a homogeneous quadratic form, by exact Gaussian elimination."""
    if not q.is_homogeneous() or q.degree() != 2:
        raise ShapeNotRecognized(f"{q} is not a quadratic form")
    names = q.support()
    pos = {v: i for i, v in enumerate(names)}
    k = len(names)
    M = [[Fraction(0)] * k for _ in range(k)]
    for mono, c in q.coeffs.items():
        idx = [pos[q.vars.names[i]] for i, e in enumerate(mono) for _ in range(e)]
        i, j = idx
        if i == j:
            M[i][i] += c
        else:
            M[i][j] += c / 2
            M[j][i] += c / 2
    work = [row[:] for row in M]
    rank = 0
    for col in range(k):
        piv = next((r for r in range(rank, k) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for r in range(k):
            if r != rank and work[r][col] != 0:
                f = work[r][col] / work[rank][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank, names, M


def _is_variable(g: Polynomial):
    if len(g) != 1:
        return None
    (mono,) = g.monomials()
    if sum(mono) != 1:
        return None
    return g.vars.names[mono.index(1)]


def _is_difference(g: Polynomial):
    if len(g) != 2:
        return None
    coeffs = sorted(g.coeffs.values())
    monos = g.monomials()
    if coeffs != [-1, 1] or any(sum(m) != 1 for m in monos):
        return None
    return tuple(sorted((g.vars.names[m.index(1)] for m in monos), key=g.vars.position.get))


def certify_prime(I: Ideal) -> PrimalityCertificate:
    """Certify primality for a variable ideal or the linear-plus-quadric shape."""
    gens = I.generators
    if not gens:
        raise ShapeNotRecognized("the zero ideal is not handled")
    names = [_is_variable(g) for g in gens]
    if all(names):
        return PrimalityCertificate(I.label, "VariableIdeal", {"variables": sorted(set(names), key=I.variables.position.get)})

    diffs = [_is_difference(g) for g in gens]
    rest = [g for g, d in zip(gens, diffs) if d is None]
    if len(rest) != 1:
        raise ShapeNotRecognized(f"{I.label or I}: expected variable differences plus one polynomial")
    pos = I.variables.position
    parent = {}

    def find(v):
        while parent.get(v, v) != v:
            v = parent[v]
        return v

    for d in diffs:
        if d:
            x, y = find(d[0]), find(d[1])
            if x != y:
                lo, hi = sorted((x, y), key=pos.get)
                parent[hi] = lo
    V = I.variables
    subst = {v: find(v) for v in parent}
    poly_subst = {v: Polynomial.variable(V, rep) for v, rep in subst.items()}
    for g, d in zip(gens, diffs):
        if d and not g.substitute(poly_subst).is_zero():
            raise ShapeNotRecognized(f"linear generator {g} survives the substitution")
    residual = rest[0].substitute(poly_subst)
    if residual.is_zero() or not residual.is_homogeneous() or residual.degree() != 2:
        raise ShapeNotRecognized(f"residual {residual} is not a quadratic form")
    rank, support, _ = quadratic_form_rank(residual)
    if len(support) != 3 or rank != 3:
        raise ShapeNotRecognized(f"residual {residual} is not a rank-3 ternary form (rank {rank})")
    return PrimalityCertificate(
        I.label,
        "LinearSubstitutionPlusIrreducibleQuadric",
        {
            "substitution": dict(sorted(subst.items(), key=lambda kv: pos[kv[0]])),
            "residual": residual.to_str(),
            "residual_variables": support,
            "rank": rank,
        },
    )


# -- the identity ----------------------------------------------------------------

@dataclass
class DecompositionCertificate:
    params: tuple[int, int, int]
    primes: list[PrimalityCertificate] = field(default_factory=list)
    prime_ideals: list[Ideal] = field(default_factory=list)
    components_valid: bool = False
    monomial_paths_agree: bool = False
    equality: bool = False
    membership_audit: bool = False
    stage_failed: str | None = None
    intersection: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def conclusion(self) -> str:
        if self.stage_failed is None and self.components_valid and self.equality:
            return "Radical"
        return f"Failed({self.stage_failed or 'equality'})"

    def prime_generator_sets(self) -> set[frozenset[Polynomial]]:
        """Each certified prime as a frozenset of its generators."""
        return {frozenset(I.generators) for I in self.prime_ideals}

    def to_dict(self) -> dict:
        primes = []
        for cert, I in zip(self.primes, self.prime_ideals):
            d = cert.to_dict()
            d["generators"] = sorted(g.to_str() for g in I.generators)
            primes.append(d)
        primes.sort(key=lambda d: d["generators"])
        return {
            "schema": 1,
            "kind": "decomposition",
            "params": list(self.params),
            "conclusion": self.conclusion,
            "equality": self.equality,
            "membership_audit": self.membership_audit,
            "monomial_paths_agree": self.monomial_paths_agree,
            "components_valid": self.components_valid,
            "primes": primes,
            "intersection_basis": self.intersection,
            "notes": self.notes,
        }


def verify_decomposition(n: int, m: int, r: int, budget: Budget = DEFAULT_BUDGET) -> DecompositionCertificate:
    """Check I_{L_3(n,m,r)} = E ∩ X ∩ Y ∩ Z and certify every component prime."""
    _check(n, m, r)
    start = time.perf_counter()
    cert = DecompositionCertificate((n, m, r))
    cert.notes.append("E is built with all three chain lengths (n, m, r)")
    I = joinmeet_generators(build_Lk(n, m, r))
    E = build_E(n, m, r)
    X, Y, Z = build_XYZ(n, m, r)
    try:
        cert.primes.append(certify_prime(E))
        cert.prime_ideals.append(E)
        for comp in (X, Y, Z):
            for P in comp.prime_ideals():
                if frozenset(P.generators) in {frozenset(Q.generators) for Q in cert.prime_ideals}:
                    continue
                cert.primes.append(certify_prime(P))
                cert.prime_ideals.append(P)
        cert.components_valid = True
    except ShapeNotRecognized as exc:
        cert.stage_failed = f"primality: {exc}"
        cert.seconds = time.perf_counter() - start
        return cert

    try:
        # X, Y, Z: the lcm route must agree with elimination on the same primes
        cert.monomial_paths_agree = all(
            ideal_equal(c.ideal.to_ideal(), intersect_many(c.prime_ideals(), budget=budget), budget=budget)
            for c in (X, Y, Z)
        )
        if not cert.monomial_paths_agree:
            cert.stage_failed = "monomial/elimination mismatch"
        R = intersect_many([E, X.ideal, Y.ideal, Z.ideal], budget=budget)
        order = I.default_order()
        gb_R = groebner_basis(R, order, budget)
        gb_I = groebner_basis(I, order, budget)
        cert.intersection = gb_R.strings()
        cert.equality = gb_R.basis == gb_I.basis
        cert.membership_audit = all(gb_R.contains(g) for g in I.generators) and all(
            gb_I.contains(g) for g in R.generators
        )
        if cert.equality != cert.membership_audit:
            cert.stage_failed = "canonical-form and membership checks disagree"
    except ResourceLimit as exc:
        cert.stage_failed = f"budget: {exc}"
    cert.seconds = time.perf_counter() - start
    return cert
