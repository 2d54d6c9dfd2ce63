"""Join-meet ideals, explicit basis sets, and radicality certificates."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import InvalidParams, ResourceLimit
from .families import FamilySpec, resolve
from .groebner import (
    DEFAULT_BUDGET,
    Budget,
    Ideal,
    MonomialIdeal,
    groebner_basis,
    initial_ideal,
    is_groebner,
    is_squarefree,
)
from .lattice import Lattice
from .polyring import MonomialOrder, Polynomial, VariableSet, order_to_dict, parse_polynomial

__all__ = [
    "variables_of",
    "joinmeet_generators",
    "paper_order",
    "rank_order",
    "parse_order",
    "PaperBasisSpec",
    "paper_basis",
    "paper_basis_sets",
    "on_generators_closed_form",
    "RadicalityCertificate",
    "certify_radical",
    "check_distributive_via_gb",
    "SearchReport",
    "search_squarefree_order",
]


def variables_of(L: Lattice) -> VariableSet:
    return VariableSet(L.elements)


def joinmeet_generators(L: Lattice) -> Ideal:
    """One binomial ``x_a x_b - x_{a∨b} x_{a∧b}`` per incomparable pair."""
    V = variables_of(L)
    x = {e: Polynomial.variable(V, e) for e in L.elements}
    gens = [x[a] * x[b] - x[L.join(a, b)] * x[L.meet(a, b)] for a, b in L.incomparable_pairs()]
    return Ideal(gens, V, label="I_L")


# -- orders ------------------------------------------------------------------

def paper_order(L: Lattice) -> MonomialOrder:
    """grevlex with the lattice's own element order as variable precedence."""
    return MonomialOrder.grevlex(len(L))


def rank_order(L: Lattice) -> MonomialOrder:
    """grevlex over a rank-compatible precedence: by height, then element order."""
    prec = sorted(range(len(L)), key=lambda i: (L.height(L.elements[i]), i))
    return MonomialOrder.grevlex(len(L), prec)


def parse_order(text: str, L: Lattice) -> MonomialOrder:
    """``grevlex``, ``rank-grevlex``, ``lex``, ``grlex``, ``rank-lex`` or ``perm:x,y,...``.

    A ``perm:`` list names the variables from smallest to largest and yields a
    grevlex order; prefix with ``lex-perm:`` for lex.
    """
    n = len(L)
    if text in ("grevlex", "revlex", "paper"):
        return paper_order(L)
    if text in ("rank-grevlex", "rank-revlex", "rank"):
        return rank_order(L)
    if text == "lex":
        return MonomialOrder.lex(n)
    if text == "grlex":
        return MonomialOrder.grlex(n)
    if text == "rank-lex":
        return MonomialOrder.lex(n, rank_order(L).precedence)
    for prefix, kind in (("perm:", "grevlex"), ("lex-perm:", "lex")):
        if text.startswith(prefix):
            names = [x.strip() for x in text[len(prefix) :].split(",") if x.strip()]
            if sorted(names) != sorted(L.elements):
                raise ValueError(f"{prefix} must list every variable exactly once")
            return MonomialOrder(kind, n, [L.index(x) for x in names])
    raise ValueError(f"unknown order spec {text!r}")


# -- explicit basis sets -----------------------------------------------------------

@dataclass(frozen=True)
class PaperBasisSpec:
    """Which explicit set to build: ``L2Sets``, ``GluedSets`` or ``OnGenerators``."""

    family: FamilySpec
    which: str

    def __post_init__(self):
        ok = {
            "L2Sets": self.family.kind == "Lk" and len(self.family.params) == 2,
            "GluedSets": self.family.kind == "L2Glued",
            "OnGenerators": self.family.kind == "On",
        }
        if self.which not in ok:
            raise InvalidParams(f"unknown basis set {self.which!r}")
        if not ok[self.which]:
            raise InvalidParams(f"{self.which} does not apply to {self.family.label()}")


def _poly(V, text):
    return parse_polynomial(text, V)


def paper_basis_sets(spec: PaperBasisSpec) -> dict[str, list[Polynomial]]:
    """The named subsets making up the explicit basis, in construction order."""
    L = spec.family.build()
    V = variables_of(L)
    P = lambda text: _poly(V, text)  # noqa: E731
    if spec.which == "L2Sets":
        n, m = spec.family.params
        return {
            "G": [P(f"a{i}*b{j} - s*t") for i in range(1, n + 1) for j in range(1, m + 1)],
            "A": [P(f"a{i}*s*t - a1*s*t") for i in range(2, n + 1)],
            "B": [P(f"b{j}*s*t - b1*s*t") for j in range(2, m + 1)],
        }
    if spec.which == "GluedSets":
        n1, n2, kp, i1, i2 = spec.family.params
        a = lambda i: resolve("a", i, n1)  # noqa: E731
        b = lambda j: resolve("b", j, n2)  # noqa: E731
        bk = b(kp)
        sets = {
            "G1": [P(f"{a(i)}*{b(j)} - s*{bk}") for i in range(1, i1 + 1) for j in range(1, kp)],
            "G2": [P(f"{a(i)}*{bk} - {a(i1)}*{a(i2)}") for i in range(i1 + 1, i2)],
            "G3": [P(f"{a(i)}*{b(j)} - {bk}*t") for i in range(i2, n1 + 1) for j in range(kp + 1, n2 + 1)],
            "A1": [P(f"{a(i)}*s*{bk} - a1*s*{bk}") for i in range(2, i1 + 1)],
            "A2": [P(f"{a(i)}*{a(i1)}*{a(i2)} - {a(i1 + 1)}*{a(i1)}*{a(i2)}") for i in range(i1 + 2, i2)],
            "A3": [P(f"{a(i)}*{bk}*t - {a(i2)}*{bk}*t") for i in range(i2 + 1, n1 + 1)],
            "B1": [P(f"{b(j)}*s*{bk} - b1*s*{bk}") for j in range(2, kp)],
            "B2": [P(f"{b(j)}*{bk}*t - {b(kp + 1)}*{bk}*t") for j in range(kp + 2, n2 + 1)],
        }
        if i2 - i1 == 2:
            # the short-gap variant has no A2 block; the range above is empty anyway
            sets.pop("A2")
        return sets
    (n,) = spec.family.params
    return {"R": on_generators_closed_form(n, V)}


def paper_basis(spec: PaperBasisSpec) -> list[Polynomial]:
    return [f for part in paper_basis_sets(spec).values() for f in part]


def on_generators_closed_form(n: int, V: VariableSet | None = None) -> list[Polynomial]:
    """Generators of I_{O_n} from the even/odd row case analysis.

    Even i has up to three binomials (j = i-1, i, i+1), odd i exactly one
    (j = i).  Out-of-range indices resolve to s or t.
    """
    if V is None:
        from .families import build_On

        V = variables_of(build_On(n))
    a = lambda i: resolve("a", i, n)  # noqa: E731
    b = lambda j: resolve("b", j, n)  # noqa: E731
    out = []
    for i in range(1, n + 1):
        if i % 2 == 0:
            rows = {
                i - 1: f"{a(i)}*{b(i - 1)} - {a(i + 1)}*{b(i - 2)}",
                i: f"{a(i)}*{b(i)} - {a(i - 1)}*{a(i + 1)}",
                i + 1: f"{a(i)}*{b(i + 1)} - {a(i - 1)}*{b(i + 2)}",
            }
        else:
            rows = {i: f"{a(i)}*{b(i)} - {b(i - 1)}*{b(i + 1)}"}
        for j, text in rows.items():
            if 1 <= j <= n:
                out.append(_poly(V, text))
    return out


# -- radicality ------------------------------------------------------------------

@dataclass
class RadicalityCertificate:
    lattice: Lattice
    order: MonomialOrder
    basis: list[Polynomial]
    initial: MonomialIdeal
    squarefree: bool
    groebner_verified: bool
    stats: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if self.squarefree and self.groebner_verified:
            return "RadicalBySquarefree"
        return "Inconclusive"

    def to_dict(self) -> dict:
        V = variables_of(self.lattice)
        return {
            "schema": 1,
            "kind": "radicality",
            "verdict": self.verdict,
            "lattice": self.lattice.to_dict(),
            "order": self.order.describe(V),
            "order_spec": order_to_dict(self.order, V),
            "basis": [g.to_str(self.order) for g in self.basis],
            "initial_ideal": self.initial.strings(),
            "squarefree": self.squarefree,
            "groebner_verified": self.groebner_verified,
            "stats": self.stats,
        }


def certify_radical(L: Lattice, order: MonomialOrder | None = None, budget: Budget = DEFAULT_BUDGET) -> RadicalityCertificate:
    """Radicality via a squarefree initial ideal; never claims non-radicality."""
    order = order or paper_order(L)
    I = joinmeet_generators(L)
    if not I.generators:
        init = MonomialIdeal(I.variables, [])
        return RadicalityCertificate(L, order, [], init, True, True, {})
    gb = groebner_basis(I, order, budget)
    verified = is_groebner(gb.basis, order).ok
    init = initial_ideal(gb)
    return RadicalityCertificate(L, order, gb.basis, init, is_squarefree(init), verified, dict(gb.stats))


def check_distributive_via_gb(L: Lattice) -> bool:
    """True iff the join-meet binomials already form a Groebner basis under the rank order."""
    gens = joinmeet_generators(L).generators
    return is_groebner(gens, rank_order(L)).ok


# -- order search ------------------------------------------------------------------

@dataclass
class SearchReport:
    lattice: Lattice
    strategy: str
    seed: int | None
    results: list = field(default_factory=list)  # (kind, precedence names, squarefree | "ResourceLimit")

    @property
    def tested(self) -> int:
        return len(self.results)

    @property
    def found(self):
        for kind, names, ok in self.results:
            if ok is True:
                return kind, names
        return None

    @property
    def verdict(self) -> str:
        hit = self.found
        if hit:
            return f"FoundOrder({hit[0]}:{','.join(hit[1])})"
        return f"NoneFound({self.tested})"

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "order-search",
            "lattice": self.lattice.to_dict(),
            "strategy": self.strategy,
            "seed": self.seed,
            "verdict": self.verdict,
            "tested": self.tested,
            "squarefree_orders": [[k, list(n)] for k, n, ok in self.results if ok is True],
            "budget_failures": [[k, list(n)] for k, n, ok in self.results if ok == "ResourceLimit"],
        }


_STRATEGIES = {
    "all-permutations-revlex": ("grevlex",),
    "all-revlex": ("grevlex",),
    "all-permutations-lex": ("lex",),
    "all-lex": ("lex",),
    "all": ("grevlex", "lex"),
}


def search_squarefree_order(
    L: Lattice,
    strategy: str = "all-revlex",
    samples: int = 100,
    seed: int = 0,
    budget: Budget = Budget(max_pairs=20_000, max_degree=30),
    stop_at_first: bool = False,
) -> SearchReport:
    """Test variable permutations for a squarefree initial ideal of I_L.

    Exhaustive strategies walk ``itertools.permutations`` order (only allowed
    for at most 8 elements); ``sampled`` draws ``samples`` grevlex
    permutations from ``random.Random(seed)``.
    """
    I = joinmeet_generators(L)
    n = len(L)
    if strategy in _STRATEGIES:
        if n > 8:
            raise InvalidParams("exhaustive permutation search is limited to 8 elements")
        kinds = _STRATEGIES[strategy]
        candidates = ((k, p) for k in kinds for p in itertools.permutations(range(n)))
        report = SearchReport(L, strategy, None)
    elif strategy == "sampled":
        rng = random.Random(seed)
        picks = []
        for _ in range(samples):
            p = list(range(n))
            rng.shuffle(p)
            picks.append(("grevlex", tuple(p)))
        candidates = iter(picks)
        report = SearchReport(L, strategy, seed)
    else:
        raise InvalidParams(f"unknown strategy {strategy!r}")

    for kind, perm in candidates:
        names = tuple(L.elements[i] for i in perm)
        order = MonomialOrder(kind, n, perm)
        try:
            ok = is_squarefree(initial_ideal(groebner_basis(I, order, budget)))
        except ResourceLimit:
            ok = "ResourceLimit"
        report.results.append((kind, names, ok))
        if stop_at_first and ok is True:
            break
    return report
