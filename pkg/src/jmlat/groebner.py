"""Buchberger's algorithm and the ideal operations built on it.

All results are checked after the fact where the check is cheap: computed
bases are re-verified with :func:`is_groebner`, and intersections are
spot-checked for membership in both inputs.
"""

from __future__ import annotations

import hashlib
import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ResourceLimit, VariableSetMismatch
from .polyring import (
    MonomialOrder,
    Polynomial,
    VariableSet,
    mono_divides,
    mono_lcm,
    normal_form,
    s_polynomial,
)

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "MonomialIdeal",
    "GroebnerCheck",
    "Budget",
    "buchberger",
    "groebner_basis",
    "is_groebner",
    "reduce_basis",
    "initial_ideal",
    "is_squarefree",
    "ideal_equal",
    "ideal_contains",
    "intersect",
    "intersect_many",
    "intersect_monomial",
    "audit_digest",
]


@dataclass(frozen=True)
class Budget:
    """Limits for a single Groebner computation; ``None`` means unlimited."""

    max_pairs: int | None = 200_000
    max_degree: int | None = 40


DEFAULT_BUDGET = Budget()


class Ideal:
    def __init__(self, generators: Iterable[Polynomial], variables: VariableSet | None = None, label: str = ""):
        gens = list(generators)
        if variables is None:
            if not gens:
                raise ValueError("an empty ideal needs an explicit variable set")
            variables = gens[0].vars
        for g in gens:
            if g.vars != variables:
                raise VariableSetMismatch(f"generator over {g.vars} in ideal over {variables}")
        self.generators = [g for g in gens if not g.is_zero()]
        self.variables = variables
        self.label = label

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        name = f"{self.label} " if self.label else ""
        return f"Ideal({name}{[str(g) for g in self.generators]})"

    def default_order(self) -> MonomialOrder:
        return MonomialOrder.grevlex(len(self.variables))


@dataclass
class GroebnerBasis:
    ideal: Ideal
    order: MonomialOrder
    basis: list[Polynomial]
    reduced: bool = False
    stats: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    @property
    def variables(self) -> VariableSet:
        return self.ideal.variables

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.basis, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def strings(self) -> list[str]:
        return [g.to_str(self.order) for g in self.basis]


# -- Buchberger ---------------------------------------------------------------

def buchberger(
    ideal: Ideal,
    order: MonomialOrder | None = None,
    budget: Budget = DEFAULT_BUDGET,
    chain_criterion: bool = False,
    audit: int = 0,
) -> GroebnerBasis:
    """Compute a Groebner basis with the normal selection strategy.

    Pairs are processed by smallest lcm of leading monomials, ties broken by
    generator indices.  Pairs with coprime leading monomials are skipped.  With
    ``chain_criterion`` the second Buchberger criterion also skips pairs;
    ``audit`` force-reduces up to that many skipped pairs afterwards and
    raises ``AssertionError`` if one fails to reduce to zero.
    """
    order = order or ideal.default_order()
    if order.nvars != len(ideal.variables):
        raise VariableSetMismatch("order and ideal disagree on the number of variables")
    key = order.key
    basis: list[Polynomial] = []
    heads: list[tuple] = []
    for g in ideal.generators:
        g = g.monic(order)
        if g not in basis:
            basis.append(g)
            heads.append(g.leading_monomial(order))

    queue: list = []
    done: set = set()
    skipped: list = []
    stats = {"pairs_processed": 0, "product_skips": 0, "chain_skips": 0, "zero_reductions": 0, "added": 0}

    def push(i, j):
        lcm = mono_lcm(heads[i], heads[j])
        if all(a == 0 or b == 0 for a, b in zip(heads[i], heads[j])):
            stats["product_skips"] += 1
            skipped.append((i, j))
            done.add((i, j))
            return
        heapq.heappush(queue, (key(lcm), i, j, lcm))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        if chain_criterion and _chain_skip(i, j, lcm, heads, done):
            stats["chain_skips"] += 1
            skipped.append((i, j))
            done.add((i, j))
            continue
        if budget.max_pairs is not None and stats["pairs_processed"] >= budget.max_pairs:
            raise ResourceLimit(f"pair budget {budget.max_pairs} exhausted with {len(basis)} basis elements")
        if budget.max_degree is not None and sum(lcm) > budget.max_degree:
            raise ResourceLimit(f"degree budget {budget.max_degree} exceeded (lcm degree {sum(lcm)})")
        stats["pairs_processed"] += 1
        done.add((i, j))
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            stats["zero_reductions"] += 1
            continue
        h = h.monic(order)
        basis.append(h)
        heads.append(h.leading_monomial(order))
        stats["added"] += 1
        k = len(basis) - 1
        for i2 in range(k):
            push(i2, k)

    if audit and skipped:
        step = max(1, len(skipped) // audit)
        sample = skipped[::step][:audit]
        for i, j in sample:
            r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
            assert r.is_zero(), f"skipped pair ({i}, {j}) does not reduce to zero"
        stats["audited"] = len(sample)
    return GroebnerBasis(ideal, order, basis, False, stats)


def _chain_skip(i, j, lcm, heads, done):
    for k, hk in enumerate(heads):
        if k in (i, j) or not mono_divides(hk, lcm):
            continue
        if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
            return True
    return False


@dataclass
class GroebnerCheck:
    ok: bool
    pairs_checked: int
    failing_pair: tuple[int, int] | None = None
    remainder: Polynomial | None = None
    log: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def is_groebner(
    polys: Sequence[Polynomial],
    order: MonomialOrder,
    skip_coprime: bool = False,
    keep_log: bool = False,
) -> GroebnerCheck:
    """Buchberger's criterion: every S-pair reduces to zero modulo ``polys``.

    All pairs are reduced explicitly unless ``skip_coprime`` is set.  The
    first failing pair (in index order) and its remainder are reported.
    """
    polys = [p for p in polys if not p.is_zero()]
    checked = 0
    log = []
    heads = [p.leading_monomial(order) for p in polys]
    for i, j in itertools.combinations(range(len(polys)), 2):
        if skip_coprime and all(a == 0 or b == 0 for a, b in zip(heads[i], heads[j])):
            continue
        r = normal_form(s_polynomial(polys[i], polys[j], order), polys, order)
        checked += 1
        if keep_log:
            log.append((i, j, r.to_str(order)))
        if not r.is_zero():
            return GroebnerCheck(False, checked, (i, j), r, log)
    return GroebnerCheck(True, checked, None, None, log)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Groebner basis, sorted by decreasing leading monomial."""
    order = gb.order
    key = order.key
    polys = sorted((g.monic(order) for g in gb.basis if not g.is_zero()), key=lambda g: key(g.leading_monomial(order)))
    minimal: list[Polynomial] = []
    for g in polys:
        lm = g.leading_monomial(order)
        if not any(mono_divides(h.leading_monomial(order), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        lt = g.leading_term(order)
        tail = normal_form(g - lt, others, order)
        reduced.append((lt + tail).monic(order))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    stats = dict(gb.stats)
    return GroebnerBasis(gb.ideal, order, reduced, True, stats)


def groebner_basis(
    ideal: Ideal, order: MonomialOrder | None = None, budget: Budget = DEFAULT_BUDGET, **kwargs
) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal``."""
    return reduce_basis(buchberger(ideal, order, budget, **kwargs))


# -- monomial ideals ----------------------------------------------------------

class MonomialIdeal:
    """A monomial ideal stored by its minimal generators."""

    def __init__(self, variables: VariableSet, generators: Iterable[tuple]):
        gens = sorted(set(tuple(m) for m in generators), key=lambda m: (sum(m), m))
        minimal: list[tuple] = []
        for m in gens:
            if not any(mono_divides(g, m) for g in minimal):
                minimal.append(m)
        self.variables = variables
        self.generators = tuple(sorted(minimal, key=lambda m: (sum(m), tuple(-e for e in m))))

    @classmethod
    def from_strings(cls, variables: VariableSet, monos: Iterable[str]) -> "MonomialIdeal":
        from .polyring import parse_polynomial

        out = []
        for text in monos:
            p = parse_polynomial(text, variables)
            if len(p) != 1:
                raise ValueError(f"{text!r} is not a monomial")
            out.append(p.monomials()[0])
        return cls(variables, out)

    def contains(self, m: tuple) -> bool:
        return any(mono_divides(g, m) for g in self.generators)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.variables == other.variables
            and set(self.generators) == set(other.generators)
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.generators)))

    def __len__(self):
        return len(self.generators)

    def strings(self) -> list[str]:
        return [Polynomial.monomial(self.variables, m).to_str() for m in self.generators]

    def to_ideal(self) -> Ideal:
        return Ideal([Polynomial.monomial(self.variables, m) for m in self.generators], self.variables)

    def __repr__(self):
        return f"MonomialIdeal({self.strings()})"


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(gb.variables, gb.leading_monomials())


def is_squarefree(mi: MonomialIdeal) -> bool:
    return all(e <= 1 for m in mi.generators for e in m)


def intersect_monomial(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.variables != J.variables:
        raise VariableSetMismatch("monomial ideals over different variable sets")
    return MonomialIdeal(I.variables, [mono_lcm(a, b) for a in I.generators for b in J.generators])


# -- ideal comparisons ----------------------------------------------------------

def _as_ideal(x) -> Ideal:
    if isinstance(x, Ideal):
        return x
    if isinstance(x, MonomialIdeal):
        return x.to_ideal()
    if isinstance(x, GroebnerBasis):
        return Ideal(x.basis, x.variables)
    return Ideal(list(x))


def ideal_equal(I, J, order: MonomialOrder | None = None, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Equality of ideals by comparing reduced Groebner bases."""
    I, J = _as_ideal(I), _as_ideal(J)
    if I.variables != J.variables:
        raise VariableSetMismatch("ideals over different variable sets")
    order = order or I.default_order()
    return groebner_basis(I, order, budget).basis == groebner_basis(J, order, budget).basis


def ideal_contains(I, polys: Iterable[Polynomial], order: MonomialOrder | None = None) -> bool:
    I = _as_ideal(I)
    gb = groebner_basis(I, order or I.default_order())
    return all(gb.contains(p) for p in polys)


def intersect(I, J, order: MonomialOrder | None = None, budget: Budget = DEFAULT_BUDGET, check: bool = True) -> Ideal:
    """I ∩ J by eliminating an auxiliary variable from ``w*I + (1-w)*J``.

    The auxiliary variable forms its own most significant (lex) block, the
    remaining variables keep ``order`` (grevlex by default).
    """
    I, J = _as_ideal(I), _as_ideal(J)
    if I.variables != J.variables:
        raise VariableSetMismatch("ideals over different variable sets")
    V = I.variables
    n = len(V)
    order = order or I.default_order()
    w = V.fresh_name("w")
    big = V.extend([w])
    ambient = order.blocks if order.kind == "block" else ((order.kind, order.precedence),)
    elim = MonomialOrder.block(n + 1, (("lex", (n,)),) + tuple(ambient))
    wpoly = Polynomial.variable(big, w)
    gens = [wpoly * f.embed(big) for f in I.generators]
    gens += [(1 - wpoly) * g.embed(big) for g in J.generators]
    gb = groebner_basis(Ideal(gens, big), elim, budget)
    kept = []
    for g in gb.basis:
        if all(m[n] == 0 for m in g.monomials()):
            kept.append(Polynomial(V, {m[:n]: c for m, c in g.coeffs.items()}))
    result = Ideal(kept, V, label=f"({I.label})∩({J.label})" if I.label or J.label else "")
    if check:
        for side in (I, J):
            gbs = groebner_basis(side, order, budget)
            bad = [g for g in kept if not gbs.contains(g)]
            if bad:
                raise AssertionError(f"intersection generator {bad[0]} not in {side}")
    return result


def intersect_many(ideals: Sequence, order: MonomialOrder | None = None, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    ideals = [_as_ideal(x) for x in ideals]
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J, order, budget)
    return out


def audit_digest(entries: Iterable) -> str:
    """SHA-256 over a textual S-pair log, for certificates."""
    h = hashlib.sha256()
    for e in entries:
        h.update(repr(e).encode())
        h.update(b"\n")
    return h.hexdigest()
