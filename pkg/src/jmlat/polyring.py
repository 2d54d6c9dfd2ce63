"""Exact multivariate polynomials over the rationals.

Monomials are plain tuples of exponents indexed like the owning
:class:`VariableSet`.  Polynomials are immutable maps ``monomial -> Fraction``
and carry no order; every order-dependent operation takes a
:class:`MonomialOrder`.

Text format: ``a1*b1 - s*t``, ``3/2*a1^2 - b1``; :func:`parse_polynomial` and
``Polynomial.to_str`` round-trip exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import VariableSetMismatch, ZeroPolynomial

__all__ = [
    "VariableSet",
    "MonomialOrder",
    "Polynomial",
    "parse_polynomial",
    "polynomial_ring",
    "mono_mul",
    "mono_div",
    "mono_lcm",
    "mono_divides",
    "compare",
    "s_polynomial",
    "normal_form",
    "NormalForm",
    "order_to_dict",
    "order_from_dict",
]

Monomial = tuple  # tuple[int, ...]


class VariableSet:
    """Ordered variable names; index 0 is the smallest variable by default."""

    __slots__ = ("names", "position")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for x in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", x):
                raise ValueError(f"invalid variable name {x!r}")
        self.names = names
        self.position = {x: i for i, x in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, VariableSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VariableSet({list(self.names)})"

    def extend(self, extra: Iterable[str]) -> "VariableSet":
        return VariableSet(self.names + tuple(extra))

    def fresh_name(self, stem: str = "w") -> str:
        name, k = stem, 0
        while name in self.position:
            k += 1
            name = f"{stem}{k}_"
        return name

    def one(self) -> Monomial:
        return (0,) * len(self.names)

    def monomial(self, powers: Mapping[str, int]) -> Monomial:
        m = [0] * len(self.names)
        for x, e in powers.items():
            m[self.position[x]] += e
        return tuple(m)


# -- monomial arithmetic -------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


class MonomialOrder:
    """A monomial order on ``nvars`` variables.

    ``precedence`` lists variable indices from smallest to largest; the
    identity is used when omitted.  ``kind`` is one of ``lex``, ``grlex``,
    ``grevlex`` or ``block``.  For ``block``, ``blocks`` is a sequence of
    ``(kind, indices)`` pairs, most significant block first, each block's
    indices again listed smallest to largest.

    Larger :meth:`key` means larger monomial.
    """

    KINDS = ("lex", "grlex", "grevlex", "block")

    def __init__(self, kind: str, nvars: int, precedence: Sequence[int] | None = None, blocks=None):
        if kind == "revlex":
            # ungraded revlex is not a well-order; the graded form is meant
            kind = "grevlex"
        if kind not in self.KINDS:
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.nvars = nvars
        if kind == "block":
            if not blocks:
                raise ValueError("block order needs blocks")
            blocks = tuple((k, tuple(ix)) for k, ix in blocks)
            flat = sorted(i for _, ix in blocks for i in ix)
            if flat != list(range(nvars)):
                raise ValueError("blocks must partition the variables")
            for k, _ in blocks:
                if k not in ("lex", "grlex", "grevlex"):
                    raise ValueError(f"bad block kind {k!r}")
            self.blocks = blocks
            self.precedence = tuple(i for _, ix in reversed(blocks) for i in ix)
        else:
            precedence = tuple(range(nvars)) if precedence is None else tuple(precedence)
            if sorted(precedence) != list(range(nvars)):
                raise ValueError("precedence must be a permutation of the variable indices")
            self.precedence = precedence
            self.blocks = ((kind, precedence),)
        self._cache: dict = {}

    # constructors
    @classmethod
    def lex(cls, nvars, precedence=None):
        return cls("lex", nvars, precedence)

    @classmethod
    def grlex(cls, nvars, precedence=None):
        return cls("grlex", nvars, precedence)

    @classmethod
    def grevlex(cls, nvars, precedence=None):
        return cls("grevlex", nvars, precedence)

    @classmethod
    def block(cls, nvars, blocks):
        return cls("block", nvars, blocks=blocks)

    def key(self, m: Monomial) -> tuple:
        k = self._cache.get(m)
        if k is None:
            k = ()
            for kind, ix in self.blocks:
                k += _block_key(kind, ix, m)
            self._cache[m] = k
        return k

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.nvars, self.blocks) == (
            other.kind,
            other.nvars,
            other.blocks,
        )

    def __hash__(self):
        return hash((self.kind, self.nvars, self.blocks))

    def describe(self, variables: VariableSet | None = None) -> str:
        def names(ix):
            if variables is None:
                return "<".join(map(str, ix))
            return "<".join(variables.names[i] for i in ix)

        return " > ".join(f"{k}[{names(ix)}]" for k, ix in self.blocks)

    def __repr__(self):
        return f"MonomialOrder({self.describe()})"


def _block_key(kind, ix, m):
    if kind == "lex":
        return tuple(m[i] for i in reversed(ix))
    deg = sum(m[i] for i in ix)
    if kind == "grlex":
        return (deg,) + tuple(m[i] for i in reversed(ix))
    return (deg,) + tuple(-m[i] for i in ix)


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    if len(m1) != len(m2) or len(m1) != order.nvars:
        raise VariableSetMismatch("monomials and order disagree on the number of variables")
    return order.compare(m1, m2)


class Polynomial:
    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, variables: VariableSet, terms: Mapping[Monomial, object] | None = None):
        self.vars = variables
        clean = {}
        if terms:
            n = len(variables)
            for m, c in terms.items():
                if len(m) != n:
                    raise VariableSetMismatch(f"monomial {m} has the wrong length for {variables}")
                c = Fraction(c)
                if c:
                    clean[tuple(m)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        p = cls.__new__(cls)
        p.vars = variables
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def variable(cls, variables: VariableSet, name: str) -> "Polynomial":
        return cls._raw(variables, {variables.monomial({name: 1}): Fraction(1)})

    @classmethod
    def constant(cls, variables: VariableSet, c) -> "Polynomial":
        c = Fraction(c)
        return cls._raw(variables, {variables.one(): c} if c else {})

    @classmethod
    def monomial(cls, variables: VariableSet, m: Monomial, c=1) -> "Polynomial":
        return cls(variables, {m: c})

    # -- inspection ------------------------------------------------------
    @property
    def coeffs(self) -> dict:
        return dict(self._terms)

    def monomials(self):
        return list(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def support(self) -> list[str]:
        """Names of the variables that occur."""
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.vars.names[i] for i in sorted(used)]

    def terms(self, order: MonomialOrder) -> list[tuple[Fraction, Monomial]]:
        return [(self._terms[m], m) for m in sorted(self._terms, key=order.key, reverse=True)]

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder) -> "Polynomial":
        m = self.leading_monomial(order)
        return Polynomial._raw(self.vars, {m: self._terms[m]})

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self._terms:
            return self
        c = self.leading_coefficient(order)
        return self if c == 1 else self * (1 / c)

    # -- arithmetic ------------------------------------------------------
    def _check(self, other):
        if self.vars != other.vars:
            raise VariableSetMismatch(f"{self.vars} vs {other.vars}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._terms)
        for m, c in other._terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial._raw(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial._raw(self.vars, {})
            return Polynomial._raw(self.vars, {m: v * c for m, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                v = t.get(m, 0) + c1 * c2
                if v:
                    t[m] = v
                else:
                    t.pop(m, None)
        return Polynomial._raw(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def mul_term(self, m: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        return Polynomial._raw(self.vars, {mono_mul(m, k): v * c for k, v in self._terms.items()} if c else {})

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(self.vars, other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    # -- variable set changes -----------------------------------------------
    def embed(self, target: VariableSet) -> "Polynomial":
        """Rewrite in a variable set containing all variables that occur."""
        pos = [target.position.get(x) for x in self.vars.names]
        t = {}
        for m, c in self._terms.items():
            new = [0] * len(target)
            for i, e in enumerate(m):
                if e:
                    if pos[i] is None:
                        raise VariableSetMismatch(f"variable {self.vars.names[i]!r} missing from target")
                    new[pos[i]] = e
            t[tuple(new)] = c
        return Polynomial._raw(target, t)

    def substitute(self, values: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Replace variables by polynomials over the same variable set."""
        out = Polynomial._raw(self.vars, {})
        idx = {self.vars.position[x]: p for x, p in values.items()}
        for m, c in self._terms.items():
            term = Polynomial.constant(self.vars, c)
            rest = list(m)
            for i, p in idx.items():
                if m[i]:
                    term = term * p ** m[i]
                    rest[i] = 0
            out = out + term.mul_term(tuple(rest))
        return out

    # -- text -----------------------------------------------------------
    def to_str(self, order: MonomialOrder | None = None) -> str:
        if not self._terms:
            return "0"
        order = order or MonomialOrder.grevlex(len(self.vars))
        parts = []
        for c, m in self.terms(order):
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(self.vars.names[i])
                elif e > 1:
                    factors.append(f"{self.vars.names[i]}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|([+-]))")


def parse_polynomial(text: str, variables: VariableSet) -> Polynomial:
    """Parse the ``a1*b1 - s*t`` text format."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        pos = m.end()
        kind = m.lastindex
        tokens.append((kind, m.group(kind)))
    if not tokens:
        raise ValueError("empty polynomial text")

    result: dict = {}
    i = 0
    n = len(variables)

    def expect_factor(i):
        if i >= len(tokens):
            raise ValueError(f"dangling operator in {text!r}")
        return tokens[i]

    while i < len(tokens):
        sign = 1
        if tokens[i][0] == 5:
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif result or i > 0:
            raise ValueError(f"expected + or - in {text!r}")
        coeff = Fraction(sign)
        mono = [0] * n
        while True:
            kind, val = expect_factor(i)
            i += 1
            if kind == 1:
                coeff *= Fraction(val)
            elif kind == 2:
                if val not in variables.position:
                    raise VariableSetMismatch(f"unknown variable {val!r}")
                e = 1
                if i < len(tokens) and tokens[i][0] == 3:
                    if i + 1 >= len(tokens) or tokens[i + 1][0] != 1 or "/" in tokens[i + 1][1]:
                        raise ValueError(f"bad exponent in {text!r}")
                    e = int(tokens[i + 1][1])
                    i += 2
                mono[variables.position[val]] += e
            else:
                raise ValueError(f"unexpected {val!r} in {text!r}")
            if i < len(tokens) and tokens[i][0] == 4:
                i += 1
                continue
            break
        key = tuple(mono)
        v = result.get(key, 0) + coeff
        if v:
            result[key] = v
        else:
            result.pop(key, None)
        if i < len(tokens) and tokens[i][0] != 5:
            raise ValueError(f"unexpected token {tokens[i][1]!r} in {text!r}")
    return Polynomial._raw(variables, result)


def polynomial_ring(names: Iterable[str] | str):
    """Return ``(variables, x1, x2, ...)`` for quick interactive use."""
    if isinstance(names, str):
        names = [x for x in re.split(r"[\s,]+", names) if x]
    V = VariableSet(names)
    return (V,) + tuple(Polynomial.variable(V, x) for x in V.names)


# -- reduction ------------------------------------------------------------

def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of a zero polynomial")
    f._check(g)
    mf, mg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mono_lcm(mf, mg)
    return f.mul_term(mono_div(lcm, mf), 1 / f._terms[mf]) - g.mul_term(mono_div(lcm, mg), 1 / g._terms[mg])


class NormalForm:
    """Remainder of a division together with the quotients used."""

    __slots__ = ("remainder", "quotients")

    def __init__(self, remainder, quotients):
        self.remainder = remainder
        self.quotients = quotients

    def combination(self, divisors: Sequence[Polynomial]) -> Polynomial:
        """``sum(q_i * g_i)``, which must equal ``f - remainder``."""
        out = Polynomial._raw(self.remainder.vars, {})
        for q, g in zip(self.quotients, divisors):
            out = out + q * g
        return out


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder, with_quotients: bool = False):
    """Multivariate division of ``f`` by ``G``.

    The largest remaining term is treated first and divisors are tried in
    list order, so the result is fully determined by the inputs.
    """
    key = order.key
    heads = []
    for g in G:
        f._check(g)
        if g.is_zero():
            raise ZeroPolynomial("cannot divide by the zero polynomial")
        lm = max(g._terms, key=key)
        lc = g._terms[lm]
        heads.append((lm, lc, [(m, c) for m, c in g._terms.items() if m != lm]))
    p = dict(f._terms)
    r: dict = {}
    quots = [dict() for _ in G] if with_quotients else None
    while p:
        m = max(p, key=key)
        c = p[m]
        for idx, (lm, lc, tail) in enumerate(heads):
            if all(x <= y for x, y in zip(lm, m)):
                u = tuple(y - x for x, y in zip(lm, m))
                q = c / lc
                del p[m]
                for tm, tc in tail:
                    mm = tuple(a + b for a, b in zip(tm, u))
                    v = p.get(mm, 0) - q * tc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                if quots is not None:
                    v = quots[idx].get(u, 0) + q
                    if v:
                        quots[idx][u] = v
                    else:
                        quots[idx].pop(u, None)
                break
        else:
            r[m] = c
            del p[m]
    rem = Polynomial._raw(f.vars, r)
    if with_quotients:
        return NormalForm(rem, [Polynomial._raw(f.vars, q) for q in quots])
    return rem


def order_to_dict(order: MonomialOrder, variables: VariableSet) -> dict:
    """Replayable description of an order over named variables."""
    return {
        "blocks": [[kind, [variables.names[i] for i in ix]] for kind, ix in order.blocks],
    }


def order_from_dict(data: dict, variables: VariableSet) -> MonomialOrder:
    blocks = [(kind, [variables.position[x] for x in names]) for kind, names in data["blocks"]]
    if len(blocks) == 1:
        kind, ix = blocks[0]
        return MonomialOrder(kind, len(variables), ix)
    return MonomialOrder.block(len(variables), blocks)
