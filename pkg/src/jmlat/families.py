"""Constructors for the lattice families studied in this package.

Naming: the bottom is ``s``, the top is ``t``, and the chains are labelled
``a``, ``b``, ``c``, ... so the element ``b3`` is the third element of the
second chain.  Indices outside a chain resolve to ``s`` (index <= 0) or
``t`` (index past the end); :func:`resolve` implements that rule and every
constructor below relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams
from .lattice import Lattice

__all__ = [
    "CHAIN_LETTERS",
    "FamilySpec",
    "resolve",
    "build_Lk",
    "build_L2_glued",
    "build_On",
    "build_divisor_Lpqk",
    "divisor_elements",
    "divisor_name",
    "canonical_h_maps",
    "is_prime",
]

CHAIN_LETTERS = "abcdefghijklmnopqruvwxyz"  # s and t are reserved


def resolve(letter: str, i: int, size: int) -> str:
    """Name of element ``i`` on the chain ``letter`` of length ``size``."""
    if i <= 0:
        return "s"
    if i > size:
        return "t"
    return f"{letter}{i}"


def _chains(sizes):
    if not sizes:
        raise InvalidParams("need at least one chain")
    if len(sizes) > len(CHAIN_LETTERS):
        raise InvalidParams(f"at most {len(CHAIN_LETTERS)} chains are supported")
    for n in sizes:
        if not isinstance(n, int) or n < 1:
            raise InvalidParams(f"chain lengths must be integers >= 1, got {sizes}")
    elements = ["s"]
    relations = []
    for letter, n in zip(CHAIN_LETTERS, sizes):
        names = [f"{letter}{i}" for i in range(1, n + 1)]
        elements += names
        chain = ["s"] + names + ["t"]
        relations += list(zip(chain, chain[1:]))
    elements.append("t")
    return elements, relations


def build_Lk(*sizes: int) -> Lattice:
    """k pairwise incomparable chains glued at a common bottom and top."""
    if len(sizes) == 1 and isinstance(sizes[0], (tuple, list)):
        sizes = tuple(sizes[0])
    elements, relations = _chains(sizes)
    return Lattice(elements, relations)


def _check_glued(n1, n2, kp, i1, i2):
    problems = []
    if n1 < 5 or n2 < 5:
        problems.append("n1, n2 >= 5")
    if not i1 > 1:
        problems.append("i1 > 1")
    # 4 <= i2 instead of 4 < i2: the smallest documented instance has i2 = 4
    if not 4 <= i2 < n2:
        problems.append("4 <= i2 < n2")
    if i2 > n1:
        problems.append("i2 <= n1")
    if i2 - i1 < 2:
        problems.append("i2 - i1 >= 2")
    if not 3 <= kp <= n2 - 2:
        problems.append("3 <= k' <= n2 - 2")
    if kp in (n1, n2):
        problems.append("k' not in {n1, n2}")
    if problems:
        raise InvalidParams(f"glued parameters ({n1},{n2},{kp},{i1},{i2}) violate: {', '.join(problems)}")


def build_L2_glued(n1: int, n2: int, kp: int, i1: int, i2: int) -> Lattice:
    """Two chains with the extra relations ``a_i1 < b_kp < a_i2``."""
    _check_glued(n1, n2, kp, i1, i2)
    elements, relations = _chains((n1, n2))
    relations += [(f"a{i1}", f"b{kp}"), (f"b{kp}", f"a{i2}")]
    return Lattice(elements, relations)


def build_On(n: int) -> Lattice:
    """Two chains of length n with ``a_i < b_(i+1) < a_(i+2)`` for odd i."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParams(f"n must be an integer >= 1, got {n!r}")
    elements, relations = _chains((n, n))
    for i in range(1, n + 1, 2):
        lo, mid, hi = resolve("a", i, n), resolve("b", i + 1, n), resolve("a", i + 2, n)
        relations += [(lo, mid), (mid, hi)]
    # a relation whose upper end resolved to t is implied already
    relations = [(x, y) for x, y in relations if x != y]
    return Lattice(elements, relations)


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def divisor_name(i: int, j: int) -> str:
    """Element id of p^i q^j; independent of the actual primes."""
    return f"p{i}q{j}"


def _divisor_exponents(k):
    exps = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1)]
    for r in range(2, k + 1):
        exps += [(r - 1, r), (r, r), (r + 1, r), (r + 1, r - 1)]
    return exps


def divisor_elements(p: int, q: int, k: int) -> dict[str, int]:
    """Element id -> integer value for the divisor lattice with parameters (p, q, k)."""
    _check_divisor(p, q, k)
    return {divisor_name(i, j): p**i * q**j for i, j in _divisor_exponents(k)}


def _check_divisor(p, q, k):
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise InvalidParams(f"p and q must be distinct primes, got {p}, {q}")
    if not isinstance(k, int) or k < 1:
        raise InvalidParams(f"k must be an integer >= 1, got {k!r}")


def build_divisor_Lpqk(p: int, q: int, k: int) -> Lattice:
    """The union of the blocks C_{p,q,1..k}, ordered by divisibility."""
    values = divisor_elements(p, q, k)
    names = sorted(values, key=lambda x: (values[x], x))
    relations = [(x, y) for x in names for y in names if x != y and values[y] % values[x] == 0]
    return Lattice(names, relations)


def canonical_h_maps(k: int, p: int, q: int) -> tuple[dict[str, str], dict[str, str]]:
    """The explicit maps between O_{2k} and the divisor lattice L_{p,q,k}.

    Joins in the divisor lattice are taken on exponent pairs (componentwise
    max), so both maps are closed-form and do not consult a lattice.
    """
    _check_divisor(p, q, k)
    n = 2 * k

    def a(i):
        return resolve("a", i, n)

    def b(i):
        return resolve("b", i, n)

    def lub(u, v):
        return (max(u[0], v[0]), max(u[1], v[1]))

    h = {"s": (0, 0), "a1": (1, 0)}
    for r in range(1, k + 1):
        h[a(2 * r)] = (r + 1, r - 1)
        h[b(2 * r - 1)] = (r - 1, r)
        h[b(2 * r)] = lub(h[a(2 * r - 1)], h[b(2 * r - 1)])
        h[a(2 * r + 1)] = lub(h[a(2 * r)], h[b(2 * r)])
    h1 = {x: divisor_name(*e) for x, e in h.items()}

    h2 = {divisor_name(0, 0): "s", divisor_name(1, 0): "a1"}
    for r in range(1, k + 1):
        h2[divisor_name(r + 1, r - 1)] = a(2 * r)
        h2[divisor_name(r - 1, r)] = b(2 * r - 1)
        h2[divisor_name(r + 1, r)] = a(2 * r + 1)
        h2[divisor_name(r, r)] = b(2 * r)
    return h1, h2


@dataclass(frozen=True)
class FamilySpec:
    """A family kind plus its integer parameters.

    kinds: ``Lk`` (n1, ..., nk), ``L2Glued`` (n1, n2, k', i1, i2), ``On`` (n,),
    ``DivisorPQK`` (p, q, k).
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        self.validate()

    def validate(self) -> None:
        arity = {"L2Glued": 5, "On": 1, "DivisorPQK": 3}
        if self.kind == "Lk":
            if not self.params or any(x < 1 for x in self.params):
                raise InvalidParams(f"Lk needs k >= 1 lengths all >= 1, got {self.params}")
        elif self.kind in arity:
            if len(self.params) != arity[self.kind]:
                raise InvalidParams(f"{self.kind} takes {arity[self.kind]} parameters, got {self.params}")
            if self.kind == "L2Glued":
                _check_glued(*self.params)
            elif self.kind == "On" and self.params[0] < 1:
                raise InvalidParams("On needs n >= 1")
            elif self.kind == "DivisorPQK":
                _check_divisor(*self.params)
        else:
            raise InvalidParams(f"unknown family kind {self.kind!r}")

    def build(self) -> Lattice:
        if self.kind == "Lk":
            return build_Lk(*self.params)
        if self.kind == "L2Glued":
            return build_L2_glued(*self.params)
        if self.kind == "On":
            return build_On(*self.params)
        return build_divisor_Lpqk(*self.params)

    def label(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"
