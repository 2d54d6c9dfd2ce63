"""Finite posets and lattices with explicit join/meet tables.

Elements are opaque strings.  Every lattice is validated on construction:
joins and meets are computed from up-set/down-set intersections and a pair
without a unique bound raises :class:`NotALattice`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CycleDetected, MapNotTotal, NoBoundedElements, NotALattice

__all__ = [
    "Poset",
    "Lattice",
    "SublatticeWitness",
    "IsomorphismCertificate",
    "from_covers",
    "is_distributive",
    "is_modular",
    "iter_forbidden_sublattices",
    "find_forbidden_sublattice",
    "verify_isomorphism",
    "N5_ORDER",
    "M5_ORDER",
]


class Poset:
    """A finite partial order given by generating relations.

    ``relations`` may contain any pairs ``(lower, upper)``; the transitive
    closure is taken and the Hasse diagram is recomputed, so ``covers`` always
    holds the true cover relation.
    """

    def __init__(self, elements: Sequence[str], relations: Iterable[tuple[str, str]] = ()):
        elements = tuple(elements)
        index = {}
        for i, e in enumerate(elements):
            if not isinstance(e, str):
                raise TypeError(f"element ids must be strings, got {e!r}")
            if e in index:
                raise ValueError(f"duplicate element id {e!r}")
            index[e] = i
        n = len(elements)
        succ: list[set[int]] = [set() for _ in range(n)]
        for lo, hi in relations:
            try:
                i, j = index[lo], index[hi]
            except KeyError as exc:
                raise ValueError(f"relation ({lo!r}, {hi!r}) references an undeclared element") from exc
            if i == j:
                raise CycleDetected(f"self-relation on {lo!r}")
            succ[i].add(j)

        # Kahn's algorithm; leftover nodes lie on a cycle.
        indeg = [0] * n
        for i in range(n):
            for j in succ[i]:
                indeg[j] += 1
        queue = [i for i in range(n) if indeg[i] == 0]
        topo = []
        while queue:
            i = queue.pop()
            topo.append(i)
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(topo) != n:
            stuck = sorted(elements[i] for i in range(n) if indeg[i] > 0)
            raise CycleDetected(f"relations contain a cycle through {stuck}")

        up: list[frozenset[int]] = [frozenset()] * n
        for i in reversed(topo):
            s = {i}
            for j in succ[i]:
                s |= up[j]
            up[i] = frozenset(s)
        down: list[set[int]] = [set() for _ in range(n)]
        for i in range(n):
            for j in up[i]:
                down[j].add(i)

        self.elements = elements
        self._index = index
        self._up = tuple(up)
        self._down = tuple(frozenset(d) for d in down)
        self._covers = tuple(
            (i, j)
            for i in range(n)
            for j in sorted(up[i])
            if j != i and not any(k != i and k != j and j in up[k] for k in up[i])
        )

    # -- basic queries -------------------------------------------------
    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x: str) -> int:
        return self._index[x]

    def leq(self, a: str, b: str) -> bool:
        return self._index[b] in self._up[self._index[a]]

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: str, b: str) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def up_set(self, a: str) -> frozenset[str]:
        return frozenset(self.elements[j] for j in self._up[self._index[a]])

    def down_set(self, a: str) -> frozenset[str]:
        return frozenset(self.elements[j] for j in self._down[self._index[a]])

    @property
    def covers(self) -> tuple[tuple[str, str], ...]:
        e = self.elements
        return tuple((e[i], e[j]) for i, j in self._covers)

    def lower_covers(self, a: str) -> list[str]:
        j = self._index[a]
        return [self.elements[i] for i, k in self._covers if k == j]

    def upper_covers(self, a: str) -> list[str]:
        i = self._index[a]
        return [self.elements[k] for j, k in self._covers if j == i]

    def minimal_elements(self) -> list[str]:
        return [e for i, e in enumerate(self.elements) if len(self._down[i]) == 1]

    def maximal_elements(self) -> list[str]:
        return [e for i, e in enumerate(self.elements) if len(self._up[i]) == 1]

    def leq_matrix(self) -> list[list[bool]]:
        n = len(self.elements)
        return [[j in self._up[i] for j in range(n)] for i in range(n)]

    def height(self, a: str) -> int:
        """Length of the longest chain from a minimal element up to ``a``."""
        return self._heights()[self._index[a]]

    def _heights(self) -> list[int]:
        cached = getattr(self, "_height_cache", None)
        if cached is not None:
            return cached
        order = sorted(range(len(self.elements)), key=lambda i: len(self._down[i]))
        h = [0] * len(self.elements)
        for i in order:
            below = [j for j, k in self._covers if k == i]
            h[i] = max((h[j] + 1 for j in below), default=0)
        self._height_cache = h
        return h

    def subposet(self, names: Iterable[str]) -> "Poset":
        """Induced subposet, keeping the ambient element order."""
        keep = set(names)
        missing = keep - set(self.elements)
        if missing:
            raise ValueError(f"unknown elements {sorted(missing)}")
        elems = [e for e in self.elements if e in keep]
        rel = [(a, b) for a in elems for b in elems if a != b and self.leq(a, b)]
        return Poset(elems, rel)

    def to_dict(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and set(self.covers) == set(other.covers)

    def __hash__(self):
        return hash((frozenset(self.elements), frozenset(self.covers)))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self.elements)} elements)"


class Lattice(Poset):
    """A finite lattice with total join and meet tables.

    Construct through :func:`from_covers` or :meth:`from_relations`; both
    validate every pair.
    """

    def __init__(self, elements: Sequence[str], relations: Iterable[tuple[str, str]] = ()):
        super().__init__(elements, relations)
        n = len(self.elements)
        if n == 0:
            raise NoBoundedElements("a lattice needs at least one element")
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for i in range(n):
            join[i][i] = meet[i][i] = i
            for j in range(i + 1, n):
                join[i][j] = join[j][i] = self._bound(i, j, self._up, "join")
                meet[i][j] = meet[j][i] = self._bound(i, j, self._down, "meet")
        bottoms = [i for i in range(n) if len(self._up[i]) == n]
        tops = [i for i in range(n) if len(self._down[i]) == n]
        if not bottoms or not tops:
            raise NoBoundedElements("no bottom or no top element")
        self._join = tuple(tuple(r) for r in join)
        self._meet = tuple(tuple(r) for r in meet)
        self.bottom = self.elements[bottoms[0]]
        self.top = self.elements[tops[0]]

    def _bound(self, i, j, cone, what):
        common = cone[i] & cone[j]
        if not common:
            raise NotALattice((self.elements[i], self.elements[j]), f"no common {'upper' if what == 'join' else 'lower'} bound")
        # the least (greatest) element of ``common`` is the one whose cone contains all of it
        best = [k for k in common if common <= cone[k]]
        if len(best) != 1:
            raise NotALattice((self.elements[i], self.elements[j]), f"no unique {what}")
        return best[0]

    @classmethod
    def from_relations(cls, elements, relations) -> "Lattice":
        return cls(elements, relations)

    def join(self, a: str, b: str) -> str:
        return self.elements[self._join[self._index[a]][self._index[b]]]

    def meet(self, a: str, b: str) -> str:
        return self.elements[self._meet[self._index[a]][self._index[b]]]

    @property
    def poset(self) -> Poset:
        return self

    def incomparable_pairs(self) -> list[tuple[str, str]]:
        """Unordered incomparable pairs in element order."""
        e = self.elements
        return [
            (e[i], e[j])
            for i in range(len(e))
            for j in range(i + 1, len(e))
            if j not in self._up[i] and i not in self._up[j]
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Lattice":
        data = json.loads(text)
        return from_covers(data["elements"], [tuple(c) for c in data["covers"]])


def from_covers(elements: Sequence[str], covers: Iterable[tuple[str, str]]) -> Lattice:
    """Build and validate a lattice from cover (or any generating) relations."""
    elements = list(elements)
    if not elements:
        raise NoBoundedElements("elements must be nonempty")
    return Lattice(elements, covers)


# -- structural predicates ---------------------------------------------

def is_distributive(L: Lattice) -> bool:
    J, M = L._join, L._meet
    n = len(L)
    for a in range(n):
        Ma = M[a]
        for b in range(n):
            Jb = J[b]
            mab = Ma[b]
            for c in range(n):
                if Ma[Jb[c]] != J[mab][Ma[c]]:
                    return False
    return True


def is_modular(L: Lattice) -> bool:
    J, M, up = L._join, L._meet, L._up
    n = len(L)
    for a in range(n):
        for c in up[a]:
            for b in range(n):
                if J[a][M[b][c]] != M[J[a][b]][c]:
                    return False
    return True


# Abstract forbidden lattices, node names -> relations.
N5_ORDER = (("0", "x"), ("x", "y"), ("y", "1"), ("0", "z"), ("z", "1"))
M5_ORDER = (("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1"))
_ABSTRACT = {
    "N5": Lattice(["0", "x", "y", "z", "1"], N5_ORDER),
    "M5": Lattice(["0", "x", "y", "z", "1"], M5_ORDER),
}


@dataclass(frozen=True)
class SublatticeWitness:
    kind: str
    elements: tuple[str, ...]
    embedding: Mapping[str, str]

    def verify(self, L: Lattice) -> bool:
        """Check the induced join/meet tables against the abstract lattice."""
        A = _ABSTRACT[self.kind]
        emb = self.embedding
        if sorted(emb) != sorted(A.elements) or len(set(emb.values())) != 5:
            return False
        for u in A.elements:
            for v in A.elements:
                if L.join(emb[u], emb[v]) != emb[A.join(u, v)]:
                    return False
                if L.meet(emb[u], emb[v]) != emb[A.meet(u, v)]:
                    return False
        return True

    def to_dict(self) -> dict:
        return {"kind": self.kind, "elements": list(self.elements), "embedding": dict(self.embedding)}


def _witness(L, kind, nodes):
    emb = dict(zip(("0", "x", "y", "z", "1"), nodes))
    elems = tuple(sorted(nodes, key=L.index))
    return SublatticeWitness(kind, elems, emb)


def iter_forbidden_sublattices(L: Lattice, kind: str = "N5") -> Iterator[SublatticeWitness]:
    """Yield every N5 (or M5) sublattice of ``L`` in a deterministic order.

    N5 witnesses are enumerated as a chain ``x < y`` plus a side element ``z``
    with ``x∨z = y∨z`` and ``x∧z = y∧z``; M5 witnesses as three pairwise
    incomparable elements sharing all pairwise joins and meets.
    """
    J, M, up = L._join, L._meet, L._up
    n = len(L)
    e = L.elements
    incomparable = [[j not in up[i] and i not in up[j] for j in range(n)] for i in range(n)]
    if kind == "N5":
        for z in range(n):
            inc = [x for x in range(n) if incomparable[z][x]]
            for x in inc:
                for y in inc:
                    if y == x or y not in up[x]:
                        continue
                    if J[x][z] == J[y][z] and M[x][z] == M[y][z]:
                        yield _witness(L, "N5", (e[M[x][z]], e[x], e[y], e[z], e[J[x][z]]))
    elif kind == "M5":
        for x, y, z in itertools.combinations(range(n), 3):
            if not (incomparable[x][y] and incomparable[x][z] and incomparable[y][z]):
                continue
            j, m = J[x][y], M[x][y]
            if J[x][z] == J[y][z] == j and M[x][z] == M[y][z] == m:
                yield _witness(L, "M5", (e[m], e[x], e[y], e[z], e[j]))
    else:
        raise ValueError(f"unknown sublattice kind {kind!r}")


def find_forbidden_sublattice(L: Lattice, containing: Iterable[str] | None = None) -> SublatticeWitness | None:
    """Return an N5 witness if any exists, else an M5 witness, else None.

    ``containing`` restricts the search to witnesses whose element set
    includes the given elements.
    """
    want = frozenset(containing or ())
    for kind in ("N5", "M5"):
        for w in iter_forbidden_sublattices(L, kind):
            if want <= set(w.elements):
                assert w.verify(L)
                return w
    return None


@dataclass
class IsomorphismCertificate:
    bijective: bool
    order_preserving: bool
    inverse_order_preserving: bool
    evidence: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.bijective and self.order_preserving and self.inverse_order_preserving

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        return {
            "kind": "isomorphism",
            "verdict": self.verdict,
            "bijective": self.bijective,
            "order_preserving": self.order_preserving,
            "inverse_order_preserving": self.inverse_order_preserving,
            "evidence": self.evidence,
        }


def verify_isomorphism(L1: Poset, L2: Poset, mapping: Mapping[str, str]) -> IsomorphismCertificate:
    missing = [x for x in L1.elements if x not in mapping]
    if missing:
        raise MapNotTotal(f"map undefined on {missing}")
    stray = sorted({mapping[x] for x in L1.elements} - set(L2.elements), key=str)
    if stray:
        raise MapNotTotal(f"map sends elements outside the target: {stray}")
    evidence: dict = {}
    image = [mapping[x] for x in L1.elements]
    bijective = len(set(image)) == len(image) == len(L2)
    if not bijective:
        seen: dict = {}
        for x in L1.elements:
            y = mapping[x]
            if y in seen:
                evidence["collision"] = [seen[y], x, y]
                break
            seen[y] = x
        else:
            evidence["not_surjective"] = sorted(set(L2.elements) - set(image), key=L2.index)
    forward = backward = True
    for a in L1.elements:
        for b in L1.elements:
            le1 = L1.leq(a, b)
            le2 = L2.leq(mapping[a], mapping[b])
            if le1 and not le2 and forward:
                forward = False
                evidence["order_violation"] = [a, b]
            if le2 and not le1 and backward:
                backward = False
                evidence["reflection_violation"] = [a, b]
    return IsomorphismCertificate(bijective, forward, backward, evidence)
