import itertools

import pytest

from jmlat import (
    CycleDetected,
    Lattice,
    MapNotTotal,
    NotALattice,
    Poset,
    build_divisor_Lpqk,
    build_L2_glued,
    build_Lk,
    build_On,
    canonical_h_maps,
    check_distributive_via_gb,
    find_forbidden_sublattice,
    from_covers,
    is_distributive,
    is_modular,
    iter_forbidden_sublattices,
    verify_isomorphism,
)

N5 = from_covers(["s", "x", "y", "z", "t"], [("s", "x"), ("x", "y"), ("y", "t"), ("s", "z"), ("z", "t")])
M5 = build_Lk(1, 1, 1)


def brute_join(P, a, b):
    ups = [u for u in P.elements if P.leq(a, u) and P.leq(b, u)]
    least = [u for u in ups if all(P.leq(u, v) for v in ups)]
    assert len(least) == 1
    return least[0]


def brute_meet(P, a, b):
    downs = [d for d in P.elements if P.leq(d, a) and P.leq(d, b)]
    greatest = [d for d in downs if all(P.leq(v, d) for v in downs)]
    assert len(greatest) == 1
    return greatest[0]


def small_lattices():
    yield build_Lk(1, 1)
    yield build_Lk(3, 2)
    yield M5
    yield N5
    yield build_On(5)
    yield build_L2_glued(5, 5, 3, 2, 4)
    yield build_divisor_Lpqk(2, 3, 2)


def test_square():
    L = from_covers(["s", "a1", "b1", "t"], [("s", "a1"), ("s", "b1"), ("a1", "t"), ("b1", "t")])
    assert L.join("a1", "b1") == "t"
    assert L.meet("a1", "b1") == "s"
    assert (L.bottom, L.top) == ("s", "t")
    assert is_distributive(L)


def test_m5_from_covers():
    mids = ["a1", "b1", "c1"]
    L = from_covers(["s", *mids, "t"], [("s", m) for m in mids] + [(m, "t") for m in mids])
    assert len(L) == 5
    assert all(L.join(x, y) == "t" and L.meet(x, y) == "s" for x, y in itertools.combinations(mids, 2))


def test_missing_top():
    with pytest.raises(NotALattice) as exc:
        from_covers(["x", "y", "z"], [("x", "y"), ("x", "z")])
    assert set(exc.value.pair) == {"y", "z"}


def test_two_maximal_upper_bounds():
    # a, b both below c and d: no unique join
    with pytest.raises(NotALattice):
        from_covers(
            ["0", "a", "b", "c", "d", "1"],
            [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
        )


def test_cycle():
    with pytest.raises(CycleDetected):
        Poset(["x", "y", "z"], [("x", "y"), ("y", "z"), ("z", "x")])


def test_unknown_element_in_cover():
    with pytest.raises(Exception):
        from_covers(["x", "y"], [("x", "w")])


def test_poset_basics():
    P = Poset(["a", "b", "c", "d"], [("a", "b"), ("b", "d"), ("a", "c")])
    assert P.leq("a", "d") and not P.leq("c", "d")
    assert set(P.covers) == {("a", "b"), ("a", "c"), ("b", "d")}
    assert P.minimal_elements() == ["a"]
    assert sorted(P.maximal_elements()) == ["c", "d"]
    assert P.height("d") == 2
    assert P.up_set("b") == {"b", "d"}


@pytest.mark.parametrize("L", list(small_lattices()), ids=lambda L: f"{len(L)}el")
def test_tables_match_brute_force(L):
    for a in L.elements:
        for b in L.elements:
            assert L.join(a, b) == brute_join(L, a, b)
            assert L.meet(a, b) == brute_meet(L, a, b)
            assert L.leq(a, b) == (L.join(a, b) == b) == (L.meet(a, b) == a)
        assert L.leq(L.bottom, a) and L.leq(a, L.top)


@pytest.mark.parametrize("L", list(small_lattices()), ids=lambda L: f"{len(L)}el")
def test_lattice_axioms(L):
    E = L.elements
    for a, b in itertools.product(E, repeat=2):
        assert L.join(a, b) == L.join(b, a)
        assert L.join(a, L.meet(a, b)) == a
        assert L.meet(a, L.join(a, b)) == a
    for a, b, c in itertools.product(E[:6], repeat=3):
        assert L.join(L.join(a, b), c) == L.join(a, L.join(b, c))
        assert L.meet(L.meet(a, b), c) == L.meet(a, L.meet(b, c))


def test_distributive_examples():
    assert is_distributive(build_Lk(1, 1))
    assert not is_distributive(M5)
    assert is_distributive(build_On(4))


def test_modular_examples():
    assert is_modular(M5)
    assert not is_modular(N5)
    assert not is_modular(build_L2_glued(5, 5, 3, 2, 4))


def test_forbidden_glued():
    w = find_forbidden_sublattice(build_L2_glued(5, 5, 3, 2, 4))
    assert w.kind == "N5"
    assert set(w.elements) == {"s", "a1", "b1", "b2", "b3"}


def test_forbidden_containing():
    L = build_L2_glued(7, 7, 4, 2, 5)
    w = find_forbidden_sublattice(L, containing=["s", "a1", "b1", "b2", "b4"])
    assert w.kind == "N5" and w.verify(L)


def test_forbidden_none_for_On():
    assert find_forbidden_sublattice(build_On(6)) is None


def test_forbidden_m5():
    w = find_forbidden_sublattice(M5)
    assert w.kind == "M5"
    assert set(w.elements) == set(M5.elements)
    assert w.verify(M5)


def test_witness_rejects_tampering():
    L = build_L2_glued(5, 5, 3, 2, 4)
    w = next(iter_forbidden_sublattices(L, "N5"))
    emb = dict(w.embedding)
    emb["x"], emb["z"] = emb["z"], emb["x"]
    assert not type(w)("N5", w.elements, emb).verify(L)


@pytest.mark.parametrize("L", list(small_lattices()), ids=lambda L: f"{len(L)}el")
def test_forbidden_agrees_with_predicates(L):
    w = find_forbidden_sublattice(L)
    assert (w is None) == is_distributive(L)
    has_n5 = next(iter_forbidden_sublattices(L, "N5"), None) is not None
    assert has_n5 == (not is_modular(L))
    for found in iter_forbidden_sublattices(L, "N5"):
        assert found.verify(L)


@pytest.mark.parametrize("L", list(small_lattices()), ids=lambda L: f"{len(L)}el")
def test_gb_distributivity_agrees(L):
    assert check_distributive_via_gb(L) == is_distributive(L)


def test_isomorphism_O2_divisor():
    h1, _ = canonical_h_maps(1, 2, 3)
    cert = verify_isomorphism(build_On(2), build_divisor_Lpqk(2, 3, 1), h1)
    assert cert.verdict and cert.bijective and cert.order_preserving and cert.inverse_order_preserving


def test_isomorphism_identity():
    L = build_On(5)
    assert verify_isomorphism(L, L, {x: x for x in L.elements})


def test_isomorphism_swapped_images():
    h1, _ = canonical_h_maps(2, 2, 3)
    O, D = build_On(4), build_divisor_Lpqk(2, 3, 2)
    bad = dict(h1)
    x, y = next((x, y) for x, y in itertools.combinations(O.elements, 2) if not O.comparable(x, y))
    bad[x], bad[y] = bad[y], bad[x]
    cert = verify_isomorphism(O, D, bad)
    assert not cert.verdict
    assert cert.evidence


def test_isomorphism_not_total():
    L = build_Lk(1, 1)
    with pytest.raises(MapNotTotal):
        verify_isomorphism(L, L, {"s": "s"})


def test_json_roundtrip():
    L = build_On(4)
    assert Lattice.from_json(L.to_json()) == L
