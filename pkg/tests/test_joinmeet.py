import itertools

import pytest

from jmlat import (
    FamilySpec,
    Ideal,
    InvalidParams,
    Lattice,
    PaperBasisSpec,
    build_L2_glued,
    build_Lk,
    build_On,
    certify_radical,
    check_distributive_via_gb,
    groebner_basis,
    ideal_equal,
    is_distributive,
    is_groebner,
    joinmeet_generators,
    on_generators_closed_form,
    paper_basis,
    paper_basis_sets,
    paper_order,
    parse_order,
    parse_polynomial,
    rank_order,
    search_squarefree_order,
    variables_of,
)


def chain(n):
    names = [f"x{i}" for i in range(n)]
    return Lattice(names, list(zip(names, names[1:])))


def f(L, a, b):
    """x_a x_b - x_{a v b} x_{a ^ b}, built independently of the library."""
    V = variables_of(L)
    return parse_polynomial(f"{a}*{b} - {L.join(a, b)}*{L.meet(a, b)}", V)


def test_L11_single_generator():
    L = build_Lk(1, 1)
    I = joinmeet_generators(L)
    assert I.generators == [parse_polynomial("a1*b1 - s*t", I.variables)]


@pytest.mark.parametrize("L", [build_Lk(3, 2), build_On(5), build_L2_glued(5, 5, 3, 2, 4), build_Lk(1, 1, 1)])
def test_generators_one_per_incomparable_pair(L):
    I = joinmeet_generators(L)
    want = {f(L, a, b) for a, b in itertools.combinations(L.elements, 2) if not L.comparable(a, b)}
    assert set(I.generators) == want
    assert len(I.generators) == len(want)


def test_On_odd_row():
    L = build_On(6)
    gens = set(joinmeet_generators(L).generators)
    V = variables_of(L)
    for i in (1, 3, 5):
        below = f"b{i - 1}" if i > 1 else "s"
        assert parse_polynomial(f"a{i}*b{i} - {below}*b{i + 1}", V) in gens
    # a1 and b3 are comparable in O_6, so no generator for that pair
    assert L.comparable("a1", "b3")


def test_chain_has_no_generators():
    assert joinmeet_generators(chain(4)).generators == []


def test_L2_sets_sizes():
    sets = paper_basis_sets(PaperBasisSpec(FamilySpec("Lk", (3, 1)), "L2Sets"))
    assert [len(sets[k]) for k in ("G", "A", "B")] == [3, 2, 0]


def test_glued_G2():
    sets = paper_basis_sets(PaperBasisSpec(FamilySpec("L2Glued", (7, 7, 4, 2, 5)), "GluedSets"))
    V = variables_of(build_L2_glued(7, 7, 4, 2, 5))
    want = [parse_polynomial(f"a{i}*b4 - a2*a5", V) for i in (3, 4)]
    assert sets["G2"] == want


def test_glued_short_gap_drops_A2():
    sets = paper_basis_sets(PaperBasisSpec(FamilySpec("L2Glued", (5, 5, 3, 2, 4)), "GluedSets"))
    assert "A2" not in sets
    V = variables_of(build_L2_glued(5, 5, 3, 2, 4))
    assert sets["G2"] == [parse_polynomial("a3*b3 - a2*a4", V)]


def test_glued_B2_index():
    sets = paper_basis_sets(PaperBasisSpec(FamilySpec("L2Glued", (7, 7, 4, 2, 5)), "GluedSets"))
    V = variables_of(build_L2_glued(7, 7, 4, 2, 5))
    assert parse_polynomial("b7*b4*t - b5*b4*t", V) in sets["B2"]


def test_On_generators_match():
    L = build_On(4)
    spec = PaperBasisSpec(FamilySpec("On", (4,)), "OnGenerators")
    got = paper_basis(spec)
    assert sorted(map(str, got)) == sorted(map(str, joinmeet_generators(L).generators))


@pytest.mark.parametrize("n", range(1, 11))
def test_On_closed_form_all_n(n):
    assert set(on_generators_closed_form(n)) == set(joinmeet_generators(build_On(n)).generators)


def test_basis_spec_mismatch():
    with pytest.raises(InvalidParams):
        PaperBasisSpec(FamilySpec("On", (4,)), "L2Sets")
    with pytest.raises(InvalidParams):
        PaperBasisSpec(FamilySpec("Lk", (2, 2)), "Nope")


def test_radical_L43():
    cert = certify_radical(build_Lk(4, 3))
    assert cert.verdict == "RadicalBySquarefree"
    assert cert.groebner_verified


def test_radical_glued_rank():
    L = build_L2_glued(7, 7, 4, 2, 5)
    assert certify_radical(L, rank_order(L)).verdict == "RadicalBySquarefree"


def test_radical_m5_inconclusive():
    cert = certify_radical(build_Lk(1, 1, 1))
    assert cert.verdict == "Inconclusive"
    assert "Not" not in cert.verdict


def test_radical_stable_under_shuffle():
    L = build_Lk(3, 3)
    I = joinmeet_generators(L)
    gens = list(reversed(I.generators))
    a = groebner_basis(I, paper_order(L)).basis
    b = groebner_basis(Ideal(gens, I.variables), paper_order(L)).basis
    assert a == b


def test_distributive_via_gb():
    assert check_distributive_via_gb(build_On(6))
    assert not check_distributive_via_gb(build_Lk(1, 1, 1))
    assert check_distributive_via_gb(chain(5))


@pytest.mark.parametrize("n", range(2, 9))
def test_On_gb_rank_order(n):
    L = build_On(n)
    assert is_groebner(joinmeet_generators(L).generators, rank_order(L)).ok
    assert check_distributive_via_gb(L) == is_distributive(L)


def test_On_paper_order_fails_from_6():
    # the literal a-before-b order does not make the generators a Groebner basis
    assert is_groebner(joinmeet_generators(build_On(5)).generators, paper_order(build_On(5))).ok
    L = build_On(6)
    assert not is_groebner(joinmeet_generators(L).generators, paper_order(L)).ok


def test_search_L21():
    rep = search_squarefree_order(build_Lk(2, 1), "all-permutations-revlex", stop_at_first=True)
    assert rep.found
    assert rep.verdict.startswith("FoundOrder")


def test_search_paper_order_qualifies_L21():
    L = build_Lk(2, 1)
    rep = search_squarefree_order(L, "all-revlex")
    identity = tuple(L.elements)
    assert ("grevlex", identity) in {(k, tuple(n)) for k, n, ok in rep.results if ok is True}


def test_search_m5_none():
    rep = search_squarefree_order(build_Lk(1, 1, 1), "all")
    assert rep.found is None
    assert rep.verdict == "NoneFound(240)"


def test_search_sampled_replayable():
    L = build_Lk(2, 1, 1)
    a = search_squarefree_order(L, "sampled", samples=5, seed=7)
    b = search_squarefree_order(L, "sampled", samples=5, seed=7)
    assert a.results == b.results and a.tested == 5


def test_search_too_big():
    with pytest.raises(InvalidParams):
        search_squarefree_order(build_Lk(4, 4), "all-revlex")


def test_parse_order_variants():
    L = build_Lk(2, 1)
    assert parse_order("grevlex", L) == paper_order(L)
    assert parse_order("rank-grevlex", L) == rank_order(L)
    o = parse_order("perm:t,b1,a2,a1,s", L)
    assert tuple(o.precedence) == tuple(L.index(x) for x in ["t", "b1", "a2", "a1", "s"])
    with pytest.raises(ValueError):
        parse_order("perm:t,b1", L)
    with pytest.raises(ValueError):
        parse_order("weird", L)


def test_rank_order_interleaves():
    L = build_On(3)
    names = [L.elements[i] for i in rank_order(L).precedence]
    assert names[:5] == ["s", "a1", "b1", "a2", "b2"]


def test_paper_set_generates_L2_ideal():
    for n, m in [(2, 1), (3, 3), (5, 2)]:
        L = build_Lk(n, m)
        basis = paper_basis(PaperBasisSpec(FamilySpec("Lk", (n, m)), "L2Sets"))
        assert ideal_equal(basis, joinmeet_generators(L), paper_order(L))
