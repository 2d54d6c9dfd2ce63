from fractions import Fraction

import pytest

from jmlat import (
    MonomialOrder,
    Polynomial,
    VariableSet,
    VariableSetMismatch,
    ZeroPolynomial,
    compare,
    normal_form,
    order_from_dict,
    order_to_dict,
    parse_polynomial,
    polynomial_ring,
    s_polynomial,
)

V = VariableSet(["s", "a1", "a2", "b1", "b2", "t"])
GREVLEX = MonomialOrder.grevlex(len(V))


def P(text, variables=V):
    return parse_polynomial(text, variables)


def mono(text, variables=V):
    (m,) = P(text, variables).monomials()
    return m


def test_grevlex_ab_beats_st():
    assert compare(mono("a1*b1"), mono("s*t"), GREVLEX) > 0


def test_grevlex_a2st_beats_a1st():
    assert compare(mono("a2*s*t"), mono("a1*s*t"), GREVLEX) > 0


def test_compare_equal():
    for order in (GREVLEX, MonomialOrder.lex(len(V)), MonomialOrder.grlex(len(V))):
        assert compare(mono("a1*b2^3"), mono("a1*b2^3"), order) == 0


def test_compare_mismatch():
    with pytest.raises(VariableSetMismatch):
        compare((1, 0), (0, 1, 0), MonomialOrder.lex(2))


def test_lex_vs_grevlex():
    # x0 < x1 < x2; lex compares the largest variable first
    lex, grl = MonomialOrder.lex(3), MonomialOrder.grevlex(3)
    assert compare((0, 0, 1), (5, 5, 0), lex) > 0
    assert compare((0, 0, 1), (5, 5, 0), grl) < 0
    # same degree: grevlex punishes the smallest variable
    assert compare((0, 2, 0), (1, 0, 1), grl) > 0


def test_precedence():
    order = MonomialOrder.lex(3, [2, 1, 0])
    assert compare((1, 0, 0), (0, 1, 0), order) > 0


def test_block_order_eliminates():
    # first block dominates everything else
    order = MonomialOrder.block(3, [("lex", [2]), ("grevlex", [0, 1])])
    assert compare((0, 0, 1), (9, 9, 0), order) > 0


def test_order_dict_roundtrip():
    for order in (
        GREVLEX,
        MonomialOrder.lex(6, [5, 4, 3, 2, 1, 0]),
        MonomialOrder.block(6, [("lex", [5]), ("grevlex", [0, 1, 2, 3, 4])]),
    ):
        assert order_from_dict(order_to_dict(order, V), V) == order


def test_s_poly_paper_case():
    f, g = P("a2*b1 - s*t"), P("a1*b1 - s*t")
    assert s_polynomial(f, g, GREVLEX) == P("-a1*s*t + a2*s*t")


def test_s_poly_self():
    f = P("a2*b1 - s*t")
    assert s_polynomial(f, f, GREVLEX).is_zero()


def test_s_poly_A_B():
    W = VariableSet(["s", "a1", "a2", "a3", "b1", "b2", "t"])
    o = MonomialOrder.grevlex(len(W))
    f, g = P("a3*s*t - a1*s*t", W), P("b2*s*t - b1*s*t", W)
    assert s_polynomial(f, g, o) == P("-a1*b2*s*t + a3*b1*s*t", W)


def test_s_poly_zero():
    with pytest.raises(ZeroPolynomial):
        s_polynomial(Polynomial(V), P("a1"), GREVLEX)


def test_s_poly_cancels_leads():
    f, g = P("a1^2*b1 + 3*s"), P("a1*b1^2 - t^2")
    h = s_polynomial(f, g, GREVLEX)
    lcm = mono("a1^2*b1^2")
    assert lcm not in h.coeffs


def test_normal_form_self():
    f = P("a2*s*t - a1*s*t")
    assert normal_form(f, [f], GREVLEX).is_zero()


def test_normal_form_L21():
    W = VariableSet(["s", "a1", "a2", "b1", "t"])
    o = MonomialOrder.grevlex(len(W))
    G = [P("a1*b1 - s*t", W), P("a2*b1 - s*t", W), P("a2*s*t - a1*s*t", W)]
    S = s_polynomial(G[0], G[2], o)
    assert normal_form(S, G, o).is_zero()


def test_normal_form_remainder_irreducible():
    G = [P("a1*b1 - s*t"), P("a2*s - b2")]
    f = P("a1^2*b1*s + a2^2*s^2 + t")
    nf = normal_form(f, G, GREVLEX, with_quotients=True)
    leads = [g.leading_monomial(GREVLEX) for g in G]
    for m in nf.remainder.monomials():
        assert not any(all(x <= y for x, y in zip(l, m)) for l in leads)
    assert f - nf.remainder == nf.combination(G)


def test_parse_print_roundtrip():
    for text in ["a1*b1 - s*t", "3/2*a1^2*t - b2 + 7", "-s", "0", "a2^3*b1^2*s*t"]:
        p = P(text)
        assert P(p.to_str()) == p
        assert P(str(p)) == p


def test_parse_coefficients():
    p = P("3/2*a1 - 1/2*a1")
    assert p == P("a1")
    assert P("2*a1*a1") == P("2*a1^2")
    assert P("a1 - a1").is_zero()


def test_parse_errors():
    for bad in ["a1 +", "a1**2", "a1^"]:
        with pytest.raises(ValueError):
            P(bad)
    with pytest.raises(VariableSetMismatch):
        P("x9")


def test_arithmetic_exact():
    x, y = polynomial_ring("x,y")[1:]
    f = (x + Fraction(1, 3) * y) ** 3
    assert f.coeffs[(1, 2)] == Fraction(1, 3)
    assert (f - f).is_zero()
    assert (x * y - y * x).is_zero()


def test_homogeneous_degree():
    assert P("a1*b1 - s*t").is_homogeneous()
    assert not P("a1 - s*t").is_homogeneous()
    assert P("a1^3*t - s").degree() == 4


def test_embed_and_substitute():
    W = V.extend(["w"])
    f = P("a1*b1 - s*t").embed(W)
    assert f.vars == W
    g = P("a1*b1 - s*t").substitute({"a1": P("s")})
    assert g == P("s*b1 - s*t")


def test_leading_term():
    f = P("2*a1*b1 - 3*s*t + a2")
    assert f.leading_monomial(GREVLEX) == mono("a1*b1")
    assert f.leading_coefficient(GREVLEX) == 2
    assert f.monic(GREVLEX).leading_coefficient(GREVLEX) == 1
