import sympy
from hypothesis import settings

from jmlat import parse_polynomial

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def sympy_reduced_gb(polys, variables, order, kind="grevlex"):
    """Reduced GB from sympy, converted back and made monic under ``order``.

    jmlat puts variable 0 at the bottom of the order; sympy puts its first
    generator at the top, so generators are passed reversed.
    """
    gens = sympy.symbols(list(reversed(variables.names)))
    exprs = [sympy.sympify(p.to_str().replace("^", "**"), locals={str(g): g for g in gens}) for p in polys]
    G = sympy.groebner(exprs, *gens, order=kind, domain="QQ")
    return {parse_polynomial(str(g.as_expr()).replace("**", "^"), variables).monic(order) for g in G.exprs}
