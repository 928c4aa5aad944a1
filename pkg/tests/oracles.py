"""Independent reference computations built on sympy."""

import sympy

T = sympy.Symbol("t")


def tcoeff_to_sympy(c):
    return sum((sympy.Rational(v.numerator, v.denominator) * T ** e for e, v in c.items()), sympy.Integer(0))


def resultant_oracle(f, g):
    """Sylvester determinant evaluated by sympy's generic ``Matrix.det``.

    ``sympy.resultant`` itself differs from this convention by ``(-1)^(mn)``.
    """
    m, n = f.degree, g.degree
    a = [tcoeff_to_sympy(c) for c in f.coeffs]
    b = [tcoeff_to_sympy(c) for c in g.coeffs]
    rows = [[0] * i + a + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + b + [0] * (m - 1 - i) for i in range(m)]
    return sympy.expand(sympy.Matrix(rows).det())


def milnor_number(expr, gens):
    """dim Q[gens]/(grad expr) via a Groebner basis; equals the local Milnor
    number when the origin is the only critical point."""
    grad = [sympy.diff(expr, v) for v in gens]
    G = sympy.groebner(grad, *gens, order="grevlex")
    leads = [sympy.Poly(g, *gens).monoms(order="grevlex")[0] for g in G.exprs]
    # count standard monomials in a box large enough for the leading terms
    bound = max(max(e) for e in leads) + 1
    count = 0
    for a in range(bound * 4):
        for b in range(bound * 4):
            if not any(a >= e[0] and b >= e[1] for e in leads):
                count += 1
    return count


def ade_from_milnor(expr, gens):
    """ADE label from multiplicity, tangent cone and Milnor number."""
    poly = sympy.Poly(expr, *gens)
    mult = min(sum(m) for m in poly.monoms())
    mu = milnor_number(expr, gens)
    if mult == 2:
        return f"A{mu}"
    if mult != 3:
        return None
    cone = sum(c * gens[0] ** m[0] * gens[1] ** m[1] for m, c in poly.terms() if sum(m) == 3)
    factors = sympy.factor_list(cone, *gens, extension=None)[1]
    # a triple line has a single linear factor of multiplicity 3
    mults = sorted(e * sympy.Poly(f, *gens).total_degree() for f, e in factors)
    if any(e == 3 for f, e in factors if sympy.Poly(f, *gens).total_degree() == 1):
        return f"E{mu}" if mu in (6, 7, 8) else None
    return f"D{mu}" if sum(mults) == 3 else None
