"""Recognition of plane curve germs by iterated point blowups.

The germ is read off from its tangent cone and the strict transform at the
distinguished tangent direction:

* multiplicity 2, two tangents: A1; one double tangent: blow up, and a
  strict transform of type A_j means A_{j+2} (A_0 = smooth);
* multiplicity 3, three tangents: D4; a double tangent: blow up, A_j below
  means D_{j+5}; a triple tangent: blow up, A_0 / A_1 / A_2 below means
  E6 / E7 / E8 and anything else is not simple;
* multiplicity 4 or more: not simple.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from ..algebra import BinaryForm, MPoly, binary_gcd
from .report import (A, BEYOND_BOUND, D, E, NON_ISOLATED, NOT_SIMPLE, SMOOTH,
                     SingularityReport, ade)


class GermError(ValueError):
    pass


def tangent_form(g: MPoly, d: int) -> list:
    """Coefficients ``c_i`` of ``u^(d-i) v^i`` in the degree-``d`` part."""
    return [g.coeff((d - i, i)) for i in range(d + 1)]


def repeated_linear_factor(coeffs):
    """Linear form ``(alpha, beta)`` whose square divides the binary form, or None."""
    d = len(coeffs) - 1
    form = BinaryForm(d, coeffs)
    h = binary_gcd(binary_gcd(form, form.partial_x()), form.partial_y())
    if h.degree == 0:
        return None
    # h is L^(e-1); recover L from the first two coefficients of L^e
    a0, a1 = h.coeffs[0].coeff(0), h.coeffs[1].coeff(0)
    e = h.degree
    if a0:
        return (Fraction(1), a1 / (e * a0))
    return (Fraction(0), Fraction(1))


def _cubic_discriminant(c):
    a, b, cc, d = c
    return b * b * cc * cc - 4 * a * cc ** 3 - 4 * b ** 3 * d - 27 * a * a * d * d + 18 * a * b * cc * d


def straighten(g: MPoly, line) -> MPoly:
    """Linear change of coordinates making ``alpha u + beta v`` the first coordinate."""
    alpha, beta = line
    gens = g.gens
    if alpha:
        images = {gens[0]: MPoly.linear(gens, [1 / alpha, -beta / alpha]),
                  gens[1]: MPoly.var(gens, gens[1])}
    else:
        images = {gens[0]: MPoly.var(gens, gens[1]),
                  gens[1]: MPoly.linear(gens, [1 / beta, 0])}
    return g.compose(images)


def blowup(g: MPoly, mult: int) -> MPoly:
    """Strict transform in the chart ``u = u1 v`` (tangent direction ``u = 0``)."""
    return MPoly(g.gens, {(i, i + j - mult): c for (i, j), c in g.items()})


def _to_sympy(g: MPoly):
    syms = sympy.symbols(g.gens)
    expr = sum(sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s ** e for s, e in zip(syms, ex)])
               for ex, c in g.items())
    return expr, syms


def is_isolated(g: MPoly) -> bool:
    """True iff no repeated factor of ``g`` passes through the origin."""
    expr, syms = _to_sympy(g)
    h = sympy.gcd(sympy.gcd(expr, sympy.diff(expr, syms[0])), sympy.diff(expr, syms[1]))
    h = sympy.Poly(h, *syms)
    if h.total_degree() == 0:
        return True
    return h.eval({s: 0 for s in syms}) != 0


def _recognize(g: MPoly, budget: int, evidence: list, depth: int = 0):
    if not g:
        return NON_ISOLATED, None
    mult = g.order()
    step = {"depth": depth, "multiplicity": mult}
    evidence.append(step)
    if mult == 0:
        raise GermError("germ does not pass through the origin")
    if mult == 1:
        return SMOOTH, 0
    if mult >= 4:
        return NOT_SIMPLE, None
    if budget <= 0:
        return BEYOND_BOUND, None
    cone = tangent_form(g, mult)
    if mult == 2:
        a, b, c = cone
        if b * b - 4 * a * c:
            step["tangent_cone"] = "two lines"
            return A, 1
        line = (Fraction(1), b / (2 * a)) if a else (Fraction(0), Fraction(1))
        step["tangent_cone"] = "double line"
        tag, j = _recognize(blowup(straighten(g, line), 2), budget - 1, evidence, depth + 1)
        if tag == SMOOTH:
            return A, 2
        if tag == A:
            return A, j + 2
        return tag, None
    if _cubic_discriminant(cone):
        step["tangent_cone"] = "three lines"
        return D, 4
    line = repeated_linear_factor(cone)
    g1 = blowup(straighten(g, line), 3)
    triple = _is_cube(cone)
    if not triple:
        step["tangent_cone"] = "double line + line"
        tag, j = _recognize(g1, budget - 1, evidence, depth + 1)
        if tag == SMOOTH:
            return D, 5
        if tag == A:
            return D, j + 5
        return tag, None
    step["tangent_cone"] = "triple line"
    if g1.order() == 1:
        evidence.append({"depth": depth + 1, "multiplicity": 1})
        return E, 6
    tag, j = _recognize(g1, min(budget - 1, 2), evidence, depth + 1)
    if tag == A and j in (1, 2):
        return E, 6 + j
    if tag in (NON_ISOLATED,):
        return tag, None
    return NOT_SIMPLE, None


def _is_cube(coeffs) -> bool:
    form = BinaryForm(3, coeffs)
    h = binary_gcd(binary_gcd(form, form.partial_x()), form.partial_y())
    return h.degree == 2


def classify_plane_curve_germ(g: MPoly, blowup_bound: int = 30, exact: bool = True) -> SingularityReport:
    """Classify the plane curve germ ``g = 0`` at the origin.

    ``exact=False`` marks ``g`` as a jet: the isolatedness test is skipped
    and callers compare the determinacy of the answer against their jet order.
    """
    if len(g.gens) != 2:
        raise GermError("a plane curve germ needs exactly two variables")
    if g.constant_term():
        raise GermError("germ does not pass through the origin")
    if exact and g and g.order() >= 2 and not is_isolated(g):
        return SingularityReport(NON_ISOLATED, germ=str(g), evidence=[{"isolated": False}])
    evidence = []
    tag, index = _recognize(g, blowup_bound, evidence)
    if tag in (A, D, E):
        rep = ade(tag, index, germ=str(g), evidence=evidence)
    elif tag == SMOOTH:
        rep = SingularityReport(SMOOTH, mu=0, germ=str(g), evidence=evidence)
    else:
        rep = SingularityReport(tag, germ=str(g), evidence=evidence)
    qh = quasi_homogeneous_milnor(g) if exact else None
    if qh is not None:
        rep.evidence.append({"milnor_quasi_homogeneous": qh})
        if rep.mu is None:
            rep.mu = qh
        elif rep.mu != qh:
            rep.flags.append("milnor-mismatch")
    return rep


def quasi_homogeneous_weights(g: MPoly):
    """Weights ``(w1, w2)`` making every monomial of ``g`` weighted degree 1, or None."""
    exps = sorted(g.terms)
    if len(exps) < 2:
        return None
    for i in range(len(exps)):
        for j in range(i + 1, len(exps)):
            (a1, b1), (a2, b2) = exps[i], exps[j]
            det = a1 * b2 - a2 * b1
            if det:
                w1 = Fraction(b2 - b1, det)
                w2 = Fraction(a1 - a2, det)
                if w1 > 0 and w2 > 0 and all(a * w1 + b * w2 == 1 for a, b in exps):
                    return w1, w2
                return None
    return None


def quasi_homogeneous_milnor(g: MPoly):
    """``(1/w1 - 1)(1/w2 - 1)`` for a quasi-homogeneous isolated germ, else None."""
    w = quasi_homogeneous_weights(g)
    if w is None or max(w) > Fraction(1, 2):
        return None
    mu = (1 / w[0] - 1) * (1 / w[1] - 1)
    return int(mu) if mu.denominator == 1 else None
