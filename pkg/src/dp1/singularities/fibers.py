"""The central fiber ``X_0`` and the singular points of the total space above it.

``X_0: w^2 + z^3 + z F4(x, y) + F6(x, y) = 0`` over Q is non-normal exactly
when the cubic in ``z`` has a repeated root for every ``(x : y)``, i.e. when
``-4 F4^3 - 27 F6^2`` vanishes identically.  Then either ``F4 = F6 = 0``
(the cusp pattern ``w^2 + z^3``) or ``F4 = -3 A^2, F6 = 2 A^3`` for a
quadratic form ``A`` (the node pattern ``w^2 + (z - A)^2 (z + 2A)``).
Otherwise the singular points are finite; they are found chart by chart by
eliminating ``z`` with resultants and then classified as surface germs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from ..algebra import BinaryForm, UPoly
from ..algebra.binary import bareiss_det, sylvester_matrix
from ..normal_form import Fibration
from .report import (CONJUGATE_SET, MINIMALLY_ELLIPTIC, NON_ISOLATED, NON_NORMAL_CUSP,
                     NON_NORMAL_NODE, NOT_SIMPLE, SingularityReport)
from .surface import DEFAULT_JET, classify_surface_double_point
from .threefold import affine_germ, classify_cDV, is_singular_at

SMOOTH_FIBER = "smooth"
NORMAL_FIBER = "normal"


# -- small conversions -----------------------------------------------------

def _rat(c) -> sympy.Rational:
    c = Fraction(c)
    return sympy.Rational(c.numerator, c.denominator)


def _frac(r) -> Fraction:
    r = sympy.Rational(r)
    return Fraction(int(r.p), int(r.q))


def _residues(form: BinaryForm):
    return [c.residue() if c else Fraction(0) for c in form.coeffs]


def _chart_poly(coeffs, chart_index: int) -> UPoly:
    """Dehomogenize ``sum c_i x^(d-i) y^i`` at ``y = 1`` (index 1) or ``x = 1`` (index 0)."""
    d = len(coeffs) - 1
    if chart_index == 1:
        return UPoly({d - i: c for i, c in enumerate(coeffs) if c})
    return UPoly({i: c for i, c in enumerate(coeffs) if c})


def _upoly_to_sympy(p: UPoly, var):
    return sympy.Poly(sum((_rat(c) * var ** e for e, c in p.items()), sympy.Integer(0)), var)


def _resultant_in_z(f, g):
    """Resultant of two polynomials in ``z`` whose coefficients (descending) are UPolys."""
    f = _strip(f)
    g = _strip(g)
    if not f or not g:
        return UPoly()
    if len(f) == 1 and len(g) == 1:
        return UPoly.const(1)
    return bareiss_det(sylvester_matrix(f, g, UPoly()), UPoly.const(1))


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
    return coeffs


def _rational_roots(poly: sympy.Poly):
    """``(roots, irreducible non-linear factors)`` of a univariate polynomial."""
    if poly.is_zero:
        raise ValueError("zero polynomial has no finite root set")
    roots, others = [], []
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            roots.append(_frac(-b / a))
        elif fac.degree() > 1:
            others.append(fac)
    return sorted(set(roots)), others


# -- the report ----------------------------------------------------------

@dataclass
class CentralFiberReport:
    """``kind`` is smooth, normal, NonNormalCusp or NonNormalNode; ``points``
    lists the classified singular points of ``X_0`` (empty when smooth or
    non-normal)."""

    kind: str
    points: list = field(default_factory=list)
    equation: str = ""
    flags: list = field(default_factory=list)

    @property
    def is_empty(self) -> bool:
        return not self.points and self.kind == SMOOTH_FIBER

    @property
    def rationality_violation(self) -> bool:
        return any(p.tag == MINIMALLY_ELLIPTIC for p in self.points)

    @property
    def is_normal(self) -> bool:
        return self.kind in (SMOOTH_FIBER, NORMAL_FIBER)

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "equation": self.equation,
               "points": [p.to_dict() for p in self.points]}
        if self.flags:
            out["flags"] = list(self.flags)
        return out


def _fiber_equation(fib: Fibration) -> str:
    f4, f6 = fib.central_fiber()
    return str(Fibration(f4, f6, allow_degenerate=True, names=fib.names))


def _node_square_root(F4, F6, names):
    """The quadratic form ``A`` with ``F4 = -3 A^2``, ``F6 = 2 A^3``."""
    x, y = sympy.symbols(names[:2])
    f4 = sum(_rat(c) * x ** (4 - i) * y ** i for i, c in enumerate(F4))
    f6 = sum(_rat(c) * x ** (6 - i) * y ** i for i, c in enumerate(F6))
    A = sympy.cancel(-3 * f6 / (2 * f4))
    if sympy.expand(f4 + 3 * A ** 2) != 0 or sympy.expand(f6 - 2 * A ** 3) != 0:
        raise ArithmeticError("node pattern does not hold")
    return sympy.Poly(A, x, y)


def _chart_singular_points(F4, F6, chart_index: int):
    """Rational points ``(u0, z0)`` of the chart where ``X_0`` is singular,
    plus irreducible factors carrying non-rational candidates."""
    a = _chart_poly(F4, chart_index)
    b = _chart_poly(F6, chart_index)
    one, zero = UPoly.const(1), UPoly()
    G = [one, zero, a, b]
    Gz = [UPoly.const(3), zero, a]
    Gu = [a.derivative(), b.derivative()]
    r1 = _resultant_in_z(G, Gz)
    r2 = _resultant_in_z(Gz, Gu)
    h = r1.gcd(r2) if r2 else r1
    u = sympy.Symbol("u")
    if chart_index == 0:
        # the chart x = 1 only contributes its point at y = 0
        candidates, others = ([Fraction(0)] if not h(0) else []), []
    else:
        candidates, others = _rational_roots(_upoly_to_sympy(h, u))
    z = sympy.Symbol("z")
    points = []
    for u0 in candidates:
        a0, b0 = a(u0), b(u0)
        ga = sympy.Poly(z ** 3 + _rat(a0) * z + _rat(b0), z)
        gz = ga.diff(z)
        gu = sympy.Poly(_rat(a.derivative()(u0)) * z + _rat(b.derivative()(u0)), z)
        common = sympy.gcd(ga, gz)
        if not gu.is_zero:
            common = sympy.gcd(common, gu)
        if common.degree() < 1:
            continue
        zs, zothers = _rational_roots(common)
        points.extend((u0, z0) for z0 in zs)
        others.extend(zothers)
    return points, others


def _point_location(names, chart_index, u0, z0):
    x, y = (u0, Fraction(1)) if chart_index == 1 else (Fraction(1), u0)
    return {names[0]: str(x), names[1]: str(y), names[2]: str(z0), names[3]: "0"}


def _chart_point(names, chart_index, u0, z0):
    chart = names[chart_index]
    other = names[1 - chart_index]
    return chart, {other: u0, names[2]: z0}


def _normal_fiber_points(fib: Fibration):
    """``[(chart, point, location)]`` for rational singular points and conjugate factors."""
    F4, F6 = (_residues(f) for f in fib.central_fiber())
    found, conj = [], []
    for chart_index in (1, 0):
        pts, others = _chart_singular_points(F4, F6, chart_index)
        for u0, z0 in pts:
            chart, point = _chart_point(fib.names, chart_index, u0, z0)
            found.append((chart, point, _point_location(fib.names, chart_index, u0, z0)))
        conj.extend(others)
    return found, conj


def central_fiber_type(fib: Fibration, jet_order: int = DEFAULT_JET,
                       blowup_bound: int = 30) -> CentralFiberReport:
    """Classify the central fiber: non-normal pattern, or its singular points."""
    F4, F6 = fib.central_fiber()
    eq = _fiber_equation(fib)
    disc = (F4 * F4 * F4) * BinaryForm(0, [-4]) + (F6 * F6) * BinaryForm(0, [-27])
    if disc.reduce_mod_t().is_zero():
        if F4.reduce_mod_t().is_zero() and F6.reduce_mod_t().is_zero():
            return CentralFiberReport(NON_NORMAL_CUSP, equation=eq)
        A = _node_square_root(_residues(F4), _residues(F6), fib.names)
        return CentralFiberReport(NON_NORMAL_NODE, equation=eq,
                                  flags=[f"A = {A.as_expr()}"])
    found, conj = _normal_fiber_points(fib)
    X0 = Fibration(F4, F6, allow_degenerate=True, names=fib.names).to_wpoly()
    points = []
    for chart, point, loc in found:
        germ = affine_germ(X0, chart, point, with_t=False)
        rep = classify_surface_double_point(germ.poly, jet_order, blowup_bound)
        rep.location = loc
        if rep.tag == NOT_SIMPLE:
            rep = SingularityReport(MINIMALLY_ELLIPTIC, location=loc, germ=rep.germ,
                                    evidence=rep.evidence, flags=["rationality-violation"])
        points.append(rep)
    for fac in conj:
        points.append(SingularityReport(CONJUGATE_SET, germ=str(fac.as_expr()),
                                        flags=["not classified over Q"]))
    kind = NORMAL_FIBER if points else SMOOTH_FIBER
    return CentralFiberReport(kind, points, eq)


# -- the total space -----------------------------------------------------

def _curve_points(fib: Fibration, A):
    """Points of the singular curve ``{z = A, w = 0}`` of a non-normal ``X_0``
    where ``dX/dt`` also vanishes; ``None`` if it vanishes along the curve."""
    names = fib.names
    x, y = sympy.symbols(names[:2])
    d4 = [c.coeff(1) for c in fib.f4.coeffs]
    d6 = [c.coeff(1) for c in fib.f6.coeffs]
    expr = (sum(_rat(c) * x ** (4 - i) * y ** i for i, c in enumerate(d4)) * A
            + sum(_rat(c) * x ** (6 - i) * y ** i for i, c in enumerate(d6)))
    expr = sympy.expand(expr)
    if expr == 0:
        return None, []
    poly = sympy.Poly(expr, x, y)
    found, conj = [], []
    for fac, _ in poly.factor_list()[1]:
        if fac.total_degree() != 1:
            conj.append(fac)
            continue
        al, be = fac.coeff_monomial(x), fac.coeff_monomial(y)
        if al:
            u0 = _frac(sympy.Rational(-be, al))
            found.append((1, u0, _frac(sympy.sympify(A).subs({x: _rat(u0), y: 1}))))
        else:
            found.append((0, Fraction(0), _frac(sympy.sympify(A).subs({x: 1, y: 0}))))
    return found, conj


def threefold_singular_points(fib: Fibration):
    """Singular points of the total space (all lie in the central fiber).

    Returns ``(points, unresolved)``: ``points`` is a list of
    ``(chart, chart_point, location)``; ``unresolved`` holds reports for
    conjugate sets and for singular curves.
    """
    cf = central_fiber_type(fib)
    X = fib.to_wpoly()
    names = fib.names
    unresolved = []
    if cf.is_normal:
        found, conj = _normal_fiber_points(fib)
        pts = []
        for chart, point, loc in found:
            if is_singular_at(affine_germ(X, chart, point)):
                pts.append((chart, point, loc))
        for fac in conj:
            unresolved.append(SingularityReport(CONJUGATE_SET, germ=str(fac.as_expr()),
                                                flags=["candidate points over a number field"]))
        return pts, unresolved
    if cf.kind == NON_NORMAL_CUSP:
        A = sympy.Integer(0)
    else:
        A = _node_square_root(*(_residues(f) for f in fib.central_fiber()), names).as_expr()
    found, conj = _curve_points(fib, A)
    if found is None:
        unresolved.append(SingularityReport(NON_ISOLATED, germ=str(X),
                                            flags=[f"singular along {{{names[2]} = {A}, {names[3]} = 0, t = 0}}"]))
        return [], unresolved
    pts = []
    for chart_index, u0, z0 in found:
        chart, point = _chart_point(names, chart_index, u0, z0)
        pts.append((chart, point, _point_location(names, chart_index, u0, z0)))
    for fac in conj:
        unresolved.append(SingularityReport(CONJUGATE_SET, germ=str(fac.as_expr()),
                                            flags=["candidate points over a number field"]))
    return pts, unresolved


def is_smooth(fib: Fibration) -> bool:
    pts, unresolved = threefold_singular_points(fib)
    return not pts and not unresolved


def threefold_singularities(fib: Fibration, trials: int = 7, seed: int = 0,
                            jet_order: int = DEFAULT_JET) -> list:
    """cDV reports for every rational singular point of the total space."""
    pts, unresolved = threefold_singular_points(fib)
    X = fib.to_wpoly()
    reports = []
    for chart, point, loc in pts:
        rep = classify_cDV(affine_germ(X, chart, point), trials=trials, seed=seed, jet_order=jet_order)
        rep.location = dict(loc, t="0")
        reports.append(rep)
    return reports + unresolved
