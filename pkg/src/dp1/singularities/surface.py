"""Surface double points ``G(w, u, v) = 0`` reduced to plane curves by splitting."""

from __future__ import annotations

from ..algebra import MPoly
from .plane import GermError, classify_plane_curve_germ
from .report import (BEYOND_BOUND, NON_ISOLATED, NOT_SIMPLE, SMOOTH, ADE,
                     SingularityReport, determinacy)

DEFAULT_JET = 12


def _quadratic_pivot(G: MPoly):
    """Return ``G`` (possibly after a shear) and the index of a variable with a
    nonzero square coefficient in the quadratic part."""
    n = len(G.gens)
    for i in range(n):
        e = [0] * n
        e[i] = 2
        if G.coeff(e):
            return G, i
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i] = e[j] = 1
            if G.coeff(e):
                # x_j -> x_j + x_i turns the x_i x_j term into an x_i^2 term
                shear = {G.gens[j]: MPoly.linear(G.gens, [1 if k in (i, j) else 0 for k in range(n)])}
                return G.compose(shear), i
    raise GermError("quadratic part vanishes")


def split_square(G: MPoly, jet_order: int = DEFAULT_JET):
    """Eliminate one variable from a germ with nonzero quadratic part.

    Returns ``(F, name)`` where ``G ~ c * w'^2 + F`` and ``F`` is a jet of
    order ``jet_order`` in the remaining variables.
    """
    G = G.truncate(jet_order)
    G, i = _quadratic_pivot(G)
    name = G.gens[i]
    e = [0] * len(G.gens)
    e[i] = 2
    c = G.coeff(e)
    rest = tuple(g for g in G.gens if g != name)
    Gw = G.diff(name)
    phi = MPoly(rest)
    for _ in range(jet_order + 1):
        val = Gw.compose({name: phi}, gens=rest, trunc=jet_order)
        new = (phi - val * (1 / (2 * c))).truncate(jet_order)
        if new == phi:
            break
        phi = new
    F = G.compose({name: phi}, gens=rest, trunc=jet_order)
    return F, name


def classify_surface_double_point(G: MPoly, jet_order: int = DEFAULT_JET,
                                  blowup_bound: int = 30) -> SingularityReport:
    """du Val type of the surface germ ``G = 0`` at the origin (three variables)."""
    if len(G.gens) != 3:
        raise GermError("a surface germ needs exactly three variables")
    if G.constant_term():
        raise GermError("point is not on the surface")
    J = G.truncate(jet_order)
    if not J:
        return SingularityReport(NON_ISOLATED, germ=str(J), flags=["jet-vanishes"])
    mult = J.order()
    if mult == 1:
        return SingularityReport(SMOOTH, mu=0, germ=str(J), evidence=[{"multiplicity": 1}])
    if mult >= 3:
        return SingularityReport(NOT_SIMPLE, germ=str(J), evidence=[{"multiplicity": mult}])
    F, name = split_square(J, jet_order)
    if not F:
        return SingularityReport(NON_ISOLATED, germ=str(J), flags=["jet-vanishes"],
                                 evidence=[{"split_variable": name, "jet_order": jet_order}])
    if F.order() == 1:
        raise GermError("splitting produced a smooth curve from a singular point")
    rep = classify_plane_curve_germ(F, blowup_bound, exact=False)
    rep.evidence.insert(0, {"split_variable": name, "jet_order": jet_order, "curve_jet": str(F)})
    rep.germ = str(J)
    if rep.tag in ADE and determinacy(rep) > jet_order:
        return SingularityReport(BEYOND_BOUND, germ=str(J), evidence=rep.evidence,
                                 flags=[f"jet order {jet_order} too small for {rep.label}"])
    if rep.tag == NON_ISOLATED:
        rep.flags.append("jet-vanishes")
    return rep
