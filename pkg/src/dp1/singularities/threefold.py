"""Germs of the total space: Jacobian tests, compound du Val types, general elephants."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import MPoly, WPoly
from .plane import GermError
from .report import SingularityReport
from .surface import DEFAULT_JET, classify_surface_double_point

COEFF_BOUND = 97


@dataclass
class AffineGerm:
    """A hypersurface germ in an affine chart, translated to the origin."""

    variables: tuple
    poly: MPoly
    base_point: dict = field(default_factory=dict)
    chart: str | None = None

    def __str__(self):
        return str(self.poly)


def affine_germ(poly: WPoly, chart: str, point: dict | None = None, with_t: bool = True) -> AffineGerm:
    """Set ``chart = 1`` and move ``point`` (remaining coordinates, default 0) to the origin."""
    point = dict(point or {})
    full = ("t",) + poly.names
    mp = poly.to_mpoly(full)
    keep = tuple(g for g in full if g != chart and (with_t or g != "t"))
    images = {chart: 1}
    if not with_t:
        images["t"] = point.pop("t", 0)
    local = mp.compose(images, gens=keep)
    base = {g: Fraction(point.get(g, 0)) for g in keep}
    local = local.translate([base[g] for g in keep])
    return AffineGerm(keep, local, base, chart)


def is_singular_at(germ) -> bool:
    """All first partials (``t`` included when present) vanish at the base point."""
    g = germ.poly if isinstance(germ, AffineGerm) else germ
    zero = [0] * len(g.gens)
    if g(*zero):
        raise GermError("the base point does not lie on the hypersurface")
    return all(not d(*zero) for d in g.gradient())


def singular_curve_check(X: WPoly, curve_vars) -> bool:
    """Is the 3-fold ``X`` singular along the curve where ``curve_vars`` vanish?

    Checked symbolically: ``X`` and every partial derivative (in ``t`` and
    the four coordinates) must restrict to zero on the curve.  A curve not
    contained in ``X`` gives False.
    """
    gens = ("t",) + X.names
    mp = X.to_mpoly(gens)
    zero = {v: 0 for v in curve_vars}
    if mp.compose(zero):
        return False
    return all(not d.compose(zero) for d in mp.gradient())


def random_rational(rng: random.Random, bound: int = COEFF_BOUND) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}/{trial}")


def hyperplane_section(H: MPoly, coeffs, jet_order: int) -> MPoly:
    """Restrict ``H`` to ``sum coeffs[i] * gens[i] = 0`` by solving for ``gens[0]``."""
    gens = H.gens
    rest = gens[1:]
    image = MPoly.linear(rest, [-c / coeffs[0] for c in coeffs[1:]])
    return H.truncate(jet_order).compose({gens[0]: image}, gens=rest, trunc=jet_order)


def classify_cDV(germ, trials: int = 7, seed: int = 0, jet_order: int = DEFAULT_JET) -> SingularityReport:
    """Modal du Val type of random hyperplane sections through a singular 3-fold point."""
    H = germ.poly if isinstance(germ, AffineGerm) else germ
    if len(H.gens) != 4:
        raise GermError("a 3-fold germ needs four variables")
    if not is_singular_at(H):
        raise GermError("the point is not singular")
    labels, samples, reports = [], [], {}
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        coeffs = [random_rational(rng) for _ in H.gens]
        rep = classify_surface_double_point(hyperplane_section(H, coeffs, jet_order), jet_order)
        labels.append(rep.label)
        reports.setdefault(rep.label, rep)
        samples.append({"hyperplane": [str(c) for c in coeffs], "section_type": rep.label})
    counts = Counter(labels)
    modal, n = counts.most_common(1)[0]
    best = reports[modal]
    flags = []
    if trials - n > 1:
        flags.append("UNSTABLE")
    if not best.is_du_val:
        flags.append("sections not du Val")
    return SingularityReport(best.tag, best.index, best.mu,
                             location=getattr(germ, "base_point", None) and
                             {k: str(v) for k, v in germ.base_point.items()},
                             germ=str(H), evidence=samples, prefix="c", flags=flags)


@dataclass
class ElephantReport:
    verdict: str
    samples: list

    @property
    def du_val(self) -> bool:
        return self.verdict == "du Val"


def elephant_check(germ: AffineGerm, member_var: str, samples: int = 5, seed: int = 0,
                   jet_order: int = DEFAULT_JET) -> ElephantReport:
    """Sample anticanonical members ``member_var = t h(t)`` through the point.

    ``h = h0 + h1 t`` with random rationals; the resulting surface germs are
    classified and the majority decides between du Val and not canonical.
    """
    H = germ.poly
    if "t" not in H.gens or member_var not in H.gens:
        raise GermError("the germ must involve t and the member variable")
    rest = tuple(g for g in H.gens if g != member_var)
    t = MPoly.var(rest, "t")
    results = []
    good = 0
    for trial in range(samples):
        rng = _trial_rng(seed, trial)
        h0, h1 = random_rational(rng), random_rational(rng)
        member = t * h0 + t * t * h1
        S = H.truncate(jet_order).compose({member_var: member}, gens=rest, trunc=jet_order)
        rep = classify_surface_double_point(S, jet_order)
        good += rep.is_du_val
        results.append({"h": f"{h0} + {h1}*t", "type": rep.label, "surface_jet": str(S)})
    verdict = "du Val" if 2 * good > samples else "not-canonical"
    return ElephantReport(verdict, results)
