"""Fiberwise monomial maps ``p = t^a x, q = t^b y, r = t^c z, s = t^d w``.

A map is stored with its inverse ``x = t^alpha p, ...`` and the level ``m``
tying the two together: ``a + alpha = b + beta = m``, ``c + gamma = 2m``,
``d + delta = 3m``.  Transforming ``X`` means substituting the inverse
into ``X``'s sextic and clearing ``t^(2 delta)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import VVARS, WPoly, XVARS
from .algebra.wpoly import monomial
from .normal_form import Fibration


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialMap:
    fwd: tuple
    inv: tuple
    m: int

    def __post_init__(self):
        a, b, c, d = self.fwd
        al, be, ga, de = self.inv
        m = self.m
        if min(self.fwd) < 0 or min(self.inv) < 0:
            raise MapError("exponents must be non-negative")
        if min(self.fwd) != 0 or min(self.inv) != 0:
            raise MapError("both exponent quadruples must contain a zero")
        if (a + al, b + be, c + ga, d + de) != (m, m, 2 * m, 3 * m):
            raise MapError(f"level equations fail for {self.fwd} / {self.inv} at m={m}")
        if 2 * d != 3 * c or 2 * de != 3 * ga:
            raise MapError("2d = 3c and 2 delta = 3 gamma are required")

    def inverse(self) -> "MonomialMap":
        return MonomialMap(self.inv, self.fwd, self.m)

    def swapped(self) -> "MonomialMap":
        """Conjugate by the exchange ``x <-> y`` (and ``p <-> q``)."""
        a, b, c, d = self.fwd
        al, be, ga, de = self.inv
        return MonomialMap((b, a, c, d), (be, al, ga, de), self.m)

    def __str__(self):
        return f"(a,b,c,d)={self.fwd} (alpha,beta,gamma,delta)={self.inv} m={self.m}"


def solve_weights(fwd) -> MonomialMap:
    """Solve the level system for the inverse exponents of ``fwd = (a, b, c, d)``."""
    a, b, c, d = (int(v) for v in fwd)
    if min(a, b, c, d) < 0:
        raise MapError("exponents must be non-negative")
    if 2 * d != 3 * c:
        raise MapError(f"2d = 3c fails for (c, d) = ({c}, {d}); the map does not "
                       "preserve the normal form")
    if min(a, b, c, d) != 0:
        raise MapError(f"no valid level m: {fwd} contains no zero exponent")
    m = max(a, b, c // 2)
    return MonomialMap((a, b, c, d), (m - a, m - b, 2 * m - c, 3 * m - d), m)


def parse_map(text: str) -> MonomialMap:
    try:
        parts = [int(v) for v in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise MapError(f"malformed map {text!r}") from exc
    if len(parts) != 4:
        raise MapError(f"a map needs four exponents, got {text!r}")
    return solve_weights(parts)


# -- case classification -----------------------------------------------

@dataclass(frozen=True)
class CaseClass:
    """One of the shapes A, B, C, D (or IDENTITY), after normalization.

    ``swapped`` records an ``x <-> y`` exchange; ``reversed`` records that the
    roles of source and target were exchanged (the inverse has the shape).
    """

    tag: str
    m: int
    k: int | None = None
    l: int | None = None
    a: int | None = None
    swapped: bool = False
    reversed: bool = False

    def __post_init__(self):
        if self.tag == "D":
            if not (self.k > 0 and self.l > 0 and self.k + self.l == self.m and self.m >= 2):
                raise MapError(f"case D needs k, l > 0 with k + l = m >= 2, got {self}")

    def normalized_map(self) -> MonomialMap:
        """The representative map in the table's orientation."""
        m = self.m
        if self.tag == "D":
            return MonomialMap((0, m, 2 * self.k, 3 * self.k), (m, 0, 2 * self.l, 3 * self.l), m)
        if self.tag == "A":
            return MonomialMap((self.a, m, 0, 0), (m - self.a, 0, 2 * m, 3 * m), m)
        if self.tag == "B":
            return MonomialMap((0, m, 0, 0), (m, 0, 2 * m, 3 * m), m)
        if self.tag == "C":
            return MonomialMap((m, m, 0, 0), (0, 0, 2 * m, 3 * m), m)
        return MonomialMap((0, 0, 0, 0), (0, 0, 0, 0), 0)


def _classify_flat(fwd, m):
    """Shapes with ``c = d = 0`` (up to x <-> y)."""
    a, b = fwd[0], fwd[1]
    swapped = a > b
    if swapped:
        a, b = b, a
    if a == 0:
        return CaseClass("B", m, swapped=swapped)
    if a == m:
        return CaseClass("C", m, swapped=swapped)
    return CaseClass("A", m, a=a, swapped=swapped)


def classify_case(mp: MonomialMap) -> CaseClass:
    a, b, c, d = mp.fwd
    al, be, ga, de = mp.inv
    m = mp.m
    if m == 0:
        return CaseClass("IDENTITY", 0)
    if c == 0:
        return _classify_flat(mp.fwd, m)
    if ga == 0:
        cc = _classify_flat(mp.inv, m)
        return CaseClass(cc.tag, m, a=cc.a, swapped=cc.swapped, reversed=True)
    k, l = c // 2, ga // 2
    if (a, b) == (0, m) and (al, be) == (m, 0):
        swapped = False
    elif (a, b) == (m, 0) and (al, be) == (0, m):
        swapped = True
    else:
        raise MapError(f"exponent pattern {mp.fwd}/{mp.inv} matches none of the four shapes")
    if k > l:
        return CaseClass("D", m, k=l, l=k, swapped=swapped, reversed=True)
    return CaseClass("D", m, k=k, l=l, swapped=swapped)


def case_d_map(k: int, l: int, swapped: bool = False) -> MonomialMap:
    mp = CaseClass("D", k + l, k=k, l=l).normalized_map()
    return mp.swapped() if swapped else mp


# -- transforming fibrations -------------------------------------------

@dataclass
class TransformResult:
    ok: bool
    target: Fibration | None
    cleared_valuation: int
    substituted: WPoly
    violations: list = field(default_factory=list)
    gorenstein_failure: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _image_exponent_shift(mp: MonomialMap, exps) -> int:
    """t-power picked up by the monomial ``exps`` under the inverse substitution,
    relative to the cleared ``t^(2 delta)``."""
    return sum(e * s for e, s in zip(exps, mp.inv)) - 2 * mp.inv[3]


def transform_fibration(X: Fibration, mp: MonomialMap) -> TransformResult:
    """Substitute ``x = t^alpha p, ...`` into ``X`` and clear ``t^(2 delta)``.

    Succeeds iff the result is a normal-form sextic over the DVR whose
    ``s^2`` and ``r^3`` coefficients are 1.  Every offending monomial is
    reported, not only the first.
    """
    source_names = X.names
    target_names = VVARS if source_names == XVARS else XVARS
    poly = X.to_wpoly()
    images = [(e, target_names[i]) for i, e in enumerate(mp.inv)]
    sub = poly.substitute_monomial(images, names=target_names)
    clear = 2 * mp.inv[3]
    cleared = sub.shift_t(-clear)
    violations = []
    for exps, coeff in cleared.items():
        v = coeff.valuation()
        if v < 0:
            violations.append({
                "monomial": str(monomial(exps, 1, target_names)),
                "source_monomial": str(monomial(exps, 1, source_names)),
                "valuation": v,
                "source_valuation": poly.coeff(exps).valuation(),
                "required_source_valuation": -_image_exponent_shift(mp, exps),
            })
    gorenstein = []
    if 3 * mp.inv[2] != clear:
        gorenstein.append("(0:0:1:0)")
    if violations or gorenstein:
        violations.sort(key=lambda v: v["monomial"])
        return TransformResult(False, None, clear, sub, violations, gorenstein)
    target = Fibration.from_wpoly(cleared, allow_degenerate=True)
    return TransformResult(True, target, clear, sub)


def coefficient_constraints(case: CaseClass) -> list:
    """Minimal t-valuations for the coefficients of a case-D pair.

    Names follow ``g4 = sum a_i p^(4-i) q^i``, ``g6 = sum b_i p^(6-i) q^i``
    on the target side and ``f4[i]``, ``f6[i]`` on the source side, all in
    the table orientation (k <= l, no swap).
    """
    if case.tag != "D":
        raise MapError("coefficient constraints are defined for case D only")
    k, m = case.k, case.m
    if k <= 0:
        raise MapError("case D requires k > 0")
    out = []
    for i in range(5):
        out.append((f"a{i}", max(4 * k - m * i, 0)))
    for i in range(7):
        out.append((f"b{i}", max(6 * k - m * i, 0)))
    for i in range(5):
        out.append((f"f4[{i}]", max(m * i - 4 * k, 0)))
    for i in range(7):
        out.append((f"f6[{i}]", max(m * i - 6 * k, 0)))
    return out


def source_requirements(mp: MonomialMap) -> dict:
    """Required valuation of each source coefficient for ``mp`` to succeed."""
    req = {}
    for name, form, z in (("f4", 4, 1), ("f6", 6, 0)):
        for i in range(form + 1):
            exps = (form - i, i, z, 0)
            req[(name, i)] = max(-_image_exponent_shift(mp, exps), 0)
    return req


@dataclass
class ConstraintReport:
    ok: bool
    violations: list
    degenerate: bool = False

    def __bool__(self):
        return self.ok


def check_constraints(X: Fibration, case_or_map) -> ConstraintReport:
    """Evaluate the valuation table on ``X``'s actual coefficients."""
    if isinstance(case_or_map, CaseClass):
        case = case_or_map
        if case.tag != "D":
            raise MapError("check_constraints expects a case-D class")
        mp = case.normalized_map()
        if case.swapped:
            mp = mp.swapped()
        if case.reversed:
            mp = mp.inverse()
    else:
        mp = case_or_map
    violations = []
    for (name, i), need in source_requirements(mp).items():
        c = getattr(X, name).coeffs[i]
        v = c.valuation()
        if v < need:
            violations.append({"coefficient": f"{name}[{i}]", "valuation": v, "required": need})
    degenerate = X.f4.is_zero() and X.f6.is_zero()
    return ConstraintReport(not violations, violations, degenerate)
