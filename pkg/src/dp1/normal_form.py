"""Sextics in P(1,1,2,3) over the DVR and their reduction to the form
``w^2 + z^3 + z f4(x, y) + f6(x, y)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import BinaryForm, TCoeff, WPoly, XVARS
from .algebra.wpoly import monomial


class NormalizationError(ValueError):
    pass


def _form(poly: WPoly, z: int, w: int, degree: int) -> BinaryForm:
    """Coefficient form of ``z^z w^w`` in ``poly`` (a binary form of ``degree``)."""
    coeffs = [TCoeff()] * (degree + 1)
    for (ex, ey, ez, ew), c in poly.items():
        if ez == z and ew == w:
            coeffs[ey] = c
    return BinaryForm(degree, coeffs)


def _zw(form: BinaryForm, z: int, w: int, names) -> WPoly:
    d = form.degree
    return WPoly({(d - i, i, z, w): c for i, c in enumerate(form.coeffs)}, names)


@dataclass(frozen=True)
class Fibration:
    """``w^2 + z^3 + z f4 + f6 = 0`` with coefficients in the DVR."""

    f4: BinaryForm
    f6: BinaryForm
    allow_degenerate: bool = False
    names: tuple = field(default=XVARS, compare=False)

    def __post_init__(self):
        if self.f4.degree != 4 or self.f6.degree != 6:
            raise ValueError("a fibration needs a quartic f4 and a sextic f6")
        for name, form in (("f4", self.f4), ("f6", self.f6)):
            for i, c in enumerate(form.coeffs):
                if not c.in_dvr():
                    raise ValueError(f"{name}[{i}] = {c} is not in the valuation ring")
        if self.is_degenerate() and not self.allow_degenerate:
            raise ValueError("f4 and f6 both vanish modulo t (degenerate cone); "
                             "pass allow_degenerate=True to accept")

    def is_degenerate(self) -> bool:
        return self.f4.reduce_mod_t().is_zero() and self.f6.reduce_mod_t().is_zero()

    def to_wpoly(self, names=None) -> WPoly:
        names = tuple(names or self.names)
        x, y, z, w = (WPoly.var(n) for n in names)
        return w ** 2 + z ** 3 + _zw(self.f4, 1, 0, names) + _zw(self.f6, 0, 0, names)

    @classmethod
    def from_wpoly(cls, poly: WPoly, allow_degenerate: bool = False):
        if not poly.is_homogeneous(6):
            raise ValueError(f"not a weighted sextic: {poly}")
        names = poly.names
        one = TCoeff.const(1)
        if poly.coeff((0, 0, 0, 2)) != one or poly.coeff((0, 0, 3, 0)) != one:
            raise ValueError("not in normal form: w^2 and z^3 must have coefficient 1")
        for (ex, ey, ez, ew), c in poly.items():
            if (ez, ew) not in ((0, 2), (3, 0), (1, 0), (0, 0)):
                raise ValueError(f"not in normal form: monomial {monomial((ex, ey, ez, ew), 1, names)}")
        return cls(_form(poly, 1, 0, 4), _form(poly, 0, 0, 6), allow_degenerate, names)

    def central_fiber(self):
        """``(f4 mod t, f6 mod t)`` as rational binary forms."""
        return self.f4.reduce_mod_t(), self.f6.reduce_mod_t()

    def __str__(self):
        return str(self.to_wpoly())


@dataclass(frozen=True)
class GeneralSextic:
    """``a w^2 + b z^3 + w z f1 + w f3 + z^2 f2 + z f4 + f6``.

    ``f1`` absorbs the scalar ``c`` of the wz-term.
    """

    a: TCoeff
    b: TCoeff
    f1: BinaryForm = field(default_factory=lambda: BinaryForm.zero(1))
    f3: BinaryForm = field(default_factory=lambda: BinaryForm.zero(3))
    f2: BinaryForm = field(default_factory=lambda: BinaryForm.zero(2))
    f4: BinaryForm = field(default_factory=lambda: BinaryForm.zero(4))
    f6: BinaryForm = field(default_factory=lambda: BinaryForm.zero(6))

    def __post_init__(self):
        for name in ("a", "b"):
            v = getattr(self, name)
            if not isinstance(v, TCoeff):
                object.__setattr__(self, name, TCoeff.const(v))

    _SLOTS = (("f1", 1, 1, 1), ("f3", 0, 1, 3), ("f2", 2, 0, 2), ("f4", 1, 0, 4), ("f6", 0, 0, 6))

    def to_wpoly(self, names=XVARS) -> WPoly:
        poly = WPoly({(0, 0, 0, 2): self.a, (0, 0, 3, 0): self.b}, names)
        for name, z, w, _ in self._SLOTS:
            poly = poly + _zw(getattr(self, name), z, w, names)
        return poly

    @classmethod
    def from_wpoly(cls, poly: WPoly):
        if not poly.is_homogeneous(6):
            raise ValueError(f"not a weighted sextic: {poly}")
        kwargs = {name: _form(poly, z, w, d) for name, z, w, d in cls._SLOTS}
        return cls(poly.coeff((0, 0, 0, 2)), poly.coeff((0, 0, 3, 0)), **kwargs)

    def is_normal(self) -> bool:
        one = TCoeff.const(1)
        return (self.a == one and self.b == one
                and self.f1.is_zero() and self.f3.is_zero() and self.f2.is_zero())


@dataclass(frozen=True)
class GorensteinReport:
    ok: bool
    violations: tuple = ()

    def __bool__(self):
        return self.ok


def gorenstein_check(s: GeneralSextic) -> GorensteinReport:
    """Both ``a`` and ``b`` must be units, otherwise the central fiber meets a
    singular point of the weighted space."""
    violations = []
    if not s.a.is_unit():
        violations.append({"coefficient": "a", "value": str(s.a), "point": "(0:0:0:1)"})
    if not s.b.is_unit():
        violations.append({"coefficient": "b", "value": str(s.b), "point": "(0:0:1:0)"})
    return GorensteinReport(not violations, tuple(violations))


@dataclass(frozen=True)
class NormalizationRecord:
    """``source(x, y, z_image, w_image) == scale * normal_form(x, y, z, w)``."""

    z_image: WPoly
    w_image: WPoly
    scale: TCoeff

    def is_identity(self) -> bool:
        return (self.z_image == WPoly.var("z") and self.w_image == WPoly.var("w")
                and self.scale == TCoeff.const(1))

    def apply(self, poly: WPoly) -> WPoly:
        return poly.substitute({"z": self.z_image, "w": self.w_image})


def normalize_sextic(s: GeneralSextic):
    """Return ``(Fibration, NormalizationRecord)``.

    The w^2 and z^3 coefficients are made 1 by the weighted rescaling
    ``z -> ab z``, ``w -> ab^2 w`` which turns both into ``a^3 b^4``; that
    common unit is then divided out exactly.  Non-constant units usually do
    not divide the remaining terms in Q[t], and then the operation fails.
    """
    report = gorenstein_check(s)
    if not report:
        raise NormalizationError(f"Gorenstein condition fails: {list(report.violations)}")
    poly = s.to_wpoly()
    z, w = WPoly.var("z"), WPoly.var("w")
    if s.is_normal():
        return Fibration(s.f4, s.f6, True), NormalizationRecord(z, w, TCoeff.const(1))

    mu = s.a * s.b
    nu = s.a * s.b * s.b
    scale = s.a ** 3 * s.b ** 4
    stretched = poly.substitute({"z": z * mu, "w": w * nu})
    try:
        e2 = WPoly({e: c.exact_div(scale) for e, c in stretched.items()})
    except ArithmeticError as exc:
        raise NormalizationError(
            f"the unit {scale} does not divide the sextic exactly in Q[t]; "
            "normalization would need a power series") from exc

    g = GeneralSextic.from_wpoly(e2)
    f1 = _zw(g.f1, 0, 0, XVARS)
    f3 = _zw(g.f3, 0, 0, XVARS)
    f2 = _zw(g.f2, 0, 0, XVARS)
    # completing the square in w leaves z^3 + (f2 - f1^2/4) z^2 + ...
    p2 = f2 - f1 * f1 * Fraction(1, 4)
    z_new = z - p2 * Fraction(1, 3)
    w_new = w - (z_new * f1 + f3) * Fraction(1, 2)
    normal = e2.substitute({"z": z_new, "w": w_new})
    fib = Fibration.from_wpoly(normal, allow_degenerate=True)
    record = NormalizationRecord(z_new * mu, w_new * nu, scale)
    if record.apply(poly) != fib.to_wpoly() * scale:
        raise NormalizationError("back-substitution check failed")
    return fib, record

