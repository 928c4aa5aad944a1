"""Seeded random instances for the case shapes and for general sextics."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import BinaryForm, TCoeff
from .maps import CaseClass, MonomialMap
from .normal_form import Fibration, GeneralSextic

MAX_TDEG = 12


def random_tcoeff(rng: random.Random, valuation: int = 0, max_degree: int = MAX_TDEG,
                  exact_valuation: bool | None = None, terms: int = 3) -> TCoeff:
    """Polynomial in ``t`` with small integer coefficients and valuation
    ``>= valuation`` (exactly ``valuation`` when ``exact_valuation``)."""
    if exact_valuation is None:
        exact_valuation = rng.random() < 0.5
    top = max(max_degree, valuation)
    out = {}
    if exact_valuation:
        out[valuation] = _nonzero(rng)
    for _ in range(rng.randint(0, terms)):
        e = rng.randint(valuation, top)
        out[e] = out.get(e, 0) + _nonzero(rng)
    return TCoeff(out)


def _nonzero(rng, bound=5):
    v = 0
    while v == 0:
        v = rng.randint(-bound, bound)
    return v


@dataclass
class CaseInstance:
    tag: str
    case: CaseClass
    fibration: Fibration
    map: MonomialMap

    @property
    def m(self):
        return self.case.m


def _shaped(rng, degree, exponent, max_degree, unit_first=False):
    """``sum c_i t^(exponent(i)) x^(d-i) y^i`` with random DVR coefficients ``c_i``."""
    coeffs = []
    for i in range(degree + 1):
        c = random_tcoeff(rng, 0, max_degree, exact_valuation=unit_first and i == 0 or None)
        coeffs.append(c.shift(exponent(i)))
    return BinaryForm(degree, coeffs)


def _ensure_nonzero(rng, f4, f6, exponent6):
    if f4.is_zero() and f6.is_zero():
        coeffs = list(f6.coeffs)
        coeffs[0] = TCoeff.monomial(_nonzero(rng), exponent6(0))
        f6 = BinaryForm(6, coeffs)
    return f6


def random_case_instance(tag: str, rng: random.Random, max_m: int = 4,
                         max_degree: int = MAX_TDEG) -> CaseInstance:
    """Random ``X`` of shape A, B or C (table orientation)."""
    if tag == "A":
        m = rng.randint(2, max(2, max_m))
        a = rng.randint(1, m - 1)
    elif tag == "C":
        m = rng.randint(1, max_m)
        a = m
    elif tag == "B":
        m = rng.randint(1, max_m)
        a = 0
    else:
        raise ValueError(f"unknown shape {tag!r}")
    e4 = lambda i: 4 * a + (m - a) * i  # noqa: E731
    e6 = lambda i: 6 * a + (m - a) * i  # noqa: E731
    f4 = _shaped(rng, 4, e4, max_degree)
    f6 = _ensure_nonzero(rng, f4, _shaped(rng, 6, e6, max_degree), e6)
    case = CaseClass(tag, m, a=a if tag == "A" else None)
    fib = Fibration(f4, f6, allow_degenerate=True)
    return CaseInstance(tag, case, fib, case.normalized_map())


def random_case_d_instance(rng: random.Random, max_m: int = 8, max_degree: int = 6,
                           k: int | None = None, m: int | None = None) -> CaseInstance:
    """Random ``X`` meeting the case-D valuation table for ``0 < k <= l``.

    Each coefficient sits exactly at its required valuation half of the
    time, so units such as ``f6[1]`` appear often enough to exercise the
    smooth configuration ``m = 6k``.
    """
    if m is None:
        m = rng.randint(2, max_m)
    if k is None:
        k = rng.randint(1, m // 2)
    case = CaseClass("D", m, k=k, l=m - k)
    f4 = BinaryForm(4, [random_tcoeff(rng, max(m * i - 4 * k, 0), max_degree) for i in range(5)])
    f6 = BinaryForm(6, [random_tcoeff(rng, max(m * i - 6 * k, 0), max_degree) for i in range(7)])
    if f4.is_zero() and f6.is_zero():
        f6 = BinaryForm(6, [TCoeff.const(1)] + list(f6.coeffs[1:]))
    fib = Fibration(f4, f6, allow_degenerate=True)
    return CaseInstance("D", case, fib, case.normalized_map())


def random_form(rng: random.Random, degree: int, max_degree: int = 4, density: float = 0.6) -> BinaryForm:
    return BinaryForm(degree, [random_tcoeff(rng, 0, max_degree) if rng.random() < density else TCoeff()
                               for _ in range(degree + 1)])


def random_general_sextic(rng: random.Random, max_degree: int = 4) -> GeneralSextic:
    """General sextic with constant rational units at ``w^2`` and ``z^3``."""
    a = Fraction(_nonzero(rng, 7), rng.randint(1, 7))
    b = Fraction(_nonzero(rng, 7), rng.randint(1, 7))
    return GeneralSextic(TCoeff.const(a), TCoeff.const(b),
                         f1=random_form(rng, 1, max_degree), f3=random_form(rng, 3, max_degree),
                         f2=random_form(rng, 2, max_degree), f4=random_form(rng, 4, max_degree),
                         f6=random_form(rng, 6, max_degree))
