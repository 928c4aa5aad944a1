"""Binary forms with DVR coefficients, Sylvester resultants and gcds.

Resultant sign convention: the Sylvester matrix carries the coefficients
of ``f`` in its top ``deg g`` rows, each row listing ``a_0 .. a_deg`` (the
coefficient of ``x^{deg-i} y^i``) shifted one column per row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tcoeff import TCoeff
from .wpoly import WPoly, XVARS


def _tc(c):
    return c if isinstance(c, TCoeff) else TCoeff.const(c)


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(_tc(c) for c in self.coeffs)
        if len(coeffs) != self.degree + 1:
            raise ValueError(f"a degree-{self.degree} form needs {self.degree + 1} coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, degree):
        return cls(degree, [TCoeff()] * (degree + 1))

    def is_zero(self):
        return not any(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def reduce_mod_t(self):
        return BinaryForm(self.degree, [TCoeff.const(c.residue()) for c in self.coeffs])

    def valuations(self):
        return [c.valuation() for c in self.coeffs]

    def to_wpoly(self, names=XVARS) -> WPoly:
        d = self.degree
        return WPoly({(d - i, i, 0, 0): c for i, c in enumerate(self.coeffs)}, names)

    @classmethod
    def from_wpoly(cls, poly: WPoly, degree: int):
        coeffs = [TCoeff()] * (degree + 1)
        for (ex, ey, ez, ew), c in poly.items():
            if ez or ew or ex + ey != degree:
                raise ValueError(f"not a binary form of degree {degree}: {poly}")
            coeffs[ey] = c
        return cls(degree, coeffs)

    def dehomogenize(self):
        """Coefficients of ``f(x, 1)`` in ascending powers of ``x``."""
        return list(reversed(self.coeffs))

    def partial_x(self):
        d = self.degree
        if d == 0:
            return BinaryForm(0, [0])
        return BinaryForm(d - 1, [c.scale(d - i) for i, c in enumerate(self.coeffs[:-1])])

    def partial_y(self):
        d = self.degree
        if d == 0:
            return BinaryForm(0, [0])
        return BinaryForm(d - 1, [c.scale(i) for i, c in enumerate(self.coeffs) if i])

    def __mul__(self, other):
        out = [TCoeff()] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BinaryForm(self.degree + other.degree, out)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __str__(self):
        return str(self.to_wpoly())


def sylvester_matrix(f_coeffs, g_coeffs, zero):
    """Sylvester matrix of two coefficient lists (descending in the eliminated variable)."""
    m, n = len(f_coeffs) - 1, len(g_coeffs) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(f_coeffs) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(g_coeffs) + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix, one, exact_div=lambda a, b: a.exact_div(b)):
    """Fraction-free determinant over an integral domain."""
    a = [list(r) for r in matrix]
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return one - one
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def binary_resultant(f: BinaryForm, g: BinaryForm) -> TCoeff:
    """Resultant of two binary forms (Sylvester determinant, ``f`` rows on top)."""
    if f.is_zero() and g.is_zero():
        raise ValueError("resultant of two zero forms is undefined")
    zero = TCoeff()
    mat = sylvester_matrix(f.coeffs, g.coeffs, zero)
    return bareiss_det(mat, TCoeff.const(1))


# -- gcd over the fraction field Q(t) -----------------------------------

def _content(coeffs):
    g = TCoeff()
    for c in coeffs:
        if c:
            g = c if not g else g.gcd(c)
    return g


def _strip(p):
    while p and not p[-1]:
        p = p[:-1]
    return p


def _primitive(p):
    p = _strip(p)
    if not p:
        return p
    cont = _content(p)
    return [c.exact_div(cont) for c in p]


def _prem(a, b):
    """Pseudo-remainder of ascending coefficient lists over Q[t]."""
    a, b = _strip(list(a)), _strip(list(b))
    db = len(b) - 1
    lc = b[-1]
    while a and len(a) - 1 >= db:
        da = len(a) - 1
        la = a[-1]
        a = [c * lc for c in a]
        for i, c in enumerate(b):
            a[i + da - db] = a[i + da - db] - la * c
        a = _strip(a)
    return a


def _poly_gcd_qt(a, b):
    """Primitive gcd of ascending coefficient lists over Q[t] (a UFD)."""
    a, b = _primitive(a), _primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    return a


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Gcd over ``Q(t)``, returned primitive with coefficients in ``Q[t]``.

    The result is normalized so its content is 1 and its leading nonzero
    coefficient (in ``a_0, a_1, ...`` order) has leading rational coefficient 1.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero forms is undefined")
    if f.is_zero():
        return _normalize_form(g)
    if g.is_zero():
        return _normalize_form(f)

    def shifted(form):
        v = min(c.valuation() for c in form.coeffs if c)
        return [c.shift(-v) for c in form.coeffs]

    fc, gc = shifted(f), shifted(g)
    # multiplicity of the root (1:0), i.e. the power of y dividing the form
    jf = next(i for i, c in enumerate(fc) if c)
    jg = next(i for i, c in enumerate(gc) if c)
    j = min(jf, jg)
    # f(x, 1) ascending in x, with the y^j factor removed
    fa = list(reversed(fc[jf:]))
    ga = list(reversed(gc[jg:]))
    h = _poly_gcd_qt(fa, ga)
    h = _strip(h)
    deg = len(h) - 1
    coeffs = [TCoeff()] * j + list(reversed(h))
    return _normalize_form(BinaryForm(deg + j, coeffs))


def _normalize_form(form: BinaryForm) -> BinaryForm:
    cont = _content(form.coeffs)
    coeffs = [c.exact_div(cont) for c in form.coeffs]
    lead = next(c for c in coeffs if c)
    scale = 1 / lead.leading()
    return BinaryForm(form.degree, [c.scale(scale) for c in coeffs])
