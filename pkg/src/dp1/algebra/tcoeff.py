"""Laurent polynomials in the uniformizer ``t`` with exact rational coefficients.

A :class:`TCoeff` models an element of the discrete valuation ring
``Q[t]`` localized at ``(t)`` (and, transiently, of its fraction field)
by a finite Laurent expansion.  The same class doubles as a plain
univariate polynomial ring over ``Q`` when the variable name is changed
(see :class:`UPoly`).
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

INF = math.inf


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def _common_denominator(values) -> int:
    d = 1
    for c in values:
        q = c.denominator
        if q != 1:
            d = d * q // math.gcd(d, q)
    return d


class TCoeff:
    """Immutable Laurent polynomial ``sum c_e t^e`` over ``Q``."""

    __slots__ = ("_terms", "_hash")
    var = "t"

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                c = as_fraction(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e: int):
        return cls({e: c})

    @classmethod
    def gen(cls):
        return cls({1: 1})

    @classmethod
    def from_coeffs(cls, coeffs):
        """Build from ascending coefficient list ``[c_0, c_1, ...]``."""
        return cls(dict(enumerate(coeffs)))

    def _coerce(self, other):
        if isinstance(other, TCoeff):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return type(self).const(other)
        return NotImplemented

    # -- structure ----------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def valuation(self):
        """Minimal exponent present; ``math.inf`` for zero."""
        return min(self._terms) if self._terms else INF

    def degree(self):
        return max(self._terms) if self._terms else -INF

    def in_dvr(self) -> bool:
        return self.valuation() >= 0

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def residue(self) -> Fraction:
        """Image in the residue field ``O/(t)``."""
        if not self.in_dvr():
            raise ValueError(f"{self} does not lie in the valuation ring")
        return self.coeff(0)

    def leading(self) -> Fraction:
        return self._terms[max(self._terms)] if self._terms else Fraction(0)

    # -- arithmetic ---------------------------------------------------
    def __neg__(self):
        return type(self)({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        res = type(self)()
        res._terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return type(self)()
        # convolve integer numerators over a common denominator
        d1 = _common_denominator(self._terms.values())
        d2 = _common_denominator(other._terms.values())
        a = [(e, int(c * d1)) for e, c in self._terms.items()]
        b = [(e, int(c * d2)) for e, c in other._terms.items()]
        acc = {}
        for e1, n1 in a:
            for e2, n2 in b:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + n1 * n2
        den = d1 * d2
        out = type(self)()
        out._terms = {e: Fraction(n, den) for e, n in acc.items() if n}
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            return type(self)({e * n: c ** n})
        result = type(self).const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int):
        """Multiply by ``t^k``."""
        return type(self)({e + k: c for e, c in self._terms.items()})

    def scale(self, c):
        c = as_fraction(c)
        return type(self)({e: v * c for e, v in self._terms.items()})

    def derivative(self):
        return type(self)({e - 1: c * e for e, c in self._terms.items() if e})

    def __call__(self, value):
        value = as_fraction(value)
        return sum((c * value ** e for e, c in self._terms.items()), Fraction(0))

    def truncate(self, n: int):
        """Drop terms of exponent ``>= n``."""
        return type(self)({e: c for e, c in self._terms.items() if e < n})

    # -- division ------------------------------------------------------
    def divmod_poly(self, other):
        """Euclidean division of ordinary polynomials (non-negative exponents)."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if self.valuation() < 0 or other.valuation() < 0:
            raise ValueError("divmod_poly needs ordinary polynomials")
        rem = dict(self._terms)
        dq = other.degree()
        lc = other.leading()
        quo = {}
        while rem:
            dr = max(rem)
            if dr < dq:
                break
            c = rem[dr] / lc
            quo[dr - dq] = c
            for e, v in other._terms.items():
                k = e + dr - dq
                val = rem.get(k, 0) - c * v
                if val:
                    rem[k] = val
                else:
                    rem.pop(k, None)
        return type(self)(quo), type(self)(rem)

    def exact_div(self, other):
        """Exact quotient in ``Q[t, 1/t]``; raises if ``other`` does not divide."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        if not self:
            return type(self)()
        s, o = self.valuation(), other.valuation()
        q, r = self.shift(-s).divmod_poly(other.shift(-o))
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q.shift(s - o)

    def monic(self):
        return self.scale(1 / self.leading()) if self else self

    def gcd(self, other):
        """Monic gcd of ordinary polynomials (t-power content included)."""
        a, b = self, other
        while b:
            _, r = a.divmod_poly(b)
            a, b = b, r
        return a.monic()

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- printing ------------------------------------------------------
    def __str__(self):
        return format_coeff_terms([(c, {self.var: e} if e else {}) for e, c in self.items()])

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class UPoly(TCoeff):
    """Univariate polynomial over ``Q`` in an auxiliary variable (printed ``u``)."""

    __slots__ = ()
    var = "u"


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(powers) -> str:
    parts = []
    for name, e in powers:
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_coeff_terms(terms) -> str:
    """Join ``(coefficient, {var: exp})`` pairs into a signed sum string."""
    if not terms:
        return "0"
    out = []
    for i, (c, powers) in enumerate(terms):
        mono = format_monomial(powers.items() if isinstance(powers, dict) else powers)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{format_rational(a)}*{mono}"
        else:
            body = format_rational(a)
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
