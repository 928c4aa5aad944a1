"""Polynomials on the weighted projective space P(1,1,2,3) over the DVR.

Exponent tuples are always ordered ``(e_x, e_y, e_z, e_w)`` relative to the
variable names carried by the polynomial; the weights are ``(1, 1, 2, 3)``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .mpoly import MPoly
from .tcoeff import TCoeff, format_coeff_terms

WEIGHTS = (1, 1, 2, 3)
XVARS = ("x", "y", "z", "w")
VVARS = ("p", "q", "r", "s")
VARIABLE_SETS = (XVARS, VVARS)
# printing order inside a monomial: t first, then the weight-3, weight-2,
# weight-1 variables
_PRINT_ORDER = (3, 2, 0, 1)


def weighted_degree(exps) -> int:
    return sum(e * w for e, w in zip(exps, WEIGHTS))


def _tc(value) -> TCoeff:
    return value if isinstance(value, TCoeff) else TCoeff.const(value)


class WPoly:
    """Sparse polynomial in four weighted variables with :class:`TCoeff` coefficients."""

    __slots__ = ("names", "_terms")

    def __init__(self, terms=None, names=XVARS):
        names = tuple(names)
        if names not in VARIABLE_SETS:
            raise ValueError(f"unsupported variable set {names}")
        self.names = names
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != 4 or min(exps) < 0:
                raise ValueError(f"bad exponent tuple {exps}")
            c = _tc(c)
            if c:
                clean[exps] = c
        self._terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def var(cls, name: str):
        names = XVARS if name in XVARS else VVARS
        exps = [0, 0, 0, 0]
        exps[names.index(name)] = 1
        return cls({tuple(exps): 1}, names)

    @classmethod
    def const(cls, c, names=XVARS):
        return cls({(0, 0, 0, 0): c}, names)

    @classmethod
    def t(cls, names=XVARS):
        return cls({(0, 0, 0, 0): TCoeff.gen()}, names)

    # -- structure ----------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exps) -> TCoeff:
        return self._terms.get(tuple(exps), TCoeff())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degrees(self) -> set:
        return {weighted_degree(e) for e in self._terms}

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    def t_valuation(self) -> int:
        """Minimum t-adic valuation over all coefficients."""
        if not self._terms:
            raise ValueError("the zero polynomial has no valuation")
        return min(c.valuation() for c in self._terms.values())

    def in_dvr(self) -> bool:
        return all(c.in_dvr() for c in self._terms.values())

    # -- arithmetic ---------------------------------------------------
    def _check(self, other):
        if isinstance(other, WPoly):
            if other.names != self.names:
                raise ValueError(f"variable sets differ: {self.names} vs {other.names}")
            return other
        if isinstance(other, (int, Fraction, TCoeff)):
            return WPoly.const(other, self.names)
        return NotImplemented

    def __neg__(self):
        return WPoly({e: -c for e, c in self._terms.items()}, self.names)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return WPoly(out, self.names)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return WPoly(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = WPoly.const(1, self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_t(self, k: int):
        """Multiply every coefficient by ``t^k``."""
        return WPoly({e: c.shift(k) for e, c in self._terms.items()}, self.names)

    def clear_t(self):
        """Divide by ``t^valuation``; returns ``(poly, valuation)``."""
        v = self.t_valuation()
        return self.shift_t(-v), v

    def rename(self, names):
        return WPoly(self._terms, names)

    # -- calculus -----------------------------------------------------
    def partial(self, var: str):
        """Formal partial derivative; ``var`` may be ``'t'``."""
        if var == "t":
            return WPoly({e: c.derivative() for e, c in self._terms.items()}, self.names)
        i = self.names.index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c.scale(e[i])
        return WPoly(out, self.names)

    def substitute_monomial(self, images, names=None):
        """Apply ``v_i -> t^{e_i} * v_{j_i}`` for each variable.

        ``images`` is a sequence of four ``(t_power, target)`` pairs in the
        order of ``self.names``; ``target`` is a variable name of ``names``
        (default: the same variable set) or an index.
        """
        names = tuple(names) if names is not None else self.names
        plan = []
        for tp, target in images:
            j = names.index(target) if isinstance(target, str) else int(target)
            plan.append((int(tp), j))
        out = {}
        for e, c in self._terms.items():
            ne = [0, 0, 0, 0]
            shift = 0
            for k, (tp, j) in zip(e, plan):
                ne[j] += k
                shift += k * tp
            key = tuple(ne)
            c = c.shift(shift)
            out[key] = out[key] + c if key in out else c
        return WPoly(out, names)

    def substitute(self, images: dict):
        """General substitution ``var -> WPoly`` (unlisted variables fixed)."""
        gens = [images.get(n, WPoly.var(n)) for n in self.names]
        names = gens[0].names
        # variables mapped to themselves only shift exponents
        fixed = [g == WPoly.var(n) for g, n in zip(gens, self.names)] if names == self.names \
            else [False] * 4
        cache = [{0: WPoly.const(1, names)} for _ in range(4)]

        def power(i, k):
            if k not in cache[i]:
                cache[i][k] = power(i, k - 1) * gens[i]
            return cache[i][k]

        out = {}
        for e, c in self._terms.items():
            base = tuple(k if f else 0 for k, f in zip(e, fixed))
            term = {base: c}
            for i, k in enumerate(e):
                if k and not fixed[i]:
                    term = (WPoly(term, names) * power(i, k))._terms
            for key, v in term.items():
                out[key] = out[key] + v if key in out else v
        return WPoly(out, names)

    def reduce_mod_t(self):
        """Central fiber: coefficients replaced by their residues."""
        return WPoly({e: c.residue() for e, c in self._terms.items()}, self.names)

    def to_mpoly(self, gens=("t", "x", "y", "z", "w")):
        """Expand into an :class:`MPoly` in ``t`` and the four variables."""
        if not self.in_dvr():
            raise ValueError("negative t-powers cannot be expanded into an MPoly")
        own = ("t",) + self.names
        order = [own.index(g) if g in own else None for g in gens]
        if any(i is None for i in order) or len(set(order)) != 5:
            raise ValueError(f"gens must be a permutation of {own}")
        out = {}
        for e, c in self._terms.items():
            for te, v in c.items():
                full = (te,) + e
                out[tuple(full[i] for i in order)] = v
        return MPoly(tuple(gens), out)

    # -- comparison / printing ---------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction, TCoeff)):
            other = WPoly.const(other, self.names)
        if not isinstance(other, WPoly):
            return False
        return self.names == other.names and self._terms == other._terms

    def __hash__(self):
        return hash((self.names, frozenset(self._terms.items())))

    def sorted_terms(self):
        """Canonical order: ``(e_w, e_z, e_x, e_y)`` descending."""
        return sorted(self._terms.items(), key=lambda kv: tuple(-kv[0][i] for i in _PRINT_ORDER))

    def __str__(self):
        flat = []
        for e, c in self.sorted_terms():
            for te, v in c.items():
                powers = [("t", te)] + [(self.names[i], e[i]) for i in _PRINT_ORDER]
                flat.append((v, powers))
        return format_coeff_terms(flat)

    def __repr__(self):
        return f"WPoly({str(self)!r})"


def monomial(exps, coeff=1, names=XVARS) -> WPoly:
    return WPoly({tuple(exps): coeff}, names)


def max_t_degree(poly: WPoly):
    return max((c.degree() for _, c in poly.items()), default=-math.inf)
