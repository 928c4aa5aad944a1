"""Sparse multivariate polynomials over Q, used for local germs.

Unlike :class:`~dp1.algebra.wpoly.WPoly` there is no grading and ``t`` is an
ordinary variable.  Truncation by total degree turns an ``MPoly`` into a
jet, which is how the singularity code handles power series.
"""

from __future__ import annotations

from fractions import Fraction

from .tcoeff import as_fraction, format_coeff_terms


class MPoly:
    __slots__ = ("gens", "_terms")

    def __init__(self, gens, terms=None):
        self.gens = tuple(gens)
        n = len(self.gens)
        clean = {}
        for e, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not match gens {self.gens}")
                clean[e] = c
        self._terms = clean

    @classmethod
    def const(cls, gens, c):
        return cls(gens, {(0,) * len(gens): c})

    @classmethod
    def var(cls, gens, name):
        e = [0] * len(gens)
        e[list(gens).index(name)] = 1
        return cls(gens, {tuple(e): 1})

    @classmethod
    def linear(cls, gens, coeffs, const=0):
        """``const + sum coeffs[i] * gens[i]``."""
        n = len(gens)
        terms = {(0,) * n: const}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(gens, terms)

    # -- structure ----------------------------------------------------
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exps) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def order(self):
        """Lowest total degree present (multiplicity at the origin)."""
        if not self._terms:
            return None
        return min(sum(e) for e in self._terms)

    def total_degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def homogeneous_part(self, d: int):
        return MPoly(self.gens, {e: c for e, c in self._terms.items() if sum(e) == d})

    def truncate(self, n: int):
        """Keep terms of total degree ``<= n``."""
        return MPoly(self.gens, {e: c for e, c in self._terms.items() if sum(e) <= n})

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * len(self.gens))

    def used_gens(self):
        return [g for i, g in enumerate(self.gens) if any(e[i] for e in self._terms)]

    def reorder(self, gens):
        """Re-express in ``gens`` (must contain every variable actually used)."""
        gens = tuple(gens)
        idx = []
        for g in gens:
            idx.append(self.gens.index(g) if g in self.gens else None)
        for i, g in enumerate(self.gens):
            if g not in gens and any(e[i] for e in self._terms):
                raise ValueError(f"variable {g} is used but missing from {gens}")
        out = {}
        for e, c in self._terms.items():
            out[tuple(e[i] if i is not None else 0 for i in idx)] = c
        return MPoly(gens, out)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.gens != self.gens:
                raise ValueError(f"generator mismatch {self.gens} vs {other.gens}")
            return other
        try:
            return MPoly.const(self.gens, as_fraction(other))
        except TypeError:
            return NotImplemented

    def __neg__(self):
        return MPoly(self.gens, {e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.gens, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def mul(self, other, trunc: int | None = None):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self._terms.items():
            d1 = sum(e1)
            for e2, c2 in other._terms.items():
                if trunc is not None and d1 + sum(e2) > trunc:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.gens, out)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    __rmul__ = __mul__

    def pow(self, n: int, trunc: int | None = None):
        result = MPoly.const(self.gens, 1)
        base = self
        while n:
            if n & 1:
                result = result.mul(base, trunc)
            n >>= 1
            if n:
                base = base.mul(base, trunc)
        return result

    def __pow__(self, n: int):
        return self.pow(n)

    # -- calculus / substitution -------------------------------------
    def diff(self, var):
        i = self.gens.index(var) if isinstance(var, str) else var
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MPoly(self.gens, out)

    def gradient(self):
        return [self.diff(i) for i in range(len(self.gens))]

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], dict):
            point = [point[0][g] for g in self.gens]
        vals = [as_fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def compose(self, images: dict, gens=None, trunc: int | None = None):
        """Substitute ``var -> MPoly`` (over ``gens``); unlisted variables
        must be present in ``gens`` and are kept.  ``trunc`` drops every
        intermediate term of total degree above it."""
        gens = tuple(gens) if gens is not None else self.gens
        subs = []
        for g in self.gens:
            if g in images:
                img = images[g]
                if not isinstance(img, MPoly):
                    img = MPoly.const(gens, img)
                elif img.gens != gens:
                    img = img.reorder(gens)
                subs.append(img)
            else:
                subs.append(MPoly.var(gens, g))
        cache = [{0: MPoly.const(gens, 1)} for _ in subs]

        def power(i, k):
            if k not in cache[i]:
                cache[i][k] = power(i, k - 1).mul(subs[i], trunc)
            return cache[i][k]

        acc = {}
        for e, c in self._terms.items():
            term = MPoly.const(gens, c)
            for i, k in enumerate(e):
                if k:
                    term = term.mul(power(i, k), trunc)
                    if not term:
                        break
            for te, tc in term._terms.items():
                acc[te] = acc.get(te, 0) + tc
        return MPoly(gens, acc)

    def translate(self, point):
        """Move ``point`` (sequence or dict) to the origin."""
        if isinstance(point, dict):
            point = [point.get(g, 0) for g in self.gens]
        images = {g: MPoly.linear(self.gens, [1 if j == i else 0 for j in range(len(self.gens))], p)
                  for i, (g, p) in enumerate(zip(self.gens, point)) if p}
        return self.compose(images) if images else self

    def linear_change(self, matrix, trunc: int | None = None):
        """Substitute ``gens[i] -> sum_j matrix[i][j] * gens[j]``."""
        images = {g: MPoly.linear(self.gens, row) for g, row in zip(self.gens, matrix)}
        return self.compose(images, trunc=trunc)

    # -- comparison / printing ---------------------------------------
    def __eq__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = self._coerce(other)
            except ValueError:
                return False
            if other is NotImplemented:
                return False
        return self.gens == other.gens and self._terms == other._terms

    def __hash__(self):
        return hash((self.gens, frozenset(self._terms.items())))

    def __str__(self):
        items = sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), [-k for k in kv[0]]))
        return format_coeff_terms([(c, list(zip(self.gens, e))) for e, c in items])

    def __repr__(self):
        return f"MPoly({self.gens}, {str(self)!r})"
