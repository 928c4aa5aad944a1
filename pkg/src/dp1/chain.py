"""Intersection lattice of the chain ``C~ - E_1 - ... - E_n - C~'``.

``C~`` and ``C~'`` are (-1)-curves, the ``E_i`` are (-2)-curves, and
neighbours meet once.  The sum ``F`` of all the curves is a fiber, so it
spans the kernel of the intersection form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy
from sympy.polys.matrices import DomainMatrix


@dataclass(frozen=True)
class ChainLattice:
    n: int
    labels: tuple
    matrix: tuple

    @property
    def size(self) -> int:
        return self.n + 2

    def pairing(self, u, v) -> int:
        u = _coeffs(u)
        v = _coeffs(v)
        return sum(u[i] * self.matrix[i][j] * v[j]
                   for i in range(self.size) if u[i]
                   for j in range(self.size) if v[j])

    def basis(self, i: int) -> "DivisorClass":
        return DivisorClass(tuple(int(k == i) for k in range(self.size)), self.labels)

    def _domain(self):
        rows = [[sympy.ZZ(v) for v in r] for r in self.matrix]
        return DomainMatrix(rows, (self.size, self.size), sympy.ZZ)

    @property
    def determinant(self) -> int:
        return int(self._domain().det())

    @property
    def rank(self) -> int:
        return self._domain().convert_to(sympy.QQ).rank()

    def kernel(self) -> list:
        """Integral primitive basis of the kernel."""
        out = []
        for vec in self._domain().convert_to(sympy.QQ).nullspace().to_Matrix().tolist():
            den = sympy.ilcm(*[sympy.fraction(c)[1] for c in vec])
            ints = [int(c * den) for c in vec]
            g = sympy.igcd(*ints) if any(ints) else 1
            ints = [c // g for c in ints]
            if next(c for c in ints if c) < 0:
                ints = [-c for c in ints]
            out.append(tuple(ints))
        return out

    def check_invariants(self) -> list:
        """Violations of the chain shape (empty when the lattice is well formed)."""
        bad = []
        size = self.size
        for i in range(size):
            for j in range(size):
                if self.matrix[i][j] != self.matrix[j][i]:
                    bad.append(f"asymmetric at ({i}, {j})")
                want = _expected_entry(self.n, i, j)
                if self.matrix[i][j] != want:
                    bad.append(f"{self.labels[i]}.{self.labels[j]} = {self.matrix[i][j]}, expected {want}")
        return bad

    def with_entry(self, i: int, j: int, value: int) -> "ChainLattice":
        """Copy with one symmetric pair of entries replaced (no validation)."""
        rows = [list(r) for r in self.matrix]
        rows[i][j] = rows[j][i] = value
        return ChainLattice(self.n, self.labels, tuple(tuple(r) for r in rows))


def _expected_entry(n: int, i: int, j: int) -> int:
    last = n + 1
    if i == j:
        return -1 if i in (0, last) else -2
    return 1 if abs(i - j) == 1 else 0


def chain_labels(n: int) -> tuple:
    return ("C~",) + tuple(f"E{i}" for i in range(1, n + 1)) + ("C~'",)


def build_chain_lattice(n: int) -> ChainLattice:
    if n < 0:
        raise ValueError("the chain length n must be >= 0")
    size = n + 2
    matrix = tuple(tuple(_expected_entry(n, i, j) for j in range(size)) for i in range(size))
    return ChainLattice(n, chain_labels(n), matrix)


def _coeffs(v):
    return v.coeffs if isinstance(v, DivisorClass) else tuple(v)


@dataclass(frozen=True)
class DivisorClass:
    coeffs: tuple
    labels: tuple = field(default=(), compare=False)

    def __add__(self, other):
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.labels)

    def __sub__(self, other):
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.labels)

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.coeffs), self.labels)

    def __mul__(self, k: int):
        return DivisorClass(tuple(k * a for a in self.coeffs), self.labels)

    __rmul__ = __mul__

    def __str__(self):
        parts = []
        for c, name in zip(self.coeffs, self.labels):
            if not c:
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {mag}{name}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+") else "-" + text[2:]


def canonical_classes(n: int):
    """``(K1, K2, F)``: the canonical class seen from each end, and the fiber."""
    labels = chain_labels(n)
    k1 = (-(n + 1),) + tuple(-(n + 1 - i) for i in range(1, n + 1)) + (0,)
    k2 = (0,) + tuple(range(1, n + 1)) + (n + 1,)
    f = (1,) * (n + 2)
    return DivisorClass(k1, labels), DivisorClass(k2, labels), DivisorClass(f, labels)


@dataclass
class ChainReport:
    n: int
    checks: dict
    details: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"n": self.n, "ok": self.ok, "checks": dict(self.checks), "details": dict(self.details)}


def verify_canonical_identities(n_or_lattice) -> ChainReport:
    """Check the canonical-class and fiber identities on a chain lattice."""
    lat = n_or_lattice if isinstance(n_or_lattice, ChainLattice) else build_chain_lattice(n_or_lattice)
    n = lat.n
    K1, K2, F = canonical_classes(n)
    basis = [lat.basis(i) for i in range(lat.size)]
    diff = K2 - K1
    shift = diff.coeffs[0]
    checks = {
        "K2 - K1 = (n+1) F": diff == (n + 1) * F,
        "F . D = 0 for all D": all(lat.pairing(F, D) == 0 for D in basis),
        "F^2 = 0": lat.pairing(F, F) == 0,
        "K1 . C~ = 1": lat.pairing(K1, basis[0]) == 1,
        "K1 . E_i = 0": all(lat.pairing(K1, basis[i]) == 0 for i in range(1, n + 1)),
        "K2 . C~' = -1": lat.pairing(K2, basis[-1]) == -1,
        "kernel spanned by F": lat.kernel() == [F.coeffs],
        "rank = n + 1": lat.rank == n + 1,
        "m' - m = n + 1": shift == n + 1,
    }
    details = {
        "K1": str(K1), "K2": str(K2), "F": str(F), "K2 - K1": str(diff),
        "determinant": lat.determinant, "rank": lat.rank,
        "kernel": [list(v) for v in lat.kernel()],
        "invariant_violations": lat.check_invariants(),
    }
    return ChainReport(n, checks, details)
