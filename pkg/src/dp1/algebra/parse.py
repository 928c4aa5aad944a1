"""Text parser for polynomials.

Grammar (whitespace insignificant)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' ['-'] INT)*
    atom   := INT ['/' INT] | VAR

Negative exponents are accepted on ``t`` only (transient Laurent form).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .mpoly import MPoly
from .tcoeff import TCoeff
from .wpoly import VARIABLE_SETS, WPoly, XVARS

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, allowed):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.allowed = set(allowed)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self):
        terms = []
        sign = 1
        kind, val, pos = self.peek()
        if kind == "end":
            raise ParseError("empty expression", pos)
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            c, powers = self.term()
            terms.append((sign * c, powers))
            kind, val, pos = self.peek()
            if kind == "end":
                return terms
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
                continue
            raise ParseError(f"unexpected token {val!r}", pos)

    def term(self):
        c, powers = Fraction(1), {}
        while True:
            fc, fp = self.factor()
            c *= fc
            for k, e in fp.items():
                powers[k] = powers.get(k, 0) + e
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                continue
            return c, powers

    def factor(self):
        kind, val, pos = self.take()
        if kind == "int":
            c, powers = Fraction(val), {}
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "int":
                    raise ParseError("expected integer denominator", p3)
                if v3 == 0:
                    raise ParseError("zero denominator", p3)
                c = c / v3
        elif kind == "name":
            if val not in self.allowed:
                raise ParseError(f"unknown variable {val}", pos)
            c, powers = Fraction(1), {val: 1}
        elif kind == "end":
            raise ParseError("unexpected end of input", pos)
        else:
            raise ParseError(f"unexpected token {val!r}", pos)
        while True:
            k2, v2, _ = self.peek()
            if not (k2 == "op" and v2 == "^"):
                return c, powers
            self.take()
            neg = False
            k3, v3, p3 = self.take()
            if k3 == "op" and v3 == "-":
                neg = True
                k3, v3, p3 = self.take()
            if k3 != "int":
                raise ParseError("non-integer exponent", p3)
            k4, v4, p4 = self.peek()
            if k4 == "op" and v4 in "./":
                raise ParseError("non-integer exponent", p4)
            e = -v3 if neg else v3
            if neg and set(powers) - {"t"}:
                raise ParseError("negative exponent allowed only on t", p3)
            if neg and c == 0:
                raise ParseError("zero raised to a negative power", p3)
            c = c ** e
            powers = {k: p * e for k, p in powers.items()}


def parse_terms(text: str, allowed):
    return _Parser(text, allowed).parse()


def _variable_set(variables):
    if isinstance(variables, str):
        variables = tuple(variables)
    variables = tuple(variables)
    if variables not in VARIABLE_SETS:
        raise ValueError(f"variable set must be one of {VARIABLE_SETS}")
    return variables


def parse_wpoly(text: str, variables=XVARS, homogeneous: int | None = None) -> WPoly:
    """Parse ``text`` into a :class:`WPoly` over ``variables`` (``'xyzw'`` or ``'pqrs'``).

    If ``homogeneous`` is given the result must be homogeneous of that weighted degree.
    """
    names = _variable_set(variables)
    acc = {}
    for c, powers in parse_terms(text, set(names) | {"t"}):
        exps = tuple(powers.get(n, 0) for n in names)
        if min(exps) < 0:
            raise ParseError("negative exponent on a weighted variable", 0)
        tc = TCoeff.monomial(c, powers.get("t", 0))
        acc[exps] = acc[exps] + tc if exps in acc else tc
    poly = WPoly(acc, names)
    if homogeneous is not None and not poly.is_homogeneous(homogeneous):
        raise ValueError(f"polynomial is not homogeneous of weighted degree {homogeneous}: {poly}")
    return poly


def parse_tcoeff(text: str) -> TCoeff:
    out = TCoeff()
    for c, powers in parse_terms(text, {"t"}):
        out = out + TCoeff.monomial(c, powers.get("t", 0))
    return out


def parse_mpoly(text: str, gens) -> MPoly:
    gens = tuple(gens)
    acc = {}
    for c, powers in parse_terms(text, set(gens)):
        e = tuple(powers.get(g, 0) for g in gens)
        if min(e) < 0:
            raise ParseError("negative exponent", 0)
        acc[e] = acc.get(e, 0) + c
    return MPoly(gens, acc)
