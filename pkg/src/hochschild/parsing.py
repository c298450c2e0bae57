"""Recursive-descent parser for polynomial expressions.

Grammar:
    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := var | rational | '(' expr ')'

Variables are z1, z2, z3 (the number of ring variables is the maximal
index used) or x, y in invariant contexts; the two alphabets cannot be
mixed.  Rationals are nat or nat/nat.  There is no implicit
multiplication and no unary minus except a single leading sign.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Polynomial

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z]\w*)"
                    r"|(?P<op>[-+*^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__("%s (at offset %d)" % (message, position))
        self.position = position


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError("unexpected character %r" % stripped[0],
                             len(text) - len(stripped))
        if m.group("num"):
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        elif m.group("op"):
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


_Z_NAME = re.compile(r"^z([123])$")


def _variable_map(tokens):
    """Map variable names to 0-based indices and fix the ring size."""
    names = {tok[1] for tok in tokens if tok[0] == "name"}
    if not names:
        return {}, 1
    uses_z = any(_Z_NAME.match(s) for s in names)
    uses_xy = any(s in ("x", "y") for s in names)
    if uses_z and uses_xy:
        raise ParseError("cannot mix z-variables with x, y", 0)
    if uses_xy:
        bad = names - {"x", "y"}
        if bad:
            raise ParseError("unknown variable %r" % sorted(bad)[0], 0)
        return {"x": 0, "y": 1}, 2
    bad = [s for s in sorted(names) if not _Z_NAME.match(s)]
    if bad:
        raise ParseError("unknown variable %r (use z1, z2, z3 or x, y)"
                         % bad[0], 0)
    n = max(int(_Z_NAME.match(s).group(1)) for s in names)
    return {"z%d" % (i + 1): i for i in range(n)}, n


class _Parser:
    def __init__(self, tokens, varmap, n):
        self.tokens = tokens
        self.i = 0
        self.varmap = varmap
        self.n = n

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError("expected %r" % op, pos)
        return self.take()

    def expr(self) -> Polynomial:
        negate = False
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.take()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                rhs = self.term()
                result = result + rhs if value == "+" else result - rhs
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.take()
                result = result * self.factor()
            elif kind in ("name", "num") or (kind == "op" and value == "("):
                raise ParseError("implicit multiplication is not allowed", pos)
            else:
                return result

    def factor(self) -> Polynomial:
        base = self.base()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            kind, value, pos = self.peek()
            if kind != "num" or "/" in value:
                raise ParseError("exponent must be a natural number", pos)
            self.take()
            return base ** int(value)
        return base

    def base(self) -> Polynomial:
        kind, value, pos = self.take()
        if kind == "num":
            if "/" in value:
                a, b = value.split("/")
                if int(b) == 0:
                    raise ParseError("zero denominator", pos)
                return Polynomial.constant(self.n, Fraction(int(a), int(b)))
            return Polynomial.constant(self.n, int(value))
        if kind == "name":
            return Polynomial.variable(self.n, self.varmap[value] + 1)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError("expected a variable, number or parenthesis", pos)


def parse_polynomial(text: str, n: int | None = None) -> Polynomial:
    """Parse text into a polynomial; the ring size is inferred from the
    variables used unless n forces a larger ring."""
    tokens = _tokenize(text)
    if len(tokens) == 1:
        raise ParseError("empty expression", 0)
    varmap, inferred = _variable_map(tokens)
    size = max(inferred, n or 1)
    if n is not None and inferred > n:
        raise ParseError("expression uses more than %d variables" % n, 0)
    parser = _Parser(tokens, varmap, size)
    result = parser.expr()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise ParseError("trailing input", pos)
    return result
