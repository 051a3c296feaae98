"""Text format for equations and rate expressions.

Grammar, in decreasing precedence:

* atoms: integers, names, parenthesized expressions;
* jets: y', y'', and y^(3) onward for names declared as signals; the
  parenthesized form is a jet marker, so y^(3) is the third derivative
  while y^3 is a power;
* powers: expr^k with a plain integer exponent;
* unary minus; then '*' and '/'; then '+' and '-'.

Multiplication is always explicit.  Division is exact rational-function
division; equations must come out polynomial.  Every name must be declared
up front, either implicitly (y, u) or through a params header.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .mpoly import MPoly
from .ratfunc import RatFunc
from .variables import Kind, Var, param

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>[0-9]+)"
    r"|(?P<op>[-+*/^()'=,])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        pos = m.end()
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), m.start()))
    out.append(("end", "", len(text)))
    return out


class _Parser:
    """Recursive descent over the token list; values are RatFunc."""

    def __init__(self, text: str, symbols):
        self.tokens = _tokenize(text)
        self.i = 0
        self.symbols = symbols

    def peek(self, offset: int = 0):
        j = min(self.i + offset, len(self.tokens) - 1)
        return self.tokens[j]

    def take(self):
        tok = self.tokens[self.i]
        if tok[0] != "end":
            self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, text, pos = self.take()
        if kind != "op" or text != op:
            raise ParseError(f"expected {op!r}", pos)

    def at_op(self, *ops: str) -> bool:
        kind, text, _pos = self.peek()
        return kind == "op" and text in ops

    def parse(self) -> RatFunc:
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing {text!r}", pos)
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.at_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.unary()
        while self.at_op("*", "/"):
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", pos)
                value = value / rhs
        return value

    def unary(self) -> RatFunc:
        if self.at_op("-"):
            self.take()
            return -self.unary()
        if self.at_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        value = self.atom()
        while self.at_op("^"):
            _, _, pos = self.take()
            kind, text, epos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a plain integer", epos)
            value = value ** int(text)
        return value

    def atom(self) -> RatFunc:
        kind, text, pos = self.take()
        if kind == "int":
            return RatFunc.const(Fraction(int(text)))
        if kind == "op" and text == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        if kind == "name":
            return self.name_atom(text, pos)
        raise ParseError(f"unexpected {text!r}", pos)

    def name_atom(self, name: str, pos: int) -> RatFunc:
        spec = self.symbols.get(name)
        if spec is None:
            raise ParseError(f"unknown symbol {name!r}", pos)
        primes = 0
        while self.at_op("'"):
            self.take()
            primes += 1
        jet = primes
        # jet marker: name^(k), only directly after an unprimed name
        if (self.at_op("^") and self.peek(1)[:2] == ("op", "(")
                and self.peek(2)[0] == "int" and self.peek(3)[:2] == ("op", ")")):
            if primes:
                raise ParseError("mixed primes and jet marker", pos)
            self.take()
            self.take()
            jet = int(self.take()[1])
            self.take()
        if isinstance(spec, Var):
            if jet:
                raise ParseError(f"{name!r} does not take derivatives", pos)
            return RatFunc.var(spec)
        return RatFunc.var(Var(spec, name, jet))


def parse_expr(text: str, symbols) -> RatFunc:
    """Evaluate text over the declared symbols.

    symbols maps a name either to a Var (plain, no derivatives) or to a
    Kind (a signal whose jets may all appear).
    """
    return _Parser(text, symbols).parse()


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def parse_param_names(text: str) -> list[str]:
    names = []
    for piece in text.split(","):
        name = piece.strip()
        if not name:
            continue
        if not NAME_RE.match(name):
            raise ParseError(f"invalid parameter name {name!r}")
        names.append(name)
    return names


def parse_dae(text: str) -> tuple[MPoly, tuple[Var, ...]]:
    """Read an equation file: optional 'params:' header, one equation.

    The equation may be split over several lines and may use 'lhs = rhs'
    form.  Returns the polynomial (lhs - rhs) and the declared parameters.
    """
    params: list[str] = []
    body: list[str] = []
    seen_params = False
    for line in text.splitlines():
        line = _strip_comment(line).strip()
        if not line:
            continue
        if line.startswith("params:"):
            if seen_params:
                raise ParseError("duplicate params header")
            seen_params = True
            params = parse_param_names(line[len("params:"):])
            continue
        body.append(line)
    if len(set(params)) != len(params):
        raise ParseError("repeated parameter name")
    if "y" in params or "u" in params:
        raise ParseError("y and u are reserved for the output and the input")
    equation = " ".join(body).strip()
    if not equation:
        raise ParseError("no equation found")
    symbols: dict = {"y": Kind.OUTPUT, "u": Kind.INPUT}
    symbols.update({name: param(name) for name in params})
    sides = equation.split("=")
    if len(sides) == 1:
        value = parse_expr(sides[0], symbols)
    elif len(sides) == 2:
        value = parse_expr(sides[0], symbols) - parse_expr(sides[1], symbols)
    else:
        raise ParseError("more than one '=' in the equation")
    if not value.is_polynomial():
        raise ParseError("equation must be polynomial; clear denominators")
    poly = value.as_poly()
    if poly.is_zero():
        raise ParseError("equation is identically zero")
    return poly, tuple(param(name) for name in sorted(params))
