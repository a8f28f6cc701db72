"""Recursive-descent parser and ordered printer for polynomial expressions.

Grammar (whitespace insignificant)::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' natural)?
    base     := rational | variable | '(' expr ')'
    rational := natural ('/' natural)?

Rational literals carry a '/' so that formatted QQ coefficients re-parse to
the same polynomial; over F_p the denominator is inverted modulo p.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import GwalkError, ParseError
from .poly import Polynomial, Ring

_TOKEN = re.compile(r"\d+|[A-Za-z_]\w*|[-+*/^()]")
_WS = re.compile(r"\s*")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        pos = _WS.match(text, pos).end()
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(), pos))
        pos = m.end()
    tokens.append(("", n))  # end marker
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def pos(self):
        return self.tokens[self.i][1]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, want):
        tok, pos = self.advance()
        if tok != want:
            raise ParseError(f"expected {want!r}, found {tok!r}", pos)

    def expr(self) -> Polynomial:
        negate = False
        if self.peek() == "-":
            self.advance()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.peek() in ("+", "-"):
            op, _ = self.advance()
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek() == "*":
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        result = self.base()
        if self.peek() == "^":
            self.advance()
            result = result ** self.natural("exponent")
        return result

    def base(self) -> Polynomial:
        tok, pos = self.advance()
        if tok == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.isdigit():
            value = Fraction(int(tok))
            if self.peek() == "/":
                self.advance()
                den = self.natural("denominator")
                if den == 0:
                    raise ParseError("zero denominator", pos)
                value = Fraction(int(tok), den)
            try:
                return self.ring.constant(value)
            except GwalkError as exc:
                raise ParseError(str(exc), pos) from exc
        if tok and (tok[0].isalpha() or tok[0] == "_"):
            if tok not in self.ring.variables:
                raise ParseError(f"unknown variable {tok!r}", pos)
            return self.ring.variable(tok)
        raise ParseError(
            f"expected a value, found {tok!r}" if tok else "unexpected end of input", pos
        )

    def natural(self, what: str) -> int:
        tok, pos = self.advance()
        if not tok.isdigit():
            raise ParseError(f"expected {what}, found {tok!r}", pos)
        return int(tok)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse an expression into a canonical polynomial of `ring`."""
    parser = _Parser(text, ring)
    result = parser.expr()
    tok, pos = parser.tokens[parser.i]
    if tok:
        raise ParseError(f"trailing input {tok!r}", pos)
    return result


def _coefficient_str(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _monomial_str(ring: Ring, exp) -> str:
    parts = []
    for name, e in zip(ring.variables, exp):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, ordering) -> str:
    """Print terms in strictly decreasing order under `ordering`.

    The output re-parses to `f` (prime-field representatives are printed as
    their canonical residues, rationals as `num/den`).
    """
    if f.is_zero:
        return "0"
    key = ordering.key
    pieces = []
    for exp in sorted(f.terms, key=key, reverse=True):
        c = f.terms[exp]
        mono = _monomial_str(f.ring, exp)
        negative = c < 0
        mag = -c if negative else c
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_coefficient_str(mag)}*{mono}"
        else:
            body = _coefficient_str(mag)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)
