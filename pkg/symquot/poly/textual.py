"""Textual polynomial format.

Terms look like ``(-3/2)*q2``, ``(0+1i)*p8``, ``sqrt(20/89)*z1`` or
``27*p1^2*p2``; terms are joined by `` + ``/`` - ``. The parser accepts
everything the printer emits plus ordinary parenthesised arithmetic
(``+ - * ^``, unary minus).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from symquot.errors import ParseError
from symquot.poly.coefficient import Coefficient, gaussian
from symquot.poly.polynomial import Polynomial

# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------


def _frac(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _gaussian_text(re: Fraction, im: Fraction) -> str:
    sign = "-" if im < 0 else "+"
    return f"({_frac(re)}{sign}{_frac(abs(im))}i)"


def format_coefficient(coeff: Coefficient) -> str:
    """Standalone coefficient text (the leading factor of a term)."""
    re, im, r = coeff.re, coeff.im, coeff.radicand
    if r == 1:
        if im:
            return _gaussian_text(re, im)
        return _frac(re) if re.denominator == 1 else f"({_frac(re)})"
    if not im:
        root = f"sqrt({_frac(re * re * r)})"
        return root if re > 0 else f"-{root}"
    return f"{_gaussian_text(re, im)}*sqrt({r})"


def _monomial_text(names: Sequence[str], exp: Sequence[int]) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e]
    return "*".join(parts)


def _term_text(names: Sequence[str], exp: Sequence[int], coeff: Coefficient) -> str:
    mono = _monomial_text(names, exp)
    if not mono:
        return format_coefficient(coeff)
    if coeff.is_one():
        return mono
    if (-coeff).is_one():
        return f"-{mono}"
    return f"{format_coefficient(coeff)}*{mono}"


def format_polynomial(poly: Polynomial) -> str:
    items = poly.items()
    if not items:
        return "0"
    out = ""
    for idx, (exp, coeff) in enumerate(items):
        text = _term_text(poly.names, exp, coeff)
        if idx == 0:
            out = text
        elif text.startswith("-"):
            out += f" - {text[1:]}"
        else:
            out += f" + {text}"
    return out


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+(?:/\d+)?)(?P<imag>i(?![A-Za-z0-9_]))?"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()])"
    r")"
)


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"Unexpected character {text[pos]!r} at position {pos} in {text!r}")
        if match.group("num") is not None:
            kind = "imag" if match.group("imag") else "num"
            tokens.append(_Token(kind, match.group("num"), match.start("num")))
        elif match.group("name") is not None:
            tokens.append(_Token("name", match.group("name"), match.start("name")))
        elif match.group("op") is not None:
            tokens.append(_Token(match.group("op"), match.group("op"), match.start("op")))
        pos = match.end()
    return tokens


class _Parser:
    """Recursive descent over expr := term (± term)*, term := unary (* unary)*."""

    def __init__(self, text: str, names: Sequence[str], weights: Sequence[int] | None) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = tuple(names)
        self.weights = weights

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self, kind: str | None = None) -> _Token:
        tok = self._peek()
        if tok is None:
            raise ParseError(f"Unexpected end of input in {self.text!r}")
        if kind is not None and tok.kind != kind:
            raise ParseError(f"Expected {kind!r} at position {tok.pos} in {self.text!r}, found {tok.text!r}")
        self.pos += 1
        return tok

    def _const(self, coeff: Coefficient) -> Polynomial:
        return Polynomial.constant(self.names, coeff, self.weights)

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("Empty polynomial text")
        result = self.expr()
        if self._peek() is not None:
            tok = self._peek()
            raise ParseError(f"Trailing input {tok.text!r} at position {tok.pos} in {self.text!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while (tok := self._peek()) is not None and tok.kind in "+-":
            self._take()
            rhs = self.term()
            result = result + rhs if tok.kind == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while (tok := self._peek()) is not None and tok.kind == "*":
            self._take()
            result = result * self.unary()
        return result

    def unary(self) -> Polynomial:
        tok = self._peek()
        if tok is not None and tok.kind in "+-":
            self._take()
            operand = self.unary()
            return -operand if tok.kind == "-" else operand
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        tok = self._peek()
        if tok is not None and tok.kind == "^":
            self._take()
            exponent = self._take("num")
            if "/" in exponent.text:
                raise ParseError(f"Exponent must be a nonnegative integer at position {exponent.pos}")
            return base ** int(exponent.text)
        return base

    def atom(self) -> Polynomial:
        tok = self._take()
        if tok.kind == "num":
            return self._const(Coefficient.of(Fraction(tok.text)))
        if tok.kind == "imag":
            return self._const(Coefficient(gaussian(0, Fraction(tok.text))))
        if tok.kind == "(":
            inner = self.expr()
            self._take(")")
            return inner
        if tok.kind == "name":
            if tok.text == "sqrt":
                self._take("(")
                radicand = self._take("num")
                self._take(")")
                return self._const(Coefficient.sqrt(Fraction(radicand.text)))
            if tok.text == "i":
                return self._const(Coefficient(gaussian(0, 1)))
            if tok.text not in self.names:
                raise ParseError(f"Unknown variable {tok.text!r} at position {tok.pos} in {self.text!r}")
            return Polynomial.variable(self.names, tok.text, self.weights)
        raise ParseError(f"Unexpected {tok.text!r} at position {tok.pos} in {self.text!r}")


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def parse_polynomial(text: str, names: Sequence[str] | None = None, weights: Sequence[int] | None = None) -> Polynomial:
    """Parse ``text`` in the variable context ``names``.

    Without ``names`` the context is every identifier in the text, sorted.
    """
    if names is None:
        found = {n for n in _NAME.findall(text) if n not in ("sqrt", "i")}
        names = sorted(found)
    return _Parser(text, names, weights).parse()
