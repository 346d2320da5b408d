"""Recursive-descent parser for polynomial expressions and planar maps.

Grammar (whitespace-insensitive, '^' binds tightest, then unary minus,
then '*', then '+'/'-'; multiplication is always explicit):

    bindings := name "=" expr (";" name "=" expr)* [";"]
    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := "-" factor | power
    power    := atom ["^" natural]
    atom     := rational | variable | "(" expr ")"
    rational := natural ["/" natural]

Exponents are non-negative integer literals.  Rational literals require
integer numerator and denominator; anything else next to "/" is an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .polycore import BivarPoly


class ParseError(ValueError):
    """Syntax error with the byte offset of the offending token."""

    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = expected
        detail = f"{message} at byte {offset}"
        if expected:
            detail += " (expected " + ", ".join(sorted(expected)) + ")"
        super().__init__(detail)


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", one of "+-*/^()=;", or "end"
    text: str
    offset: int  # byte offset into the input
    value: int = 0


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)

    def byte_offset(idx: int) -> int:
        return len(text[:idx].encode("utf-8"))

    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            lexeme = text[start:i]
            tokens.append(_Token("int", lexeme, byte_offset(start), int(lexeme)))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("name", text[start:i], byte_offset(start)))
            continue
        if ch in "+-*/^()=;":
            tokens.append(_Token(ch, ch, byte_offset(i)))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", byte_offset(i))
    tokens.append(_Token("end", "", byte_offset(n)))
    return tokens


@dataclass
class _Parser:
    tokens: list[_Token]
    variables: tuple[str, str]
    pos: int = field(default=0)

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, description: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"unexpected {_describe(tok)}", tok.offset, frozenset({description}))
        return self.advance()

    def expr(self) -> BivarPoly:
        acc = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            acc = acc + rhs if op.kind == "+" else acc - rhs
        return acc

    def term(self) -> BivarPoly:
        acc = self.factor()
        while self.peek().kind == "*":
            self.advance()
            acc = acc * self.factor()
        return acc

    def factor(self) -> BivarPoly:
        if self.peek().kind == "-":
            self.advance()
            return -self.factor()
        return self.power()

    def power(self) -> BivarPoly:
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "int":
                raise ParseError(
                    f"unexpected {_describe(tok)}", tok.offset,
                    frozenset({"non-negative integer exponent"}),
                )
            self.advance()
            return base ** tok.value
        return base

    def atom(self) -> BivarPoly:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            value = Fraction(tok.value)
            if self.peek().kind == "/":
                self.advance()
                den = self.peek()
                if den.kind != "int":
                    raise ParseError(
                        f"unexpected {_describe(den)}", den.offset,
                        frozenset({"integer denominator"}),
                    )
                if den.value == 0:
                    raise ParseError("zero denominator", den.offset)
                self.advance()
                value /= den.value
            return BivarPoly.const(value)
        if tok.kind == "name":
            if tok.text not in self.variables:
                raise ParseError(
                    f"unknown variable {tok.text!r}", tok.offset,
                    frozenset({f"variable {v!r}" for v in self.variables}),
                )
            self.advance()
            index = self.variables.index(tok.text)
            return BivarPoly.monomial(1 - index, index)
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        raise ParseError(
            f"unexpected {_describe(tok)}", tok.offset,
            frozenset({"integer", "'('"} | {f"variable {v!r}" for v in self.variables}),
        )


def _describe(tok: _Token) -> str:
    if tok.kind == "end":
        return "end of input"
    if tok.kind == "int":
        return f"integer {tok.text}"
    if tok.kind == "name":
        return f"name {tok.text!r}"
    return f"{tok.text!r}"


def parse_poly(text: str, variables: tuple[str, str] = ("x", "y")) -> BivarPoly:
    """Parse a single polynomial expression in the two given variables."""
    parser = _Parser(_tokenize(text), variables)
    poly = parser.expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected {_describe(tok)}", tok.offset, frozenset({"end of input"}))
    return poly


def parse_bindings(text: str, names: tuple[str, str],
                   variables: tuple[str, str]) -> tuple[BivarPoly, BivarPoly]:
    """Parse 'a = expr ; b = expr' with the required binding names in order."""
    parser = _Parser(_tokenize(text), variables)
    polys: list[BivarPoly] = []
    for k, name in enumerate(names):
        if k:
            parser.expect(";", "';'")
        tok = parser.peek()
        if tok.kind != "name" or tok.text != name:
            raise ParseError(
                f"unexpected {_describe(tok)}", tok.offset, frozenset({f"binding {name!r}"}),
            )
        parser.advance()
        parser.expect("=", "'='")
        polys.append(parser.expr())
    if parser.peek().kind == ";":
        parser.advance()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected {_describe(tok)}", tok.offset, frozenset({"end of input"}))
    return polys[0], polys[1]


def parse_map(text: str) -> tuple[BivarPoly, BivarPoly]:
    """Parse a planar polynomial map given as 'f = <expr> ; g = <expr>'."""
    return parse_bindings(text, ("f", "g"), ("x", "y"))
