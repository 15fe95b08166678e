"""Text syntax for rule sets, polynomial words and derivation operators.

    ruleset   := rule (separator rule)*
    rule      := LETTER '->' poly
    poly      := sign? term (sign term)*
    term      := factor ('*'? factor)*
    factor    := INT | LETTER ('^' INT)?
    separator := ';' | newline

'#' comments to end of line; other whitespace is insignificant.  Letters
are identifiers ([A-Za-z][A-Za-z0-9_]*), so products of single-letter
variables need '*' or a space between them: x*y or x y, never xy (that is
one letter named "xy").  Operators are written as a monomial prefix glued
to a final 'D': "D", "xD", "x^2D".
"""

from __future__ import annotations

from dataclasses import dataclass

from .grammar import Grammar, OperatorExpr
from .poly import MONOMIAL_ONE, Monomial, Polynomial


class ParseError(ValueError):
    """Syntax error with 1-based line/column position."""

    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT INT ARROW CARET STAR PLUS MINUS SEP EOF
    text: str
    line: int
    col: int


_SINGLES = {"^": "CARET", "*": "STAR", "+": "PLUS", "-": "MINUS"}


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
                col += 1
            continue
        if ch == "\n":
            tokens.append(Token("SEP", "\n", line, col))
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == ";":
            tokens.append(Token("SEP", ";", line, col))
            i += 1
            col += 1
            continue
        if ch == "-" and i + 1 < n and text[i + 1] == ">":
            tokens.append(Token("ARROW", "->", line, col))
            i += 2
            col += 2
            continue
        if ch in _SINGLES:
            tokens.append(Token(_SINGLES[ch], ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            start, start_col = i, col
            while i < n and text[i].isdigit():
                i += 1
                col += 1
            tokens.append(Token("INT", text[start:i], line, start_col))
            continue
        if ch.isalpha():
            start, start_col = i, col
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
                col += 1
            tokens.append(Token("IDENT", text[start:i], line, start_col))
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def skip_separators(self) -> None:
        while self.peek().kind == "SEP":
            self.advance()

    def fail(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(message, tok.line, tok.col)

    # poly := sign? term (sign term)*
    def parse_poly(self) -> Polynomial:
        sign = 1
        if self.peek().kind in ("PLUS", "MINUS"):
            sign = -1 if self.advance().kind == "MINUS" else 1
        total = self.parse_term(sign)
        while self.peek().kind in ("PLUS", "MINUS"):
            sign = -1 if self.advance().kind == "MINUS" else 1
            total = total + self.parse_term(sign)
        return total

    # term := factor ('*'? factor)*
    def parse_term(self, sign: int) -> Polynomial:
        if self.peek().kind not in ("INT", "IDENT"):
            raise self.fail("expected a term")
        coeff = sign
        exps: dict[str, int] = {}
        while True:
            tok = self.advance()
            if tok.kind == "INT":
                coeff *= int(tok.text)
                if self.peek().kind == "CARET":
                    raise self.fail("'^' may only follow a letter")
            else:  # IDENT
                exp = 1
                if self.peek().kind == "CARET":
                    self.advance()
                    etok = self.peek()
                    if etok.kind != "INT":
                        raise self.fail("expected a nonnegative integer exponent after '^'")
                    self.advance()
                    exp = int(etok.text)
                exps[tok.text] = exps.get(tok.text, 0) + exp
            nxt = self.peek()
            if nxt.kind == "STAR":
                self.advance()
                if self.peek().kind not in ("INT", "IDENT"):
                    raise self.fail("expected a factor after '*'")
                continue
            if nxt.kind in ("INT", "IDENT"):
                continue
            break
        return Polynomial.from_term(Monomial(exps), coeff)


def parse_polynomial(text: str) -> Polynomial:
    """Parse a standalone polynomial word such as "x^2*y^2" or "x*y + 3"."""
    p = _Parser(text)
    p.skip_separators()
    poly = p.parse_poly()
    p.skip_separators()
    if p.peek().kind != "EOF":
        raise p.fail(f"unexpected trailing input {p.peek().text!r}")
    return poly


def parse_grammar(text: str) -> Grammar:
    """Parse a rule set such as "x -> x*y; y -> y"."""
    p = _Parser(text)
    rules: dict[str, Polynomial] = {}
    p.skip_separators()
    if p.peek().kind == "EOF":
        raise p.fail("empty rule set")
    while p.peek().kind != "EOF":
        head = p.peek()
        if head.kind != "IDENT":
            raise p.fail(f"expected a letter to open a rule, got {head.text!r}")
        p.advance()
        if p.peek().kind != "ARROW":
            raise p.fail("expected '->' after rule letter")
        p.advance()
        if p.peek().kind in ("SEP", "EOF"):
            raise p.fail("empty rule body")
        body = p.parse_poly()
        if head.text in rules:
            raise ParseError(f"duplicate rule for letter {head.text!r}", head.line, head.col)
        rules[head.text] = body
        if p.peek().kind not in ("SEP", "EOF"):
            raise p.fail(f"unexpected token {p.peek().text!r} after rule body")
        p.skip_separators()
    return Grammar(rules)


def parse_operator(text: str) -> OperatorExpr:
    """Parse "D" or a monomial-prefixed form such as "xD" or "x^2D"."""
    stripped = text.strip()
    if not stripped.endswith("D"):
        raise ParseError("operator must end with 'D'", 1, max(len(stripped), 1))
    prefix_text = stripped[:-1].strip()
    if not prefix_text:
        return OperatorExpr(MONOMIAL_ONE)
    poly = parse_polynomial(prefix_text)
    terms = poly.terms()
    if len(terms) != 1 or terms[0][1] != 1:
        raise ParseError("operator prefix must be a plain monomial", 1, 1)
    return OperatorExpr(terms[0][0])
