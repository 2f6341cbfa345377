"""Lexer and recursive-descent parser.

Grammar (whitespace-insensitive, ``--`` starts a line comment)::

    term  := "if" term "then" term "else" term
           | ident "<-" term ";" term
           | "bernoulli" | "choose" "[" rat {"," rat} "]"
           | "knight" "(" ident [":" nat] ")"
           | "flip" "(" ident ")" "(" term ")"
           | "perm" "(" ident "," "[" nat {"," nat} "]" ")" "(" term ")"
           | "(" term {"," term} ")" | ctor | ident
    ctor  := "true" | "false" | "r" | "g" | "b" | "inj" nat "of" nat
    rat   := int ["/" nat]
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from ..errors import ParseError
from .syntax import (BLUE, FALSE, GREEN, RED, TRUE, Bernoulli, Choose, Ctor, Fin,
                     If, Knight, Let, Pair, Regrade, Term, Var)

KEYWORDS = {"if", "then", "else", "bernoulli", "choose", "knight", "flip", "perm",
            "true", "false", "r", "g", "b", "inj", "of"}

_CONSTANTS = {"true": TRUE, "false": FALSE, "r": RED, "g": GREEN, "b": BLUE}

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>--[^\n]*)
  | (?P<arrow><-)
  | (?P<int>-?\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<punct>[()\[\],;:/])
""", re.VERBOSE)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    col: int


def tokenize(source: str) -> List[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if not m:
            raise ParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            text = m.group()
            if kind == "ident" and text in KEYWORDS:
                kind = "kw"
            tokens.append(Token(kind, text, line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        found = tok.text or "end of input"
        raise ParseError(f"{msg}, found {found!r}", tok.line, tok.col)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text) -> Token:
        if self.tok.text != text or self.tok.kind == "eof":
            self.error(f"expected {text!r}")
        return self.advance()

    def ident(self) -> str:
        if self.tok.kind != "ident":
            self.error("expected an identifier")
        return self.advance().text

    def nat(self) -> int:
        if self.tok.kind != "int" or self.tok.text.startswith("-"):
            self.error("expected a natural number")
        return int(self.advance().text)

    def rat(self) -> Fraction:
        if self.tok.kind != "int":
            self.error("expected a rational number")
        num = int(self.advance().text)
        if self.tok.text == "/":
            self.advance()
            den = self.nat()
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def term(self) -> Term:
        tok = self.tok
        if tok.kind == "kw" and tok.text == "if":
            self.advance()
            cond = self.term()
            self.expect("then")
            then = self.term()
            self.expect("else")
            return If(cond, then, self.term())
        if tok.kind == "ident" and self.peek().kind == "arrow":
            name = self.advance().text
            self.advance()
            bound = self.term()
            self.expect(";")
            return Let(name, bound, self.term())
        return self.atom()

    def atom(self) -> Term:
        tok = self.tok
        if tok.kind == "ident":
            return Var(self.advance().text)
        if tok.text == "(" and tok.kind == "punct":
            self.advance()
            items = [self.term()]
            while self.tok.text == ",":
                self.advance()
                items.append(self.term())
            self.expect(")")
            return items[0] if len(items) == 1 else Pair(tuple(items))
        if tok.kind != "kw":
            self.error("expected a term")
        kw = self.advance().text
        if kw in _CONSTANTS:
            return _CONSTANTS[kw]
        if kw == "bernoulli":
            return Bernoulli()
        if kw == "choose":
            self.expect("[")
            probs = [self.rat()]
            while self.tok.text == ",":
                self.advance()
                probs.append(self.rat())
            self.expect("]")
            return Choose(tuple(probs))
        if kw == "knight":
            self.expect("(")
            name = self.ident()
            arity = 2
            if self.tok.text == ":":
                self.advance()
                arity = self.nat()
            self.expect(")")
            return Knight(name, arity)
        if kw == "flip":
            self.expect("(")
            name = self.ident()
            self.expect(")")
            return Regrade(("flip", name), self._paren_term())
        if kw == "perm":
            self.expect("(")
            name = self.ident()
            self.expect(",")
            self.expect("[")
            perm = [self.nat()]
            while self.tok.text == ",":
                self.advance()
                perm.append(self.nat())
            self.expect("]")
            self.expect(")")
            return Regrade(("perm", name, tuple(perm)), self._paren_term())
        if kw == "inj":
            at = self.tok
            k = self.nat()
            self.expect("of")
            n = self.nat()
            if not 1 <= k <= n:
                self.error(f"injection {k} out of range 1..{n}", at)
            return Ctor(k - 1, Fin(n))
        self.error("expected a term", tok)

    def _paren_term(self) -> Term:
        self.expect("(")
        t = self.term()
        self.expect(")")
        return t


def parse(source: str) -> Term:
    """Parse a complete program."""
    p = _Parser(tokenize(source))
    t = p.term()
    if p.tok.kind != "eof":
        p.error("unexpected trailing input")
    return t
