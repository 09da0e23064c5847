"""Recursive-descent parser for the concrete formula syntax.

    formula := "T" | "F" | pred | eq | and | or | exists
    pred    := IDENT "(" term { "," term } ")"
    eq      := "(" term "=" term ")"
    and     := "(" formula "&" formula ")"
    or      := "(" formula "|" formula ")" | "V[" formula { "," formula } "]"
    exists  := "E" VAR "." formula
    term    := VAR | CONST | IDENT "(" term { "," term } ")"
    VAR     := "x" digits        CONST := "c" digits
    IDENT   := letter { letter | digit }

"T", "F", "E" and "V" double as ordinary identifiers when the lookahead
says so ("T(...)" is a predicate named T, "V[" opens a big disjunction).
Whitespace is insignificant. When a signature is supplied, predicate and
function arities are enforced and unknown symbols are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from ..errors import ArityMismatch, FormulaSyntaxError, UndeclaredSymbol
from .syntax import (
    And,
    BOTTOM,
    Const,
    Equality,
    Exists,
    Formula,
    Func,
    Or,
    Predicate,
    TOP,
    Term,
    Var,
)

_TOKEN = re.compile(r"\s*(?:(?P<var>x\d+)|(?P<const>c\d+)|(?P<ident>[A-Za-z][A-Za-z0-9]*)"
                    r"|(?P<punct>[()\[\],.&|=]))")

VAR_PATTERN = re.compile(r"x\d+\Z")
CONST_PATTERN = re.compile(r"c\d+\Z")
IDENT_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


@dataclass(frozen=True)
class Signature:
    """Declared symbols: constant indices, function and predicate arities."""

    constants: frozenset[int]
    functions: Mapping[str, int]
    predicates: Mapping[str, int]


@dataclass
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise FormulaSyntaxError(len(text) - len(stripped), f"unexpected character {stripped[0]!r}")
        kind = m.lastgroup or "punct"
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, signature: Signature | None):
        self.tokens = _tokenize(text)
        self.signature = signature
        self.at = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.at + ahead, len(self.tokens) - 1)]

    def take(self) -> _Token:
        tok = self.tokens[self.at]
        if tok.kind != "end":
            self.at += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.take()
        if tok.text != text:
            raise FormulaSyntaxError(tok.position, f"expected {text!r}")
        return tok

    def fail(self, message: str):
        raise FormulaSyntaxError(self.peek().position, message)

    # --- terms ---------------------------------------------------------

    def term(self) -> Term:
        tok = self.take()
        if tok.kind == "var":
            return Var(int(tok.text[1:]))
        if tok.kind == "const":
            index = int(tok.text[1:])
            if self.signature is not None and index not in self.signature.constants:
                raise UndeclaredSymbol(tok.text)
            return Const(index)
        if tok.kind == "ident":
            self.expect("(")
            args = [self.term()]
            while self.peek().text == ",":
                self.take()
                args.append(self.term())
            self.expect(")")
            if self.signature is not None:
                if tok.text not in self.signature.functions:
                    raise UndeclaredSymbol(tok.text)
                arity = self.signature.functions[tok.text]
                if arity != len(args):
                    raise ArityMismatch(tok.text, arity, len(args))
            return Func(tok.text, tuple(args))
        raise FormulaSyntaxError(tok.position, "expected a term")

    # --- formulas ------------------------------------------------------

    def formula(self) -> Formula:
        tok = self.peek()
        if tok.kind == "ident":
            if self.peek(1).text == "(":
                return self.predicate()
            if tok.text == "T":
                self.take()
                return TOP
            if tok.text == "F":
                self.take()
                return BOTTOM
            if tok.text == "E" and self.peek(1).kind == "var":
                return self.exists()
            if tok.text == "V" and self.peek(1).text == "[":
                return self.big_or()
            self.fail(f"cannot start a formula with {tok.text!r}")
        if tok.text == "(":
            return self.parenthesized()
        self.fail("expected a formula")
        raise AssertionError  # unreachable

    def predicate(self) -> Formula:
        tok = self.take()
        self.expect("(")
        args = [self.term()]
        while self.peek().text == ",":
            self.take()
            args.append(self.term())
        self.expect(")")
        if self.signature is not None:
            if tok.text not in self.signature.predicates:
                raise UndeclaredSymbol(tok.text)
            arity = self.signature.predicates[tok.text]
            if arity != len(args):
                raise ArityMismatch(tok.text, arity, len(args))
        return Predicate(tok.text, tuple(args))

    def exists(self) -> Formula:
        self.take()  # E
        var = self.take()
        self.expect(".")
        return Exists(int(var.text[1:]), self.formula())

    def big_or(self) -> Formula:
        self.take()  # V
        self.expect("[")
        items = [self.formula()]
        while self.peek().text == ",":
            self.take()
            items.append(self.formula())
        self.expect("]")
        return Or(tuple(items))

    def parenthesized(self) -> Formula:
        self.expect("(")
        # the first operator at this nesting depth decides the production
        operator = self._leading_operator()
        if operator == "=":
            lhs_term = self.term()
            self.expect("=")
            rhs_term = self.term()
            self.expect(")")
            return Equality(lhs_term, rhs_term)
        lhs = self.formula()
        op = self.take()
        if op.text == "&":
            rhs = self.formula()
            self.expect(")")
            return And(lhs, rhs)
        if op.text == "|":
            rhs = self.formula()
            self.expect(")")
            return Or((lhs, rhs))
        raise FormulaSyntaxError(op.position, "expected '&', '|' or '='")

    def _leading_operator(self) -> str | None:
        depth = 0
        for tok in self.tokens[self.at:]:
            if tok.text in "([":
                depth += 1
            elif tok.text in ")]":
                if depth == 0:
                    return None
                depth -= 1
            elif depth == 0 and tok.text in ("=", "&", "|"):
                return tok.text
        return None


def parse_term(text: str, signature: Signature | None = None) -> Term:
    parser = _Parser(text, signature)
    term = parser.term()
    if parser.peek().kind != "end":
        parser.fail("trailing input after the term")
    return term


def parse_formula(text: str, signature: Signature | None = None) -> Formula:
    parser = _Parser(text, signature)
    formula = parser.formula()
    if parser.peek().kind != "end":
        parser.fail("trailing input after the formula")
    return formula
