"""Propositional formulas: syntax tree, parser, and printer.

The formula language has lowercase atoms, the constants ``true`` and
``false``, and the connectives ``!`` (negation), ``&`` (conjunction),
``|`` (disjunction), and ``->`` (implication).  Precedence, lowest to
highest: ``->`` (right-associative), ``|``, ``&`` (left-associative),
``!`` (prefix).  Whitespace is insignificant and ``#`` starts a comment
running to the end of the line.

Formula values are immutable and compare structurally; two formulas
print identically exactly when they are structurally equal.  No
normalisation or simplification is ever applied.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "Formula",
    "Atom",
    "Top",
    "Bottom",
    "Not",
    "And",
    "Or",
    "Implies",
    "TOP",
    "BOTTOM",
    "FormulaSyntaxError",
    "parse_formula",
    "print_formula",
    "atoms",
]

_ATOM_NAME = re.compile(r"[a-z][a-zA-Z0-9_]*")
_RESERVED = frozenset({"true", "false"})


class FormulaSyntaxError(ValueError):
    """Malformed formula text, with a 1-based character position."""

    def __init__(self, position: int, message: str):
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position
        self.reason = message


@dataclass(frozen=True)
class Formula:
    """Base class of all formula nodes."""

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _ATOM_NAME.fullmatch(self.name) or self.name in _RESERVED:
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


TOP = Top()
BOTTOM = Bottom()


def atoms(f: Formula) -> frozenset[str]:
    """The set of atom names occurring in ``f``."""
    match f:
        case Atom(name):
            return frozenset((name,))
        case Top() | Bottom():
            return frozenset()
        case Not(g):
            return atoms(g)
        case And(l, r) | Or(l, r) | Implies(l, r):
            return atoms(l) | atoms(r)
    raise TypeError(f"not a formula: {f!r}")


# Precedence levels used by the printer; parentheses are emitted only
# where the grammar would otherwise reassociate.
_IMPLIES, _OR, _AND, _UNARY = 1, 2, 3, 4


def _prec(f: Formula) -> int:
    match f:
        case Implies(_, _):
            return _IMPLIES
        case Or(_, _):
            return _OR
        case And(_, _):
            return _AND
        case _:
            return _UNARY


def _wrap(f: Formula, min_prec: int) -> str:
    text = print_formula(f)
    return text if _prec(f) >= min_prec else f"({text})"


def print_formula(f: Formula) -> str:
    """Render ``f`` with minimal parentheses; re-parses to an equal formula."""
    match f:
        case Atom(name):
            return name
        case Top():
            return "true"
        case Bottom():
            return "false"
        case Not(g):
            return "!" + _wrap(g, _UNARY)
        case And(l, r):
            return f"{_wrap(l, _AND)} & {_wrap(r, _AND + 1)}"
        case Or(l, r):
            return f"{_wrap(l, _OR)} | {_wrap(r, _OR + 1)}"
        case Implies(l, r):
            return f"{_wrap(l, _IMPLIES + 1)} -> {_wrap(r, _IMPLIES)}"
    raise TypeError(f"not a formula: {f!r}")


class _Token(NamedTuple):
    kind: str
    text: str
    pos: int  # 1-based character position


_PUNCT = {"(": "lparen", ")": "rparen", "!": "not", "&": "and", "|": "or"}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
        elif c == "#":
            nl = text.find("\n", i)
            i = n if nl < 0 else nl + 1
        elif c in _PUNCT:
            tokens.append(_Token(_PUNCT[c], c, i + 1))
            i += 1
        elif c == "-":
            if text.startswith("->", i):
                tokens.append(_Token("implies", "->", i + 1))
                i += 2
            else:
                raise FormulaSyntaxError(i + 1, "expected '->' after '-'")
        elif m := _ATOM_NAME.match(text, i):
            word = m.group()
            tokens.append(_Token(word if word in _RESERVED else "atom", word, i + 1))
            i = m.end()
        else:
            raise FormulaSyntaxError(i + 1, f"unexpected character {c!r}")
    tokens.append(_Token("end", "", n + 1))
    return tokens


def _describe(tok: _Token) -> str:
    return "end of input" if tok.kind == "end" else repr(tok.text)


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "implies":
            self.advance()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek().kind == "or":
            self.advance()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek().kind == "and":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "not":
            self.advance()
            return Not(self.unary())
        if tok.kind == "true":
            self.advance()
            return TOP
        if tok.kind == "false":
            self.advance()
            return BOTTOM
        if tok.kind == "atom":
            self.advance()
            return Atom(tok.text)
        if tok.kind == "lparen":
            self.advance()
            f = self.implication()
            closing = self.peek()
            if closing.kind != "rparen":
                raise FormulaSyntaxError(closing.pos, f"expected ')', found {_describe(closing)}")
            self.advance()
            return f
        raise FormulaSyntaxError(
            tok.pos,
            f"expected a formula (atom, 'true', 'false', '!' or '('), found {_describe(tok)}",
        )


def parse_formula(text: str) -> Formula:
    """Parse formula text, raising :class:`FormulaSyntaxError` on bad input."""
    parser = _Parser(_tokenize(text))
    f = parser.implication()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise FormulaSyntaxError(trailing.pos, f"unexpected {_describe(trailing)} after the formula")
    return f
