"""Conditional norms: (body, head) pairs and the norm-set file format.

A norm file holds one norm per line, written ``(BODY, HEAD)`` with both
sides in the formula grammar.  Blank lines are skipped and ``#`` starts
a comment to the end of the line.  Source order is preserved and
duplicates are permitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .formula import Formula, FormulaSyntaxError, parse_formula, print_formula

__all__ = [
    "Norm",
    "NormSet",
    "NormSyntaxError",
    "parse_norm",
    "parse_norms",
    "load_norms",
    "render_norm",
]


class NormSyntaxError(ValueError):
    """Malformed norm text, with the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


@dataclass(frozen=True)
class Norm:
    """A conditional norm: when ``body`` holds, ``head`` is obligatory."""

    body: Formula
    head: Formula


@dataclass(frozen=True)
class NormSet:
    """A finite, ordered collection of norms; iteration follows source order."""

    norms: tuple[Norm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "norms", tuple(self.norms))

    def __iter__(self) -> Iterator[Norm]:
        return iter(self.norms)

    def __len__(self) -> int:
        return len(self.norms)

    def __getitem__(self, index: int) -> Norm:
        return self.norms[index]


def render_norm(norm: Norm) -> str:
    return f"({print_formula(norm.body)}, {print_formula(norm.head)})"


def _split_pair(line: str) -> tuple[str, str]:
    """Split ``(BODY, HEAD)`` at the comma sitting directly inside the outer parens."""
    stripped = line.strip()
    if not stripped.startswith("(") or not stripped.endswith(")"):
        raise ValueError("a norm is written (BODY, HEAD)")
    inner = stripped[1:-1]
    depth = 0
    for i, c in enumerate(inner):
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        elif c == "," and depth == 0:
            return inner[:i], inner[i + 1 :]
    raise ValueError("missing ',' between body and head")


def parse_norm(text: str, line: int = 1) -> Norm:
    """Parse a single ``(BODY, HEAD)`` norm."""
    try:
        body_text, head_text = _split_pair(text)
        return Norm(parse_formula(body_text), parse_formula(head_text))
    except (ValueError, FormulaSyntaxError) as exc:
        raise NormSyntaxError(line, str(exc)) from None


def parse_norms(text: str) -> NormSet:
    """Parse norm-file text into a NormSet, preserving line order."""
    norms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            norms.append(parse_norm(line, lineno))
    return NormSet(tuple(norms))


def load_norms(path) -> NormSet:
    """Read a UTF-8 norm file from ``path``."""
    with open(path, encoding="utf-8") as handle:
        return parse_norms(handle.read())
