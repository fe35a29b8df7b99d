"""Classical propositional semantics by exhaustive valuation enumeration.

This is the entailment kernel the rest of the toolkit is built on.  It
trades speed for obviousness: every query enumerates all valuations over
the atoms involved, guarded by a hard atom limit (default 16, about 65k
valuations in the worst case).  All functions are pure; everything here
is safe to use concurrently.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping

from .formula import And, Atom, Bottom, Formula, Implies, Not, Or, Top, atoms

__all__ = [
    "DEFAULT_ATOM_LIMIT",
    "Valuation",
    "UnboundAtomError",
    "AtomLimitError",
    "eval_formula",
    "entails",
    "counterexample_valuation",
    "is_tautology",
]

DEFAULT_ATOM_LIMIT = 16

Valuation = Mapping[str, bool]


class UnboundAtomError(LookupError):
    """An atom was evaluated against a valuation or model that does not map it."""

    def __init__(self, atom: str):
        super().__init__(f"atom {atom!r} is not mapped")
        self.atom = atom


class AtomLimitError(ValueError):
    """A query involved more atoms than the configured limit allows."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"query involves {count} atoms, exceeding the atom limit of {limit}")
        self.count = count
        self.limit = limit


def eval_formula(f: Formula, valuation: Valuation) -> bool:
    """Truth value of ``f`` under ``valuation``; unmapped atoms are an error."""
    match f:
        case Atom(name):
            try:
                return valuation[name]
            except KeyError:
                raise UnboundAtomError(name) from None
        case Top():
            return True
        case Bottom():
            return False
        case Not(g):
            return not eval_formula(g, valuation)
        case And(l, r):
            return eval_formula(l, valuation) and eval_formula(r, valuation)
        case Or(l, r):
            return eval_formula(l, valuation) or eval_formula(r, valuation)
        case Implies(l, r):
            return (not eval_formula(l, valuation)) or eval_formula(r, valuation)
    raise TypeError(f"not a formula: {f!r}")


def counterexample_valuation(
    premises: Iterable[Formula],
    conclusion: Formula,
    *,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
) -> dict[str, bool] | None:
    """First valuation satisfying all premises and falsifying the conclusion.

    Valuations are enumerated over the sorted joint atom set, each atom
    running False before True with the last atom cycling fastest, so the
    witness returned is deterministic.  Returns None when the entailment
    holds.
    """
    fs = (*premises, conclusion)
    names = sorted(frozenset().union(*(atoms(f) for f in fs)))
    if len(names) > atom_limit:
        raise AtomLimitError(len(names), atom_limit)
    for bits in itertools.product((False, True), repeat=len(names)):
        valuation = dict(zip(names, bits))
        if all(eval_formula(p, valuation) for p in fs[:-1]) and not eval_formula(conclusion, valuation):
            return valuation
    return None


def entails(
    premises: Iterable[Formula],
    conclusion: Formula,
    *,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
) -> bool:
    """Classical entailment: every valuation satisfying the premises satisfies the conclusion."""
    return counterexample_valuation(premises, conclusion, atom_limit=atom_limit) is None


def is_tautology(f: Formula, *, atom_limit: int = DEFAULT_ATOM_LIMIT) -> bool:
    """True when ``f`` holds under every valuation (entailment from no premises)."""
    return entails((), f, atom_limit=atom_limit)
