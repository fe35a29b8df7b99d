"""The simple-minded output operation of input/output logic.

Given a set of conditional norms and an input situation, the operation
answers which outputs are obligatory: the classical consequences of the
heads of all norms whose body follows from the input.  Conditional norms
themselves carry no truth-functional meaning; in particular an input
never counts as its own output.

The exact operation is decided from the full triggered-head set.  The
three-witness approximation, which only sees consequences of at most
three triggered heads (plus a tautology escape for the empty case), is
kept as a separate, clearly labelled operation for fidelity testing
against the world-lifted encodings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import TYPE_CHECKING, Literal, Sequence

from .entail import DEFAULT_ATOM_LIMIT, entails, is_tautology
from .formula import And, Formula
from .norms import NormSet

if TYPE_CHECKING:  # certificate types; imported lazily to avoid cycles
    from .derivation import Derivation
    from .worlds import WorldModel

__all__ = [
    "EngineTag",
    "Verdict",
    "triggered_heads",
    "source_ordered_heads",
    "out1_member",
    "out1_member_multi",
    "out1_triple_approx",
]

EngineTag = Literal["semantic", "derivation", "triple-approx", "lifted"]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a membership query: the boolean, which engine decided it,
    the triggered heads it saw, and a certificate when one exists (a
    derivation tree for positive proof-theoretic answers, a countermodel
    for negative lifted ones)."""

    holds: bool
    engine: str
    triggered: frozenset[Formula] = frozenset()
    certificate: "Derivation | WorldModel | None" = None


def triggered_heads(
    norms: NormSet,
    input: Formula,
    *,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
) -> frozenset[Formula]:
    """Heads of the norms whose body is entailed by the input."""
    return frozenset(
        n.head for n in norms if entails((input,), n.body, atom_limit=atom_limit)
    )


def source_ordered_heads(norms: NormSet, heads: frozenset[Formula]) -> tuple[Formula, ...]:
    """The given heads, deduplicated, in first-occurrence norm order.

    Reports and deterministic enumerations use this order.
    """
    ordered = dict.fromkeys(n.head for n in norms if n.head in heads)
    return tuple(ordered)


def out1_member(
    norms: NormSet,
    input: Formula,
    goal: Formula,
    *,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
) -> Verdict:
    """Is ``goal`` among the simple-minded outputs for ``input`` under ``norms``?

    Decided as entailment of the goal from the triggered heads.  With no
    triggered head this degenerates to a tautology check: tautologies are
    output in every situation, nothing else is.
    """
    heads = triggered_heads(norms, input, atom_limit=atom_limit)
    holds = entails(heads, goal, atom_limit=atom_limit)
    return Verdict(holds, "semantic", triggered=heads)


def out1_member_multi(
    norms: NormSet,
    inputs: Sequence[Formula],
    goal: Formula,
    *,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
) -> Verdict:
    """Membership for a non-empty collection of input formulas.

    The inputs are folded into one conjunction in source order; the empty
    collection is rejected rather than given a default reading.
    """
    inputs = tuple(inputs)
    if not inputs:
        raise ValueError("empty input collection: supply at least one input formula")
    combined = reduce(And, inputs)
    return out1_member(norms, combined, goal, atom_limit=atom_limit)


def out1_triple_approx(
    norms: NormSet,
    input: Formula,
    goal: Formula,
    *,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
) -> Verdict:
    """Three-witness approximation of the output operation.

    Holds when the goal is a tautology or follows from some choice of
    three triggered heads (repetition allowed, so one or two heads also
    qualify).  Sound but incomplete: consequences needing four or more
    distinct heads are missed.
    """
    heads = triggered_heads(norms, input, atom_limit=atom_limit)
    holds = is_tautology(goal, atom_limit=atom_limit)
    if not holds:
        witnesses = source_ordered_heads(norms, heads)
        holds = any(
            entails(triple, goal, atom_limit=atom_limit)
            for triple in itertools.combinations_with_replacement(witnesses, 3)
        )
    return Verdict(holds, "triple-approx", triggered=heads)
