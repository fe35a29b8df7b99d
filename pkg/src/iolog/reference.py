"""Built-in regression matrix over the canonical two-norm example.

With norms (a, e) and (b, e), the direct input ``a`` makes ``e``
obligatory while the disjunctive input ``a | b`` must not: it entails
neither body, so nothing is triggered.  Every sound engine agrees on
both queries, at the pre-output and the output level; the naive Boolean
unfolding is the lone dissenter, wrongly validating the disjunctive
cases.  The matrix freezes all of those expectations so a regression in
any engine shows up as a mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import derivation, output, worlds
from .entail import DEFAULT_ATOM_LIMIT
from .formula import Formula, parse_formula
from .norms import Norm, NormSet, parse_norms

__all__ = ["REFERENCE_NORMS", "MatrixRow", "run_reference_matrix"]

REFERENCE_NORMS = parse_norms("(a, e)\n(b, e)")


@dataclass(frozen=True)
class MatrixRow:
    example: str
    engine: str
    expected: bool
    actual: bool

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def _derivation_holds(norms: NormSet, input: Formula, goal: Formula, atom_limit: int) -> bool:
    cert = derivation.construct_derivation(norms, input, goal, atom_limit=atom_limit)
    return cert is not None and derivation.check_derivation(
        norms, cert, Norm(input, goal), atom_limit=atom_limit
    )


def run_reference_matrix(
    *, max_worlds: int = 4, atom_limit: int = DEFAULT_ATOM_LIMIT
) -> list[MatrixRow]:
    """Run every engine on the canonical queries and compare with expectations."""
    norms = REFERENCE_NORMS
    direct = parse_formula("a")
    disjunctive = parse_formula("a | b")
    goal = parse_formula("e")

    rows: list[MatrixRow] = []

    def record(example: str, engine: str, expected: bool, actual: bool) -> None:
        rows.append(MatrixRow(example, engine, expected, actual))

    for input, expected_sound in ((direct, True), (disjunctive, False)):
        label = f"out1: e from {input}"
        record(
            label,
            "semantic",
            expected_sound,
            output.out1_member(norms, input, goal, atom_limit=atom_limit).holds,
        )
        record(label, "derivation", expected_sound, _derivation_holds(norms, input, goal, atom_limit))
        record(
            label,
            "triple",
            expected_sound,
            output.out1_triple_approx(norms, input, goal, atom_limit=atom_limit).holds,
        )
        query = worlds.LiftedQuery(norms, input, goal, "out1")
        record(
            label,
            "lifted",
            expected_sound,
            worlds.find_countermodel(query, max_worlds) is None,
        )
        # The naive unfolding is expected to say "valid" even on the
        # disjunctive input; that recorded unsoundness is part of the matrix.
        record(
            label,
            "naive",
            True,
            worlds.naive_unfold_valid(norms, input, goal, "out1", atom_limit=atom_limit),
        )

    for input, expected_sound in ((direct, True), (disjunctive, False)):
        label = f"outpre: e from {input}"
        record(
            label,
            "semantic",
            expected_sound,
            goal in output.triggered_heads(norms, input, atom_limit=atom_limit),
        )
        query = worlds.LiftedQuery(norms, input, goal, "outpre")
        record(
            label,
            "lifted",
            expected_sound,
            worlds.find_countermodel(query, max_worlds) is None,
        )
        record(
            label,
            "naive",
            True,
            worlds.naive_unfold_valid(norms, input, goal, "outpre", atom_limit=atom_limit),
        )

    return rows
