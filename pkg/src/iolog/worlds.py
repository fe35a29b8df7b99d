"""Possible-worlds lifting of the output operation, and a countermodel finder.

Formulas are reinterpreted as predicates over a finite, non-empty world
set: an atom denotes the set of worlds where it holds and connectives
act pointwise.  A lifted formula is valid in a model when it holds at
every world.  Lifting is what makes nested entailment claims safe; the
naive alternative, encoding "a entails s" as the plain Boolean
implication a -> s, is classically valid in situations where the
entailment fails, and ``naive_unfold_valid`` reproduces that unsound
behaviour so it can be demonstrated and tested against the sound
engines.

The lifted output operation implemented here is the three-witness
encoding (with a tautology disjunct covering the no-triggered-norm
case), matching the approximation in :mod:`iolog.output`; the exact
operation lives there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal, Mapping

from .entail import DEFAULT_ATOM_LIMIT, AtomLimitError, UnboundAtomError, eval_formula
from .formula import And, Atom, Bottom, Formula, Implies, Not, Or, Top, atoms
from .norms import NormSet
from .output import Verdict, triggered_heads

__all__ = [
    "DEFAULT_SEARCH_BUDGET",
    "WorldModel",
    "LiftedQuery",
    "SearchBudgetError",
    "lifted_extension",
    "lifted_valid",
    "outpre_member_lifted",
    "out1_member_lifted",
    "find_countermodel",
    "lifted_verdict",
    "naive_unfold_valid",
    "render_world_model",
    "world_model_to_dict",
]

DEFAULT_SEARCH_BUDGET = 24

Mode = Literal["outpre", "out1"]


class SearchBudgetError(RuntimeError):
    """The countermodel search would exceed its enumeration budget."""

    def __init__(self, world_count: int, atom_count: int, budget: int):
        super().__init__(
            f"countermodel search budget exceeded: {world_count} worlds x {atom_count} atoms "
            f"> {budget} (raise the budget to search anyway)"
        )
        self.world_count = world_count
        self.atom_count = atom_count
        self.budget = budget


@dataclass(frozen=True)
class WorldModel:
    """A non-empty finite world set plus, per atom, the worlds where it holds."""

    world_count: int
    extension: Mapping[str, frozenset[int]]

    def __post_init__(self):
        if self.world_count < 1:
            raise ValueError("a world model needs at least one world")
        frozen = {name: frozenset(worlds) for name, worlds in self.extension.items()}
        for name, worlds in frozen.items():
            if not all(0 <= w < self.world_count for w in worlds):
                raise ValueError(f"extension of {name!r} mentions out-of-range worlds")
        object.__setattr__(self, "extension", frozen)

    @property
    def worlds(self) -> frozenset[int]:
        return frozenset(range(self.world_count))


@dataclass(frozen=True)
class LiftedQuery:
    """A membership question posed to the lifted encodings."""

    norms: NormSet
    input: Formula
    goal: Formula
    mode: Mode

    def __post_init__(self):
        if self.mode not in ("outpre", "out1"):
            raise ValueError(f"unknown mode {self.mode!r}; expected 'outpre' or 'out1'")


def lifted_extension(f: Formula, model: WorldModel) -> frozenset[int]:
    """The set of worlds where ``f`` holds, computed pointwise."""
    match f:
        case Atom(name):
            try:
                return model.extension[name]
            except KeyError:
                raise UnboundAtomError(name) from None
        case Top():
            return model.worlds
        case Bottom():
            return frozenset()
        case Not(g):
            return model.worlds - lifted_extension(g, model)
        case And(l, r):
            return lifted_extension(l, model) & lifted_extension(r, model)
        case Or(l, r):
            return lifted_extension(l, model) | lifted_extension(r, model)
        case Implies(l, r):
            return (model.worlds - lifted_extension(l, model)) | lifted_extension(r, model)
    raise TypeError(f"not a formula: {f!r}")


def lifted_valid(f: Formula, model: WorldModel) -> bool:
    """A lifted formula is valid when it holds at every world of the model."""
    return lifted_extension(f, model) == model.worlds


def outpre_member_lifted(
    norms: NormSet, input: Formula, goal: Formula, model: WorldModel
) -> bool:
    """Lifted pre-output membership: some norm has the goal as head and a body
    covering the input, both read extensionally.

    The encoding existentially quantifies over a witness predicate, but the
    witness must equal some norm body extensionally, so trying exactly the
    norm bodies is exhaustive.
    """
    goal_ext = lifted_extension(goal, model)
    input_ext = lifted_extension(input, model)
    return any(
        lifted_extension(n.head, model) == goal_ext
        and input_ext <= lifted_extension(n.body, model)
        for n in norms
    )


def out1_member_lifted(
    norms: NormSet, input: Formula, goal: Formula, model: WorldModel
) -> bool:
    """Lifted output membership, three-witness style: the goal is valid outright,
    or follows (validly, pointwise) from three pre-output members drawn from the
    norm heads, repetition allowed."""
    if lifted_valid(goal, model):
        return True
    candidates = [
        head
        for head in dict.fromkeys(n.head for n in norms)
        if outpre_member_lifted(norms, input, head, model)
    ]
    return any(
        lifted_valid(Implies(And(And(h, i), j), goal), model)
        for h, i, j in itertools.combinations_with_replacement(candidates, 3)
    )


def _query_atoms(query: LiftedQuery) -> list[str]:
    names = atoms(query.input) | atoms(query.goal)
    for n in query.norms:
        names |= atoms(n.body) | atoms(n.head)
    return sorted(names)


def find_countermodel(
    query: LiftedQuery,
    max_worlds: int,
    *,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> WorldModel | None:
    """First model (canonical order) falsifying the query, or None up to ``max_worlds``.

    Models are enumerated with the world count ascending from 1 and, per
    size, atom extensions running as binary counters (bit w = membership
    of world w) with atoms in lexicographic order, the last atom cycling
    fastest.  Sizes where world_count x atom_count would exceed the
    budget raise :class:`SearchBudgetError` instead of silently reporting
    absence.
    """
    if max_worlds < 1:
        raise ValueError("max_worlds must be at least 1")
    names = _query_atoms(query)
    member = outpre_member_lifted if query.mode == "outpre" else out1_member_lifted
    for world_count in range(1, max_worlds + 1):
        if world_count * len(names) > budget:
            raise SearchBudgetError(world_count, len(names), budget)
        for masks in itertools.product(range(2**world_count), repeat=len(names)):
            model = WorldModel(
                world_count,
                {
                    name: frozenset(w for w in range(world_count) if mask >> w & 1)
                    for name, mask in zip(names, masks)
                },
            )
            if not member(query.norms, query.input, query.goal, model):
                return model
    return None


def lifted_verdict(
    norms: NormSet,
    input: Formula,
    goal: Formula,
    *,
    max_worlds: int = 4,
    budget: int = DEFAULT_SEARCH_BUDGET,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
) -> Verdict:
    """Membership verdict from countermodel search over the lifted output encoding.

    Holds when no model up to ``max_worlds`` falsifies the query; a found
    countermodel is attached as the certificate.
    """
    query = LiftedQuery(norms, input, goal, "out1")
    model = find_countermodel(query, max_worlds, budget=budget)
    heads = triggered_heads(norms, input, atom_limit=atom_limit)
    return Verdict(model is None, "lifted", triggered=heads, certificate=model)


def naive_unfold_valid(
    norms: NormSet,
    input: Formula,
    goal: Formula,
    mode: Mode,
    *,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
) -> bool:
    """Classical validity of the naive Boolean unfolding of a membership claim.

    Entailment is encoded as plain implication and the witness
    quantifiers range over Booleans, so for each valuation a norm need
    only match by truth value.  This is deliberately unsound as a
    membership test: together with the law of excluded middle it
    validates claims the real operation rejects.
    """
    if mode not in ("outpre", "out1"):
        raise ValueError(f"unknown mode {mode!r}; expected 'outpre' or 'out1'")
    names = atoms(input) | atoms(goal)
    for n in norms:
        names |= atoms(n.body) | atoms(n.head)
    if len(names) > atom_limit:
        raise AtomLimitError(len(names), atom_limit)
    order = sorted(names)
    for bits in itertools.product((False, True), repeat=len(order)):
        valuation = dict(zip(order, bits))
        input_v = eval_formula(input, valuation)
        goal_v = eval_formula(goal, valuation)
        if mode == "outpre":
            ok = any(
                ((not input_v) or eval_formula(n.body, valuation))
                and goal_v == eval_formula(n.head, valuation)
                for n in norms
            )
        else:
            witnesses = {
                eval_formula(n.head, valuation)
                for n in norms
                if (not input_v) or eval_formula(n.body, valuation)
            }
            ok = goal_v or any(
                (not (h and i and j)) or goal_v
                for h, i, j in itertools.product(sorted(witnesses), repeat=3)
            )
        if not ok:
            return False
    return True


def render_world_model(model: WorldModel) -> str:
    """Countermodel text: the world names, then one extension line per atom."""
    lines = ["worlds: " + " ".join(f"w{i}" for i in range(model.world_count))]
    for name in sorted(model.extension):
        members = ", ".join(f"w{i}" for i in sorted(model.extension[name]))
        lines.append(f"{name} = {{{members}}}")
    return "\n".join(lines)


def world_model_to_dict(model: WorldModel) -> dict:
    """Structured rendering of a model, with the same content as the text form."""
    return {
        "world_count": model.world_count,
        "worlds": [f"w{i}" for i in range(model.world_count)],
        "extension": {
            name: [f"w{i}" for i in sorted(model.extension[name])]
            for name in sorted(model.extension)
        },
    }
