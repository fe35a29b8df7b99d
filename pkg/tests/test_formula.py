"""Formula syntax: parser, printer, and their round trip."""

import pytest
from hypothesis import given

from conftest import formulas
from iolog import (
    BOTTOM,
    TOP,
    And,
    Atom,
    FormulaSyntaxError,
    Implies,
    Not,
    Or,
    atoms,
    parse_formula,
    print_formula,
)

A, B, C = Atom("a"), Atom("b"), Atom("c")


class TestParsing:
    def test_implication_is_right_associative(self):
        assert parse_formula("a -> b -> c") == Implies(A, Implies(B, C))

    def test_disjunction(self):
        assert parse_formula("a | b") == Or(A, B)

    def test_precedence_not_and_or(self):
        assert parse_formula("!a & b | c") == Or(And(Not(A), B), C)

    def test_and_or_left_associative(self):
        assert parse_formula("a & b & c") == And(And(A, B), C)
        assert parse_formula("a | b | c") == Or(Or(A, B), C)

    def test_parentheses_override_precedence(self):
        assert parse_formula("a & (b | c)") == And(A, Or(B, C))
        assert parse_formula("(a -> b) -> c") == Implies(Implies(A, B), C)

    def test_constants(self):
        assert parse_formula("true") is TOP
        assert parse_formula("false") is BOTTOM
        assert parse_formula("!true") == Not(TOP)

    def test_whitespace_insignificant(self):
        assert parse_formula(" a->\n\tb ") == Implies(A, B)

    def test_comment_runs_to_end_of_line(self):
        assert parse_formula("a # ignored | b") == A
        assert parse_formula("a & # comment\n b") == And(A, B)

    def test_atom_names_allow_digits_and_underscore(self):
        assert parse_formula("h1_x") == Atom("h1_x")
        # not the reserved word: a longer identifier is an ordinary atom
        assert parse_formula("truely") == Atom("truely")


class TestParseErrors:
    def test_reports_one_based_position_and_expectation(self):
        with pytest.raises(FormulaSyntaxError) as err:
            parse_formula("a||b")
        assert err.value.position == 3
        assert "expected a formula" in str(err.value)

    def test_empty_input(self):
        with pytest.raises(FormulaSyntaxError) as err:
            parse_formula("")
        assert err.value.position == 1
        assert "end of input" in str(err.value)

    def test_unclosed_parenthesis(self):
        with pytest.raises(FormulaSyntaxError) as err:
            parse_formula("(a | b")
        assert "expected ')'" in str(err.value)

    def test_trailing_input(self):
        with pytest.raises(FormulaSyntaxError) as err:
            parse_formula("a b")
        assert err.value.position == 3

    def test_lone_dash(self):
        with pytest.raises(FormulaSyntaxError) as err:
            parse_formula("a - b")
        assert "->" in str(err.value)

    def test_unexpected_character(self):
        with pytest.raises(FormulaSyntaxError) as err:
            parse_formula("a & B")
        assert err.value.position == 5


class TestAtomInvariants:
    def test_reserved_words_are_not_atom_names(self):
        with pytest.raises(ValueError):
            Atom("true")
        with pytest.raises(ValueError):
            Atom("false")

    def test_lexical_class_enforced(self):
        for bad in ("A", "1a", "", "a-b", "_a"):
            with pytest.raises(ValueError):
                Atom(bad)


class TestPrinting:
    def test_plain_disjunction(self):
        assert print_formula(Or(A, B)) == "a | b"

    def test_implication_needs_no_parens_around_disjunction(self):
        assert print_formula(Implies(Or(A, B), A)) == "a | b -> a"

    def test_forced_parenthesization(self):
        assert print_formula(And(A, Or(B, C))) == "a & (b | c)"

    def test_associativity_parens(self):
        assert print_formula(Or(A, Or(B, C))) == "a | (b | c)"
        assert print_formula(Implies(Implies(A, B), C)) == "(a -> b) -> c"
        assert print_formula(Implies(A, Implies(B, C))) == "a -> b -> c"

    def test_negation(self):
        assert print_formula(Not(Not(A))) == "!!a"
        assert print_formula(Not(And(A, B))) == "!(a & b)"


class TestAtoms:
    def test_constants_have_no_atoms(self):
        assert atoms(TOP) == frozenset()

    def test_binary(self):
        assert atoms(Or(A, B)) == {"a", "b"}

    def test_duplicates_collapse(self):
        assert atoms(And(A, Not(A))) == {"a"}


class TestRoundTrip:
    @given(formulas())
    def test_parse_inverts_print(self, f):
        assert parse_formula(print_formula(f)) == f

    @given(formulas(), formulas())
    def test_printing_identical_iff_structurally_equal(self, f, g):
        assert (print_formula(f) == print_formula(g)) == (f == g)
