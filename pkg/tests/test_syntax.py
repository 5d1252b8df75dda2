# -*- coding: utf-8 -*-
import itertools

import pytest

from conftest import random_fol, random_prop
from gap_logic.errors import ArityConflictError, FormulaSyntaxError, SubstitutionError
from gap_logic.prop3 import TruthValue3, classical_eval
from gap_logic.syntax import (
    And,
    Atom,
    Exists,
    ForAll,
    Iff,
    Implies,
    Not,
    Numeral,
    Or,
    Pred,
    Var,
    atoms,
    canonicalize,
    conj,
    disj,
    free_variables,
    is_canonical,
    parse_formula,
    render,
    substitute,
    tokenize,
)

P, Q, R = Atom("P"), Atom("Q"), Atom("R")


def F(v="x"):
    return Pred("F", (Var(v),))


def G(v="x"):
    return Pred("G", (Var(v),))


def reference_eval(f, v):
    """Unabhängige zweiwertige Auswertung über alle Junktoren."""
    if isinstance(f, Atom):
        return v[f.name]
    if isinstance(f, Not):
        return not reference_eval(f.sub, v)
    a, b = reference_eval(f.left, v), reference_eval(f.right, v)
    if isinstance(f, And):
        return a and b
    if isinstance(f, Or):
        return a or b
    if isinstance(f, Implies):
        return (not a) or b
    return a == b


class TestParser:

    def test_precedence(self):
        assert parse_formula("P & Q | R") == Or(And(P, Q), R)
        assert parse_formula("~P & Q") == And(Not(P), Q)
        assert parse_formula("P | Q -> R") == Implies(Or(P, Q), R)
        assert parse_formula("P -> Q <-> R") == Iff(Implies(P, Q), R)

    def test_associativity(self):
        assert parse_formula("P -> Q -> R") == Implies(P, Implies(Q, R))
        assert parse_formula("P & Q & R") == And(And(P, Q), R)
        assert parse_formula("P <-> Q <-> R") == Iff(Iff(P, Q), R)

    def test_quantifier_body_extends_right(self):
        assert parse_formula("exists x. F(x) & G(x)") == Exists("x", And(F(), G()))
        assert parse_formula("(exists x. F(x)) & P") == And(Exists("x", F()), P)
        assert parse_formula("forall x. exists y. R(x, y)") == ForAll("x", Exists("y", Pred("R", (Var("x"), Var("y")))))

    def test_terms_and_numerals(self):
        assert parse_formula("Prf(x, 17)") == Pred("Prf", (Var("x"), Numeral(17)))
        big = 2 ** 200
        assert parse_formula(f"Diag({big}, y)").args[0] == Numeral(big)

    def test_tokenize_keywords(self):
        kinds = [t.kind for t in tokenize("exists x. existsx")]
        assert kinds == ["KW", "IDENT", "SYM", "IDENT", "EOF"]

    @pytest.mark.parametrize("text, position", [
        ("P &", 3),
        ("P $ Q", 2),
        ("(P & Q", 6),
        ("exists . P", 7),
        ("F(x,)", 4),
    ])
    def test_syntax_errors_carry_position(self, text, position):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula(text)
        assert info.value.position == position
        assert f"Position {position}" in str(info.value)

    def test_arity_conflict(self):
        with pytest.raises(ArityConflictError):
            parse_formula("F(x) & exists x. F(x, x)")
        with pytest.raises(ArityConflictError):
            parse_formula("P & P(x)")

    def test_numeral_must_be_natural(self):
        with pytest.raises(ValueError):
            Numeral(-1)
        with pytest.raises(ValueError):
            Numeral(True)


class TestRender:

    @pytest.mark.parametrize("text", [
        "forall x. (F(x) -> G(x))",
        "~(exists x. (F(x) & ~G(x)))",
        "((exists x. F(x)) & P)",
        "~~P",
        "((P -> Q) -> R)",
        "Diag(3, y)",
    ])
    def test_fixed_texts(self, text):
        assert render(parse_formula(text)) == text

    def test_fully_parenthesized(self):
        f = And(Not(P), Not(Not(Q)))
        assert render(f, fully_parenthesized=True) == "((~P) & (~(~Q)))"
        assert parse_formula(render(f, fully_parenthesized=True)) == f

    def test_round_trip_random(self, rng):
        for _ in range(2000):
            f = random_fol(rng, 4)
            assert parse_formula(render(f)) == f
            assert parse_formula(render(f, fully_parenthesized=True)) == f


class TestCanonicalize:

    def test_universal_forms_coincide(self):
        forms = [
            "forall x. (F(x) -> G(x))",
            "forall x. (~F(x) | G(x))",
            "~exists x. (F(x) & ~G(x))",
        ]
        canon = {canonicalize(parse_formula(t)) for t in forms}
        assert canon == {Not(Exists("x", And(F(), Not(G()))))}

    def test_double_negation_removed(self):
        assert canonicalize(parse_formula("~~P")) == P
        assert canonicalize(parse_formula("~(P -> Q)")) == And(P, Not(Q))

    def test_idempotent_and_canonical(self, rng):
        for _ in range(2000):
            f = random_fol(rng, 4)
            g = canonicalize(f)
            assert is_canonical(g)
            assert canonicalize(g) == g

    def test_preserves_classical_truth_exhaustively(self, rng):
        for _ in range(500):
            f = random_prop(rng, 4)
            names = atoms(f)
            g = canonicalize(f)
            for bits in itertools.product((False, True), repeat=len(names)):
                v = dict(zip(names, bits))
                expected = reference_eval(f, v)
                assert reference_eval(g, v) == expected
                assert classical_eval(f, v) is TruthValue3.of(expected)

    def test_conj_disj_left_associative(self):
        assert conj(P, Q, R) == And(And(P, Q), R)
        assert disj(P, Q, R) == Or(Or(P, Q), R)


class TestTraversal:

    def test_atoms_sorted_unique(self):
        assert atoms(parse_formula("Q & P & Q")) == ["P", "Q"]

    def test_free_variables(self):
        assert free_variables(parse_formula("exists x. R(x, y)")) == frozenset({"y"})
        assert free_variables(parse_formula("forall x. F(x)")) == frozenset()

    def test_substitute_only_free_occurrences(self):
        f = parse_formula("F(y) & exists y. G(y)")
        assert substitute(f, "y", Numeral(3)) == parse_formula("F(3) & exists y. G(y)")

    def test_substitute_rejects_variables(self):
        with pytest.raises(SubstitutionError):
            substitute(F("y"), "y", Var("x"))
