# -*- coding: utf-8 -*-
import pytest

from conftest import random_prop
from gap_logic.errors import AtomCapError, NotPropositionalError, ValuationError
from gap_logic.prop3 import (
    TruthValue3,
    carries_vacuity,
    classical_equivalent,
    classical_eval,
    classical_tautology,
    eval3,
    is_trt_tautology,
    is_unsat,
    kleene_all,
    kleene_any,
    table_to_frame,
    truth_table3,
    vacuous_negation,
    valuations,
)
from gap_logic.syntax import Implies, atoms, parse_formula

T, F, N = TruthValue3.T, TruthValue3.F, TruthValue3.N

CONTRADICTORY_PART = ["(P & ~P) -> Q", "~(P & ~P) | Q", "~((P & ~P) & ~Q)"]
POSITIVE = ["P | ~P", "P -> P", "((P -> Q) & P) -> Q"]


class TestTruthValue3:

    def test_flip(self):
        assert (~T, ~F, ~N) == (F, T, N)

    def test_kleene(self):
        assert kleene_all([T, N]) is N
        assert kleene_all([N, F]) is F
        assert kleene_any([F, N]) is N
        assert kleene_any([N, T]) is T
        assert (T & T, F | F) == (T, F)


class TestContradictoryParts:

    @pytest.mark.parametrize("text", CONTRADICTORY_PART)
    def test_classical_but_not_truth_relevant(self, text):
        f = parse_formula(text)
        assert classical_tautology(f)
        rows = truth_table3(f)
        assert len(rows) == 4
        assert all(row.value is N for row in rows)
        assert not is_trt_tautology(f)

    @pytest.mark.parametrize("text", POSITIVE)
    def test_positive_controls(self, text):
        f = parse_formula(text)
        assert is_trt_tautology(f)
        assert all(row.value is T for row in truth_table3(f))


class TestEval3:

    def test_vacuous_negation(self):
        assert eval3(parse_formula("~((P & ~P) & Q)"), {"P": True, "Q": False}) is N
        assert eval3(parse_formula("~(P & ~P)"), {"P": True}) is T
        assert eval3(parse_formula("~(P & Q)"), {"P": True, "Q": True}) is F

    @pytest.mark.parametrize("r, expected", [(True, T), (False, N)])
    def test_vacuous_disjunct_beside_true_disjunct(self, r, expected):
        f = parse_formula("R | ((P & ~P) -> Q)")
        for p in (False, True):
            for q in (False, True):
                assert eval3(f, {"R": r, "P": p, "Q": q}) is expected

    def test_nested_vacuity_is_not_a_contradiction(self):
        inner = parse_formula("(P & ~P) & ~Q")
        assert is_unsat(inner)
        assert carries_vacuity(inner)
        assert not carries_vacuity(parse_formula("P & ~P"))
        assert vacuous_negation(inner)
        assert not vacuous_negation(parse_formula("~R & ((P & ~P) & ~Q)"))

    def test_gap_inputs(self):
        assert eval3(parse_formula("P & Q"), {"P": N, "Q": False}) is F
        assert eval3(parse_formula("P & Q"), {"P": N, "Q": True}) is N
        assert eval3(parse_formula("P | Q"), {"P": N, "Q": True}) is T
        assert eval3(parse_formula("P <-> Q"), {"P": N, "Q": T}) is N

    def test_missing_atom(self):
        with pytest.raises(ValuationError):
            eval3(parse_formula("P & Q"), {"P": True})

    def test_rejects_first_order(self):
        with pytest.raises(NotPropositionalError):
            eval3(parse_formula("exists x. F(x)"), {})

    def test_truth_relevant_implies_classical(self, rng):
        found = 0
        for _ in range(2000):
            g = random_prop(rng, 3)
            f = Implies(g, g) if rng.random() < 0.5 else g
            if is_trt_tautology(f):
                found += 1
                assert classical_tautology(f)
        assert found > 0

    def test_gap_or_agree(self, rng):
        for _ in range(10_000):
            f = random_prop(rng, 4)
            v = {name: rng.random() < 0.5 for name in atoms(f)}
            value = eval3(f, v)
            assert value is N or value is classical_eval(f, v)


class TestTables:

    def test_row_order(self):
        rows = truth_table3(parse_formula("P & Q"))
        assert [row.valuation for row in rows] == list(valuations(["P", "Q"]))
        assert [row.value for row in rows] == [F, F, F, T]

    def test_frame(self):
        frame = table_to_frame(truth_table3(parse_formula("P & Q")))
        assert list(frame.columns) == ["P", "Q", "value"]
        assert frame["value"].tolist() == ["F", "F", "F", "T"]

    def test_atom_cap(self, config_override):
        config_override("limits.atom_cap", 2)
        with pytest.raises(AtomCapError):
            truth_table3(parse_formula("P & Q & R"))


class TestClassical:

    def test_unsat(self):
        assert is_unsat(parse_formula("P & ~P"))
        assert not is_unsat(parse_formula("P & ~Q"))

    def test_equivalence(self):
        assert classical_equivalent(parse_formula("P -> Q"), parse_formula("~P | Q"))
        assert not classical_equivalent(parse_formula("P -> Q"), parse_formula("Q -> P"))
