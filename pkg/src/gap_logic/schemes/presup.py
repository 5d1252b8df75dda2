# -*- coding: utf-8 -*-
"""
:version: 1.2
:date: 17.10.2026

Präsuppositionale Lesart: jeder Satz setzt voraus, dass seine beiden Terme
nichtleer sind; andernfalls ist er weder wahr noch falsch (N).

============  =============
Satzform      Terme
============  =============
A(F, G)       F, ~G
E(F, G)       F, G
I(F, G)       F, G
O(F, G)       F, ~G
============  =============

Sind beide Terme nichtleer, gilt der klassische Kernwert. A und O bzw. E und I
teilen ihre Terme und sind daher in jedem Modell kontradiktorisch (oder beide N).
"""

from __future__ import annotations

from gap_logic.fol3 import Interpretation, eval_classical_fol, sat_set, term_label
from gap_logic.prop3 import TruthValue3
from gap_logic.schemes.base import CategoricalForm, TranslationScheme
from gap_logic.syntax import Formula


class PresuppositionScheme(TranslationScheme):
    name = "presup"
    description = "Präsuppositionen: beide Terme nichtleer, sonst N"
    reading = "Terme A:(F, ~G) E:(F, G) I:(F, G) O:(F, ~G); ist einer leer, ist der Satz N, sonst gilt der Kernwert"
    expected_catalog = "traditional"
    expected_square_failures = frozenset()

    def translate(self, form: CategoricalForm) -> Formula:
        return self.core(form)

    def presuppositions(self, form: CategoricalForm) -> tuple[Formula, Formula]:
        negated = form.letter in ("A", "O")
        return self.term(form.subject), self.term(form.predicate, negated=negated)

    def empty_terms(self, form: CategoricalForm, interpretation: Interpretation) -> tuple[str, ...]:
        """Namen der leeren Terme, z. B. ``("F",)`` oder ``("~G",)``."""
        return tuple(
            term_label(term, self.variable)
            for term in self.presuppositions(form)
            if not sat_set(term, self.variable, interpretation)
        )

    def evaluate(self, form: CategoricalForm, interpretation: Interpretation) -> TruthValue3:
        for term in self.presuppositions(form):
            if not sat_set(term, self.variable, interpretation):
                return TruthValue3.N
        return eval_classical_fol(self.formula(form), interpretation)
