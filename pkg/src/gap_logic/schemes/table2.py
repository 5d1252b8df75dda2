# -*- coding: utf-8 -*-
"""
:version: 1.1
:date: 17.10.2026

Materiale Übersetzung mit eingebauter Existenzannahme::

    A  ~(exists x)(Fx & ~Gx) & (exists x)Fx & (exists x)~Gx
    E  ~(exists x)(Fx & Gx)  & (exists x)Fx & (exists x)Gx
    I  (exists x)(Fx & Gx)   | ~(exists x)Fx | ~(exists x)Gx
    O  (exists x)(Fx & ~Gx)  | ~(exists x)Fx | ~(exists x)~Gx

O ist das klassische kontradiktorische Gegenstück zu A. Eine Lesart mit
``(exists x)(Fx & Gx)`` als erstem Disjunkt wäre mit A nicht kontradiktorisch.
"""

from gap_logic.schemes.base import CategoricalForm, TranslationScheme
from gap_logic.syntax import Formula, Not, conj, disj


class ExistentialImportScheme(TranslationScheme):
    name = "table2"
    description = "klassisch, Existenzannahmen als Konjunkte"
    reading = (
        "O(F,G) als kontradiktorisches Gegenstück zu A: (exists x)(Fx & ~Gx) | ~(exists x)Fx | ~(exists x)~Gx; "
        "die abweichende Zeile mit erstem Disjunkt (exists x)(Fx & Gx) wird nicht verwendet"
    )
    expected_catalog = "traditional"
    expected_square_failures = frozenset()

    def translate(self, form: CategoricalForm) -> Formula:
        s, p = form.subject, form.predicate
        some_s = self.exists(self.term(s))
        if form.letter == "A":
            return conj(self.core(form), some_s, self.exists(self.term(p, negated=True)))
        if form.letter == "E":
            return conj(self.core(form), some_s, self.exists(self.term(p)))
        if form.letter == "I":
            return disj(self.core(form), Not(some_s), Not(self.exists(self.term(p))))
        return disj(self.core(form), Not(some_s), Not(self.exists(self.term(p, negated=True))))
