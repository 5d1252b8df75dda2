# -*- coding: utf-8 -*-
"""
:version: 1.1
:date: 17.10.2026

TranslationScheme
-----------------
Basisklasse für die Übersetzungen kategorischer Sätze (A/E/I/O) in Formeln.

Subklassen setzen mindestens ``name`` und ``translate()``; ``evaluate()`` wertet
standardmäßig die Übersetzung klassisch aus. Die Registry in ``gap_logic.schemes``
findet alle Subklassen automatisch.

Typischer Ablauf:
    ```python
    scheme = get_scheme("table2")
    form = CategoricalForm("A", "F", "G")
    scheme.evaluate(form, Interpretation.build(["a"], {"F": [], "G": []}))
    ```
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

from gap_logic.fol3 import Interpretation, eval_classical_fol
from gap_logic.prop3 import TruthValue3
from gap_logic.syntax import And, Exists, Formula, Not, Pred, Var, render

LETTERS = ("A", "E", "I", "O")

READINGS = {
    "A": "Alle {s} sind {p}",
    "E": "Kein {s} ist {p}",
    "I": "Einige {s} sind {p}",
    "O": "Einige {s} sind nicht {p}",
}


@dataclass(frozen=True)
class CategoricalForm:
    """Kategorischer Satz ``letter(subject, predicate)``, z. B. ``A(F, G)``."""

    letter: str
    subject: str
    predicate: str

    def __post_init__(self) -> None:
        if self.letter not in LETTERS:
            raise ValueError(f"Unbekannte Satzform {self.letter!r} (A|E|I|O)")
        if self.subject == self.predicate:
            raise ValueError(f"Subjekt und Prädikat müssen verschieden sein: {self.subject!r}")

    def converse(self) -> "CategoricalForm":
        return CategoricalForm(self.letter, self.predicate, self.subject)

    def reading(self) -> str:
        return READINGS[self.letter].format(s=self.subject, p=self.predicate)

    def __str__(self) -> str:
        return f"{self.letter}({self.subject},{self.predicate})"


class TranslationScheme:
    """Abstrakte Übersetzung kategorischer Sätze in die Prädikatenlogik."""

    name: ClassVar[str] = ""
    description: ClassVar[str] = ""
    # Lesart der Übersetzung, wie sie in Reports ausgewiesen wird
    reading: ClassVar[str] = ""
    variable: ClassVar[str] = "x"
    # Erwartete Ergebnisse der Audits (Namen der Mood-Kataloge bzw. verletzte Gesetze)
    expected_catalog: ClassVar[str] = "traditional"
    expected_square_failures: ClassVar[frozenset[str]] = frozenset()

    def __init__(self) -> None:
        self._cache: dict[CategoricalForm, Formula] = {}

    # ------------------------------------------------------------------
    # Bausteine
    # ------------------------------------------------------------------
    def term(self, name: str, negated: bool = False) -> Formula:
        atom = Pred(name, (Var(self.variable),))
        return Not(atom) if negated else atom

    def exists(self, body: Formula) -> Formula:
        return Exists(self.variable, body)

    def core(self, form: CategoricalForm) -> Formula:
        """Klassische Kernformel (Übersetzung ohne Existenzannahmen)."""
        s, p = form.subject, form.predicate
        if form.letter == "A":
            return Not(self.exists(And(self.term(s), self.term(p, negated=True))))
        if form.letter == "E":
            return Not(self.exists(And(self.term(s), self.term(p))))
        if form.letter == "I":
            return self.exists(And(self.term(s), self.term(p)))
        return self.exists(And(self.term(s), self.term(p, negated=True)))

    # ------------------------------------------------------------------
    # Schnittstelle
    # ------------------------------------------------------------------
    def translate(self, form: CategoricalForm) -> Formula:
        raise NotImplementedError("Subklassen müssen translate() implementieren.")

    def formula(self, form: CategoricalForm) -> Formula:
        """Gecachte Übersetzung."""
        if form not in self._cache:
            self._cache[form] = self.translate(form)
        return self._cache[form]

    def evaluate(self, form: CategoricalForm, interpretation: Interpretation) -> TruthValue3:
        return eval_classical_fol(self.formula(form), interpretation)

    def render(self, form: CategoricalForm) -> str:
        return render(self.formula(form))

    def translations(self, subject: str = "F", predicate: str = "G") -> dict[str, dict[str, str]]:
        """Satz und Formel je Satzform, z. B. ``{"A": {"sentence": "Alle F sind G", "formula": ...}}``."""
        forms = (CategoricalForm(letter, subject, predicate) for letter in LETTERS)
        return {f.letter: {"sentence": f.reading(), "formula": self.render(f)} for f in forms}

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name!r}>"
