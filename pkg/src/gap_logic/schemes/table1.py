# -*- coding: utf-8 -*-
"""
:version: 1.0
:date: 17.10.2026

Klassische Übersetzung ohne Existenzannahmen::

    A  ~(exists x)(Fx & ~Gx)      E  ~(exists x)(Fx & Gx)
    I  (exists x)(Fx & Gx)        O  (exists x)(Fx & ~Gx)

Bei leerem F sind A und E beide wahr; Konträrität und Subalternation brechen.
"""

from gap_logic.schemes.base import CategoricalForm, TranslationScheme
from gap_logic.syntax import Formula


class ClassicalScheme(TranslationScheme):
    name = "table1"
    description = "klassisch, ohne Existenzannahmen"
    reading = "Kernformeln ohne Existenzannahmen; bei leerem F sind A und E beide wahr"
    expected_catalog = "classical"
    expected_square_failures = frozenset({
        "contraries", "subcontraries", "subalternation_AI", "subalternation_EO", "conversion_AI",
    })

    def translate(self, form: CategoricalForm) -> Formula:
        return self.core(form)
