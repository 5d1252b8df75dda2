# -*- coding: utf-8 -*-
"""
:version: 1.2
:date: 17.10.2026

syllogistics
------------
Kategorische Sätze, logisches Quadrat und die 256 Syllogismus-Modi.

Die Übersetzungsschemata (``table1``, ``table2``, ``presup``) liegen im Paket
``gap_logic.schemes``. Audits laufen über ``fol3.check_validity`` bzw. über alle
Modelle bis ``max_domain`` und vergleichen mit den eingebetteten Katalogen.

Beispiel:
    >>> audit_moods("table2").summary()
    '24/256 valid; matches traditional catalog'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

import pandas as pd

from gap_logic.config import ConfigManager
from gap_logic.fol3 import Interpretation, check_validity, iter_models
from gap_logic.logger import MainLogger
from gap_logic.prop3 import TruthValue3
from gap_logic.schemes import LETTERS, CategoricalForm, TranslationScheme, get_scheme
from gap_logic.syntax import Formula

_logger = MainLogger.get_logger("syllogistics")

T, F = TruthValue3.T, TruthValue3.F


# ----------------------------------------------------------------------
# Übersetzen und Auswerten
# ----------------------------------------------------------------------
def translate(form: CategoricalForm, scheme: str | TranslationScheme = "table1") -> Formula:
    return get_scheme(scheme).formula(form)


def eval_categorical(form: CategoricalForm, interpretation: Interpretation,
                     scheme: str | TranslationScheme = "presup") -> TruthValue3:
    """Wert eines kategorischen Satzes; nur ``presup`` liefert N."""
    return get_scheme(scheme).evaluate(form, interpretation)


# ----------------------------------------------------------------------
# Modi
# ----------------------------------------------------------------------
# (Obersatz, Untersatz) je Figur als (Subjekt, Prädikat)
FIGURES: dict[int, tuple[tuple[str, str], tuple[str, str]]] = {
    1: (("M", "P"), ("S", "M")),
    2: (("P", "M"), ("S", "M")),
    3: (("M", "P"), ("M", "S")),
    4: (("P", "M"), ("M", "S")),
}

MOOD_SIGNATURE = {"M": 1, "P": 1, "S": 1}


@dataclass(frozen=True, order=True)
class Mood:
    figure: int
    letters: tuple[str, str, str]

    def __post_init__(self) -> None:
        if self.figure not in FIGURES:
            raise ValueError(f"Figur muss 1..4 sein, nicht {self.figure}")
        if len(self.letters) != 3 or any(letter not in LETTERS for letter in self.letters):
            raise ValueError(f"Drei Satzformen aus A/E/I/O erwartet: {self.letters!r}")

    @classmethod
    def parse(cls, code: str) -> "Mood":
        """``"AAA-1"`` -> Mood(1, ("A", "A", "A"))."""
        letters, _, figure = code.partition("-")
        return cls(int(figure), tuple(letters.upper()))

    @property
    def name(self) -> str:
        return f"{''.join(self.letters)}-{self.figure}"

    @property
    def premises(self) -> tuple[CategoricalForm, CategoricalForm]:
        major, minor = FIGURES[self.figure]
        return CategoricalForm(self.letters[0], *major), CategoricalForm(self.letters[1], *minor)

    @property
    def conclusion(self) -> CategoricalForm:
        return CategoricalForm(self.letters[2], "S", "P")

    def __str__(self) -> str:
        return self.name


def all_moods() -> list[Mood]:
    """Alle 256 Modi: Figur 1..4, je Figur die Buchstaben in A<E<I<O-Ordnung."""
    return [
        Mood(figure, letters)
        for figure in FIGURES
        for letters in itertools.product(LETTERS, repeat=3)
    ]


TRADITIONAL_MOODS: dict[str, str] = {
    "Barbara": "AAA-1", "Celarent": "EAE-1", "Darii": "AII-1", "Ferio": "EIO-1",
    "Barbari": "AAI-1", "Celaront": "EAO-1",
    "Cesare": "EAE-2", "Camestres": "AEE-2", "Festino": "EIO-2", "Baroco": "AOO-2",
    "Cesaro": "EAO-2", "Camestros": "AEO-2",
    "Darapti": "AAI-3", "Disamis": "IAI-3", "Datisi": "AII-3", "Felapton": "EAO-3",
    "Bocardo": "OAO-3", "Ferison": "EIO-3",
    "Bramantip": "AAI-4", "Camenes": "AEE-4", "Dimaris": "IAI-4", "Fesapo": "EAO-4",
    "Fresison": "EIO-4", "Camenos": "AEO-4",
}

# gültig nur mit Existenzannahme
EXISTENTIAL_IMPORT = frozenset({
    "Barbari", "Celaront", "Cesaro", "Camestros", "Darapti", "Felapton", "Bramantip", "Fesapo", "Camenos",
})

MOOD_NAMES: dict[str, str] = {code: name for name, code in TRADITIONAL_MOODS.items()}

CATALOGS: dict[str, frozenset[str]] = {
    "traditional": frozenset(TRADITIONAL_MOODS.values()),
    "classical": frozenset(code for name, code in TRADITIONAL_MOODS.items() if name not in EXISTENTIAL_IMPORT),
}


@dataclass(frozen=True)
class MoodResult:
    mood: Mood
    valid: bool
    countermodel: Interpretation | None = None

    @property
    def traditional_name(self) -> str:
        return MOOD_NAMES.get(self.mood.name, "")


@dataclass
class MoodAudit:
    scheme: str
    max_domain: int
    results: list[MoodResult] = field(default_factory=list)

    @property
    def valid(self) -> list[Mood]:
        return [r.mood for r in self.results if r.valid]

    @property
    def expected_catalog(self) -> str:
        return get_scheme(self.scheme).expected_catalog

    def diff(self, catalog: str) -> dict[str, list[str]]:
        """Abweichungen zum Katalog: ``missing`` (erwartet, nicht gültig) und ``unexpected``."""
        valid = {m.name for m in self.valid}
        expected = CATALOGS[catalog]
        return {"missing": sorted(expected - valid), "unexpected": sorted(valid - expected)}

    @property
    def matches(self) -> bool:
        d = self.diff(self.expected_catalog)
        return not d["missing"] and not d["unexpected"]

    def summary(self) -> str:
        head = f"{len(self.valid)}/{len(self.results)} valid"
        if self.matches:
            return f"{head}; matches {self.expected_catalog} catalog"
        d = self.diff(self.expected_catalog)
        return (f"{head}; differs from {self.expected_catalog} catalog "
                f"(missing: {', '.join(d['missing']) or '-'}; unexpected: {', '.join(d['unexpected']) or '-'})")

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame.from_records([
            {
                "mood": r.mood.name,
                "name": r.traditional_name,
                "valid": r.valid,
                "countermodel": r.countermodel.describe() if r.countermodel else "",
            }
            for r in self.results
        ])

    def to_dict(self) -> dict[str, Any]:
        return {
            "scheme": self.scheme,
            "max_domain": self.max_domain,
            "valid": [m.name for m in self.valid],
            "count": len(self.valid),
            "total": len(self.results),
            "reading": get_scheme(self.scheme).reading,
            "translations": get_scheme(self.scheme).translations(),
            "expected_catalog": self.expected_catalog,
            "matches": self.matches,
            "diff": {catalog: self.diff(catalog) for catalog in sorted(CATALOGS)},
            "countermodels": {
                r.mood.name: r.countermodel.to_json() for r in self.results if r.countermodel is not None
            },
        }


def check_mood(mood: Mood, scheme: str | TranslationScheme = "presup", max_domain: int | None = None) -> MoodResult:
    evaluator = get_scheme(scheme).evaluate
    verdict = check_validity(list(mood.premises), mood.conclusion, signature=MOOD_SIGNATURE,
                             max_domain=_max_domain(max_domain), semantics=evaluator)
    return MoodResult(mood, verdict.value is T, verdict.witness)


def audit_moods(scheme: str | TranslationScheme = "presup", max_domain: int | None = None) -> MoodAudit:
    """Prüft alle 256 Modi; Gültigkeit heißt Wahrheitserhalt (Prämissen T ⇒ Konklusion T)."""
    scheme_obj = get_scheme(scheme)
    audit = MoodAudit(scheme_obj.name, _max_domain(max_domain))
    for mood in all_moods():
        audit.results.append(check_mood(mood, scheme_obj, audit.max_domain))
    _logger.info(f"🧮 Modi ({scheme_obj.name}, max_domain={audit.max_domain}): {audit.summary()}")
    return audit


# ----------------------------------------------------------------------
# Logisches Quadrat und Konversion
# ----------------------------------------------------------------------
Values = dict[str, TruthValue3]
# Schlüssel: A, E, I, O für (F, G) und "E'", "I'" für die Konversen (G, F)
_SQUARE_FORMS = {
    "A": CategoricalForm("A", "F", "G"),
    "E": CategoricalForm("E", "F", "G"),
    "I": CategoricalForm("I", "F", "G"),
    "O": CategoricalForm("O", "F", "G"),
    "E'": CategoricalForm("E", "G", "F"),
    "I'": CategoricalForm("I", "G", "F"),
}


def _both(x: str, y: str, value: TruthValue3) -> Callable[[Values], bool]:
    return lambda v: v[x] is value and v[y] is value


def _implies(x: str, y: str) -> Callable[[Values], bool]:
    return lambda v: v[x] is T and v[y] is not T


# Gesetz -> (Beschreibung, verbotene Konstellationen, geforderte Konstellationen)
LAWS: dict[str, tuple[str, list[Callable[[Values], bool]], list[Callable[[Values], bool]]]] = {
    "contraries": ("A, E nie beide T, manchmal beide F", [_both("A", "E", T)], [_both("A", "E", F)]),
    "subcontraries": ("I, O nie beide F, manchmal beide T", [_both("I", "O", F)], [_both("I", "O", T)]),
    "contradictories_AO": ("A, O nie beide T, nie beide F", [_both("A", "O", T), _both("A", "O", F)], []),
    "contradictories_EI": ("E, I nie beide T, nie beide F", [_both("E", "I", T), _both("E", "I", F)], []),
    "subalternation_AI": ("A(F,G) ⇒ I(F,G)", [_implies("A", "I")], []),
    "subalternation_EO": ("E(F,G) ⇒ O(F,G)", [_implies("E", "O")], []),
    "conversion_E": ("E(F,G) ⇒ E(G,F)", [_implies("E", "E'")], []),
    "conversion_I": ("I(F,G) ⇒ I(G,F)", [_implies("I", "I'")], []),
    "conversion_AI": ("A(F,G) ⇒ I(G,F)", [_implies("A", "I'")], []),
}


@dataclass(frozen=True)
class LawResult:
    law: str
    description: str
    passed: bool
    countermodel: Interpretation | None = None
    detail: str = ""


@dataclass
class SquareReport:
    scheme: str
    max_domain: int
    laws: list[LawResult] = field(default_factory=list)

    @property
    def failures(self) -> list[str]:
        return [law.law for law in self.laws if not law.passed]

    @property
    def matches(self) -> bool:
        return set(self.failures) == set(get_scheme(self.scheme).expected_square_failures)

    def summary(self) -> str:
        passed = len(self.laws) - len(self.failures)
        head = f"{passed}/{len(self.laws)} laws hold"
        if self.failures:
            head += f"; failing: {', '.join(self.failures)}"
        return head + ("; as expected" if self.matches else "; UNEXPECTED")

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame.from_records([
            {
                "law": law.law,
                "description": law.description,
                "passed": law.passed,
                "countermodel": law.countermodel.describe() if law.countermodel else "",
            }
            for law in self.laws
        ])

    def to_dict(self) -> dict[str, Any]:
        return {
            "scheme": self.scheme,
            "max_domain": self.max_domain,
            "reading": get_scheme(self.scheme).reading,
            "translations": get_scheme(self.scheme).translations(),
            "matches": self.matches,
            "laws": [
                {
                    "law": law.law,
                    "description": law.description,
                    "passed": law.passed,
                    "countermodel": law.countermodel.to_json() if law.countermodel else None,
                    "detail": law.detail,
                }
                for law in self.laws
            ],
        }


def square_values(interpretation: Interpretation, scheme: str | TranslationScheme) -> Values:
    scheme_obj = get_scheme(scheme)
    return {key: scheme_obj.evaluate(form, interpretation) for key, form in _SQUARE_FORMS.items()}


def _square_models(max_domain: int, exhaustive: bool) -> Iterator[Interpretation]:
    return iter_models({"F": 1, "G": 1}, max_domain, exhaustive=exhaustive)


def audit_square(scheme: str | TranslationScheme = "presup", max_domain: int = 4,
                 exhaustive: bool = False) -> SquareReport:
    """Prüft Quadrat und Konversionen für das feste Paar (F, G) über alle Modelle bis ``max_domain``."""
    scheme_obj = get_scheme(scheme)
    table = [(model, square_values(model, scheme_obj)) for model in _square_models(max_domain, exhaustive)]
    report = SquareReport(scheme_obj.name, max_domain)
    for law, (description, forbidden, required) in LAWS.items():
        countermodel, detail = None, ""
        for model, values in table:
            if any(check(values) for check in forbidden):
                countermodel = model
                detail = " ".join(f"{key}={values[key].value}" for key in ("A", "E", "I", "O"))
                break
        passed = countermodel is None
        if passed:
            for check in required:
                if not any(check(values) for _, values in table):
                    passed = False
                    detail = f"keine Belegung bis Größe {max_domain} erfüllt die geforderte Konstellation"
        report.laws.append(LawResult(law, description, passed, countermodel, detail))
    _logger.info(f"🟦 Quadrat ({scheme_obj.name}, max_domain={max_domain}): {report.summary()}")
    return report


def _max_domain(value: int | None) -> int:
    return int(ConfigManager.get("defaults.max_domain", 8)) if value is None else value
