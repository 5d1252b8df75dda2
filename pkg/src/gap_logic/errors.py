# -*- coding: utf-8 -*-
"""
:version: 1.0
:date: 17.10.2026

Fehlerklassen
-------------
Alle Ausnahmen des Pakets erben von ``GapLogicError`` und zusätzlich von der
passenden Builtin-Klasse, damit Aufrufer wahlweise ``ValueError`` usw. fangen können.
Die CLI bildet die Klassen auf Exit-Codes ab (siehe ``gap_logic.cli``).
"""


class GapLogicError(Exception):
    """Basisklasse aller Fehler in ``gap_logic``."""


# ----------------------------------------------------------------------
# Syntax
# ----------------------------------------------------------------------
class FormulaSyntaxError(GapLogicError, ValueError):
    """Formeltext passt nicht zur Grammatik. ``position`` ist der 0-basierte Zeichenindex."""

    def __init__(self, message: str, position: int, text: str = "") -> None:
        self.position = position
        self.text = text
        super().__init__(f"{message} (Position {position})")


class ArityConflictError(GapLogicError, ValueError):
    """Ein Prädikatname wird innerhalb einer Formel mit verschiedenen Stelligkeiten benutzt."""


class SubstitutionError(GapLogicError, TypeError):
    """Substitution ist nur für geschlossene Numerale erlaubt."""


# ----------------------------------------------------------------------
# Auswertung
# ----------------------------------------------------------------------
class NotPropositionalError(GapLogicError, ValueError):
    """Aussagenlogische Auswertung einer Formel mit Prädikaten oder Quantoren."""


class ValuationError(GapLogicError, ValueError):
    """Belegung ist nicht total auf den Atomen der Formel."""


class ResourceCapError(GapLogicError, OverflowError):
    """Eine konfigurierte Obergrenze (Atome, Modelle) wurde überschritten."""


class AtomCapError(ResourceCapError):
    pass


class ModelCapError(ResourceCapError):
    pass


class ModelError(GapLogicError, ValueError):
    """Ungültige Interpretation bzw. Modelldatei."""


class UnboundVariableError(ModelError):
    pass


class ArityMismatchError(ModelError):
    pass


class UnknownPredicateError(ModelError):
    pass


# ----------------------------------------------------------------------
# Gödelisierung
# ----------------------------------------------------------------------
class CodecError(GapLogicError, ValueError):
    """Unbekanntes Token oder nicht dekodierbare Zahl."""


class UnexpressibleError(CodecError):
    """Formel enthält Symbole außerhalb des Alphabets."""


class SelfCheckError(GapLogicError, RuntimeError):
    """Selbsttest der Fixpunkt-Konstruktion fehlgeschlagen (Implementierungsfehler)."""
