# -*- coding: utf-8 -*-
"""
:version: 1.1
:date: 17.10.2026

prop3
-----
Dreiwertige Aussagenlogik für *truth-relevant tautologies*.

Auswertung auf der kanonischen Form (Basis {~, &}):

- Atom: Wert der Belegung
- ``A & B``: starke Kleene-Konjunktion
- ``~(A & B)``: **N**, falls ``A`` oder ``B`` klassisch unerfüllbar ist (strukturelle
  Leerheitsregel, unabhängig von der Belegung); sonst Kleene-Negation von ``A & B``
- ``~A`` sonst: Kleene-Negation

"Wahr" heißt genau **T**. Eine Formel ist truth-relevant tautologisch, wenn sie unter
jeder Belegung **T** ist.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

import pandas as pd

from gap_logic.config import ConfigManager
from gap_logic.errors import AtomCapError, NotPropositionalError, ValuationError
from gap_logic.logger import MainLogger
from gap_logic.syntax import And, Atom, Formula, Not, atoms, canonicalize, is_propositional, render

_logger = MainLogger.get_logger("prop3")


class TruthValue3(Enum):
    """T (wahr), F (falsch), N (weder wahr noch falsch)."""

    T = "T"
    F = "F"
    N = "N"

    @classmethod
    def of(cls, value: Union[bool, "TruthValue3"]) -> "TruthValue3":
        if isinstance(value, TruthValue3):
            return value
        return cls.T if value else cls.F

    @property
    def is_true(self) -> bool:
        return self is TruthValue3.T

    @property
    def is_gap(self) -> bool:
        return self is TruthValue3.N

    def flip(self) -> "TruthValue3":
        """Tauscht T und F, N bleibt N."""
        if self is TruthValue3.T:
            return TruthValue3.F
        if self is TruthValue3.F:
            return TruthValue3.T
        return TruthValue3.N

    def __invert__(self) -> "TruthValue3":
        return self.flip()

    def __and__(self, other: "TruthValue3") -> "TruthValue3":
        return kleene_all((self, other))

    def __or__(self, other: "TruthValue3") -> "TruthValue3":
        return kleene_any((self, other))

    def __str__(self) -> str:
        return self.value


def kleene_all(values: Iterable[TruthValue3]) -> TruthValue3:
    """Starke Kleene-Konjunktion: ein F entscheidet, sonst N vor T."""
    gap = False
    for value in values:
        if value is TruthValue3.F:
            return TruthValue3.F
        if value is TruthValue3.N:
            gap = True
    return TruthValue3.N if gap else TruthValue3.T


def kleene_any(values: Iterable[TruthValue3]) -> TruthValue3:
    """Starke Kleene-Disjunktion: ein T entscheidet, sonst N vor F."""
    gap = False
    for value in values:
        if value is TruthValue3.T:
            return TruthValue3.T
        if value is TruthValue3.N:
            gap = True
    return TruthValue3.N if gap else TruthValue3.F


Valuation = Mapping[str, Union[bool, TruthValue3]]


@dataclass(frozen=True)
class TruthTableRow:
    valuation: dict[str, bool]
    value: TruthValue3


# ----------------------------------------------------------------------
# Hilfsfunktionen
# ----------------------------------------------------------------------
def _require_propositional(f: Formula) -> None:
    if not is_propositional(f):
        raise NotPropositionalError(f"Keine aussagenlogische Formel: {render(f)}")


def _lookup(v: Valuation, name: str) -> TruthValue3:
    try:
        return TruthValue3.of(v[name])
    except KeyError:
        raise ValuationError(f"Belegung enthält kein Atom {name!r}") from None


def _opaque_leaves(f: Formula) -> list[Formula]:
    """Blätter der Junktorenstruktur: Atome, Prädikate und quantifizierte Teilformeln."""
    leaves: dict[Formula, None] = {}
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Not):
            stack.append(node.sub)
        elif isinstance(node, And):
            stack.extend((node.right, node.left))
        else:
            leaves.setdefault(node, None)
    return list(leaves)


def valuations(names: list[str]) -> Iterator[dict[str, bool]]:
    """Alle Belegungen in lexikographischer Ordnung, F vor T."""
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def _check_cap(count: int) -> None:
    cap = ConfigManager.atom_cap()
    if count > cap:
        raise AtomCapError(f"{count} Atome überschreiten die Obergrenze von {cap}")


# ----------------------------------------------------------------------
# Klassische Auswertung
# ----------------------------------------------------------------------
def _classical(f: Formula, leaf: Mapping[Formula, bool]) -> bool:
    if isinstance(f, Not):
        return not _classical(f.sub, leaf)
    if isinstance(f, And):
        return _classical(f.left, leaf) and _classical(f.right, leaf)
    return leaf[f]


def classical_eval(f: Formula, v: Valuation) -> TruthValue3:
    """Zweiwertige Auswertung der kanonischen Form; Ergebnis ist T oder F."""
    _require_propositional(f)
    g = canonicalize(f)
    leaf = {}
    for node in _opaque_leaves(g):
        value = _lookup(v, node.name)
        if value is TruthValue3.N:
            raise ValuationError(f"Klassische Belegung erwartet, {node.name!r} ist N")
        leaf[node] = value is TruthValue3.T
    return TruthValue3.of(_classical(g, leaf))


@lru_cache(maxsize=65536)
def structurally_unsat(f: Formula) -> bool:
    """Klassische Unerfüllbarkeit der Junktorenstruktur von ``canonicalize(f)``.

    Nicht-junktorale Teilformeln (Prädikate, Quantoren) gelten als undurchsichtige
    Satzbuchstaben; ein solcher Operand allein ist also immer erfüllbar.
    """
    g = canonicalize(f)
    leaves = _opaque_leaves(g)
    _check_cap(len(leaves))
    for bits in itertools.product((False, True), repeat=len(leaves)):
        if _classical(g, dict(zip(leaves, bits))):
            return False
    return True


def is_unsat(f: Formula) -> bool:
    """True gdw. ``f`` unter jeder Belegung klassisch F ist (erschöpfende Aufzählung)."""
    _require_propositional(f)
    _check_cap(len(atoms(f)))
    return structurally_unsat(f)


def classical_tautology(f: Formula) -> bool:
    """True gdw. ``f`` unter jeder Belegung klassisch T ist."""
    _require_propositional(f)
    return structurally_unsat(Not(f))


def classical_equivalent(f: Formula, g: Formula) -> bool:
    """Klassische Äquivalenz durch Aufzählung aller Belegungen über die gemeinsamen Atome."""
    _require_propositional(f)
    _require_propositional(g)
    names = sorted(set(atoms(f)) | set(atoms(g)))
    _check_cap(len(names))
    return all(classical_eval(f, v) == classical_eval(g, v) for v in valuations(names))


# ----------------------------------------------------------------------
# Dreiwertige Auswertung
# ----------------------------------------------------------------------
def carries_vacuity(conjunct: Formula) -> bool:
    """Konjunktion mit einem unerfüllbaren Konjunkt.

    Das ist die kanonische Gestalt von ``~~(A & B)`` mit leerer Negation ``~(A & B)``;
    innerhalb einer Negation geht ein solches Konjunkt mit N in die Kleene-Tafel ein.
    """
    return isinstance(conjunct, And) and (
        structurally_unsat(conjunct.left) or structurally_unsat(conjunct.right))


def _contradiction(conjunct: Formula) -> bool:
    return structurally_unsat(conjunct) and not carries_vacuity(conjunct)


def vacuous_negation(conjunction: And) -> bool:
    """Leerheitsregel: ``~(A & B)`` ist leer, wenn ein Konjunkt für sich unerfüllbar ist.

    Ein Konjunkt, das nur über ein eigenes unerfüllbares Konjunkt unerfüllbar ist,
    löst die Regel nicht aus (siehe :func:`carries_vacuity`).
    """
    return _contradiction(conjunction.left) or _contradiction(conjunction.right)


def _eval3(f: Formula, v: Valuation) -> TruthValue3:
    if isinstance(f, Atom):
        return _lookup(v, f.name)
    if isinstance(f, And):
        return kleene_all((_eval3(f.left, v), _eval3(f.right, v)))
    if isinstance(f, Not):
        if isinstance(f.sub, And):
            if vacuous_negation(f.sub):
                return TruthValue3.N
            return kleene_all(tuple(
                TruthValue3.N if carries_vacuity(c) else _eval3(c, v) for c in (f.sub.left, f.sub.right)
            )).flip()
        return _eval3(f.sub, v).flip()
    raise NotPropositionalError(f"Keine aussagenlogische Formel: {render(f)}")


def eval3(f: Formula, v: Valuation) -> TruthValue3:
    """Dreiwertige Auswertung (T/F/N) von ``canonicalize(f)``.

    Die Belegung darf neben ``bool`` auch ``TruthValue3`` enthalten; so lassen sich
    bereits ausgewertete Teilsätze (z. B. mit Wert N) als Atome einsetzen.
    """
    _require_propositional(f)
    return _eval3(canonicalize(f), v)


def truth_table3(f: Formula) -> list[TruthTableRow]:
    """Zeilen in lexikographischer Atomordnung, F vor T."""
    _require_propositional(f)
    names = atoms(f)
    _check_cap(len(names))
    return [TruthTableRow(v, eval3(f, v)) for v in valuations(names)]


def is_trt_tautology(f: Formula) -> bool:
    """True gdw. ``eval3(f, v) = T`` für jede Belegung ``v``."""
    rows = truth_table3(f)
    result = all(row.value is TruthValue3.T for row in rows)
    _logger.debug(f"trt-Tautologie {render(f)}: {result} ({len(rows)} Zeilen)")
    return result


def table_to_frame(rows: list[TruthTableRow]) -> pd.DataFrame:
    """Wahrheitstafel als DataFrame (Spalten: Atome, dann ``value``)."""
    records = [
        {**{name: ("T" if bit else "F") for name, bit in row.valuation.items()}, "value": row.value.value}
        for row in rows
    ]
    return pd.DataFrame.from_records(records)


__all__ = [
    "TruthValue3", "TruthTableRow", "Valuation",
    "kleene_all", "kleene_any", "valuations",
    "classical_eval", "is_unsat", "structurally_unsat", "classical_tautology", "classical_equivalent",
    "vacuous_negation", "carries_vacuity", "eval3", "truth_table3", "is_trt_tautology", "table_to_frame",
]
