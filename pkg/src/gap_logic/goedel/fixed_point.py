# -*- coding: utf-8 -*-
"""
:version: 1.2
:date: 17.10.2026

Fixpunkt und Abrollen
---------------------
Konstruktion der Diagonalsätze über einem ``ToySystem``::

    U  = ~(exists x)(exists z)(Prf(x, z) & Diag(y, z))     eine freie Variable y
    k  = <U>
    G  = U[#k / y]                                          diag(k) = <G>
    H  = ~(exists x) Prf(x, #<G>)
    J  = G <-> H
    K_n = ~(exists x)(Prf(x, n) & Diag(k, n))              Instanz von G für z = n

Prf und Diag sind primitive, exakt entscheidbare Relationen. Jede Instanz K_n hat
einen leeren Term: der Diag-Term ist nur bei n = <G> nichtleer, und dort ist der
Prf-Term leer, solange G nicht beweisbar ist. G ist dann weder wahr noch falsch,
H ist wahr und J damit nicht wahr.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable

from gap_logic.config import ConfigManager
from gap_logic.errors import SelfCheckError
from gap_logic.fol3 import Verdict, presupposition_verdict
from gap_logic.goedel.codec import decode_formula, goedel_number
from gap_logic.goedel.system import ToySystem
from gap_logic.logger import MainLogger
from gap_logic.prop3 import TruthValue3, eval3, kleene_all
from gap_logic.syntax import And, Atom, Exists, Formula, Iff, Not, Numeral, Pred, Var, free_variables, substitute

_logger = MainLogger.get_logger("goedel.fixed_point")

PRF_TERM = "Prf-term"
DIAG_TERM = "Diag-term"
PRF_DIRECTION = "(x)(Prf(x,n) -> ~Diag(k,n)) is vacuous"
DIAG_DIRECTION = "(x)(Diag(k,n) -> ~Prf(x,n)) is vacuous"


@lru_cache(maxsize=4096)
def diag(y: int) -> int | None:
    """Diag-Funktion: Nummer der Formel ``y`` mit dem Numeral von ``y`` für ihre einzige freie Variable."""
    f = decode_formula(y) if isinstance(y, int) and not isinstance(y, bool) and y >= 1 else None
    if f is None:
        return None
    variables = free_variables(f)
    if len(variables) != 1:
        return None
    (v,) = variables
    return goedel_number(substitute(f, v, Numeral(y)))


def diag_holds(y: int, z: int) -> bool:
    return diag(y) == z


@dataclass(frozen=True)
class FixedPoint:
    U: Formula
    k: int
    G: Formula
    gnum_G: int
    H: Formula
    J: Formula
    g_provable: bool

    def to_dict(self) -> dict[str, Any]:
        return {"k": str(self.k), "gnum_G": str(self.gnum_G), "g_provable": self.g_provable}


def diagonal_formula() -> Formula:
    """U mit der freien Variablen y."""
    x, y, z = Var("x"), Var("y"), Var("z")
    return Not(Exists("x", Exists("z", And(Pred("Prf", (x, z)), Pred("Diag", (y, z))))))


def build_fixed_point(system: ToySystem) -> FixedPoint:
    """Konstruiert U, G, H, J und prüft ``diag(k) = <G>``.

    Raises:
        SelfCheckError: wenn der Selbsttest der Konstruktion scheitert.
    """
    U = diagonal_formula()
    k = goedel_number(U)
    G = substitute(U, "y", Numeral(k))
    gnum_G = goedel_number(G)
    if diag(k) != gnum_G:
        raise SelfCheckError(f"diag(k) = {diag(k)} ≠ <G> = {gnum_G}")
    H = Not(Exists("x", Pred("Prf", (Var("x"), Numeral(gnum_G)))))
    g_provable = system.is_theorem(G)
    if system.prf_witness(gnum_G) is not None and not g_provable:
        raise SelfCheckError("Prf-Zeuge für <G> trotz G außerhalb der Hülle")
    if g_provable:
        _logger.warning("⚠️ G ist im System beweisbar, Instanz K_<G> wird falsch")
    _logger.debug(f"Fixpunkt: k hat {len(str(k))} Stellen, <G> hat {len(str(gnum_G))} Stellen")
    return FixedPoint(U=U, k=k, G=G, gnum_G=gnum_G, H=H, J=Iff(G, H), g_provable=g_provable)


# ----------------------------------------------------------------------
# Instanzen
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class InstanceReport:
    n: int
    verdict: TruthValue3
    empty_terms: tuple[str, ...] = ()
    directions: tuple[str, ...] = ()

    @property
    def classical(self) -> TruthValue3:
        """Zweiwertig ist K_n nur bei gemeinsamem Zeugen falsch, sonst wahr."""
        return TruthValue3.F if self.verdict is TruthValue3.F else TruthValue3.T

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": str(self.n),
            "verdict": self.verdict.value,
            "classical": self.classical.value,
            "empty_terms": list(self.empty_terms),
            "directions": list(self.directions),
        }


def eval_instance_K(n: int, fp: FixedPoint, system: ToySystem) -> InstanceReport:
    """``K_n = ~(exists x)(Prf(x, n) & Diag(k, n))`` mit exakter Term-Leerheit."""
    prf_nonempty = system.prf_witness(n) is not None
    diag_nonempty = diag_holds(fp.k, n)
    verdict = presupposition_verdict((prf_nonempty, diag_nonempty), prf_nonempty and diag_nonempty)
    empty, directions = [], []
    if not prf_nonempty:
        empty.append(PRF_TERM)
        directions.append(PRF_DIRECTION)
    if not diag_nonempty:
        empty.append(DIAG_TERM)
        directions.append(DIAG_DIRECTION)
    return InstanceReport(n, verdict, tuple(empty), tuple(directions))


def default_sample(fp: FixedPoint, system: ToySystem, max_n: int | None = None) -> list[int]:
    """``{1..max_n} ∪ {<G>} ∪ Kodes der Hülle``, aufsteigend."""
    max_n = int(ConfigManager.get("defaults.max_n", 64)) if max_n is None else max_n
    return sorted(set(range(1, max_n + 1)) | {fp.gnum_G} | set(system.closure_codes))


@dataclass
class UnrollReport:
    """G als (z)K_z gelesen; daneben die wörtliche und die x-zuerst-Lesart."""

    overall: Verdict
    instances: list[InstanceReport] = field(default_factory=list)
    as_written: TruthValue3 = TruthValue3.T
    x_first: TruthValue3 = TruthValue3.N

    def to_dict(self) -> dict[str, Any]:
        return {
            "overall": self.overall.to_dict(),
            "instances": [r.to_dict() for r in self.instances],
            "as_written_classical": self.as_written.value,
            "x_first": self.x_first.value,
        }


def eval_G_unrolled(fp: FixedPoint, system: ToySystem, sample: Iterable[int] | None = None) -> UnrollReport:
    """Gesamturteil symbolisch, Stichprobeninstanzen zur Ansicht.

    Für n ≠ <G> ist der Diag-Term leer, für n = <G> ist der Prf-Term genau dann leer,
    wenn G unbeweisbar ist; damit ist jede Instanz N bzw. K_<G> = F.
    """
    numbers = default_sample(fp, system) if sample is None else sorted(set(sample))
    instances = [eval_instance_K(n, fp, system) for n in numbers]
    decisive = eval_instance_K(fp.gnum_G, fp, system)
    # Vertreter aller n ≠ <G>, bevorzugt ein Theorem-Kode (Prf-Term nichtleer)
    other_n = next((c for c in system.closure_codes if c != fp.gnum_G), fp.gnum_G + 1)
    other = eval_instance_K(other_n, fp, system)
    overall_value = kleene_all((other.verdict, decisive.verdict))
    if overall_value is TruthValue3.N:
        note = "alle Instanzen von G sind leer (N): G ist nicht wahr"
    elif fp.g_provable:
        note = "G beweisbar: K_<G> ist falsch"
    else:
        note = f"K_{other_n} ist falsch"
    overall = Verdict(overall_value, empty_terms=decisive.empty_terms, note=note)
    # wörtlich: kein Paar (x, z) erfüllt beide Konjunkte, außer G ist beweisbar
    as_written = TruthValue3.of(not fp.g_provable)
    # x zuerst: x = 1 ist kein Beweis, also ein leerer Prf-Term; ein Beweis von G macht die Instanz F
    x_first = TruthValue3.F if fp.g_provable else TruthValue3.N
    _logger.debug(f"G abgerollt: {overall_value.value} ({len(instances)} Instanzen)")
    return UnrollReport(overall, instances, as_written, x_first)


def eval_H(fp: FixedPoint, system: ToySystem) -> TruthValue3:
    """H hat nur einen Term, die Leerheitsregel greift nicht: klassischer Wert."""
    return TruthValue3.of(system.prf_witness(fp.gnum_G) is None)


def eval_J(fp: FixedPoint, system: ToySystem, semantics: str = "presup") -> Verdict:
    """J = G <-> H; ``presup`` setzt G abgerollt (N) ein, ``classical`` die wörtliche Lesart."""
    h = eval_H(fp, system)
    if semantics == "classical":
        g = TruthValue3.of(not fp.g_provable)
    elif semantics == "presup":
        g = eval_G_unrolled(fp, system, sample=()).overall.value
    else:
        raise ValueError(f"Unbekannte Semantik {semantics!r} (classical|presup)")
    value = eval3(Iff(Atom("G"), Atom("H")), {"G": g, "H": h})
    note = "equivalence holds" if value is TruthValue3.T else "equivalence fails"
    return Verdict(value, witness={"G": g.value, "H": h.value}, note=note)
