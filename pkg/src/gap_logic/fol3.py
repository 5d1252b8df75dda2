# -*- coding: utf-8 -*-
"""
:version: 1.2
:date: 17.10.2026

fol3
----
Auswertung prädikatenlogischer Formeln über endlichen Modellen, klassisch und
mit Präsuppositionen (Wahrheitswertlücken).

Präsuppositionsregel (auf der kanonischen Form)::

    ~(exists x)(α & β)   ist N, wenn {x : α} oder {x : β} leer ist,
                         sonst T, falls kein Element α & β erfüllt, sonst F.

Andere negierte Existenzsätze werden klassisch ausgewertet, ``exists`` als starke
Kleene-Disjunktion über die Instanzen, Junktoren wie in ``prop3``.

Modelldatei (JSON)::

    {"domain": ["a", "b"], "predicates": {"F": [["a"]], "G": [["a"], ["b"]]}}
"""

from __future__ import annotations

import itertools
import json
import math
import string
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence, Union

from gap_logic.config import ConfigManager
from gap_logic.errors import (
    ArityConflictError,
    ArityMismatchError,
    ModelCapError,
    ModelError,
    UnboundVariableError,
    UnknownPredicateError,
)
from gap_logic.logger import MainLogger
from gap_logic.prop3 import TruthValue3, carries_vacuity, kleene_all, kleene_any, vacuous_negation
from gap_logic.syntax import (
    And,
    Atom,
    Exists,
    ForAll,
    Formula,
    Iff,
    Implies,
    Not,
    Numeral,
    Or,
    Pred,
    Term,
    Var,
    arity_map,
    canonicalize,
    free_variables,
    render,
    subformulas,
)

_logger = MainLogger.get_logger("fol3")

Signature = Mapping[str, int]
Element = str
Extension = frozenset[tuple[Element, ...]]


# ----------------------------------------------------------------------
# Interpretation
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Interpretation:
    """Endliche, nichtleere Domäne mit Prädikat-Extensionen und Variablenbelegung.

    ``arities`` ist optional; fehlt ein Eintrag, wird die Stelligkeit aus den Tupeln
    abgeleitet (bei leerer Extension ist jede Stelligkeit zulässig).
    """

    domain: tuple[Element, ...]
    extensions: Mapping[str, Extension]
    env: Mapping[str, Element] = field(default_factory=dict)
    arities: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.domain:
            raise ModelError("Domäne darf nicht leer sein")

    @classmethod
    def build(
            cls,
            domain: Iterable[Element],
            extensions: Mapping[str, Iterable[Iterable[Element]]],
            env: Mapping[str, Element] | None = None,
            arities: Mapping[str, int] | None = None,
    ) -> "Interpretation":
        """Erzeugt eine validierte Interpretation aus einfachen Python-Werten."""
        domain_t = tuple(str(d) for d in domain)
        if len(set(domain_t)) != len(domain_t):
            raise ModelError(f"Domäne enthält Duplikate: {list(domain_t)}")
        members = set(domain_t)
        arity_out = dict(arities or {})
        ext_out: dict[str, Extension] = {}
        for name, tuples in extensions.items():
            ext = frozenset(tuple(str(e) for e in t) for t in tuples)
            for t in ext:
                known = arity_out.setdefault(name, len(t))
                if known != len(t):
                    raise ModelError(f"Prädikat {name!r}: Tupel {list(t)} hat nicht Stelligkeit {known}")
                missing = [e for e in t if e not in members]
                if missing:
                    raise ModelError(f"Prädikat {name!r}: Elemente {missing} liegen nicht in der Domäne")
            ext_out[name] = ext
        env_out = dict(env or {})
        for var, element in env_out.items():
            if element not in members:
                raise ModelError(f"Variable {var!r} ist mit {element!r} außerhalb der Domäne belegt")
        return cls(domain_t, ext_out, env_out, arity_out)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Interpretation":
        if not isinstance(data, Mapping) or "domain" not in data:
            raise ModelError("Modelldatei benötigt die Schlüssel 'domain' und 'predicates'")
        return cls.build(data["domain"], data.get("predicates", {}), data.get("env"))

    @classmethod
    def load(cls, path: str | Path) -> "Interpretation":
        """Liest eine Modelldatei (JSON)."""
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ModelError(f"Modelldatei {path} nicht lesbar: {e}") from e
        return cls.from_json(data)

    def to_json(self) -> dict[str, Any]:
        """Modell im Dateiformat; Tupel deterministisch sortiert."""
        data: dict[str, Any] = {
            "domain": list(self.domain),
            "predicates": {name: [list(t) for t in sorted(ext)] for name, ext in sorted(self.extensions.items())},
        }
        if self.env:
            data["env"] = dict(sorted(self.env.items()))
        return data

    def describe(self) -> str:
        """Kurzform, z. B. ``|D|=2 F={} G={a}``."""
        parts = [f"|D|={len(self.domain)}"]
        for name, ext in sorted(self.extensions.items()):
            shown = ",".join("".join(t) if len(t) == 1 else "(" + ",".join(t) + ")" for t in sorted(ext))
            parts.append(f"{name}={{{shown}}}")
        return " ".join(parts)


@dataclass(frozen=True)
class Verdict:
    """Ergebnis mit Begründung: Gegenmodell bzw. die leeren Präsuppositionsterme."""

    value: TruthValue3
    witness: Any = None
    empty_terms: tuple[str, ...] = ()
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        witness = self.witness.to_json() if isinstance(self.witness, Interpretation) else self.witness
        return {
            "value": self.value.value,
            "witness": witness,
            "empty_terms": list(self.empty_terms),
            "note": self.note,
        }


def presupposition_verdict(terms_nonempty: Iterable[bool], joint_witness: bool) -> TruthValue3:
    """Wert von ``~(exists x)(α & β)``: N bei leerem Term, sonst T ohne gemeinsamen Zeugen."""
    if not all(terms_nonempty):
        return TruthValue3.N
    return TruthValue3.F if joint_witness else TruthValue3.T


def term_label(term: Formula, var: str) -> str:
    """Lesbarer Name eines Terms: ``F`` für F(x), ``~G`` für ~G(x), sonst die Formel."""
    if isinstance(term, Pred) and term.args == (Var(var),):
        return term.name
    if isinstance(term, Not) and isinstance(term.sub, Pred) and term.sub.args == (Var(var),):
        return "~" + term.sub.name
    return render(term)


# ----------------------------------------------------------------------
# Auswertung
# ----------------------------------------------------------------------
class _Evaluator:
    """Auswertung über einer festen Interpretation; die Umgebung wird explizit gereicht."""

    def __init__(self, interpretation: Interpretation) -> None:
        self.i = interpretation
        self.gaps: list[str] = []
        self.vacuous: list[str] = []

    # --- Terme und Atome ------------------------------------------------
    def term(self, t: Term, env: Mapping[str, Element]) -> Element:
        if isinstance(t, Var):
            try:
                return env[t.name]
            except KeyError:
                raise UnboundVariableError(f"Variable {t.name!r} ist nicht belegt") from None
        element = str(t.value)
        if element not in self.i.domain:
            raise ModelError(f"Numeral {element} bezeichnet kein Element der Domäne")
        return element

    def extension(self, name: str, arity: int) -> Extension:
        try:
            ext = self.i.extensions[name]
        except KeyError:
            raise UnknownPredicateError(f"Prädikat {name!r} ist nicht interpretiert") from None
        known = self.i.arities.get(name)
        if known is not None and known != arity:
            raise ArityMismatchError(f"Prädikat {name!r} hat Stelligkeit {known}, verwendet mit {arity}")
        return ext

    def atomic(self, f: Union[Atom, Pred], env: Mapping[str, Element]) -> bool:
        if isinstance(f, Atom):
            return () in self.extension(f.name, 0)
        ext = self.extension(f.name, len(f.args))
        return tuple(self.term(a, env) for a in f.args) in ext

    # --- klassisch -------------------------------------------------------
    def classical(self, f: Formula, env: Mapping[str, Element]) -> bool:
        if isinstance(f, (Atom, Pred)):
            return self.atomic(f, env)
        if isinstance(f, Not):
            return not self.classical(f.sub, env)
        if isinstance(f, And):
            return self.classical(f.left, env) and self.classical(f.right, env)
        if isinstance(f, Or):
            return self.classical(f.left, env) or self.classical(f.right, env)
        if isinstance(f, Implies):
            return (not self.classical(f.left, env)) or self.classical(f.right, env)
        if isinstance(f, Iff):
            return self.classical(f.left, env) == self.classical(f.right, env)
        if isinstance(f, Exists):
            return any(self.classical(f.body, {**env, f.var: d}) for d in self.i.domain)
        if isinstance(f, ForAll):
            return all(self.classical(f.body, {**env, f.var: d}) for d in self.i.domain)
        raise TypeError(f"Keine Formel: {f!r}")

    def sat_set(self, f: Formula, var: str, env: Mapping[str, Element]) -> frozenset[Element]:
        return frozenset(d for d in self.i.domain if self.classical(f, {**env, var: d}))

    # --- dreiwertig (kanonische Form) -----------------------------------
    def gap(self, f: Formula, env: Mapping[str, Element]) -> TruthValue3:
        if isinstance(f, (Atom, Pred)):
            return TruthValue3.of(self.atomic(f, env))
        if isinstance(f, And):
            return kleene_all((self.gap(f.left, env), self.gap(f.right, env)))
        if isinstance(f, Exists):
            return kleene_any(self.gap(f.body, {**env, f.var: d}) for d in self.i.domain)
        if isinstance(f, Not):
            sub = f.sub
            if isinstance(sub, Exists) and isinstance(sub.body, And):
                return self._negated_existential(sub, env)
            if isinstance(sub, Exists):
                return TruthValue3.of(not self.classical(sub, env))
            if isinstance(sub, And):
                if vacuous_negation(sub):
                    self.vacuous.append(render(sub))
                    return TruthValue3.N
                return kleene_all((self._conjunct(sub.left, env), self._conjunct(sub.right, env))).flip()
            return self.gap(sub, env).flip()
        raise TypeError(f"Formel nicht kanonisch: {f!r}")

    def _conjunct(self, c: Formula, env: Mapping[str, Element]) -> TruthValue3:
        if carries_vacuity(c):
            self.vacuous.append(render(c))
            return TruthValue3.N
        return self.gap(c, env)

    def _negated_existential(self, sub: Exists, env: Mapping[str, Element]) -> TruthValue3:
        alpha, beta = sub.body.left, sub.body.right
        left = self.sat_set(alpha, sub.var, env)
        right = self.sat_set(beta, sub.var, env)
        value = presupposition_verdict((bool(left), bool(right)), bool(left & right))
        if value is TruthValue3.N:
            for term, members in ((alpha, left), (beta, right)):
                if not members:
                    self.gaps.append(term_label(term, sub.var))
        return value


def _check_closed(f: Formula, interpretation: Interpretation) -> None:
    unbound = free_variables(f) - set(interpretation.env)
    if unbound:
        raise UnboundVariableError(f"Ungebundene Variablen {sorted(unbound)} in {render(f)}")


def sat_set(f: Formula, x: str, interpretation: Interpretation) -> frozenset[Element]:
    """``{d ∈ D : f ist klassisch wahr mit env[x:=d]}``."""
    unbound = free_variables(f) - {x} - set(interpretation.env)
    if unbound:
        raise UnboundVariableError(f"Ungebundene Variablen {sorted(unbound)} in {render(f)}")
    return _Evaluator(interpretation).sat_set(f, x, interpretation.env)


def eval_classical_fol(f: Formula, interpretation: Interpretation) -> TruthValue3:
    """Zweiwertige Tarski-Auswertung; Ergebnis T oder F."""
    _check_closed(f, interpretation)
    return TruthValue3.of(_Evaluator(interpretation).classical(f, interpretation.env))


def explain3_fol(f: Formula, interpretation: Interpretation) -> Verdict:
    """Wie ``eval3_fol``, nennt bei N zusätzlich die leeren Präsuppositionsterme."""
    _check_closed(f, interpretation)
    evaluator = _Evaluator(interpretation)
    value = evaluator.gap(canonicalize(f), interpretation.env)
    if value is not TruthValue3.N:
        return Verdict(value)
    empty = tuple(dict.fromkeys(evaluator.gaps))
    if empty:
        return Verdict(value, empty_terms=empty, note="presupposition failed")
    vacuous = "; ".join(dict.fromkeys(evaluator.vacuous))
    return Verdict(value, note=f"vacuous negation of {vacuous}" if vacuous else "vacuous")


def eval3_fol(f: Formula, interpretation: Interpretation) -> TruthValue3:
    """Dreiwertige Auswertung von ``canonicalize(f)`` mit Präsuppositionsregel."""
    _check_closed(f, interpretation)
    return _Evaluator(interpretation).gap(canonicalize(f), interpretation.env)


SEMANTICS: dict[str, Callable[[Formula, Interpretation], TruthValue3]] = {
    "classical": eval_classical_fol,
    "presup": eval3_fol,
}


# ----------------------------------------------------------------------
# Modellaufzählung
# ----------------------------------------------------------------------
def element_names(size: int) -> tuple[Element, ...]:
    """``a, b, c, ...``; ab 27 Elementen ``e26, e27, ...``."""
    letters = string.ascii_lowercase
    return tuple(letters[i] if i < len(letters) else f"e{i}" for i in range(size))


def count_models(signature: Signature, size: int) -> int:
    """Anzahl der Modelle einer Größe: ∏ 2^(size^arity)."""
    return math.prod(2 ** (size ** arity) for arity in signature.values())


def enumerate_models(signature: Signature, size: int, cap: int | None = None) -> Iterator[Interpretation]:
    """Alle Interpretationen der Signatur über ``size`` Elementen, deterministisch geordnet.

    Prädikate in Namensordnung, Teilmengen aufsteigend nach Bitmaske; die erste
    Interpretation hat nur leere Extensionen.

    Raises:
        ModelCapError: wenn mehr als ``cap`` (Default: ``limits.model_cap``) Modelle entstünden.
    """
    if size < 1:
        raise ModelError("Domänengröße muss mindestens 1 sein")
    cap = ConfigManager.model_cap() if cap is None else cap
    total = count_models(signature, size)
    if total > cap:
        raise ModelCapError(f"{total} Modelle der Größe {size} überschreiten die Obergrenze {cap}")

    domain = element_names(size)
    names = sorted(signature)
    choices = []
    for name in names:
        tuples = list(itertools.product(domain, repeat=signature[name]))
        choices.append([
            frozenset(t for i, t in enumerate(tuples) if mask >> i & 1)
            for mask in range(2 ** len(tuples))
        ])
    arities = dict(signature)
    for combo in itertools.product(*choices):
        yield Interpretation(domain, dict(zip(names, combo)), {}, arities)


def is_monadic(signature: Signature) -> bool:
    return all(arity <= 1 for arity in signature.values())


@lru_cache(maxsize=64)
def _cell_models(signature_items: tuple[tuple[str, int], ...], max_domain: int) -> tuple[Interpretation, ...]:
    signature = dict(signature_items)
    unary = sorted(n for n, a in signature.items() if a == 1)
    props = sorted(n for n, a in signature.items() if a == 0)
    cells = list(itertools.product((False, True), repeat=len(unary)))
    models = []
    for size in range(1, min(max_domain, len(cells)) + 1):
        domain = element_names(size)
        for cell_set in itertools.combinations(cells, size):
            ext = {
                name: frozenset((d,) for d, cell in zip(domain, cell_set) if cell[i])
                for i, name in enumerate(unary)
            }
            for bits in itertools.product((False, True), repeat=len(props)):
                prop_ext = {p: (frozenset({()}) if bit else frozenset()) for p, bit in zip(props, bits)}
                models.append(Interpretation(domain, {**ext, **prop_ext}, {}, signature))
    return tuple(models)


def iter_models(signature: Signature, max_domain: int, exhaustive: bool = False) -> Iterator[Interpretation]:
    """Modelle der Größen 1..max_domain.

    Für monadische Signaturen (ohne ``exhaustive``) genügt ein Vertreter je Menge
    bewohnter Prädikatzellen: Sätze ohne Numerale unterscheiden Elemente nur über
    ihre Zelle, größere Modelle mit gleicher Zellmenge liefern dieselben Werte.
    """
    if max_domain < 1:
        raise ModelError("max_domain muss mindestens 1 sein")
    if not exhaustive and is_monadic(signature):
        yield from _cell_models(tuple(sorted(signature.items())), max_domain)
        return
    for size in range(1, max_domain + 1):
        yield from enumerate_models(signature, size)


# ----------------------------------------------------------------------
# Gültigkeit
# ----------------------------------------------------------------------
Evaluator = Callable[[Any, Interpretation], TruthValue3]


def _signature_of(formulas: Sequence[Formula]) -> dict[str, int]:
    signature: dict[str, int] = {}
    for f in formulas:
        for name, arity in arity_map(f).items():
            known = signature.setdefault(name, arity)
            if known != arity:
                raise ArityConflictError(f"Prädikat {name!r} mit Stelligkeit {known} und {arity} verwendet")
    return signature


def _has_numerals(formulas: Sequence[Formula]) -> bool:
    return any(
        isinstance(node, Pred) and any(isinstance(a, Numeral) for a in node.args)
        for f in formulas
        for node in subformulas(f)
    )


def check_validity(
        premises: Sequence[Any],
        conclusion: Any,
        signature: Signature | None = None,
        max_domain: int | None = None,
        semantics: Union[str, Evaluator] = "presup",
        exhaustive: bool = False,
) -> Verdict:
    """Gültigkeit als Wahrheitserhalt: jedes Modell (Größe 1..max_domain), das alle
    Prämissen T macht, macht auch die Konklusion T.

    ``semantics`` ist ``"classical"``, ``"presup"`` oder eine Funktion ``(satz, I) -> TruthValue3``;
    im letzten Fall dürfen Prämissen beliebige Objekte sein und ``signature`` ist Pflicht.

    Returns:
        Verdict: T bei Gültigkeit, sonst F mit dem ersten Gegenmodell als ``witness``.
    """
    sentences = [*premises, conclusion]
    if callable(semantics):
        evaluate = semantics
        if signature is None:
            raise ValueError("Bei eigener Auswertungsfunktion muss eine Signatur angegeben werden")
    else:
        try:
            evaluate = SEMANTICS[semantics]
        except KeyError:
            raise ValueError(f"Unbekannte Semantik {semantics!r} (classical|presup)") from None
        for f in sentences:
            if free_variables(f):
                raise UnboundVariableError(f"Satz erwartet, freie Variablen in {render(f)}")
        derived = _signature_of(sentences)
        signature = {**derived, **(signature or {})}
        exhaustive = exhaustive or _has_numerals(sentences)

    max_domain = int(ConfigManager.get("defaults.max_domain", 8)) if max_domain is None else max_domain
    checked = 0
    for model in iter_models(signature, max_domain, exhaustive=exhaustive):
        checked += 1
        if all(evaluate(p, model) is TruthValue3.T for p in premises):
            value = evaluate(conclusion, model)
            if value is not TruthValue3.T:
                _logger.debug(f"Gegenmodell nach {checked} Modellen: {model.describe()}")
                return Verdict(
                    TruthValue3.F, witness=model,
                    note=f"Prämissen T, Konklusion {value.value} in {model.describe()}",
                )
    _logger.debug(f"Gültig: {checked} Modelle bis Größe {max_domain} geprüft")
    return Verdict(TruthValue3.T, note=f"gültig für alle Modelle bis Größe {max_domain}")
