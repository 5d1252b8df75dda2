# -*- coding: utf-8 -*-
"""
:version: 1.1
:date: 17.10.2026

ToySystem
---------
Endliches Axiomensystem mit Modus ponens als einziger Regel.

Jede MP-Konklusion ist Teilformel eines Axioms, die deduktive Hülle ist also
endlich und wird exakt berechnet. Zu jedem Element wird ein kürzester Beweis
(Liste von Sätzen, letzte Zeile = Konklusion) gespeichert. Damit ist das
Prf-Prädikat entscheidbar: ``{x : Prf(x, z)}`` ist genau dann nichtleer, wenn
``decode_formula(z)`` zur Hülle gehört.

Systemdatei (JSON)::

    {"axioms": ["Diag(0, 0)", "Diag(0, 0) -> Prf(0, 1)"]}
"""

from __future__ import annotations

import json
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from gap_logic.errors import CodecError, ModelError
from gap_logic.goedel.codec import decode, decode_formula, encode, formula_tokens, goedel_number, parse_tokens, split_lines
from gap_logic.logger import MainLogger
from gap_logic.syntax import Formula, Implies, free_variables, parse_formula, render

_logger = MainLogger.get_logger("goedel.system")

Proof = tuple[Formula, ...]


def _merge_proofs(*proofs: Proof) -> list[Formula]:
    lines: dict[Formula, None] = {}
    for proof in proofs:
        for line in proof:
            lines.setdefault(line, None)
    return list(lines)


class ToySystem:
    """Axiome plus Modus ponens; Hülle und Beweise werden beim ersten Zugriff berechnet."""

    def __init__(self, axioms: Iterable[Formula], name: str = "system") -> None:
        self.name = name
        self.axioms: tuple[Formula, ...] = tuple(dict.fromkeys(axioms))
        if not self.axioms:
            raise ModelError("Ein System benötigt mindestens ein Axiom")
        for axiom in self.axioms:
            if free_variables(axiom):
                raise ModelError(f"Axiom {render(axiom)} ist nicht geschlossen")
            formula_tokens(axiom)

    # ------------------------------------------------------------------
    # Laden
    # ------------------------------------------------------------------
    @classmethod
    def from_json(cls, data: Mapping[str, Any], name: str = "system") -> "ToySystem":
        axioms = data.get("axioms") if isinstance(data, Mapping) else None
        if not isinstance(axioms, list) or not all(isinstance(a, str) for a in axioms):
            raise ModelError("Systemdatei benötigt eine Liste 'axioms' aus Formeltexten")
        return cls([parse_formula(a) for a in axioms], name=name)

    @classmethod
    def load(cls, path: str | Path) -> "ToySystem":
        """Liest eine Systemdatei; ``default`` bzw. ``default.json`` fällt auf das mitgelieferte System zurück."""
        path = Path(path)
        if not path.exists() and path.name in ("default", "default.json"):
            return cls.default()
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ModelError(f"Systemdatei {path} nicht lesbar: {e}") from e
        return cls.from_json(data, name=path.stem)

    @classmethod
    def default(cls) -> "ToySystem":
        text = resources.files("gap_logic.data").joinpath("default.json").read_text(encoding="utf-8")
        return cls.from_json(json.loads(text), name="default")

    # ------------------------------------------------------------------
    # Hülle
    # ------------------------------------------------------------------
    @cached_property
    def proofs(self) -> dict[Formula, Proof]:
        """Kürzester kanonischer Beweis je Element der Hülle (iterative Relaxation)."""
        proofs: dict[Formula, Proof] = {axiom: (axiom,) for axiom in self.axioms}
        changed = True
        while changed:
            changed = False
            for imp in sorted(proofs, key=render):
                if not isinstance(imp, Implies) or imp.left not in proofs or imp.right in self.axioms:
                    continue
                candidate = tuple(_merge_proofs(proofs[imp.left], proofs[imp], (imp.right,)))
                known = proofs.get(imp.right)
                if known is None or len(candidate) < len(known):
                    proofs[imp.right] = candidate
                    changed = True
        _logger.debug(f"Hülle von {self.name}: {len(proofs)} Sätze")
        return proofs

    @property
    def closure(self) -> frozenset[Formula]:
        return frozenset(self.proofs)

    def is_theorem(self, f: Formula) -> bool:
        return f in self.proofs

    @cached_property
    def closure_codes(self) -> tuple[int, ...]:
        return tuple(sorted(goedel_number(f) for f in self.proofs))

    # ------------------------------------------------------------------
    # Prf
    # ------------------------------------------------------------------
    @staticmethod
    def encode_proof(lines: Sequence[Formula]) -> int:
        tokens: list[str] = []
        for i, line in enumerate(lines):
            if i:
                tokens.append(";")
            tokens.extend(formula_tokens(line))
        return encode(tokens)

    def check_proof(self, x: int, z: int) -> bool:
        """Prf(x, z): ``x`` kodiert eine gültige Beweisfolge, deren letzte Zeile die Nummer ``z`` hat."""
        try:
            lines = [parse_tokens(tokens) for tokens in split_lines(decode(x))]
        except CodecError:
            return False
        for i, line in enumerate(lines):
            if line in self.axioms:
                continue
            earlier = lines[:i]
            if not any(Implies(a, line) in earlier for a in earlier):
                return False
        return goedel_number(lines[-1]) == z

    def prf_witness(self, z: int) -> int | None:
        """Kode eines Beweises für den Satz mit Nummer ``z`` oder None (exakt)."""
        if isinstance(z, bool) or not isinstance(z, int) or z < 1:
            return None
        f = decode_formula(z)
        if f is None or f not in self.proofs:
            return None
        return self.encode_proof(self.proofs[f])

    def __repr__(self) -> str:
        return f"<ToySystem {self.name!r} axioms={len(self.axioms)}>"
