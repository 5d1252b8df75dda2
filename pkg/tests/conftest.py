# -*- coding: utf-8 -*-
"""
Gemeinsame Fixtures: isolierte Konfiguration (HOME und cwd im tmp_path) und
Zufallsgeneratoren für Formeln und Modelle mit festem Seed.
"""

import copy
import itertools
import random

import pytest

from gap_logic.config import DEFAULTS, ConfigManager
from gap_logic.fol3 import Interpretation
from gap_logic.syntax import And, Atom, Exists, ForAll, Iff, Implies, Not, Numeral, Or, Pred, Var

PROP_ATOMS = ("P", "Q", "R", "S")


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Keine echte config.yaml, Logdateien landen im tmp_path."""
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.chdir(tmp_path)
    ConfigManager.clear()
    yield
    ConfigManager.clear()


@pytest.fixture
def config_override():
    """Setzt einzelne Konfigurationswerte ohne Datei, z. B. ``config_override("limits.atom_cap", 2)``."""
    def _override(key_path: str, value):
        cfg = copy.deepcopy(DEFAULTS)
        node = cfg
        keys = key_path.split(".")
        for key in keys[:-1]:
            node = node[key]
        node[keys[-1]] = value
        ConfigManager._config_cache = cfg
    return _override


# ----------------------------------------------------------------------
# Zufallsformeln
# ----------------------------------------------------------------------
def random_prop(rng: random.Random, depth: int, names=PROP_ATOMS):
    if depth == 0 or rng.random() < 0.2:
        return Atom(rng.choice(names))
    kind = rng.randrange(5)
    if kind == 0:
        return Not(random_prop(rng, depth - 1, names))
    cls = (And, Or, Implies, Iff)[kind - 1]
    return cls(random_prop(rng, depth - 1, names), random_prop(rng, depth - 1, names))


def random_fol(rng: random.Random, depth: int, bound=()):
    """Geschlossene Formel über P (0-stellig), F, G (1-stellig) und R (2-stellig)."""
    if depth == 0 or (bound and rng.random() < 0.2):
        if not bound or rng.random() < 0.1:
            return Atom("P")
        pick = rng.randrange(3)
        if pick == 0:
            return Pred("F", (Var(rng.choice(bound)),))
        if pick == 1:
            return Pred("G", (Var(rng.choice(bound)),))
        return Pred("R", (Var(rng.choice(bound)), Var(rng.choice(bound))))
    kind = rng.randrange(7)
    if kind == 0:
        return Not(random_fol(rng, depth - 1, bound))
    if kind in (1, 2):
        var = rng.choice(("x", "y"))
        cls = Exists if kind == 1 else ForAll
        return cls(var, random_fol(rng, depth - 1, tuple(sorted(set(bound) | {var}))))
    cls = (And, Or, Implies, Iff)[kind - 3]
    return cls(random_fol(rng, depth - 1, bound), random_fol(rng, depth - 1, bound))


def random_model(rng: random.Random, max_size: int = 3) -> Interpretation:
    size = rng.randint(1, max_size)
    domain = [chr(ord("a") + i) for i in range(size)]
    pairs = list(itertools.product(domain, repeat=2))
    return Interpretation.build(domain, {
        "P": [()] if rng.random() < 0.5 else [],
        "F": [(d,) for d in domain if rng.random() < 0.5],
        "G": [(d,) for d in domain if rng.random() < 0.5],
        "R": [p for p in pairs if rng.random() < 0.4],
    }, arities={"P": 0, "F": 1, "G": 1, "R": 2})


def random_coded(rng: random.Random, depth: int, bound=()):
    """Formel aus dem Alphabet der Gödelisierung (Prf, Diag, x/y/z, Numerale)."""
    if depth == 0 or rng.random() < 0.25:
        def term():
            if bound and rng.random() < 0.5:
                return Var(rng.choice(bound))
            return Numeral(rng.randrange(0, 40))
        return Pred(rng.choice(("Prf", "Diag")), (term(), term()))
    kind = rng.randrange(4)
    if kind == 0:
        return Not(random_coded(rng, depth - 1, bound))
    if kind == 1:
        var = rng.choice(("x", "y", "z"))
        return Exists(var, random_coded(rng, depth - 1, tuple(sorted(set(bound) | {var}))))
    cls = And if kind == 2 else Implies
    return cls(random_coded(rng, depth - 1, bound), random_coded(rng, depth - 1, bound))


@pytest.fixture
def rng():
    return random.Random(20261017)
