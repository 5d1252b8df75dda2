# -*- coding: utf-8 -*-
"""
:version: 1.0
:date: 17.10.2026

gap_logic
---------
Werkbank für Präsuppositionen und Wahrheitswertlücken: dreiwertige Aussagenlogik,
endliche Modelle der Prädikatenlogik, Syllogistik und die Diagonalkonstruktion.
"""

__version__ = "1.0.0"
__license__ = "MIT"

from gap_logic.prop3 import TruthValue3, eval3, is_trt_tautology
from gap_logic.schemes import AVAILABLE_SCHEMES
from gap_logic.syntax import canonicalize, parse_formula, render

__all__ = ["AVAILABLE_SCHEMES", "TruthValue3", "canonicalize", "eval3", "is_trt_tautology", "parse_formula", "render"]
