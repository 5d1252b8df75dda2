# -*- coding: utf-8 -*-
"""
:version: 1.0
:date: 17.10.2026

gap_logic.goedel
----------------
Gödelisierung, entscheidbares Spielzeugsystem und die Diagonalkonstruktion.
"""

from gap_logic.goedel.codec import (
    ALPHABET,
    BASE,
    decode,
    decode_formula,
    encode,
    formula_tokens,
    goedel_number,
    parse_tokens,
)
from gap_logic.goedel.fixed_point import (
    DIAG_TERM,
    PRF_TERM,
    FixedPoint,
    InstanceReport,
    UnrollReport,
    build_fixed_point,
    default_sample,
    diag,
    diagonal_formula,
    eval_G_unrolled,
    eval_H,
    eval_instance_K,
    eval_J,
)
from gap_logic.goedel.system import ToySystem

__all__ = [
    "ALPHABET", "BASE", "encode", "decode", "decode_formula", "formula_tokens", "goedel_number", "parse_tokens",
    "ToySystem", "FixedPoint", "InstanceReport", "UnrollReport", "PRF_TERM", "DIAG_TERM",
    "diag", "diagonal_formula", "build_fixed_point", "default_sample",
    "eval_instance_K", "eval_G_unrolled", "eval_H", "eval_J",
]
