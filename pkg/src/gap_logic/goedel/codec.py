# -*- coding: utf-8 -*-
"""
:version: 1.1
:date: 17.10.2026

Gödelisierung
-------------
Bijektive Basis-17-Kodierung von Tokenfolgen über einem festen Alphabet.

Für Tokens mit 1-basierten Alphabet-Indizes ``i1..im`` gilt
``n = Σ ij · 17^(m-j)``; jede natürliche Zahl ``n ≥ 1`` kodiert genau eine
nichtleere Folge.

Formeln werden präfix-eindeutig geschrieben::

    ~ A            ( A & B )        ( A -> B )
    exists x . A   Prf ( x , # d1 d0 )

Numerale erscheinen als ``#`` gefolgt von Binärziffern ``d0``/``d1`` (höchstwertige zuerst).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gap_logic.errors import CodecError, UnexpressibleError
from gap_logic.syntax import And, Exists, Formula, Implies, Not, Numeral, Pred, Term, Var, render

ALPHABET: tuple[str, ...] = (
    "~", "&", "(", ")", ",", "exists", ".", "x", "y", "z",
    "Prf", "Diag", ";", "#", "d0", "d1", "->",
)
BASE = len(ALPHABET)
INDEX: dict[str, int] = {token: i + 1 for i, token in enumerate(ALPHABET)}

VARIABLES = frozenset({"x", "y", "z"})
PREDICATES = frozenset({"Prf", "Diag"})


# ----------------------------------------------------------------------
# Zahlen <-> Tokenfolgen
# ----------------------------------------------------------------------
def encode(tokens: Iterable[str]) -> int:
    """Gödelnummer einer nichtleeren Tokenfolge.

    Raises:
        CodecError: bei unbekanntem Token oder leerer Folge.
    """
    n = 0
    count = 0
    for token in tokens:
        try:
            n = n * BASE + INDEX[token]
        except KeyError:
            raise CodecError(f"Token {token!r} gehört nicht zum Alphabet") from None
        count += 1
    if count == 0:
        raise CodecError("Leere Tokenfolge hat keine Gödelnummer")
    return n


def decode(n: int) -> list[str]:
    """Exakte Umkehrung von ``encode`` für ``n ≥ 1``."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise CodecError(f"Nur natürliche Zahlen ≥ 1 sind dekodierbar, nicht {n!r}")
    digits: list[str] = []
    while n > 0:
        n, rest = divmod(n - 1, BASE)
        digits.append(ALPHABET[rest])
    digits.reverse()
    return digits


# ----------------------------------------------------------------------
# Formeln <-> Tokenfolgen
# ----------------------------------------------------------------------
def numeral_tokens(value: int) -> list[str]:
    return ["#"] + ["d1" if bit == "1" else "d0" for bit in format(value, "b")]


def term_tokens(t: Term) -> list[str]:
    if isinstance(t, Numeral):
        return numeral_tokens(t.value)
    if isinstance(t, Var) and t.name in VARIABLES:
        return [t.name]
    raise UnexpressibleError(f"Term {t} ist im Alphabet nicht darstellbar")


def formula_tokens(f: Formula) -> list[str]:
    """Kanonische Tokenfolge einer Formel."""
    if isinstance(f, Not):
        return ["~"] + formula_tokens(f.sub)
    if isinstance(f, And):
        return ["("] + formula_tokens(f.left) + ["&"] + formula_tokens(f.right) + [")"]
    if isinstance(f, Implies):
        return ["("] + formula_tokens(f.left) + ["->"] + formula_tokens(f.right) + [")"]
    if isinstance(f, Exists):
        if f.var not in VARIABLES:
            raise UnexpressibleError(f"Variable {f.var!r} ist im Alphabet nicht darstellbar")
        return ["exists", f.var, "."] + formula_tokens(f.body)
    if isinstance(f, Pred):
        if f.name not in PREDICATES:
            raise UnexpressibleError(f"Prädikat {f.name!r} ist im Alphabet nicht darstellbar")
        tokens = [f.name, "("]
        for i, arg in enumerate(f.args):
            if i:
                tokens.append(",")
            tokens.extend(term_tokens(arg))
        return tokens + [")"]
    raise UnexpressibleError(f"Formel {render(f)} ist im Alphabet nicht darstellbar")


def goedel_number(f: Formula) -> int:
    """``encode(formula_tokens(f))``; injektiv auf Formeln."""
    return encode(formula_tokens(f))


class _TokenParser:
    """Parser der präfix-eindeutigen Tokenform (Umkehrung von ``formula_tokens``)."""

    def __init__(self, tokens: Sequence[str]) -> None:
        self.tokens = tokens
        self.pos = 0

    def _peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self, expected: str | None = None) -> str:
        token = self._peek()
        if token is None or (expected is not None and token != expected):
            raise CodecError(f"Erwartet {expected or 'Token'!r} an Stelle {self.pos}, gefunden {token!r}")
        self.pos += 1
        return token

    def formula(self) -> Formula:
        token = self._take()
        if token == "~":
            return Not(self.formula())
        if token == "(":
            left = self.formula()
            op = self._take()
            if op not in ("&", "->"):
                raise CodecError(f"Junktor erwartet an Stelle {self.pos - 1}, gefunden {op!r}")
            right = self.formula()
            self._take(")")
            return And(left, right) if op == "&" else Implies(left, right)
        if token == "exists":
            var = self._take()
            if var not in VARIABLES:
                raise CodecError(f"Variable erwartet, gefunden {var!r}")
            self._take(".")
            return Exists(var, self.formula())
        if token in PREDICATES:
            self._take("(")
            args = [self.term()]
            while self._peek() == ",":
                self._take(",")
                args.append(self.term())
            self._take(")")
            return Pred(token, tuple(args))
        raise CodecError(f"Formelanfang erwartet an Stelle {self.pos - 1}, gefunden {token!r}")

    def term(self) -> Term:
        token = self._take()
        if token in VARIABLES:
            return Var(token)
        if token == "#":
            bits = ""
            while self._peek() in ("d0", "d1"):
                bits += self._take()[1]
            if not bits:
                raise CodecError("Numeral ohne Ziffern")
            return Numeral(int(bits, 2))
        raise CodecError(f"Term erwartet, gefunden {token!r}")

    def parse_all(self) -> Formula:
        f = self.formula()
        if self._peek() is not None:
            raise CodecError(f"Überzählige Tokens ab Stelle {self.pos}")
        return f


def parse_tokens(tokens: Sequence[str]) -> Formula:
    """Tokenfolge -> Formel. Nicht-kanonische Numerale (führende ``d0``) werden normalisiert."""
    return _TokenParser(tokens).parse_all()


def decode_formula(n: int) -> Formula | None:
    """Formel mit Gödelnummer ``n`` oder None, falls ``n`` keine (kanonische) Formel kodiert."""
    try:
        f = parse_tokens(decode(n))
    except CodecError:
        return None
    return f if goedel_number(f) == n else None


def split_lines(tokens: Sequence[str]) -> list[list[str]]:
    """Trennt eine Tokenfolge an ``;`` in Zeilen."""
    lines: list[list[str]] = [[]]
    for token in tokens:
        if token == ";":
            lines.append([])
        else:
            lines[-1].append(token)
    return lines
