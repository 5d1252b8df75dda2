# -*- coding: utf-8 -*-
"""
:version: 1.2
:date: 17.10.2026

syntax
------
Formel-AST (Aussagen- und Prädikatenlogik mit Numeralen), Parser, Printer und
Kanonisierung in die Basis {~, &, exists} mit Elimination doppelter Negation.

Grammatik (ASCII)::

    formula := iff ; iff := imp ( "<->" imp )* ; imp := or ( "->" imp )? ;
    or := and ( "|" and )* ; and := unary ( "&" unary )* ;
    unary := "~" unary | "(" formula ")" | quant | atom ;
    quant := ("forall" | "exists") ident "." formula     # Rumpf reicht maximal nach rechts
    atom := ident ( "(" term ( "," term )* ")" )? ;
    term := ident | natural-literal

Beispiel:
    >>> f = parse_formula("forall x. (F(x) -> G(x))")
    >>> render(canonicalize(f))
    '~(exists x. (F(x) & ~G(x)))'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Union

from gap_logic.errors import ArityConflictError, FormulaSyntaxError, SubstitutionError


KEYWORDS = frozenset({"forall", "exists"})


# ----------------------------------------------------------------------
# Terme
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Numeral:
    """Geschlossener Term; beliebig große natürliche Zahl."""
    value: int

    def __post_init__(self) -> None:
        if isinstance(self.value, bool) or not isinstance(self.value, int) or self.value < 0:
            raise ValueError(f"Numeral erwartet natürliche Zahl, nicht {self.value!r}")

    def __str__(self) -> str:
        return str(self.value)


Term = Union[Var, Numeral]


# ----------------------------------------------------------------------
# Formeln
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Pred:
    name: str
    args: tuple[Term, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Not:
    sub: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class ForAll:
    var: str
    body: "Formula"


Formula = Union[Atom, Pred, Not, And, Or, Implies, Iff, Exists, ForAll]

BINARY = (And, Or, Implies, Iff)
QUANTIFIERS = (Exists, ForAll)
_BINARY_SYMBOL = {And: "&", Or: "|", Implies: "->", Iff: "<->"}


def conj(*parts: Formula) -> Formula:
    """Linksassoziative Konjunktion ``((a & b) & c)``."""
    result = parts[0]
    for part in parts[1:]:
        result = And(result, part)
    return result


def disj(*parts: Formula) -> Formula:
    """Linksassoziative Disjunktion ``((a | b) | c)``."""
    result = parts[0]
    for part in parts[1:]:
        result = Or(result, part)
    return result


# ----------------------------------------------------------------------
# Tokenizer
# ----------------------------------------------------------------------
class Token(NamedTuple):
    kind: str   # IFF, IMP, SYM, IDENT, KW, NUM, EOF
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"(?P<IFF><->)|(?P<IMP>->)|(?P<SYM>[~&|(),.])|(?P<IDENT>[A-Za-z][A-Za-z0-9]*)|(?P<NUM>[0-9]+)"
)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise FormulaSyntaxError(f"Unerwartetes Zeichen {text[pos]!r}", pos, text)
        kind = match.lastgroup
        value = match.group()
        if kind == "IDENT" and value in KEYWORDS:
            kind = "KW"
        tokens.append(Token(kind, value, pos))
        pos = match.end()
    tokens.append(Token("EOF", "", len(text)))
    return tokens


# ----------------------------------------------------------------------
# Parser (rekursiver Abstieg, eine Methode je Präzedenzstufe)
# ----------------------------------------------------------------------
class _Parser:

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, kind: str, text: str | None = None) -> Token | None:
        token = self.current
        if token.kind == kind and (text is None or token.text == text):
            return self._advance()
        return None

    def _expect(self, kind: str, text: str | None = None) -> Token:
        token = self._accept(kind, text)
        if token is None:
            wanted = text or kind
            found = self.current.text or "Eingabeende"
            raise FormulaSyntaxError(f"Erwartet {wanted!r}, gefunden {found!r}", self.current.pos, self.text)
        return token

    def parse(self) -> Formula:
        formula = self.parse_iff()
        if self.current.kind != "EOF":
            raise FormulaSyntaxError(f"Unerwartetes Token {self.current.text!r}", self.current.pos, self.text)
        return formula

    def parse_iff(self) -> Formula:
        left = self.parse_imp()
        while self._accept("IFF"):
            left = Iff(left, self.parse_imp())
        return left

    def parse_imp(self) -> Formula:
        left = self.parse_or()
        if self._accept("IMP"):
            return Implies(left, self.parse_imp())
        return left

    def parse_or(self) -> Formula:
        left = self.parse_and()
        while self._accept("SYM", "|"):
            left = Or(left, self.parse_and())
        return left

    def parse_and(self) -> Formula:
        left = self.parse_unary()
        while self._accept("SYM", "&"):
            left = And(left, self.parse_unary())
        return left

    def parse_unary(self) -> Formula:
        token = self.current
        if self._accept("SYM", "~"):
            return Not(self.parse_unary())
        if self._accept("SYM", "("):
            inner = self.parse_iff()
            self._expect("SYM", ")")
            return inner
        if token.kind == "KW":
            self._advance()
            var = self._expect("IDENT").text
            self._expect("SYM", ".")
            body = self.parse_iff()
            return Exists(var, body) if token.text == "exists" else ForAll(var, body)
        if token.kind == "IDENT":
            return self.parse_atom()
        found = token.text or "Eingabeende"
        raise FormulaSyntaxError(f"Formel erwartet, gefunden {found!r}", token.pos, self.text)

    def parse_atom(self) -> Formula:
        name = self._advance().text
        if not self._accept("SYM", "("):
            return Atom(name)
        args = [self.parse_term()]
        while self._accept("SYM", ","):
            args.append(self.parse_term())
        self._expect("SYM", ")")
        return Pred(name, tuple(args))

    def parse_term(self) -> Term:
        token = self.current
        if self._accept("NUM"):
            return Numeral(int(token.text))
        if self._accept("IDENT"):
            return Var(token.text)
        found = token.text or "Eingabeende"
        raise FormulaSyntaxError(f"Term erwartet, gefunden {found!r}", token.pos, self.text)


def parse_formula(text: str) -> Formula:
    """Parst einen Formeltext in einen AST.

    Raises:
        FormulaSyntaxError: bei Syntaxfehlern (mit Zeichenposition).
        ArityConflictError: wenn ein Prädikatname mit verschiedenen Stelligkeiten vorkommt.
    """
    formula = _Parser(text).parse()
    arity_map(formula)
    return formula


# ----------------------------------------------------------------------
# Traversierung
# ----------------------------------------------------------------------
def subformulas(f: Formula) -> Iterator[Formula]:
    """Alle Teilformeln in Präordnung (inkl. ``f`` selbst)."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Not):
            stack.append(node.sub)
        elif isinstance(node, BINARY):
            stack.append(node.right)
            stack.append(node.left)
        elif isinstance(node, QUANTIFIERS):
            stack.append(node.body)


def arity_map(f: Formula) -> dict[str, int]:
    """Stelligkeit je Prädikatname (Atome haben Stelligkeit 0)."""
    arities: dict[str, int] = {}
    for node in subformulas(f):
        if isinstance(node, Atom):
            name, arity = node.name, 0
        elif isinstance(node, Pred):
            name, arity = node.name, len(node.args)
        else:
            continue
        known = arities.setdefault(name, arity)
        if known != arity:
            raise ArityConflictError(f"Prädikat {name!r} mit Stelligkeit {known} und {arity} verwendet")
    return arities


def atoms(f: Formula) -> list[str]:
    """Namen der Satzbuchstaben, lexikographisch sortiert."""
    return sorted({node.name for node in subformulas(f) if isinstance(node, Atom)})


def is_propositional(f: Formula) -> bool:
    return not any(isinstance(node, (Pred,) + QUANTIFIERS) for node in subformulas(f))


def free_variables(f: Formula) -> frozenset[str]:
    """Freie Variablen; Quantoren binden ihre Variable im Rumpf."""
    if isinstance(f, Atom):
        return frozenset()
    if isinstance(f, Pred):
        return frozenset(arg.name for arg in f.args if isinstance(arg, Var))
    if isinstance(f, Not):
        return free_variables(f.sub)
    if isinstance(f, BINARY):
        return free_variables(f.left) | free_variables(f.right)
    if isinstance(f, QUANTIFIERS):
        return free_variables(f.body) - {f.var}
    raise TypeError(f"Keine Formel: {f!r}")


def substitute(f: Formula, v: str, t: Term) -> Formula:
    """Ersetzt jedes freie Vorkommen von ``v`` durch das Numeral ``t``.

    Nur geschlossene Numerale sind erlaubt, daher kann keine Variable eingefangen werden.
    """
    if not isinstance(t, Numeral):
        raise SubstitutionError(f"Substitution nur mit Numeralen erlaubt, nicht {t!r}")
    return _substitute(f, v, t)


def _substitute(f: Formula, v: str, t: Numeral) -> Formula:
    if isinstance(f, Atom):
        return f
    if isinstance(f, Pred):
        return Pred(f.name, tuple(t if isinstance(a, Var) and a.name == v else a for a in f.args))
    if isinstance(f, Not):
        return Not(_substitute(f.sub, v, t))
    if isinstance(f, BINARY):
        return type(f)(_substitute(f.left, v, t), _substitute(f.right, v, t))
    if isinstance(f, QUANTIFIERS):
        if f.var == v:
            return f
        return type(f)(f.var, _substitute(f.body, v, t))
    raise TypeError(f"Keine Formel: {f!r}")


# ----------------------------------------------------------------------
# Printer
# ----------------------------------------------------------------------
def render(f: Formula, fully_parenthesized: bool = False) -> str:
    """Deterministische Textform; ``parse_formula(render(f)) == f``.

    Binäre Junktoren stehen immer in Klammern, Quantoren werden als Operand geklammert.
    Mit ``fully_parenthesized`` wird zusätzlich jede Negation als Operand geklammert.
    """
    return _render(f, operand=False, full=fully_parenthesized)


def render_term(t: Term) -> str:
    return str(t)


def _render(f: Formula, operand: bool, full: bool) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Pred):
        return f"{f.name}({', '.join(render_term(a) for a in f.args)})"
    if isinstance(f, Not):
        text = "~" + _render(f.sub, operand=True, full=full)
        return f"({text})" if (full and operand) else text
    if isinstance(f, BINARY):
        left = _render(f.left, operand=True, full=full)
        right = _render(f.right, operand=True, full=full)
        return f"({left} {_BINARY_SYMBOL[type(f)]} {right})"
    if isinstance(f, QUANTIFIERS):
        keyword = "exists" if isinstance(f, Exists) else "forall"
        text = f"{keyword} {f.var}. {_render(f.body, operand=False, full=full)}"
        return f"({text})" if operand else text
    raise TypeError(f"Keine Formel: {f!r}")


# ----------------------------------------------------------------------
# Kanonisierung
# ----------------------------------------------------------------------
def negate(f: Formula) -> Formula:
    """Negation ohne doppelte Negation: ``negate(~A) = A``."""
    return f.sub if isinstance(f, Not) else Not(f)


@lru_cache(maxsize=65536)
def canonicalize(f: Formula) -> Formula:
    """Übersetzt in die Basis {~, &, exists} und eliminiert doppelte Negationen.

    A->B  ~> ~(A & ~B)
    A|B   ~> ~(~A & ~B)
    A<->B ~> ~(A & ~B) & ~(B & ~A)
    forall x.A ~> ~(exists x.~A)

    Idempotent und klassisch wahrheitserhaltend.
    """
    if isinstance(f, (Atom, Pred)):
        return f
    if isinstance(f, Not):
        return negate(canonicalize(f.sub))
    if isinstance(f, And):
        return And(canonicalize(f.left), canonicalize(f.right))
    if isinstance(f, Or):
        return negate(And(negate(canonicalize(f.left)), negate(canonicalize(f.right))))
    if isinstance(f, Implies):
        return negate(And(canonicalize(f.left), negate(canonicalize(f.right))))
    if isinstance(f, Iff):
        a, b = canonicalize(f.left), canonicalize(f.right)
        return And(negate(And(a, negate(b))), negate(And(b, negate(a))))
    if isinstance(f, Exists):
        return Exists(f.var, canonicalize(f.body))
    if isinstance(f, ForAll):
        return negate(Exists(f.var, negate(canonicalize(f.body))))
    raise TypeError(f"Keine Formel: {f!r}")


def is_canonical(f: Formula) -> bool:
    """Nur Atom/Pred/Not/And/Exists und keine Negation direkt über einer Negation."""
    for node in subformulas(f):
        if isinstance(node, (Or, Implies, Iff, ForAll)):
            return False
        if isinstance(node, Not) and isinstance(node.sub, Not):
            return False
    return True
