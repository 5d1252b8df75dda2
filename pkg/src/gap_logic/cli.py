# -*- coding: utf-8 -*-
"""
:version: 1.2
:date: 17.10.2026

gap_logic CLI
-------------
Prüfungen und Audits der Wahrheitswertlücken-Semantik über die Kommandozeile.

Beispiele:
    gaplog prop taut "(P & ~P) -> Q"
    gaplog fol model.json "forall x. (F(x) -> G(x))" --semantics classical
    gaplog syllogism moods --scheme table2
    gaplog godel report default.json

Exit-Codes: 0 bestätigt, 1 semantisch negativ, 2 Aufruf/Syntax/Modell,
3 Ressourcengrenze, 4 Selbsttest fehlgeschlagen.
"""

# -------- start import block ---------
from __future__ import annotations

import argparse
import ast
import json
import sys
from dataclasses import dataclass
from typing import Any, Callable

import pandas as pd

from gap_logic.config import ConfigManager
from gap_logic.errors import CodecError, FormulaSyntaxError, ModelError, ResourceCapError, SelfCheckError
from gap_logic.logger import MainLogger

# -------- /import block ---------

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_SELF_CHECK = 4

_logger = MainLogger.get_logger("cli")


@dataclass
class RunConfig:
    """Aufgelöste Einstellungen eines CLI-Laufs (Flags vor config.yaml vor Defaults)."""

    command: str
    action: str | None = None
    semantics: str = "presup"
    scheme: str = "presup"
    max_domain: int = 8
    max_n: int | None = None
    fmt: str = "text"
    csv: bool = False
    exhaustive: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        defaults = ConfigManager.load().get("defaults", {})

        def pick(name: str, fallback: Any) -> Any:
            value = getattr(args, name, None)
            return value if value is not None else defaults.get(name, fallback)

        return cls(
            command=args.command,
            action=getattr(args, "action", None),
            semantics=pick("semantics", "presup"),
            scheme=getattr(args, "scheme", None) or "presup",
            max_domain=int(pick("max_domain", 8)),
            max_n=getattr(args, "max_n", None),
            fmt=pick("format", "text"),
            csv=bool(getattr(args, "csv", False)),
            exhaustive=bool(getattr(args, "exhaustive", False)),
        )


# -------------------------------------------------------------------
# Ausgabe
# -------------------------------------------------------------------
def _emit_json(data: dict[str, Any]) -> None:
    print(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False))


def _emit_frame(frame: pd.DataFrame, csv: bool) -> None:
    if csv:
        print(frame.to_csv(sep=";", index=False), end="")
    else:
        print(frame.to_string(index=False))


# -------------------------------------------------------------------
# prop
# -------------------------------------------------------------------
def cmd_prop(formula: str, mode: str, cfg: RunConfig) -> int:
    """Wahrheitstafel bzw. Test auf truth-relevant tautology."""
    from gap_logic.prop3 import TruthValue3, classical_tautology, table_to_frame, truth_table3
    from gap_logic.syntax import canonicalize, parse_formula, render

    f = parse_formula(formula)
    rows = truth_table3(f)
    trt = all(row.value is TruthValue3.T for row in rows)
    vacuous = all(row.value is TruthValue3.N for row in rows)

    if cfg.fmt == "json":
        _emit_json({
            "formula": render(f),
            "canonical": render(canonicalize(f)),
            "mode": mode,
            "rows": [{"valuation": row.valuation, "value": row.value.value} for row in rows],
            "trt_tautology": trt,
            "classical_tautology": classical_tautology(f),
        })
    elif mode == "table":
        _emit_frame(table_to_frame(rows), cfg.csv)
    else:
        print(f"formula:   {render(f)}")
        print(f"canonical: {render(canonicalize(f))}")
        print(f"classical tautology: {'yes' if classical_tautology(f) else 'no'}")
        if trt:
            print(f"truth-relevant tautology (T on all {len(rows)} rows)")
        elif vacuous:
            print("NOT a truth-relevant tautology (vacuous on all rows)")
        else:
            t_rows = sum(row.value is TruthValue3.T for row in rows)
            print(f"NOT a truth-relevant tautology ({t_rows}/{len(rows)} rows T)")

    if mode == "taut" and not trt:
        return EXIT_NEGATIVE
    return EXIT_OK


# -------------------------------------------------------------------
# fol
# -------------------------------------------------------------------
def describe_verdict(value: Any, empty_terms: tuple[str, ...], note: str = "") -> str:
    """``N (presupposition failed: term F is empty)`` bzw. nur der Wert."""
    if value.value != "N":
        return value.value
    if len(empty_terms) == 1:
        return f"N (presupposition failed: term {empty_terms[0]} is empty)"
    if empty_terms:
        return f"N (presupposition failed: terms {', '.join(empty_terms)} are empty)"
    return f"N ({note})" if note else "N"


def cmd_fol(model: str, formula: str, cfg: RunConfig) -> int:
    from gap_logic.fol3 import Interpretation, eval_classical_fol, explain3_fol
    from gap_logic.syntax import parse_formula, render

    interpretation = Interpretation.load(model)
    f = parse_formula(formula)
    if cfg.semantics == "classical":
        value, empty, note = eval_classical_fol(f, interpretation), (), ""
    elif cfg.semantics == "presup":
        verdict = explain3_fol(f, interpretation)
        value, empty, note = verdict.value, verdict.empty_terms, verdict.note
    else:
        raise ValueError(f"Unbekannte Semantik {cfg.semantics!r} (classical|presup)")

    if cfg.fmt == "json":
        _emit_json({
            "formula": render(f),
            "model": interpretation.to_json(),
            "semantics": cfg.semantics,
            "value": value.value,
            "empty_terms": list(empty),
            "note": note,
        })
    else:
        print(describe_verdict(value, empty, note))
    return EXIT_OK


# -------------------------------------------------------------------
# syllogism
# -------------------------------------------------------------------
def cmd_syllogism(action: str, cfg: RunConfig) -> int:
    from gap_logic.schemes import get_scheme
    from gap_logic.syllogistics import MOOD_NAMES, audit_moods, audit_square

    scheme = get_scheme(cfg.scheme)
    if action == "square":
        report = audit_square(scheme, cfg.max_domain, exhaustive=cfg.exhaustive)
        if cfg.fmt == "json":
            _emit_json(report.to_dict())
        else:
            print(f"scheme {scheme.name}: {scheme.description} (domains 1..{cfg.max_domain})")
            print(f"reading: {scheme.reading}")
            _emit_frame(report.to_frame(), cfg.csv)
            for law in report.laws:
                if not law.passed:
                    where = law.countermodel.describe() if law.countermodel else "-"
                    print(f"  FAIL {law.law}: countermodel {where} {law.detail}".rstrip())
            print(report.summary())
        return EXIT_OK if report.matches else EXIT_NEGATIVE

    audit = audit_moods(scheme, cfg.max_domain)
    if cfg.fmt == "json":
        _emit_json(audit.to_dict())
    elif cfg.csv:
        _emit_frame(audit.to_frame(), csv=True)
    else:
        print(audit.summary())
        print(f"reading: {scheme.reading}")
        for mood in audit.valid:
            name = MOOD_NAMES.get(mood.name, "")
            print(f"  {mood.name:<6} {name}".rstrip())
    return EXIT_OK if audit.matches else EXIT_NEGATIVE


# -------------------------------------------------------------------
# godel
# -------------------------------------------------------------------
def _term_note(report: Any) -> str:
    if not report.empty_terms:
        return report.verdict.value
    return f"{report.verdict.value} ({', '.join(report.empty_terms)} empty)"


def cmd_godel(action: str, system_path: str, cfg: RunConfig) -> int:
    from gap_logic.goedel import (
        ToySystem,
        build_fixed_point,
        default_sample,
        diag,
        eval_G_unrolled,
        eval_H,
        eval_instance_K,
        eval_J,
    )
    from gap_logic.syntax import render

    system = ToySystem.load(system_path)
    fp = build_fixed_point(system)

    if action == "build":
        if cfg.fmt == "json":
            _emit_json({
                **fp.to_dict(),
                "diag_k": str(diag(fp.k)),
                "self_check": diag(fp.k) == fp.gnum_G,
                "closure_size": len(system.closure),
                "U": render(fp.U),
            })
        else:
            print(f"U   = {render(fp.U)}")
            print(f"k   = {fp.k}")
            print(f"<G> = {fp.gnum_G}")
            print("diag(k) = <G> verified")
            print(f"closure: {len(system.closure)} sentences; G provable: {'yes' if fp.g_provable else 'no'}")
        return EXIT_OK

    if action == "unroll":
        sample = list(range(1, cfg.max_n + 1)) if cfg.max_n is not None else default_sample(fp, system)
        unrolled = eval_G_unrolled(fp, system, sample)
        if cfg.fmt == "json":
            _emit_json(unrolled.to_dict())
        else:
            frame = pd.DataFrame.from_records([
                {
                    "n": str(r.n) if r.n != fp.gnum_G else "<G>",
                    "K_n": r.verdict.value,
                    "empty": ", ".join(r.empty_terms),
                    "vacuous direction": " / ".join(r.directions),
                }
                for r in unrolled.instances
            ])
            _emit_frame(frame, cfg.csv)
            print(f"G (unrolled, z first): {unrolled.overall.value.value} -- {unrolled.overall.note}")
            print(f"G (as written, classical): {unrolled.as_written.value}")
            print(f"G (unrolled, x first): {unrolled.x_first.value}")
        return EXIT_OK

    # report
    decisive = eval_instance_K(fp.gnum_G, fp, system)
    h = eval_H(fp, system)
    gap_j = eval_J(fp, system, "presup")
    classical_j = eval_J(fp, system, "classical")
    if cfg.fmt == "json":
        _emit_json({
            **fp.to_dict(),
            "K": decisive.to_dict(),
            "H": h.value,
            "J": {"presup": gap_j.to_dict(), "classical": classical_j.to_dict()},
        })
    else:
        print(f"K: {_term_note(decisive)} / H: {h.value} / J: {gap_j.value.value} -- {gap_j.note}")
        print(f"classical: K: {decisive.classical.value} / G: {classical_j.witness['G']} "
              f"/ H: {classical_j.witness['H']} / J: {classical_j.value.value} -- {classical_j.note}")
    return EXIT_OK


# -------------------------------------------------------------------
# schemes / config
# -------------------------------------------------------------------
def cmd_schemes(cfg: RunConfig) -> int:
    from gap_logic.schemes import AVAILABLE_SCHEMES

    if cfg.fmt == "json":
        _emit_json({
            name: {"description": cls.description, "reading": cls.reading} for name, cls in AVAILABLE_SCHEMES.items()
        })
        return EXIT_OK
    print("Verfügbare Schemata:")
    for name, cls in sorted(AVAILABLE_SCHEMES.items()):
        print(f"  - {name}: {cls.description}")
        print(f"      {cls.reading}")
    return EXIT_OK


def parse_value(text: str) -> Any:
    """Literal (Zahl, bool, Liste ...) falls möglich, sonst der Text."""
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        return text


def cmd_config(args: argparse.Namespace) -> int:
    if args.action == "show":
        print(f"# {ConfigManager.config_path}")
        print(ConfigManager.show(), end="")
    elif args.action == "init":
        path = ConfigManager.create_default(path=args.path, overwrite=args.overwrite)
        print(f"✅ Konfiguration: {path}")
    elif args.action == "edit":
        path = ConfigManager.edit(args.key, parse_value(args.value))
        print(f"✅ {args.key} = {args.value} ({path})")
    else:
        print("Ungültiger config-Befehl.", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


# -------------------------------------------------------------------
# Parser-Erstellung (für Sphinx & CLI)
# -------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    """
    Baut den ArgumentParser für das CLI und gibt ihn zurück.
    Wichtig: Keine Seiteneffekte (kein Logging, keine IO), damit Sphinx
    via sphinx-argparse diese Funktion gefahrlos importieren und rendern kann.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=None,
                        help="Ausgabeformat (default: defaults.format aus config.yaml, sonst text)")
    common.add_argument("-l", "--log-level", dest="log_level", type=lambda s: s.upper(),
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], default="WARNING",
                        help="Logging-Level für den Konsolenhandler (stderr)")

    parser = argparse.ArgumentParser(
        prog="gaplog",
        description="CLI für gap_logic: Präsuppositionen, Wahrheitswertlücken, Syllogistik und Gödelsätze.",
        epilog="Optionen wie --format und -l stehen hinter dem Unterbefehl, z. B. gaplog prop taut \"P -> P\" --format json",
    )
    subparsers = parser.add_subparsers(dest="command", help="Verfügbare Befehle")

    # --- prop command -----------------------------------------------------------------------------------------------
    parser_prop = subparsers.add_parser("prop", parents=[common], help="Aussagenlogik (dreiwertig)")
    parser_prop.add_argument("action", choices=["taut", "table"], help="Tautologietest oder Wahrheitstafel")
    parser_prop.add_argument("formula", help='Formel, z. B. "(P & ~P) -> Q"')
    parser_prop.add_argument("--csv", action="store_true", help="Tafel als CSV (Trennzeichen ;)")

    # --- fol command ------------------------------------------------------------------------------------------------
    parser_fol = subparsers.add_parser("fol", parents=[common], help="Formel in einem endlichen Modell auswerten")
    parser_fol.add_argument("model", help="Modelldatei (JSON)")
    parser_fol.add_argument("formula", help='Formel, z. B. "forall x. (F(x) -> G(x))"')
    parser_fol.add_argument("--semantics", choices=["presup", "classical"], default=None,
                            help="Semantik (default: presup)")

    # --- syllogism command ------------------------------------------------------------------------------------------
    parser_syl = subparsers.add_parser("syllogism", parents=[common], help="Quadrat und Modi prüfen")
    parser_syl.add_argument("action", choices=["square", "moods"], help="Audit")
    parser_syl.add_argument("--scheme", default="presup", help="Übersetzung: table1 | table2 | presup")
    parser_syl.add_argument("--max-domain", dest="max_domain", type=int, default=None,
                            help="Größte Domäne (default: 8)")
    parser_syl.add_argument("--exhaustive", action="store_true",
                            help="Alle Modelle statt eines Vertreters je Zellmenge")
    parser_syl.add_argument("--csv", action="store_true", help="Tabelle als CSV (Trennzeichen ;)")

    # --- godel command ----------------------------------------------------------------------------------------------
    parser_godel = subparsers.add_parser("godel", parents=[common], help="Fixpunkt und Abrollen von G")
    parser_godel.add_argument("action", choices=["build", "unroll", "report"], help="Aktion")
    parser_godel.add_argument("system", help="Systemdatei (JSON); 'default' für das mitgelieferte System")
    parser_godel.add_argument("--max-n", dest="max_n", type=int, default=None,
                              help="Stichprobe nur n = 1..N (default: 1..64 plus <G> und Hüllenkodes)")
    parser_godel.add_argument("--csv", action="store_true", help="Tabelle als CSV (Trennzeichen ;)")

    # --- schemes command --------------------------------------------------------------------------------------------
    subparsers.add_parser("schemes", parents=[common], help="Listet die Übersetzungsschemata")

    # --- config command  --------------------------------------------------------------------------------------------
    parser_config = subparsers.add_parser("config", parents=[common], help="Verwaltet die Konfiguration")
    config_subparsers = parser_config.add_subparsers(dest="action", help="Verfügbare Aktionen")
    config_subparsers.add_parser("show", help="Zeigt die wirksame Konfiguration an")
    parser_init = config_subparsers.add_parser("init", help="Erstellt eine Default-Konfiguration")
    parser_init.add_argument("--overwrite", action="store_true", help="Überschreibt bestehende Datei")
    parser_init.add_argument("--path", type=str, default=None,
                             help="Pfad zur Konfigurationsdatei (default: ~/.config/gap_logic/config.yaml)")
    parser_edit = config_subparsers.add_parser("edit", help="Ändert einen Config-Eintrag")
    parser_edit.add_argument("key", help="Pfad (z. B. defaults.max_domain)")
    parser_edit.add_argument("value", help="Neuer Wert")

    return parser


# -------------------------------------------------------------------
# Hauptfunktion (nur hier: Logging & Ausführung)
# -------------------------------------------------------------------
def _configure_logging(stream_level: str) -> None:
    """Konfiguriert das Logging, nur im CLI-Lauf, niemals beim Import (Sphinx!)."""
    # -l DEBUG wins over logging.level
    level = "DEBUG" if stream_level == "DEBUG" else str(ConfigManager.get("logging.level", "INFO"))
    MainLogger.configure(
        level=level,
        logfile=ConfigManager.get("logging.logfile"),
        stream_level=stream_level,
    )
    MainLogger.get_logger("cli").debug("-------------------- Neue CLI-Session --------------------")
    MainLogger.get_logger("cli").debug(MainLogger.debug_overview())


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "config":
        return cmd_config(args)
    cfg = RunConfig.from_args(args)
    handlers: dict[str, Callable[[], int]] = {
        "prop": lambda: cmd_prop(args.formula, args.action, cfg),
        "fol": lambda: cmd_fol(args.model, args.formula, cfg),
        "syllogism": lambda: cmd_syllogism(args.action, cfg),
        "godel": lambda: cmd_godel(args.action, args.system, cfg),
        "schemes": lambda: cmd_schemes(cfg),
    }
    return handlers[args.command]()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    try:
        _configure_logging(args.log_level)
        return _dispatch(args)
    except FormulaSyntaxError as e:
        _logger.debug("Syntaxfehler", exc_info=True)
        print(f"❌ Syntaxfehler: {e}", file=sys.stderr)
        if e.text:
            print(f"   {e.text}\n   {' ' * e.position}^", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as e:
        _logger.debug("Obergrenze", exc_info=True)
        print(f"❌ Obergrenze überschritten: {e}", file=sys.stderr)
        return EXIT_CAP
    except SelfCheckError as e:
        _logger.error(f"Selbsttest fehlgeschlagen: {e}", exc_info=True)
        print(f"❌ Selbsttest fehlgeschlagen: {e}", file=sys.stderr)
        return EXIT_SELF_CHECK
    except (ModelError, CodecError, FileNotFoundError, ValueError) as e:
        _logger.debug("Eingabefehler", exc_info=True)
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
