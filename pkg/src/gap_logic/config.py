# -*- coding: utf-8 -*-
"""
:version: 1.3
:date: 17.10.2026

ConfigManager
-------------
Lädt die zentrale Konfigurationsdatei (config.yaml) für das Projekt.
Suchreihenfolge:
  1. ~/.config/gap_logic/config.yaml
  2. ./config.yaml (aktuelles Arbeitsverzeichnis)
  3. ../config.yaml (eine Ebene höher)
  4. ./config/config.yaml
  5. ../config/config.yaml

Wird keine Datei gefunden, gelten die eingebauten Defaults (``DEFAULTS``).
Eine Datei wird nur explizit über ``create_default()`` (CLI: ``gaplog config init``) angelegt.
"""

import copy
import textwrap
from io import StringIO
from pathlib import Path
from typing import Any, Dict

from ruamel.yaml import YAML

from gap_logic.logger import MainLogger


DEFAULTS: Dict[str, Any] = {
    "limits": {
        "atom_cap": 20,
        "model_cap": 2 ** 24,
    },
    "defaults": {
        "semantics": "presup",
        "max_domain": 8,
        "max_n": 64,
        "format": "text",
    },
    "logging": {
        "level": "INFO",
        "logfile": "~/.config/gap_logic/gaplog.log",
    },
}


# Helfer für classproperty
class classproperty:
    def __init__(self, f):
        self.f = f

    def __get__(self, obj, owner):
        return self.f(owner)


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Rekursives Zusammenführen; Werte aus ``override`` gewinnen."""
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """Zentrale Verwaltung der Projektkonfiguration."""

    _config_cache: Dict[str, Any] | None = None
    _config_path: Path | None = None
    _yaml = YAML()
    _yaml.preserve_quotes = True
    _logger = MainLogger.get_logger("config_manager")

    @classproperty
    def config_path(cls) -> str:
        """Gibt den Pfad der aktuell geladenen Konfigurationsdatei zurück."""
        try:
            return str(cls._find_config_file())
        except FileNotFoundError:
            return "Keine Konfigurationsdatei gefunden (eingebaute Defaults aktiv)."

    @classmethod
    def load(cls, ignore_cache: bool = False, path: str | Path | None = None) -> Dict[str, Any]:
        """Lädt und cached die YAML-Konfiguration, ergänzt um fehlende Defaults.

        Args:
            ignore_cache (bool): Wenn True, wird der Cache ignoriert und die Datei neu geladen.
            path: Optional expliziter Pfad; überschreibt die Suchreihenfolge.

        Returns:
            Dict[str, Any]: Geladene Konfigurationsdaten.
        """
        if path is not None:
            cls._config_path = Path(path).expanduser()
            ignore_cache = True

        if (cls._config_cache is not None) and (not ignore_cache):
            return cls._config_cache

        try:
            config_path = cls._find_config_file()
        except FileNotFoundError:
            cls._logger.debug("Keine Konfigurationsdatei gefunden. Verwende eingebaute Defaults.")
            cls._config_cache = copy.deepcopy(DEFAULTS)
            return cls._config_cache

        with open(config_path, "r", encoding="utf-8") as f:
            cls._logger.debug(f"Lade Konfiguration aus {config_path}")
            config = cls._yaml.load(f) or {}
        if not isinstance(config, dict):
            raise ValueError(f"Ungültiges Format in {config_path}")

        cls._config_cache = _merge(DEFAULTS, _plain(config))
        return cls._config_cache

    # ------------------------------------------------------------------
    # Hilfsfunktionen
    # ------------------------------------------------------------------
    @classmethod
    def _find_config_file(cls) -> Path:
        """Sucht config.yaml in mehreren typischen Pfaden."""
        if cls._config_path is not None:
            if cls._config_path.exists():
                return cls._config_path
            raise FileNotFoundError(f"Konfigurationsdatei nicht gefunden: {cls._config_path}")

        search_paths = [
            Path.home() / ".config" / "gap_logic" / "config.yaml",
            Path.cwd() / "config.yaml",
            Path.cwd().parent / "config.yaml",
            Path.cwd() / "config" / "config.yaml",
            Path.cwd().parent / "config" / "config.yaml",
        ]
        for path in search_paths:
            if path.exists():
                cls._config_path = path
                return path

        raise FileNotFoundError(
            "Keine Konfigurationsdatei gefunden.\n"
            "Gesucht unter:\n" + "\n".join(f" - {p}" for p in search_paths)
        )

    # ------------------------------------------------------------------
    # Zugriffsfunktionen
    # ------------------------------------------------------------------
    @classmethod
    def get(cls, key_path: str, default: Any = None) -> Any:
        """Liest einen Wert per Punkt-Pfad, z. B. ``limits.atom_cap``."""
        node: Any = cls.load()
        for key in key_path.split("."):
            if not isinstance(node, dict) or key not in node:
                return default
            node = node[key]
        return node

    @classmethod
    def atom_cap(cls) -> int:
        return int(cls.get("limits.atom_cap", DEFAULTS["limits"]["atom_cap"]))

    @classmethod
    def model_cap(cls) -> int:
        return int(cls.get("limits.model_cap", DEFAULTS["limits"]["model_cap"]))

    # ------------------------------------------------------------------
    # CLI-Hilfsfunktionen (anzeigen, löschen, bearbeiten)
    # ------------------------------------------------------------------
    @classmethod
    def show(cls) -> str:
        """Gibt den aktuell wirksamen Config-Inhalt als YAML-Text zurück."""
        stream = StringIO()
        cls._yaml.dump(cls.load(), stream)
        return stream.getvalue()

    @classmethod
    def clear(cls) -> None:
        """Leert den internen Cache; die nächste Abfrage liest die Datei neu."""
        cls._config_cache = None
        cls._config_path = None

    @classmethod
    def edit(cls, key_path: str, value: Any) -> Path:
        """
        Ändert oder fügt einen Eintrag in der Config-Datei hinzu.

        Args:
            key_path (str): Punkt-getrennter Pfad, z. B. 'defaults.max_domain'
            value (Any): Neuer Wert

        Raises:
            FileNotFoundError: Wenn keine config.yaml existiert (vorher ``config init``).
        """
        path = cls._find_config_file()
        with open(path, "r", encoding="utf-8") as f:
            cfg = cls._yaml.load(f) or {}
        keys = key_path.split(".")
        node = cfg
        for k in keys[:-1]:
            node = node.setdefault(k, {})
        node[keys[-1]] = value

        with open(path, "w", encoding="utf-8") as f:
            cls._yaml.dump(cfg, f)
        cls._config_cache = None
        cls._logger.debug(f"Config-Eintrag '{key_path}' auf '{value}' in {path} gesetzt.")
        return path

    # ------------------------------------------------------------------
    # Default-Config erstellen
    # ------------------------------------------------------------------
    @classmethod
    def create_default(cls, path: str | None = None, overwrite: bool = False) -> Path:
        """
        Erstellt eine Standard-config.yaml mit Kommentaren.

        Args:
            path: Optionaler Pfad (Standard: ~/.config/gap_logic/config.yaml)
            overwrite: Wenn True, überschreibt eine bestehende Datei.

        Returns:
            Path: Pfad zur Konfigurationsdatei.
        """
        default_content = textwrap.dedent(f"""\
            limits:
            # Obergrenzen für erschöpfende Suchen
                atom_cap: {DEFAULTS['limits']['atom_cap']}            # max. Atome für Wahrheitstafeln (2^n Zeilen)
                model_cap: {DEFAULTS['limits']['model_cap']}    # max. Modelle pro Domänengröße

            defaults:
            # Voreinstellungen der CLI (per Flag überschreibbar)
                semantics: {DEFAULTS['defaults']['semantics']}       # presup | classical
                max_domain: {DEFAULTS['defaults']['max_domain']}          # größte geprüfte Domäne
                max_n: {DEFAULTS['defaults']['max_n']}              # Stichprobe n = 1..max_n beim Abrollen von G
                format: {DEFAULTS['defaults']['format']}            # text | json

            logging:
                level: {DEFAULTS['logging']['level']}
                logfile: {DEFAULTS['logging']['logfile']}
            """)

        target = Path(path).expanduser() if path else Path.home() / ".config" / "gap_logic" / "config.yaml"
        if target.exists() and not overwrite:
            cls._logger.debug(f"Config-Datei existiert bereits: {target}")
            return target

        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(default_content, encoding="utf-8")
        cls._config_path = target
        cls._config_cache = None
        cls._logger.debug(f"✅ Default-Konfiguration erstellt unter: {target}")
        return target


def _plain(node: Any) -> Any:
    """Wandelt ruamel-Container (CommentedMap/Seq) in einfache dicts/lists."""
    if isinstance(node, dict):
        return {str(k): _plain(v) for k, v in node.items()}
    if isinstance(node, list):
        return [_plain(v) for v in node]
    return node


if __name__ == "__main__":
    MainLogger.configure()
    print(ConfigManager.config_path)
    print(ConfigManager.show())
