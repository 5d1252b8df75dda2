# -*- coding: utf-8 -*-
"""
:version: 1.0
:date: 17.10.2026

gap_logic.schemes
-----------------
Registry aller Übersetzungsschemata für kategorische Sätze.

Funktionen:
- Automatisches Laden aller Scheme-Klassen im Paket
- Vereinfachte Importe (direkt aus ``gap_logic.schemes`` importierbar)
- Registry (``AVAILABLE_SCHEMES``) für CLI und ``syllogistics``
"""

import importlib
import inspect
import pkgutil
from pathlib import Path

from gap_logic.logger import MainLogger
from gap_logic.schemes.base import LETTERS, CategoricalForm, TranslationScheme

_logger = MainLogger.get_logger("schemes")

AVAILABLE_SCHEMES: dict[str, type[TranslationScheme]] = {}
__all__ = ["AVAILABLE_SCHEMES", "CategoricalForm", "LETTERS", "TranslationScheme", "get_scheme"]


pkg_path = Path(__file__).parent

for module_info in pkgutil.iter_modules([str(pkg_path)]):
    if module_info.name in {"base", "__init__"}:
        continue
    module = importlib.import_module(f"gap_logic.schemes.{module_info.name}")

    # Klassen finden, die von TranslationScheme erben
    for class_name, obj in inspect.getmembers(module, inspect.isclass):
        if issubclass(obj, TranslationScheme) and obj is not TranslationScheme and obj.name:
            if obj.name not in AVAILABLE_SCHEMES:
                AVAILABLE_SCHEMES[obj.name] = obj
                globals()[class_name] = obj
                __all__.append(class_name)
                _logger.debug(f"📦 Schema geladen: {module_info.name} → {class_name}")

_instances: dict[str, TranslationScheme] = {}


def get_scheme(name: str | TranslationScheme) -> TranslationScheme:
    """Liefert die (gecachte) Instanz eines Schemas per Name."""
    if isinstance(name, TranslationScheme):
        return name
    try:
        cls = AVAILABLE_SCHEMES[name]
    except KeyError:
        raise ValueError(f"Unbekanntes Schema {name!r}. Verfügbar: {', '.join(sorted(AVAILABLE_SCHEMES))}") from None
    if name not in _instances:
        _instances[name] = cls()
    return _instances[name]
