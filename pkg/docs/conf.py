# -*- coding: utf-8 -*-
"""
:version: 1.0
:date: 17.10.2026
"""

import os
import sys
from datetime import datetime

# Pfad zum Paket (../src) hinzufügen
sys.path.insert(0, os.path.abspath("../src"))

# -- Projektinformationen -----------------------------------------------------
project = "gap-logic"
current_year = str(datetime.now().year)
copyright = f"{current_year}, gap-logic"

# -- Allgemeine Konfiguration -------------------------------------------------
extensions = [
    "myst_parser",          # Markdown-Unterstützung
    "sphinx.ext.autodoc",  # Autodoc (wird von autoapi ergänzt)
    "sphinx.ext.napoleon", # Google/NumPy-Docstrings
    "autoapi.extension",   # Automatische API-Seiten für komplettes Paket
    "sphinxarg.ext",       # CLI-Doku aus argparse
]

myst_enable_extensions = [
    "deflist",
    "fieldlist",
    "colon_fence",
]

# AutoAPI – erzeugt API-Referenz vollständig aus Codebaum
autoapi_type = "python"
autoapi_dirs = ["../src/gap_logic"]
autoapi_add_toctree_entry = True
autoapi_root = "api"

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# -- HTML-Ausgabe -------------------------------------------------------------
html_theme = "furo"
pygments_style = "tango"
pygments_dark_style = "native"
html_title = project

language = "de"
