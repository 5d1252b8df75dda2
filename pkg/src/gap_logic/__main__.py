# -*- coding: utf-8 -*-
"""
:version: 1.0
:date: 17.10.2026

gap_logic.__main__
------------------
CLI-Einstiegspunkt.

Erlaubt das Starten über:
    python -m gap_logic <command>
Beispiele:
    python -m gap_logic prop taut "P -> P"
    python -m gap_logic godel report default
"""

import sys

from gap_logic.cli import main

if __name__ == "__main__":
    sys.exit(main())
