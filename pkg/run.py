#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Startskript

Dieses Skript startet die Kommandozeile des FEC Tools. Alle Argumente
werden unverändert an fec_tool.main weitergereicht.

Verwendung:
    python run.py capacity --rate 5/6
    python run.py simulate recipes/rate082_bmp.ini

Technische Details:
- Importiert die Hauptfunktion aus dem fec_tool Paket
- Gibt den Exit-Code der Kommandozeile zurück

Autor: Team A2-2
"""

import sys

from fec_tool.main import main

if __name__ == '__main__':
    sys.exit(main())
