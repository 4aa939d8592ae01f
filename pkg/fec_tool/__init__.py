#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Hauptpaket

Eine Werkbank zur Vorwärtsfehlerkorrektur (FEC) für den Vergleich
aufwandsarmer Decodierverfahren nahe der Kanalkapazität.

Funktionen:
- Grob quantisierte LDPC-Decodierung (BMP, TMP, QMP) und Sum-Product BP
- Produkt- und Staircase-Codes mit iBDD und iBDD-SR
- Hybride Verkettung aus innerem SD-LDPC und äußerem HD-Staircase-Code
- Dichteentwicklung, Kanalkapazitäten und Monte-Carlo-Simulationen

Paketstruktur:
- main.py: Haupteinstiegspunkt (Kommandozeile)
- config.py: Zentrale Konstanten und Logging
- fec_components/: Codes, Decoder und Analysen
- utils/: Simulationsumgebung und Schema-Auflösung

Technische Basis:
- numpy/scipy für die Numerik
- numba für die BDD-Kernels
- tqdm für Fortschrittsanzeigen

Autor: Team A2-2
Version: 1.0.0
"""

# Version des Pakets
__version__ = '1.0.0'

# Name des Pakets
__package_name__ = 'fec_tool'

# Autor Information
__author__ = 'Team A2-2'
