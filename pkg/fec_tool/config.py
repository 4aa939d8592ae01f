#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Konfigurationsmodul

Zentrale Konfigurationseinstellungen für das FEC Tool.
Definiert wichtige Konstanten und Voreinstellungen, die im gesamten Programm
verwendet werden.

Konfigurationsbereiche:
- Dateipfade und Verzeichnisse
- Decoder-Voreinstellungen (Iterationen, Gewichtsgrenzen)
- Abbruchregeln der Monte-Carlo-Simulation
- Logging und Exit-Codes der Kommandozeile

Verwendung:
    from fec_tool.config import DEFAULT_MAX_ITERS, P_SC

    # Schwelle des Staircase-Codes
    p_target = P_SC

    # Logging einrichten
    setup_logging(logging.INFO)

Autor: Team A2-2
"""

import logging
import os

# Basis-Pfad zum Projektverzeichnis
BASE_DIR = os.path.dirname(os.path.dirname(__file__))

# Pfad zum Export-Verzeichnis für Ergebnisse und Plotdaten
EXPORT_DIR = os.path.join(BASE_DIR, 'export_folder')

# Pfad zu den mitgelieferten Simulationsrezepten
RECIPE_DIR = os.path.join(BASE_DIR, 'recipes')

# Iterationen der Message-Passing-Decoder
DEFAULT_MAX_ITERS = 50

# Iterationen (Zeilen- plus Spaltendurchlauf) für Produktcodes
PC_MAX_ITERS = 10

# Obergrenze der Gewichte in LLR-Einheiten
W_MAX = 30.0

# Iterationsbudget der Dichteentwicklung
DE_MAX_ITERS = 500

# Abbruchregel: Mindestanzahl Rahmenfehler bzw. maximale Rahmenzahl
DEFAULT_E_MIN = 100
DEFAULT_F_MAX = 10 ** 7

# Rahmen pro Arbeitspaket; unabhängig von der Anzahl der Worker
DEFAULT_BATCH_SIZE = 16

# Eingangs-BER-Schwelle des äußeren Staircase-Codes
P_SC = 5.02e-3

# Suchgitter für die iBDD-SR-Skalierungsfaktoren (0.2, 0.4, ..., 3.0)
SR_WEIGHT_GRID = tuple(round(0.2 * i, 1) for i in range(1, 16))

# Pilotrahmen für die Gittersuche der iBDD-SR-Gewichte
SR_PILOT_FRAMES = 20

# Fenstergröße und Durchläufe pro Verschiebung beim Staircase-Decoder
STAIRCASE_WINDOW = 7
STAIRCASE_SWEEPS = 2

# Blöcke pro simuliertem Staircase-Rahmen
STAIRCASE_FRAME_BLOCKS = 20

# Stützstellen der Gauss-Hermite-Quadratur
GAUSS_HERMITE_NODES = 64

# Umgebungsvariable zum Überschreiben der Worker-Anzahl
WORKERS_ENV_VAR = 'FEC_TOOL_WORKERS'

# Exit-Codes der Kommandozeile
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG_ERROR = 2
EXIT_STOP_RULE_UNMET = 3

# Format der Log-Ausgaben
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def setup_logging(level=logging.WARNING):
    """
    Richtet das Logging für das gesamte Paket ein.

    Args:
        level (int): Log-Level des Paket-Loggers (Standard: WARNING)
    """
    logger = logging.getLogger('fec_tool')
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    logger.setLevel(level)


def worker_count(configured=1):
    """
    Ermittelt die Anzahl der Worker-Prozesse.

    Die Umgebungsvariable FEC_TOOL_WORKERS hat Vorrang vor dem konfigurierten Wert.

    Args:
        configured (int): Wert aus der Konfigurationsdatei

    Returns:
        int: Anzahl der Worker (mindestens 1)

    Raises:
        ValueError: Wenn die Umgebungsvariable keine ganze Zahl enthält
    """
    value = os.environ.get(WORKERS_ENV_VAR)
    if value:
        try:
            configured = int(value)
        except ValueError:
            raise ValueError(f"{WORKERS_ENV_VAR} muss eine ganze Zahl sein, nicht '{value}'")
    return max(1, int(configured))
