#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Fehlerklassen

Laufzeitfehler des FEC Tools. Fehlerhafte Argumente werden weiterhin als
ValueError gemeldet; die Klassen hier decken Fehler ab, die erst während
einer Berechnung oder beim Lesen von Dateien auftreten.

Autor: Team A2-2
"""


class FecToolError(RuntimeError):
    """Basisklasse aller Laufzeitfehler des FEC Tools."""


class ConfigError(FecToolError):
    """Konfigurationsdatei oder Schema-String ist nicht verwendbar."""


class BracketError(FecToolError):
    """
    Das Suchintervall einer Bisektion schließt das Ziel nicht ein.

    Attribute:
        interval (tuple): Das durchsuchte Intervall (untere, obere Grenze)
    """

    def __init__(self, message, interval):
        super().__init__(f"{message} (Suchintervall: {interval[0]:.4f} dB bis {interval[1]:.4f} dB)")
        self.interval = interval


class ConfidenceError(FecToolError):
    """Das Monte-Carlo-Budget reicht für die geforderte Genauigkeit nicht aus."""
