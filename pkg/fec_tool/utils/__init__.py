#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Utility-Modul

Sammlung der Hilfsfunktionen für Simulation und Auswertung.
Stellt die Monte-Carlo-Umgebung und die Auflösung von Schema-Strings für die
Kommandozeile und für eigene Skripte bereit.

Funktionen:
- Simulationskonfigurationen laden und Sweeps ausführen
- Ergebnis-CSV schreiben und lesen
- Abstand zweier Kurven messen
- Plotdaten und ZIP-Archive erzeugen
- Schema-Strings auflösen und einzelne Rahmen simulieren

Verwendung:
    from fec_tool.utils import load_config, run_sweep

    # Rezept laden und simulieren
    config = load_config('recipes/rate082_bmp.ini')
    result = run_sweep(config)

Technische Details:
- Parallelisierung mit concurrent.futures.ProcessPoolExecutor
- Reproduzierbare Rahmen über numpy.random.SeedSequence
- Fortschrittsanzeige mit tqdm

Autor: Team A2-2
"""

# Importiere die Simulationsfunktionen, damit sie direkt aus dem utils-Paket verfügbar sind
from .sim_functions import (
    # Konfiguration und Ergebnisse
    SimConfig,          # Konfiguration eines Sweeps
    SimPoint,           # Zähler eines Es/N0-Punktes
    SimResult,          # Ergebnistabelle
    GapResult,          # Abstand zweier Kurven
    load_config,        # INI-Datei einlesen

    # Simulation
    run_sweep,          # Sweep über das Es/N0-Gitter
    frame_seed,         # Seed-Folge eines Rahmens

    # Ein- und Ausgabe
    write_csv,          # Ergebnis-CSV schreiben
    read_csv,           # Ergebnis-CSV lesen
    emit_plotdata,      # Kurven und Grenzlinien schreiben
    create_zip_from_files,  # ZIP-Archiv erstellen

    # Auswertung
    measure_gap,        # Abstand bei einer Ziel-BER
)

from .scheme_functions import (
    Scheme,             # Aufgelöstes Schema
    FrameOutcome,       # Ergebnis eines Rahmens
    build_scheme,       # Schema-String auflösen
    point_schedule,     # Gewichtsplan pro Arbeitspunkt
    check_schedule,     # Geladenen Plan prüfen
    simulate_frame,     # Einen Rahmen simulieren
)
