#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Hauptprogramm

Haupteinstiegspunkt für die FEC-Werkbank. Diese Datei stellt die
Kommandozeile mit ihren Unterbefehlen bereit.

Funktionsweise:
1. Liest die Argumente der Kommandozeile
2. Richtet das Logging ein (-v INFO, -vv DEBUG, --quiet nur Fehler)
3. Führt den Unterbefehl aus
4. Gibt einen Exit-Code zurück

Unterbefehle:
- simulate <config>: Monte-Carlo-Sweep nach Konfigurationsdatei
- capacity --rate R: SD- und HD-Shannon-Grenze einer Coderate als CSV-Tabelle
- threshold --ensemble dv,dc --decoder K: DE-Schwelle
- de-weights --ensemble dv,dc --esno X: Gewichtsplan aus der DE
- gap <csvA> <csvB> --ber B: Abstand zweier Kurven
- dataflow <code> --bits q,...: Datenfluss n * d_v * q
- plotdata <csv> ... --rate R --out DIR: Plotdaten mit Grenzlinien

Exit-Codes:
    0 Erfolg, 1 Laufzeitfehler, 2 Konfigurationsfehler,
    3 Abbruchregel an mindestens einem Punkt nicht erfüllt

Verwendung:
    python -m fec_tool.main simulate recipes/rate082_bmp.ini

    # Oder über die Funktion
    from fec_tool.main import main
    main(['capacity', '--rate', '5/6'])

Technische Details:
- argparse mit Unterbefehlen
- Einheitliche Fehlerbehandlung über die Fehlerklassen in errors.py

Autor: Team A2-2
"""

import argparse
import csv
import dataclasses
import logging
import sys
from fractions import Fraction

from .config import (
    DEFAULT_MAX_ITERS, EXIT_CONFIG_ERROR, EXIT_FAILURE, EXIT_OK, EXIT_STOP_RULE_UNMET, EXPORT_DIR, P_SC,
    setup_logging,
)
from .errors import ConfigError, FecToolError
from .fec_components.channel_capacity import esno_to_ebno, inverse_capacity, overhead
from .fec_components.density_evolution import DE_KINDS, de_run, de_threshold, export_weight_schedule
from .fec_components.ldpc_codes import dataflow_score, parse_ldpc_code
from .utils.sim_functions import emit_plotdata, load_config, measure_gap, read_csv, run_sweep

logger = logging.getLogger(__name__)

# Spalten der Ausgabe von 'capacity'
CAPACITY_COLUMNS = ('rate', 'mode', 'esno_db', 'ebno_db')


def _rate(text):
    """Coderate als Dezimalzahl oder Bruch ('5/6')."""
    try:
        value = float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"ungültige Coderate '{text}'")
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"Coderate {text} liegt nicht in (0, 1)")
    return value


def _ensemble(text):
    try:
        dv, dc = (int(v) for v in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Ensemble '{text}' erwartet 'dv,dc'")
    return dv, dc


def _int_list(text):
    try:
        return [int(v) for v in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' ist keine Liste ganzer Zahlen")


def cmd_simulate(args):
    config = load_config(args.config)
    changes = {}
    if args.workers is not None:
        changes['workers'] = args.workers
    if args.output is not None:
        changes['output'] = args.output
    if changes:
        config = dataclasses.replace(config, **changes)
    result = run_sweep(config, progress=not args.quiet)
    print(f"{len(result.points)} Punkte nach '{config.output}' geschrieben")
    if result.unmet:
        for point in result.unmet:
            print(f"  {point.esno_db:.4f} dB: {point.flag}")
        return EXIT_STOP_RULE_UNMET
    return EXIT_OK


def cmd_capacity(args):
    rate = args.rate
    logger.info("Rate %.6f (Overhead %.2f %%)", rate, 100 * overhead(rate))
    writer = csv.writer(sys.stdout, lineterminator='\n')
    writer.writerow(CAPACITY_COLUMNS)
    for mode in ('sd', 'hd') if args.mode == 'both' else (args.mode,):
        limit = inverse_capacity(rate, mode)
        writer.writerow([f"{rate:.6f}", mode, f"{limit:.4f}", f"{esno_to_ebno(limit, rate):.4f}"])
    return EXIT_OK


def cmd_threshold(args):
    dv, dc = args.ensemble
    threshold = de_threshold(args.decoder, dv, dc, target_p=args.target, tol_db=args.tol)
    print(f"{args.decoder.upper()}-Schwelle ({dv},{dc}): {threshold:.4f} dB Es/N0")
    return EXIT_OK


def cmd_de_weights(args):
    dv, dc = args.ensemble
    trajectory = de_run(args.decoder, dv, dc, args.esno, max_iters=args.length)
    schedule = export_weight_schedule(trajectory, args.esno, length=args.length)
    if args.output:
        schedule.write(args.output)
        print(f"Gewichtsplan ({len(schedule)} Iterationen) nach '{args.output}' geschrieben")
        return EXIT_OK
    columns = schedule.columns()
    print('iteration ' + ' '.join(name for name, _ in columns))
    for ell in range(len(schedule)):
        print(f"{ell} " + ' '.join(f"{values[ell]:.6g}" for _, values in columns))
    return EXIT_OK


def cmd_gap(args):
    gap = measure_gap(read_csv(args.csv_a), read_csv(args.csv_b), args.ber)
    print(f"Abstand bei BER {args.ber:.2e}: {gap.gap_db:+.3f} dB +- {gap.stderr_db:.3f} dB "
          f"(A {gap.esno_a:.3f} dB, B {gap.esno_b:.3f} dB)")
    return EXIT_OK


def cmd_dataflow(args):
    try:
        graph = parse_ldpc_code(args.code)
    except ValueError as e:
        raise ConfigError(str(e)) from e
    print(f"{args.code}: n={graph.n}, mittlerer VN-Grad {graph.num_edges / graph.n:.3f}")
    for q in args.bits:
        print(f"q={q}: {dataflow_score(graph, q):.0f} Bit pro Iteration")
    return EXIT_OK


def cmd_plotdata(args):
    results = [read_csv(path) for path in args.csv]
    written = emit_plotdata(results, limits=args.rate, output_dir=args.out, p_sc=args.p_sc,
                            zip_path=args.zip)
    for path in written:
        print(path)
    return EXIT_OK


def build_parser():
    """
    Erstellt den Parser der Kommandozeile.

    Returns:
        argparse.ArgumentParser: Parser mit allen Unterbefehlen
    """
    parser = argparse.ArgumentParser(prog='fec_tool', description='Werkbank für Vorwärtsfehlerkorrektur')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='mehr Ausgaben (-vv für Debug)')
    parser.add_argument('--quiet', action='store_true', help='keine Fortschrittsanzeige, nur Fehler')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('simulate', help='Monte-Carlo-Sweep nach Konfigurationsdatei')
    p.add_argument('config', help='INI-Datei mit Abschnitt [simulation]')
    p.add_argument('--workers', type=int, help='Worker-Prozesse (FEC_TOOL_WORKERS hat Vorrang)')
    p.add_argument('--output', help='Pfad der Ergebnis-CSV')
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser('capacity', help='Shannon-Grenzen einer Coderate')
    p.add_argument('--rate', type=_rate, required=True, help="Coderate, z.B. 0.894 oder 5/6")
    p.add_argument('--mode', choices=('sd', 'hd', 'both'), default='both')
    p.set_defaults(handler=cmd_capacity)

    p = sub.add_parser('threshold', help='DE-Schwelle eines regulären Ensembles')
    p.add_argument('--ensemble', type=_ensemble, required=True, help='dv,dc')
    p.add_argument('--decoder', choices=DE_KINDS, default='bmp')
    p.add_argument('--target', type=float, default=1e-10, help='Ziel-Fehlerwahrscheinlichkeit')
    p.add_argument('--tol', type=float, default=0.01, help='Genauigkeit in dB')
    p.set_defaults(handler=cmd_threshold)

    p = sub.add_parser('de-weights', help='Gewichtsplan aus der Dichteentwicklung')
    p.add_argument('--ensemble', type=_ensemble, required=True, help='dv,dc')
    p.add_argument('--esno', type=float, required=True, help='Es/N0 in dB')
    p.add_argument('--decoder', choices=DE_KINDS, default='bmp')
    p.add_argument('--length', type=int, default=DEFAULT_MAX_ITERS, help='Iterationen des Plans')
    p.add_argument('--output', help='Plan als Texttabelle schreiben')
    p.set_defaults(handler=cmd_de_weights)

    p = sub.add_parser('gap', help='Abstand zweier Kurven bei einer Ziel-BER')
    p.add_argument('csv_a')
    p.add_argument('csv_b')
    p.add_argument('--ber', type=float, required=True, help='Ziel-BER')
    p.set_defaults(handler=cmd_gap)

    p = sub.add_parser('dataflow', help='Datenfluss n * d_v * q eines LDPC-Codes')
    p.add_argument('code', help="z.B. 'scldpc:4,24,50,40,2'")
    p.add_argument('--bits', type=_int_list, default=[1, 2, 6], help='Bits pro Nachricht')
    p.set_defaults(handler=cmd_dataflow)

    p = sub.add_parser('plotdata', help='Plotdaten mit Grenzlinien')
    p.add_argument('csv', nargs='+', help='Ergebnis-CSV-Dateien')
    p.add_argument('--rate', type=_rate, action='append', default=[], help='Rate für Grenzlinien (mehrfach)')
    p.add_argument('--out', default=EXPORT_DIR, help='Zielverzeichnis')
    p.add_argument('--p-sc', type=float, default=P_SC, dest='p_sc', help='Wert der p_SC-Linie')
    p.add_argument('--zip', help='Alle Dateien zusätzlich als ZIP-Archiv')
    p.set_defaults(handler=cmd_plotdata)
    return parser


def main(argv=None):
    """
    Hauptfunktion der Kommandozeile.

    Args:
        argv (list, optional): Argumente ohne Programmnamen (Standard: sys.argv)

    Returns:
        int: Exit-Code (0 Erfolg, 1 Laufzeitfehler, 2 Konfigurationsfehler,
            3 Abbruchregel nicht erfüllt)
    """
    args = build_parser().parse_args(argv)
    if args.quiet:
        level = logging.ERROR
    else:
        level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    setup_logging(level)
    try:
        return args.handler(args)
    except (ConfigError, ValueError) as e:
        logger.error("Konfigurationsfehler: %s", e)
        return EXIT_CONFIG_ERROR
    except FecToolError as e:
        logger.error("%s", e)
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
