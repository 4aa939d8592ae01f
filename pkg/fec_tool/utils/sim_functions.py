#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Simulationsfunktionen

Monte-Carlo-Umgebung für BER/FER-Kurven. Ein Lauf simuliert pro Es/N0-Punkt
Rahmen, bis die Abbruchregel erfüllt ist, und schreibt jede Zeile sofort in
eine CSV-Datei. Die Ergebnisse sind bei festem Seed unabhängig von der Anzahl
der Worker-Prozesse.

Funktionen:
- Laden von Simulationskonfigurationen (INI-Format, Abschnitt [simulation])
- Parallele Sweeps über ein Es/N0-Gitter mit Abbruchregel
- Schreiben und Lesen der Ergebnis-CSV
- Abstandsmessung zweier Kurven bei einer Ziel-BER
- Plotdaten mit Kapazitätsgrenzen und p_SC, optional als ZIP-Archiv

Technische Details:
- Seed pro Rahmen: SeedSequence([Seed, Punktindex, Rahmenindex])
- Rahmen werden in Paketen fester Größe verteilt und in Rahmenreihenfolge
  ausgewertet; Pakete hinter dem Abbruchpunkt werden verworfen
- Abbruch bei e_min Rahmenfehlern oder f_max Rahmen; nicht erfüllte
  Abbruchregeln werden markiert, nicht als Fehler gemeldet
- BER über alle Codebits eines Rahmens
- Fortschrittsanzeige mit tqdm

CSV-Format:
    # scheme=ldpc:3,6,1000@bmp
    # ... weitere Kopfzeilen 'key=value'
    esno_db,frames,bit_errors,frame_errors,ber,fer,mean_iters
    2.0000,412,10117,100,2.455583e-02,2.427184e-01,11.3301
    # flag esno_db=6.0000: zero errors at F_max

Verwendung:
    config = load_config('recipes/rate082_bmp.ini')
    result = run_sweep(config)
    gap = measure_gap(read_csv('a.csv'), read_csv('b.csv'), 1e-4)

Autor: Team A2-2
"""

import configparser
import logging
import math
import os
import re
import time
import zipfile
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from tqdm import tqdm

from ..config import (
    DEFAULT_BATCH_SIZE, DEFAULT_E_MIN, DEFAULT_F_MAX, EXPORT_DIR, P_SC, worker_count,
)
from ..errors import BracketError, ConfigError, FecToolError
from ..fec_components.channel_capacity import inverse_capacity
from ..fec_components.mp_decoders import WeightSchedule
from .scheme_functions import build_scheme, check_schedule, point_schedule, simulate_frame

logger = logging.getLogger(__name__)

# Spalten der Ergebnis-CSV
CSV_COLUMNS = ('esno_db', 'frames', 'bit_errors', 'frame_errors', 'ber', 'fer', 'mean_iters')

# Spalten der Kurvendateien von emit_plotdata()
CURVE_COLUMNS = ('esno_db', 'ber', 'fer', 'ber_stderr', 'frames')

# Zulässige Schlüssel im Abschnitt [simulation]
CONFIG_KEYS = (
    'scheme', 'esno', 'esno_start', 'esno_stop', 'esno_step', 'e_min', 'f_max', 'seed',
    'workers', 'output', 'max_iters', 'schedule', 'schedule_esno', 'schedule_file',
    'sr_weights', 'batch_size',
)

SCHEDULE_MODES = ('per-snr', 'fixed')

FLAG_ZERO_ERRORS = 'zero errors at F_max'
FLAG_UNMET = 'stop rule unmet at F_max'


@dataclass(frozen=True)
class SimConfig:
    """
    Konfiguration eines Sweeps.

    Attribute:
        scheme (str): Schema-String (Code, Decoder, Parameter)
        esno_grid (tuple): Es/N0-Punkte in dB
        e_min (int): Rahmenfehler bis zum Abbruch eines Punktes
        f_max (int): Höchstzahl Rahmen pro Punkt
        seed (int): Master-Seed
        workers (int): Worker-Prozesse
        output (str, optional): Pfad der Ergebnis-CSV
        max_iters (int, optional): Decoder-Iterationen (Standard je Codefamilie)
        schedule (str): 'per-snr' (Plan pro Punkt) oder 'fixed'
        schedule_esno (float, optional): Arbeitspunkt des festen Plans
        schedule_file (str, optional): Plan aus Datei, hat Vorrang
        sr_weights (str | tuple): 'optimize' oder iBDD-SR-Faktoren
        batch_size (int): Rahmen pro Arbeitspaket
    """
    scheme: str
    esno_grid: tuple
    e_min: int = DEFAULT_E_MIN
    f_max: int = DEFAULT_F_MAX
    seed: int = 0
    workers: int = 1
    output: str = None
    max_iters: int = None
    schedule: str = 'per-snr'
    schedule_esno: float = None
    schedule_file: str = None
    sr_weights: object = 'optimize'
    batch_size: int = DEFAULT_BATCH_SIZE

    def __post_init__(self):
        object.__setattr__(self, 'esno_grid', tuple(float(x) for x in self.esno_grid))
        if not self.esno_grid:
            raise ValueError("Das Es/N0-Gitter ist leer")
        if self.e_min < 1:
            raise ValueError(f"e_min muss mindestens 1 sein, nicht {self.e_min}")
        if self.f_max < 1:
            raise ValueError(f"f_max muss mindestens 1 sein, nicht {self.f_max}")
        if self.seed < 0:
            raise ValueError(f"seed muss nicht negativ sein, nicht {self.seed}")
        if self.batch_size < 1:
            raise ValueError(f"batch_size muss mindestens 1 sein, nicht {self.batch_size}")
        if self.schedule not in SCHEDULE_MODES:
            raise ValueError(f"Unbekannter Planmodus '{self.schedule}'")
        if self.schedule == 'fixed' and self.schedule_esno is None and self.schedule_file is None:
            raise ValueError("Planmodus 'fixed' benötigt schedule_esno oder schedule_file")


@dataclass
class SimPoint:
    """
    Zähler eines Es/N0-Punktes.

    Attribute:
        esno_db (float): Es/N0 in dB
        bits_per_frame (int): Gezählte Bits pro Rahmen
        frames (int): Simulierte Rahmen
        bit_errors (int): Bitfehler
        frame_errors (int): Rahmenfehler
        iterations (int): Summe der Decoder-Iterationen
        stop_rule_met (bool): True, wenn e_min Rahmenfehler erreicht wurden
        wall_time (float): Rechenzeit in Sekunden (nicht in der CSV)
    """
    esno_db: float
    bits_per_frame: int
    frames: int = 0
    bit_errors: int = 0
    frame_errors: int = 0
    iterations: int = 0
    stop_rule_met: bool = False
    wall_time: float = 0.0

    def add(self, outcome):
        self.frames += 1
        self.bit_errors += outcome.bit_errors
        self.frame_errors += outcome.frame_error
        self.iterations += outcome.iterations

    @property
    def bits(self):
        return self.frames * self.bits_per_frame

    @property
    def ber(self):
        return self.bit_errors / self.bits if self.frames else 0.0

    @property
    def fer(self):
        return self.frame_errors / self.frames if self.frames else 0.0

    @property
    def mean_iters(self):
        return self.iterations / self.frames if self.frames else 0.0

    @property
    def ber_stderr(self):
        """Binomialer Standardfehler der BER."""
        if not self.frames:
            return 0.0
        return math.sqrt(self.ber * (1.0 - self.ber) / self.bits)

    @property
    def flag(self):
        if self.stop_rule_met:
            return None
        return FLAG_ZERO_ERRORS if self.frame_errors == 0 else FLAG_UNMET


@dataclass
class SimResult:
    """
    Ergebnistabelle eines Sweeps.

    Attribute:
        scheme (str): Schema-String
        rate (float): Gesamtcoderate
        bits_per_frame (int): Gezählte Bits pro Rahmen
        points (list): SimPoint je Gitterpunkt in Gitterreihenfolge
        meta (dict): Weitere Kopfzeilen der CSV (seed, e_min, f_max, ...)
    """
    scheme: str
    rate: float
    bits_per_frame: int
    points: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def unmet(self):
        """Punkte, deren Abbruchregel nicht erfüllt wurde."""
        return [p for p in self.points if not p.stop_rule_met]

    @property
    def frames(self):
        return sum(p.frames for p in self.points)


@dataclass(frozen=True)
class GapResult:
    """
    Abstand zweier Kurven bei einer Ziel-BER.

    Attribute:
        gap_db (float): Es/N0(A) - Es/N0(B) in dB
        stderr_db (float): Fortgepflanzter Monte-Carlo-Standardfehler in dB
        esno_a (float): Interpolierter Punkt der Kurve A
        esno_b (float): Interpolierter Punkt der Kurve B
    """
    gap_db: float
    stderr_db: float
    esno_a: float
    esno_b: float

    def __float__(self):
        return self.gap_db


def _esno_grid(section):
    if 'esno' in section:
        return tuple(float(x) for x in section['esno'].split(',') if x.strip())
    start = section.getfloat('esno_start')
    stop = section.getfloat('esno_stop')
    step = section.getfloat('esno_step')
    if start is None or stop is None or step is None:
        raise ValueError("Es/N0-Gitter fehlt: 'esno' oder esno_start/esno_stop/esno_step angeben")
    if step <= 0 or stop < start:
        raise ValueError(f"Ungültiger Bereich {start}..{stop} mit Schritt {step}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return tuple(round(start + i * step, 10) for i in range(count))


def _sr_weights_option(text):
    text = text.strip()
    if text == 'optimize':
        return text
    return tuple(float(w) for w in text.split(','))


def load_config(path):
    """
    Liest eine Simulationskonfiguration.

    Relative Pfade für 'output' beziehen sich auf EXPORT_DIR, relative Pfade
    für 'schedule_file' auf das Verzeichnis der Konfigurationsdatei. Ohne
    'output' wird <Dateiname>.csv in EXPORT_DIR geschrieben.

    Args:
        path (str): Pfad zur INI-Datei

    Returns:
        SimConfig: Die geprüfte Konfiguration

    Raises:
        ConfigError: Wenn die Datei fehlt oder ungültige Werte enthält
    """
    parser = configparser.ConfigParser()
    try:
        found = parser.read(path, encoding='utf-8')
    except configparser.Error as e:
        raise ConfigError(f"Fehler beim Lesen der Konfiguration: {e}") from e
    if not found:
        raise ConfigError(f"Konfigurationsdatei '{path}' nicht gefunden")
    if not parser.has_section('simulation'):
        raise ConfigError(f"Abschnitt [simulation] fehlt in '{path}'")
    section = parser['simulation']
    unknown = sorted(set(section) - set(CONFIG_KEYS))
    if unknown:
        raise ConfigError(f"Unbekannte Schlüssel in '{path}': {', '.join(unknown)}")

    base_dir = os.path.dirname(os.path.abspath(path))
    stem = os.path.splitext(os.path.basename(path))[0]
    output = section.get('output', f"{stem}.csv")
    if not os.path.isabs(output):
        output = os.path.join(EXPORT_DIR, output)
    schedule_file = section.get('schedule_file')
    if schedule_file and not os.path.isabs(schedule_file):
        schedule_file = os.path.join(base_dir, schedule_file)
    try:
        return SimConfig(
            scheme=section['scheme'],
            esno_grid=_esno_grid(section),
            e_min=section.getint('e_min', DEFAULT_E_MIN),
            f_max=section.getint('f_max', DEFAULT_F_MAX),
            seed=section.getint('seed', 0),
            workers=section.getint('workers', 1),
            output=output,
            max_iters=section.getint('max_iters'),
            schedule=section.get('schedule', 'per-snr'),
            schedule_esno=section.getfloat('schedule_esno'),
            schedule_file=schedule_file,
            sr_weights=_sr_weights_option(section.get('sr_weights', 'optimize')),
            batch_size=section.getint('batch_size', DEFAULT_BATCH_SIZE),
        )
    except (KeyError, ValueError) as e:
        raise ConfigError(f"Fehler in der Konfiguration '{path}': {e}") from e


def frame_seed(seed, point_index, frame_index):
    """Seed-Folge eines Rahmens; hängt nur von (seed, Punkt, Rahmen) ab."""
    return np.random.SeedSequence([seed, point_index, frame_index])


def _run_batch(scheme, esno_db, schedule, seed, point_index, first, count):
    outcomes = []
    for frame in range(first, first + count):
        rng = np.random.default_rng(frame_seed(seed, point_index, frame))
        outcomes.append(simulate_frame(scheme, esno_db, schedule, rng))
    return outcomes


_worker_scheme = None


def _init_worker(scheme):
    global _worker_scheme
    _worker_scheme = scheme


def _worker_batch(esno_db, schedule, seed, point_index, first, count):
    return _run_batch(_worker_scheme, esno_db, schedule, seed, point_index, first, count)


def _consume(point, outcomes, e_min):
    """Übernimmt Rahmen in Reihenfolge; True, sobald e_min Rahmenfehler erreicht sind."""
    for outcome in outcomes:
        point.add(outcome)
        if point.frame_errors >= e_min:
            point.stop_rule_met = True
            return True
    return False


def _run_point(scheme, config, point_index, esno_db, schedule, executor, workers, bar):
    point = SimPoint(esno_db=esno_db, bits_per_frame=scheme.bits_per_frame)
    batches = ((first, min(config.batch_size, config.f_max - first))
               for first in range(0, config.f_max, config.batch_size))
    started = time.perf_counter()

    def progress():
        bar.update(min(point.frame_errors, config.e_min) - bar.n)

    if executor is None:
        for first, count in batches:
            done = _consume(point, _run_batch(scheme, esno_db, schedule, config.seed, point_index,
                                              first, count), config.e_min)
            progress()
            if done:
                break
    else:
        pending = deque()

        def fill():
            while len(pending) < 2 * workers:
                batch = next(batches, None)
                if batch is None:
                    return
                pending.append(executor.submit(_worker_batch, esno_db, schedule, config.seed,
                                               point_index, *batch))

        fill()
        while pending:
            done = _consume(point, pending.popleft().result(), config.e_min)
            progress()
            if done:
                break
            fill()
        for future in pending:
            future.cancel()
    point.wall_time = time.perf_counter() - started
    return point


def _result_meta(config):
    return {'seed': config.seed, 'e_min': config.e_min, 'f_max': config.f_max,
            'schedule': config.schedule, 'ber_basis': 'all code bits'}


def _csv_header(result):
    lines = [f"# scheme={result.scheme}", f"# rate={result.rate:.6f}",
             f"# bits_per_frame={result.bits_per_frame}"]
    lines += [f"# {key}={value}" for key, value in result.meta.items()]
    lines.append(','.join(CSV_COLUMNS))
    return '\n'.join(lines) + '\n'


def _csv_row(point):
    row = (f"{point.esno_db:.4f},{point.frames},{point.bit_errors},{point.frame_errors},"
           f"{point.ber:.6e},{point.fer:.6e},{point.mean_iters:.4f}\n")
    if point.flag:
        row += f"# flag esno_db={point.esno_db:.4f}: {point.flag}\n"
    return row


def write_csv(result, path):
    """
    Schreibt eine Ergebnistabelle als CSV.

    Raises:
        FecToolError: Wenn die Datei nicht geschrieben werden kann
    """
    try:
        with open(path, 'w', encoding='utf-8', newline='') as fh:
            fh.write(_csv_header(result))
            for point in result.points:
                fh.write(_csv_row(point))
    except OSError as e:
        raise FecToolError(f"Fehler beim Schreiben der CSV-Datei: {e}") from e


def read_csv(path):
    """
    Liest eine Ergebnis-CSV im Format von write_csv().

    Args:
        path (str): Pfad zur CSV-Datei

    Returns:
        SimResult: Die Tabelle; markierte Punkte haben stop_rule_met=False

    Raises:
        FecToolError: Wenn die Datei fehlt oder nicht dem Format entspricht
    """
    meta, flagged, rows = {}, set(), []
    header = None
    try:
        with open(path, 'r', encoding='utf-8') as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                if line.startswith('# flag'):
                    match = re.match(r'# flag esno_db=([-+0-9.eE]+):', line)
                    if match:
                        flagged.add(round(float(match.group(1)), 4))
                elif line.startswith('#'):
                    key, sep, value = line[1:].strip().partition('=')
                    if sep:
                        meta[key.strip()] = value.strip()
                elif header is None:
                    header = line.split(',')
                else:
                    rows.append(dict(zip(header, line.split(','))))
    except OSError as e:
        raise FecToolError(f"Fehler beim Lesen der CSV-Datei: {e}") from e
    if header is None or tuple(header) != CSV_COLUMNS:
        raise FecToolError(f"CSV-Datei '{path}' hat nicht die Spalten {','.join(CSV_COLUMNS)}")

    try:
        bits_per_frame = int(meta.pop('bits_per_frame', 0))
        points = []
        for row in rows:
            frames, bit_errors = int(row['frames']), int(row['bit_errors'])
            esno_db = float(row['esno_db'])
            n = bits_per_frame
            if not n:
                ber = float(row['ber'])
                n = int(round(bit_errors / (ber * frames))) if ber > 0 and frames else 1
            points.append(SimPoint(
                esno_db=esno_db, bits_per_frame=n, frames=frames, bit_errors=bit_errors,
                frame_errors=int(row['frame_errors']),
                iterations=int(round(float(row['mean_iters']) * frames)),
                stop_rule_met=round(esno_db, 4) not in flagged))
        return SimResult(scheme=meta.pop('scheme', os.path.basename(path)),
                         rate=float(meta.pop('rate', 'nan')),
                         bits_per_frame=bits_per_frame or (points[0].bits_per_frame if points else 0),
                         points=points, meta=meta)
    except (KeyError, ValueError, ZeroDivisionError) as e:
        raise FecToolError(f"Fehler beim Lesen der CSV-Datei '{path}': {e}") from e


def run_sweep(config, progress=True):
    """
    Führt einen Sweep über das Es/N0-Gitter aus.

    Pro Punkt werden Rahmen in Paketen simuliert, bis e_min Rahmenfehler oder
    f_max Rahmen erreicht sind. Jede Zeile wird sofort an config.output
    angehängt.

    Args:
        config (SimConfig): Die Konfiguration
        progress (bool): Fortschrittsanzeige mit tqdm

    Returns:
        SimResult: Eine Zeile pro Gitterpunkt

    Raises:
        ConfigError: Wenn Schema oder Gewichtsplan nicht verwendbar sind
        FecToolError: Wenn die CSV-Datei nicht geschrieben werden kann
    """
    scheme = build_scheme(config.scheme, config.max_iters)
    fixed = None
    if config.schedule_file:
        try:
            fixed = WeightSchedule.read(config.schedule_file)
        except FecToolError as e:
            raise ConfigError(str(e)) from e
        check_schedule(scheme, fixed)
    elif config.schedule == 'fixed' and scheme.needs_schedule:
        fixed = point_schedule(scheme, config.schedule_esno, config.sr_weights, config.seed)

    result = SimResult(scheme=scheme.text, rate=scheme.rate, bits_per_frame=scheme.bits_per_frame,
                       meta=_result_meta(config))
    workers = worker_count(config.workers)
    logger.info("Sweep '%s' mit %d Punkten, %d Worker", scheme, len(config.esno_grid), workers)

    fh = None
    executor = None
    try:
        if config.output:
            os.makedirs(os.path.dirname(os.path.abspath(config.output)), exist_ok=True)
            fh = open(config.output, 'w', encoding='utf-8', newline='')
            fh.write(_csv_header(result))
            fh.flush()
        if workers > 1:
            executor = ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(scheme,))
        points = tqdm(config.esno_grid, desc='Es/N0', unit='Punkt', disable=not progress)
        for index, esno_db in enumerate(points):
            schedule = fixed if fixed is not None else point_schedule(scheme, esno_db, config.sr_weights,
                                                                      config.seed)
            with tqdm(total=config.e_min, desc=f"{esno_db:.2f} dB", unit='Fehler', leave=False,
                      disable=not progress) as bar:
                point = _run_point(scheme, config, index, esno_db, schedule, executor, workers, bar)
            result.points.append(point)
            points.set_postfix(ber=f"{point.ber:.2e}")
            if fh is not None:
                fh.write(_csv_row(point))
                fh.flush()
            logger.info("%.4f dB: %d Rahmen, BER %.3e, FER %.3e (%.1f s)", esno_db, point.frames,
                        point.ber, point.fer, point.wall_time)
            if point.flag:
                logger.warning("%.4f dB: %s (%d Rahmenfehler in %d Rahmen)", esno_db, point.flag,
                               point.frame_errors, point.frames)
    except OSError as e:
        raise FecToolError(f"Fehler beim Schreiben der CSV-Datei: {e}") from e
    finally:
        if executor is not None:
            executor.shutdown(cancel_futures=True)
        if fh is not None:
            fh.close()
    return result


def _crossing(result, target_ber):
    """Interpoliertes Es/N0 bei target_ber (log10-BER linear in dB) und dessen Standardfehler."""
    points = sorted(result.points, key=lambda p: p.esno_db)
    for left, right in zip(points, points[1:]):
        if left.ber <= 0 or right.ber <= 0:
            continue
        if not (left.ber >= target_ber >= right.ber):
            continue
        l0, l1, u = math.log10(left.ber), math.log10(right.ber), math.log10(target_ber)
        dx = right.esno_db - left.esno_db
        d = l1 - l0
        if d == 0:
            return left.esno_db, 0.0
        esno = left.esno_db + (u - l0) * dx / d
        # Relativer Fehler der BER in log10-Einheiten
        s0 = left.ber_stderr / (left.ber * math.log(10))
        s1 = right.ber_stderr / (right.ber * math.log(10))
        grad0 = dx * (u - l1) / d ** 2
        grad1 = -dx * (u - l0) / d ** 2
        return esno, math.hypot(grad0 * s0, grad1 * s1)
    esnos = [p.esno_db for p in points] or [0.0]
    raise BracketError(f"Kurve '{result.scheme}' schließt BER {target_ber:.2e} nicht ein",
                       (min(esnos), max(esnos)))


def measure_gap(result_a, result_b, target_ber):
    """
    Abstand zweier Kurven in dB bei einer Ziel-BER.

    Beide Kurven werden in (dB, log10 BER) linear interpoliert.

    Args:
        result_a (SimResult): Kurve A
        result_b (SimResult): Kurve B
        target_ber (float): Ziel-BER in (0, 1)

    Returns:
        GapResult: Es/N0(A) - Es/N0(B) mit Standardfehler

    Raises:
        ValueError: Wenn target_ber nicht in (0, 1) liegt
        BracketError: Wenn eine Kurve die Ziel-BER nicht einschließt
    """
    if not 0.0 < target_ber < 1.0:
        raise ValueError(f"Ziel-BER {target_ber} liegt nicht in (0, 1)")
    esno_a, err_a = _crossing(result_a, target_ber)
    esno_b, err_b = _crossing(result_b, target_ber)
    gap = GapResult(gap_db=esno_a - esno_b, stderr_db=math.hypot(err_a, err_b), esno_a=esno_a, esno_b=esno_b)
    logger.info("Abstand bei BER %.2e: %.3f dB +- %.3f dB", target_ber, gap.gap_db, gap.stderr_db)
    return gap


def _slug(text):
    return re.sub(r'[^A-Za-z0-9]+', '_', text).strip('_') or 'curve'


def create_zip_from_files(file_list, zip_path):
    """
    Erstellt ein ZIP-Archiv aus einer Liste von Dateien.

    Die Dateien werden ohne Verzeichnisanteil im Archiv abgelegt.

    Args:
        file_list (list): Liste der zu archivierenden Dateipfade
        zip_path (str): Pfad für das ZIP-Archiv

    Raises:
        FecToolError: Wenn die ZIP-Erstellung fehlschlägt
    """
    try:
        with zipfile.ZipFile(zip_path, 'w', zipfile.ZIP_DEFLATED) as zipf:
            for filepath in file_list:
                zipf.write(filepath, arcname=os.path.basename(filepath))
    except (OSError, zipfile.BadZipFile) as e:
        raise FecToolError(f"Fehler beim Erstellen des ZIP-Archivs: {e}") from e


def emit_plotdata(results, limits=None, output_dir=EXPORT_DIR, p_sc=P_SC, zip_path=None):
    """
    Schreibt Plotdaten: eine CSV pro Kurve und optional eine Grenzwertdatei.

    Kurvendateien 'curve_<Nr>_<Schema>.csv' haben die Spalten
    esno_db, ber, fer, ber_stderr, frames. Die Datei 'limits.csv' hat die
    Spalten line, rate, value: pro Rate die SD- und HD-Shannon-Grenze in dB
    (line = sd_limit / hd_limit) sowie eine Zeile p_sc mit der
    Eingangs-BER-Schwelle des Staircase-Codes.

    Args:
        results (list): SimResult-Tabellen (nicht leer)
        limits (sequence, optional): Coderaten für Grenzlinien; leer oder None
            bedeutet nur Kurven
        output_dir (str): Zielverzeichnis
        p_sc (float): Wert der p_SC-Linie
        zip_path (str, optional): Bündelt alle Dateien in diesem ZIP-Archiv

    Returns:
        list: Pfade der geschriebenen Dateien (ohne ZIP)

    Raises:
        ValueError: Wenn results leer ist
        FecToolError: Bei Ein-/Ausgabefehlern
    """
    results = list(results)
    if not results:
        raise ValueError("Keine Kurven für die Plotdaten")
    limits = list(limits or [])
    written = []
    try:
        os.makedirs(output_dir, exist_ok=True)
        for number, result in enumerate(results):
            path = os.path.join(output_dir, f"curve_{number:02d}_{_slug(result.scheme)}.csv")
            with open(path, 'w', encoding='utf-8', newline='') as fh:
                fh.write(f"# scheme={result.scheme}\n")
                fh.write(','.join(CURVE_COLUMNS) + '\n')
                for p in sorted(result.points, key=lambda p: p.esno_db):
                    fh.write(f"{p.esno_db:.4f},{p.ber:.6e},{p.fer:.6e},{p.ber_stderr:.6e},{p.frames}\n")
            written.append(path)
        if limits:
            path = os.path.join(output_dir, 'limits.csv')
            with open(path, 'w', encoding='utf-8', newline='') as fh:
                fh.write('line,rate,value\n')
                for rate in limits:
                    fh.write(f"sd_limit,{rate:.6f},{inverse_capacity(rate, 'sd'):.4f}\n")
                    fh.write(f"hd_limit,{rate:.6f},{inverse_capacity(rate, 'hd'):.4f}\n")
                fh.write(f"p_sc,,{p_sc:.6g}\n")
            written.append(path)
    except OSError as e:
        raise FecToolError(f"Fehler beim Schreiben der Plotdaten: {e}") from e
    if zip_path:
        create_zip_from_files(written, zip_path)
    logger.info("%d Plotdateien in '%s' geschrieben", len(written), output_dir)
    return written
