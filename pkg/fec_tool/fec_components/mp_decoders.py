#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Message-Passing-Decoder

Iterative Decoder auf einem Tanner-Graphen: unquantisierte Sum-Product-BP sowie
die grob quantisierten Verfahren BMP (binär), TMP (ternär) und QMP (quaternär).
Die Kanal-LLR geht an den Variablenknoten stets in voller Genauigkeit ein,
nur die Nachrichten zwischen VNs und CNs sind quantisiert.

Funktionen:
- decode_bp: Sum-Product mit tanh-Regel
- decode_bmp: Nachrichten aus {-1, +1}, gewichtete CN-Nachrichten
- decode_tmp: Nachrichten aus {-1, 0, +1} mit Auslöschungen
- decode_qmp: Nachrichten aus {-2, -1, +1, +2} (schwach/stark)
- WeightSchedule: Gewichte und Quantisierungsschwellen pro Iteration
- get_decoder: Auswahl eines Decoders über seinen Namen

Technische Details:
- Flooding-Schedule, Abbruch sobald das Syndrom null ist
- Symbol +1 entspricht Bit 0; f(x) = +1 für x > 0, sonst -1 (Gleichstand -> Bit 1)
- Die Kanten liegen CN-sortiert vor; CN-Regeln werden mit np.*.reduceat über
  die CN-Segmente berechnet, VN-Summen mit np.bincount
- Iteration l verwendet weights[l] für die CN-Nachrichten dieser Iteration und
  thresholds[l] für die Quantisierung der VN-Nachrichten, die in sie eingehen

Verwendung:
    schedule = WeightSchedule.constant('bmp', 1.0, 50)
    result = decode_bmp(graph, llr, schedule, max_iters=50)
    if result.converged:
        print(result.iterations)

Autor: Team A2-2
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from ..config import DEFAULT_MAX_ITERS
from ..errors import FecToolError
from .ldpc_codes import is_codeword

logger = logging.getLogger(__name__)

# Begrenzung des tanh-Produkts, damit atanh endlich bleibt
_TANH_CLIP = 1.0 - 1e-12

# Erlaubte Nachrichtenwerte je Decoder
MESSAGE_ALPHABETS = {
    'bmp': (-1, 1),
    'tmp': (-1, 0, 1),
    'qmp': (-2, -1, 1, 2),
}

# Schedule-Arten, die im Textformat auftreten können
SCHEDULE_KINDS = ('bp', 'bmp', 'tmp', 'qmp', 'ibdd_sr')


def _schedule_column(values, name):
    values = np.asarray(values, dtype=float).ravel()
    if not np.all(np.isfinite(values)) or np.any(values < 0):
        raise ValueError(f"Spalte '{name}' muss endlich und nicht negativ sein")
    return values


@dataclass(frozen=True, eq=False)
class WeightSchedule:
    """
    Gewichte (und Schwellen) pro Iteration.

    Attribute:
        kind (str): Decoder, für den der Plan bestimmt ist
        weights (np.ndarray): Gewicht w^(l) der CN-Nachrichten; bei QMP das
            Gewicht der starken Nachrichten
        thresholds (np.ndarray, optional): Quantisierungsschwelle T^(l) (TMP/QMP)
        weak_weights (np.ndarray, optional): Gewicht der schwachen Nachrichten (QMP)
        esno_db (float, optional): Es/N0, bei dem der Plan erzeugt wurde
    """
    kind: str
    weights: np.ndarray
    thresholds: np.ndarray = None
    weak_weights: np.ndarray = None
    esno_db: float = None
    meta: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.kind not in SCHEDULE_KINDS:
            raise ValueError(f"Unbekannte Plan-Art '{self.kind}'")
        object.__setattr__(self, 'weights', _schedule_column(self.weights, 'weight'))
        for name in ('thresholds', 'weak_weights'):
            value = getattr(self, name)
            if value is None:
                continue
            value = _schedule_column(value, name)
            if value.shape != self.weights.shape:
                raise ValueError(f"Spalte '{name}' hat {len(value)} statt {len(self.weights)} Einträge")
            object.__setattr__(self, name, value)
        if self.kind in ('tmp', 'qmp') and self.thresholds is None:
            raise ValueError(f"Plan der Art '{self.kind}' benötigt Schwellen")
        if self.kind == 'qmp' and self.weak_weights is None:
            raise ValueError("QMP-Plan benötigt Gewichte für schwache Nachrichten")

    def __len__(self):
        return int(self.weights.shape[0])

    @classmethod
    def constant(cls, kind, weight, length, threshold=None, weak_weight=None):
        """Plan mit gleichen Werten in jeder Iteration."""
        column = lambda v: None if v is None else np.full(length, float(v))
        return cls(kind=kind, weights=column(weight), thresholds=column(threshold),
                   weak_weights=column(weak_weight))

    def require(self, max_iters):
        """
        Prüft, ob der Plan für max_iters Iterationen reicht.

        Raises:
            ValueError: Wenn der Plan kürzer als max_iters ist
        """
        if len(self) < max_iters:
            raise ValueError(f"Gewichtsplan mit {len(self)} Einträgen ist kürzer als max_iters={max_iters}")

    def columns(self):
        """Spaltennamen und -werte in Dateireihenfolge."""
        cols = [('weight', self.weights)]
        if self.thresholds is not None:
            cols.append(('threshold', self.thresholds))
        if self.weak_weights is not None:
            cols.append(('weak_weight', self.weak_weights))
        return cols

    def write(self, path):
        """
        Schreibt den Plan als Texttabelle.

        Format: Kommentarzeilen '# key=value' (kind, esno_db), dann eine
        Kopfzeile 'iteration weight [threshold] [weak_weight]' und eine Zeile
        pro Iteration.

        Raises:
            FecToolError: Wenn die Datei nicht geschrieben werden kann
        """
        cols = self.columns()
        try:
            with open(path, 'w', encoding='utf-8') as fh:
                fh.write(f"# kind={self.kind}\n")
                if self.esno_db is not None:
                    fh.write(f"# esno_db={self.esno_db:.6f}\n")
                for key, value in self.meta.items():
                    fh.write(f"# {key}={value}\n")
                fh.write('iteration ' + ' '.join(name for name, _ in cols) + '\n')
                for ell in range(len(self)):
                    fh.write(f"{ell} " + ' '.join(f"{values[ell]:.10g}" for _, values in cols) + '\n')
        except OSError as e:
            raise FecToolError(f"Fehler beim Schreiben des Gewichtsplans: {e}") from e

    @classmethod
    def read(cls, path):
        """
        Liest einen Plan im Format von write().

        Returns:
            WeightSchedule: Der gelesene Plan

        Raises:
            FecToolError: Wenn die Datei fehlt oder nicht dem Format entspricht
        """
        meta = {}
        header = None
        rows = []
        try:
            with open(path, 'r', encoding='utf-8') as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    if line.startswith('#'):
                        key, sep, value = line[1:].strip().partition('=')
                        if sep:
                            meta[key.strip()] = value.strip()
                    elif header is None:
                        header = line.split()
                    else:
                        rows.append([float(v) for v in line.split()])
        except (OSError, ValueError) as e:
            raise FecToolError(f"Fehler beim Lesen des Gewichtsplans: {e}") from e
        if header is None or header[0] != 'iteration' or not rows:
            raise FecToolError(f"Gewichtsplan '{path}' hat keine Tabelle")
        table = np.asarray(rows, dtype=float) if len({len(r) for r in rows}) == 1 else None
        if table is None or table.shape[1] != len(header):
            raise FecToolError(f"Gewichtsplan '{path}': Spaltenzahl passt nicht zur Kopfzeile")
        data = {name: table[:, i] for i, name in enumerate(header)}
        kind = meta.pop('kind', 'bmp')
        esno_db = meta.pop('esno_db', None)
        try:
            return cls(kind=kind, weights=data['weight'], thresholds=data.get('threshold'),
                       weak_weights=data.get('weak_weight'),
                       esno_db=None if esno_db is None else float(esno_db), meta=meta)
        except (KeyError, ValueError) as e:
            raise FecToolError(f"Fehler beim Lesen des Gewichtsplans: {e}") from e


@dataclass(frozen=True, eq=False)
class DecodeResult:
    """
    Ergebnis eines Decodierdurchlaufs.

    Attribute:
        bits (np.ndarray): Harte Entscheidungen (uint8, Länge n)
        converged (bool): True, wenn das Syndrom null ist
        iterations (int): Anzahl ausgeführter Iterationen
    """
    bits: np.ndarray
    converged: bool
    iterations: int


def quantize_messages(kind, values, threshold=None):
    """
    Quantisiert VN-Summen auf das Nachrichtenalphabet.

    Args:
        kind (str): 'bmp', 'tmp' oder 'qmp'
        values (np.ndarray): Extrinsische Summen s
        threshold (float, optional): Schwelle T (TMP/QMP)

    Returns:
        np.ndarray: Nachrichten als int8
    """
    values = np.asarray(values, dtype=float)
    if kind == 'bmp':
        return np.where(values > 0, 1, -1).astype(np.int8)
    if kind == 'tmp':
        return np.where(values > threshold, 1, np.where(values < -threshold, -1, 0)).astype(np.int8)
    if kind == 'qmp':
        sign = np.where(values > 0, 1, -1)
        return (sign * np.where(np.abs(values) > threshold, 2, 1)).astype(np.int8)
    raise ValueError(f"Unbekannte Quantisierung '{kind}'")


def _others_sign(messages, graph):
    """Produkt der Vorzeichen aller anderen Nachrichten eines CN (Null zählt als +1)."""
    seg = graph.cn_ptr[:-1]
    negative = (messages < 0).astype(np.int64)
    cn_sign = 1 - 2 * (np.add.reduceat(negative, seg) & 1)
    own = np.where(messages < 0, -1, 1)
    return cn_sign[graph.edge_cn] * own


def _others_count(mask, graph):
    """Anzahl der anderen Kanten eines CN, für die mask gilt."""
    counts = np.add.reduceat(mask.astype(np.int64), graph.cn_ptr[:-1])
    return counts[graph.edge_cn] - mask


def cn_messages(kind, v2c, graph):
    """
    CN-Regeln für alle Kanten gleichzeitig.

    - bmp: Produkt der anderen eingehenden Nachrichten
    - tmp: 0, sobald eine andere Nachricht 0 ist, sonst Produkt der Vorzeichen
    - qmp: Produkt der Vorzeichen; stark nur, wenn alle anderen stark sind
    - bp:  2 atanh(prod tanh(m/2)) über die anderen Nachrichten

    Args:
        kind (str): Decoder-Art
        v2c (np.ndarray): VN-zu-CN-Nachrichten in Kantenreihenfolge
        graph (TannerGraph): Der Code

    Returns:
        np.ndarray: CN-zu-VN-Nachrichten in Kantenreihenfolge
    """
    if kind == 'bmp':
        return _others_sign(v2c, graph).astype(np.int8)
    if kind == 'tmp':
        erased = _others_count(v2c == 0, graph) > 0
        return np.where(erased, 0, _others_sign(v2c, graph)).astype(np.int8)
    if kind == 'qmp':
        weak = _others_count(np.abs(v2c) == 1, graph) > 0
        return (_others_sign(v2c, graph) * np.where(weak, 1, 2)).astype(np.int8)
    if kind == 'bp':
        return _bp_cn_messages(v2c, graph)
    raise ValueError(f"Unbekannte CN-Regel '{kind}'")


def _bp_cn_messages(v2c, graph):
    t = np.tanh(np.asarray(v2c, dtype=float) / 2.0)
    zero = t == 0
    log_abs = np.log(np.abs(np.where(zero, 1.0, t)))
    cn_log = np.add.reduceat(log_abs, graph.cn_ptr[:-1])
    others_log = cn_log[graph.edge_cn] - log_abs
    others_zero = _others_count(zero, graph) > 0
    product = np.where(others_zero, 0.0, _others_sign(t, graph) * np.exp(others_log))
    return 2.0 * np.arctanh(np.clip(product, -_TANH_CLIP, _TANH_CLIP))


def _in_alphabet(kind, messages):
    return bool(np.all(np.isin(messages, MESSAGE_ALPHABETS[kind])))


def _syndrome_ok(bits, graph):
    checks = np.add.reduceat(bits[graph.edge_vn].astype(np.int64), graph.cn_ptr[:-1]) & 1
    return not np.any(checks)


def _check_llr(graph, llr):
    llr = np.asarray(llr, dtype=float)
    if llr.shape != (graph.n,):
        raise ValueError(f"LLR-Länge {llr.shape} passt nicht zu n={graph.n}")
    return llr


def _iterate(graph, llr, max_iters, kind, weighted, quantize):
    """
    Gemeinsame Flooding-Schleife aller Decoder.

    Args:
        weighted (callable): (c2v, l) -> gewichtete CN-Beiträge pro Kante
        quantize (callable): (Summen, l) -> VN-zu-CN-Nachrichten der Iteration l
    """
    edge_vn = graph.edge_vn
    bits = (llr <= 0).astype(np.uint8)
    v2c = quantize(llr[edge_vn], 0)
    for ell in range(max_iters):
        if kind in MESSAGE_ALPHABETS:
            assert _in_alphabet(kind, v2c), f"{kind}: VN-Nachricht außerhalb des Alphabets"
        c2v = cn_messages(kind, v2c, graph)
        if kind in MESSAGE_ALPHABETS:
            assert _in_alphabet(kind, c2v), f"{kind}: CN-Nachricht außerhalb des Alphabets"
        contrib = weighted(c2v, ell)
        total = llr + np.bincount(edge_vn, weights=contrib, minlength=graph.n)
        bits = (total <= 0).astype(np.uint8)
        if _syndrome_ok(bits, graph):
            return DecodeResult(bits=bits, converged=True, iterations=ell + 1)
        if ell + 1 < max_iters:
            v2c = quantize(total[edge_vn] - contrib, ell + 1)
    converged = max_iters == 0 and _syndrome_ok(bits, graph)
    return DecodeResult(bits=bits, converged=converged, iterations=max_iters)


def decode_bp(graph, llr, max_iters=DEFAULT_MAX_ITERS):
    """
    Sum-Product-Decodierung (BP).

    Args:
        graph (TannerGraph): Der Code
        llr (np.ndarray): Kanal-LLRs der Länge n (L > 0 spricht für Bit 0)
        max_iters (int): Maximale Anzahl Iterationen

    Returns:
        DecodeResult: Entscheidungen, Konvergenz und Iterationszahl

    Raises:
        ValueError: Wenn die LLR-Länge nicht n ist
    """
    llr = _check_llr(graph, llr)
    return _iterate(graph, llr, max_iters, 'bp',
                    weighted=lambda c2v, ell: c2v,
                    quantize=lambda s, ell: s)


def decode_bmp(graph, llr, weights, max_iters=DEFAULT_MAX_ITERS):
    """
    Binäres Message Passing (BMP).

    VN-Regel: m = f(L + sum_{c' != c} w^(l-1) m_{c'}); CN-Regel: Produkt der
    anderen Nachrichten. Die Entscheidung erfolgt auf L + Summe aller
    gewichteten Nachrichten.

    Args:
        graph (TannerGraph): Der Code
        llr (np.ndarray): Kanal-LLRs der Länge n
        weights (WeightSchedule): Gewichte pro Iteration
        max_iters (int): Maximale Anzahl Iterationen

    Returns:
        DecodeResult: Entscheidungen, Konvergenz und Iterationszahl

    Raises:
        ValueError: Bei falscher LLR-Länge oder zu kurzem Gewichtsplan
    """
    llr = _check_llr(graph, llr)
    weights.require(max_iters)
    w = weights.weights
    return _iterate(graph, llr, max_iters, 'bmp',
                    weighted=lambda c2v, ell: w[ell] * c2v,
                    quantize=lambda s, ell: quantize_messages('bmp', s))


def decode_tmp(graph, llr, weights, max_iters=DEFAULT_MAX_ITERS):
    """
    Ternäres Message Passing (TMP) mit Auslöschungen.

    VN-Regel: +1 falls s > T^(l), -1 falls s < -T^(l), sonst 0.
    CN-Regel: 0, falls eine andere Nachricht 0 ist, sonst Produkt der Vorzeichen.

    Args:
        graph (TannerGraph): Der Code
        llr (np.ndarray): Kanal-LLRs der Länge n
        weights (WeightSchedule): Gewichte und Schwellen pro Iteration
        max_iters (int): Maximale Anzahl Iterationen

    Returns:
        DecodeResult: Entscheidungen, Konvergenz und Iterationszahl

    Raises:
        ValueError: Bei falscher LLR-Länge, zu kurzem Plan oder fehlenden Schwellen
    """
    llr = _check_llr(graph, llr)
    weights.require(max_iters)
    if weights.thresholds is None:
        raise ValueError("TMP benötigt Quantisierungsschwellen")
    w, thresholds = weights.weights, weights.thresholds
    return _iterate(graph, llr, max_iters, 'tmp',
                    weighted=lambda c2v, ell: w[ell] * c2v,
                    quantize=lambda s, ell: quantize_messages('tmp', s, thresholds[ell]))


def decode_qmp(graph, llr, weights, max_iters=DEFAULT_MAX_ITERS):
    """
    Quaternäres Message Passing (QMP) mit schwachen und starken Nachrichten.

    VN-Regel: s = L + sum w_|m| sign(m); |s| > T^(l) ergibt eine starke
    Nachricht (+-2), sonst eine schwache (+-1). CN-Regel: Produkt der
    Vorzeichen, stark nur wenn alle anderen Nachrichten stark sind.

    Args:
        graph (TannerGraph): Der Code
        llr (np.ndarray): Kanal-LLRs der Länge n
        weights (WeightSchedule): Starke Gewichte (weights), schwache Gewichte
            (weak_weights) und Schwellen pro Iteration
        max_iters (int): Maximale Anzahl Iterationen

    Returns:
        DecodeResult: Entscheidungen, Konvergenz und Iterationszahl

    Raises:
        ValueError: Bei falscher LLR-Länge, zu kurzem oder unvollständigem Plan
    """
    llr = _check_llr(graph, llr)
    weights.require(max_iters)
    if weights.thresholds is None or weights.weak_weights is None:
        raise ValueError("QMP benötigt Schwellen und Gewichte für schwache Nachrichten")
    strong, weak, thresholds = weights.weights, weights.weak_weights, weights.thresholds

    def weighted(c2v, ell):
        return np.where(np.abs(c2v) == 2, strong[ell], weak[ell]) * np.sign(c2v)

    return _iterate(graph, llr, max_iters, 'qmp', weighted=weighted,
                    quantize=lambda s, ell: quantize_messages('qmp', s, thresholds[ell]))


def decode_none(graph, llr, weights=None, max_iters=0):
    """Kein Decoder: harte Kanalentscheidungen."""
    llr = _check_llr(graph, llr)
    bits = (llr <= 0).astype(np.uint8)
    return DecodeResult(bits=bits, converged=is_codeword(bits, graph), iterations=0)


_DECODERS = {
    'bp': lambda graph, llr, weights, max_iters: decode_bp(graph, llr, max_iters),
    'bmp': decode_bmp,
    'tmp': decode_tmp,
    'qmp': decode_qmp,
    'none': decode_none,
}


def get_decoder(name):
    """
    Liefert einen Decoder mit der Signatur (graph, llr, weights, max_iters).

    Args:
        name (str): 'bp', 'bmp', 'tmp', 'qmp' oder 'none'

    Returns:
        callable: Die Decoder-Funktion

    Raises:
        ValueError: Bei unbekanntem Namen
    """
    try:
        return _DECODERS[name.lower()]
    except KeyError:
        raise ValueError(f"Unbekannter Decoder '{name}', erlaubt: {', '.join(_DECODERS)}")
