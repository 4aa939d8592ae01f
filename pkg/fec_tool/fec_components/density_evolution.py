#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Dichteentwicklung (DE) für quantisierte Decoder

Verfolgt die Fehlerwahrscheinlichkeit der Nachrichten eines regulären
(dv, dc)-Ensembles über die Iterationen auf dem Bi-AWGN-Kanal und leitet daraus
Gewichtspläne und iterative Decodierschwellen ab.

Funktionen:
- de_bmp_step: ein DE-Schritt für BMP in geschlossener Form
- de_run: Trajektorie für BMP, TMP oder QMP
- de_threshold: Decodierschwelle per Bisektion über Es/N0
- export_weight_schedule: Gewichtsplan für die Decoder aus einer Trajektorie

Technische Details:
- Konditionierung auf gesendetes +1: L ~ N(2/sigma^2, 4/sigma^2)
- BMP: Binomialmischung Gaußscher Tail-Wahrscheinlichkeiten
- TMP/QMP: volle Verteilung über das Nachrichtenalphabet; Gewichte pro
  Nachrichtenbetrag als LLR der CN-Nachricht, Quantisierungsschwelle pro
  Iteration gierig auf einem Gitter (maximale Transinformation der
  VN-Nachricht)
- Gewichte sind auf [0, W_MAX] begrenzt

Verwendung:
    traj = de_run('bmp', 4, 24, esno_db=2.5)
    schedule = export_weight_schedule(traj, 2.5)
    threshold = de_threshold('bmp', 4, 24)

Autor: Team A2-2
"""

import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import binom, multinomial

from ..config import DE_MAX_ITERS, W_MAX
from ..errors import BracketError
from .channel_capacity import binary_entropy, esno_to_sigma, qfunc
from .ldpc_codes import ScLdpcSpec
from .mp_decoders import WeightSchedule

logger = logging.getLogger(__name__)

# Unterstützte Decoder der Dichteentwicklung
DE_KINDS = ('bmp', 'tmp', 'qmp')

# Standard-Suchintervall der Schwellenbisektion in dB
DEFAULT_BRACKET_DB = (-5.0, 15.0)

# Stützstellen des Schwellengitters für TMP/QMP
THRESHOLD_GRID_POINTS = 81


@dataclass(frozen=True, eq=False)
class DeTrajectory:
    """
    Verlauf einer Dichteentwicklung.

    Attribute:
        kind (str): 'bmp', 'tmp' oder 'qmp'
        dv (int): VN-Grad
        dc (int): CN-Grad
        esno_db (float): Kanalparameter
        p (np.ndarray): p[0] = Q(1/sigma), p[l] Fehlerwahrscheinlichkeit der
            VN-Nachricht in Iteration l (TMP: Fehler plus halbe Auslöschung)
        q (np.ndarray): Fehlerwahrscheinlichkeit der CN-Nachricht je Iteration
        weights (np.ndarray): Gewicht w^(l) (QMP: starke Nachrichten)
        thresholds (np.ndarray, optional): Schwelle T^(l) der VN-Quantisierung
        weak_weights (np.ndarray, optional): Gewicht schwacher Nachrichten (QMP)
    """
    kind: str
    dv: int
    dc: int
    esno_db: float
    p: np.ndarray
    q: np.ndarray
    weights: np.ndarray
    thresholds: np.ndarray = None
    weak_weights: np.ndarray = None

    @property
    def final_p(self):
        return float(self.p[-1])

    @property
    def iterations(self):
        return int(self.q.shape[0])

    def reached(self, target_p):
        """True, wenn die Fehlerwahrscheinlichkeit target_p erreicht hat."""
        return self.final_p <= target_p


def _channel_moments(esno_db):
    sigma = float(esno_to_sigma(esno_db))
    return 2.0 / sigma ** 2, 2.0 / sigma


def _llr_weight(p_correct, p_wrong):
    """ln(P(richtig) / P(falsch)), begrenzt auf [0, W_MAX]."""
    if p_wrong <= 0.0:
        return W_MAX if p_correct > 0.0 else 0.0
    if p_correct <= p_wrong:
        return 0.0
    return min(math.log(p_correct / p_wrong), W_MAX)


def _check_degrees(dv, dc):
    if dv < 2 or dc < 2:
        raise ValueError(f"Grade dv={dv}, dc={dc} müssen mindestens 2 sein")


def de_bmp_step(p, dv, dc, esno_db):
    """
    Ein DE-Schritt für BMP.

    q = (1 - (1 - 2p)^(dc-1)) / 2,  w = ln((1 - q) / q) begrenzt auf W_MAX,
    p_next = sum_j C(dv-1, j) q^j (1-q)^(dv-1-j) Q((2/sigma^2 + w (dv-1-2j)) / (2/sigma))

    Args:
        p (float): Fehlerwahrscheinlichkeit der VN-Nachrichten in [0, 1/2]
        dv (int): VN-Grad
        dc (int): CN-Grad
        esno_db (float): Es/N0 in dB

    Returns:
        tuple: (q, w, p_next)

    Raises:
        ValueError: Wenn p nicht in [0, 1/2] liegt
    """
    if not 0.0 <= p <= 0.5:
        raise ValueError(f"Fehlerwahrscheinlichkeit p={p} liegt nicht in [0, 1/2]")
    _check_degrees(dv, dc)
    mu, sd = _channel_moments(esno_db)
    if p == 0.5:
        q = 0.5
    else:
        q = abs(float(np.expm1((dc - 1) * np.log1p(-2.0 * p)))) / 2.0
    w = _llr_weight(1.0 - q, q)
    j = np.arange(dv)
    p_next = float(np.sum(binom.pmf(j, dv - 1, q) * qfunc((mu + w * (dv - 1 - 2 * j)) / sd)))
    return q, w, min(p_next, 0.5)


def _sum_distribution(values, probs, draws):
    """Verteilung der Summe von draws unabhängigen Nachrichten (Werte, Wahrscheinlichkeiten)."""
    values = np.asarray(values, dtype=float)
    probs = np.clip(np.asarray(probs, dtype=float), 0.0, None)
    probs = probs / probs.sum()
    if draws == 0:
        return np.zeros(1), np.ones(1)
    counts = np.array([np.bincount(combo, minlength=len(values))
                       for combo in itertools.combinations_with_replacement(range(len(values)), draws)])
    return counts @ values, multinomial.pmf(counts, draws, probs)


def _tails(sums, sum_probs, mu, sd, thresholds):
    """
    P(L + S > x) und P(L + S < -x) für alle x in thresholds.

    Returns:
        tuple: (upper, lower), je ein Array über die Schwellen
    """
    x = np.asarray(thresholds, dtype=float)[:, None]
    upper = qfunc((x - sums - mu) / sd) @ sum_probs
    lower = qfunc((x + sums + mu) / sd) @ sum_probs
    return upper, lower


def _message_distribution(kind, sums, sum_probs, mu, sd, thresholds):
    """
    Verteilung der VN-Nachricht je Schwelle.

    Returns:
        np.ndarray: Zeilen je Schwelle; TMP-Spalten (-1, 0, +1),
            QMP-Spalten (-2, -1, +1, +2)
    """
    upper_t, lower_t = _tails(sums, sum_probs, mu, sd, thresholds)
    if kind == 'tmp':
        erased = np.clip(1.0 - upper_t - lower_t, 0.0, 1.0)
        return np.stack([lower_t, erased, upper_t], axis=1)
    upper_0, lower_0 = _tails(sums, sum_probs, mu, sd, [0.0])
    weak_pos = np.clip(upper_0 - upper_t, 0.0, 1.0)
    weak_neg = np.clip(lower_0 - lower_t, 0.0, 1.0)
    return np.stack([lower_t, weak_neg, weak_pos, upper_t], axis=1)


def _binary_info(p_pos, p_neg):
    """Transinformationsbeitrag eines symmetrischen Nachrichtenpaars +-a."""
    total = p_pos + p_neg
    eps = np.where(total > 0, p_neg / np.where(total > 0, total, 1.0), 0.5)
    return total * (1.0 - binary_entropy(np.clip(eps, 0.0, 1.0)))


def _mutual_information(kind, dist):
    if kind == 'tmp':
        return _binary_info(dist[:, 2], dist[:, 0])
    return _binary_info(dist[:, 3], dist[:, 0]) + _binary_info(dist[:, 2], dist[:, 1])


def _message_error(kind, dist):
    if kind == 'tmp':
        return float(dist[0] + 0.5 * dist[1])
    return float(dist[0] + dist[1])


def _choose_threshold(kind, sums, sum_probs, mu, sd):
    """Gierige Schwellenwahl: maximale Transinformation der VN-Nachricht."""
    t_max = mu + 4.0 * sd + float(np.max(np.abs(sums)))
    grid = np.linspace(0.0, t_max, THRESHOLD_GRID_POINTS)
    dists = _message_distribution(kind, sums, sum_probs, mu, sd, grid)
    best = int(np.argmax(_mutual_information(kind, dists)))
    return float(grid[best]), dists[best]


def _cn_distribution(kind, dist, dc):
    """Verteilung der CN-Nachricht aus dc - 1 unabhängigen VN-Nachrichten."""
    d = dc - 1
    if kind == 'tmp':
        neg, _, pos = dist
        nonzero, diff = (pos + neg) ** d, (pos - neg) ** d
        out_pos, out_neg = (nonzero + diff) / 2.0, (nonzero - diff) / 2.0
        return np.array([out_neg, max(1.0 - out_pos - out_neg, 0.0), out_pos])
    neg2, neg1, pos1, pos2 = dist
    strong, strong_diff = (pos2 + neg2) ** d, (pos2 - neg2) ** d
    sign_diff = ((pos1 + pos2) - (neg1 + neg2)) ** d
    out_pos2, out_neg2 = (strong + strong_diff) / 2.0, (strong - strong_diff) / 2.0
    out_pos1 = max((1.0 + sign_diff) / 2.0 - out_pos2, 0.0)
    out_neg1 = max((1.0 - sign_diff) / 2.0 - out_neg2, 0.0)
    return np.array([out_neg2, out_neg1, out_pos1, out_pos2])


def _run_bmp(dv, dc, esno_db, max_iters, stop_p):
    mu, sd = _channel_moments(esno_db)
    p = [float(qfunc(mu / sd))]
    q, w = [], []
    for _ in range(max_iters):
        q_l, w_l, p_next = de_bmp_step(p[-1], dv, dc, esno_db)
        q.append(q_l)
        w.append(w_l)
        p.append(p_next)
        if stop_p is not None and p_next <= stop_p:
            break
    return DeTrajectory(kind='bmp', dv=dv, dc=dc, esno_db=esno_db,
                        p=np.array(p), q=np.array(q), weights=np.array(w))


def _run_quantized(kind, dv, dc, esno_db, max_iters, stop_p):
    mu, sd = _channel_moments(esno_db)
    threshold, dist = _choose_threshold(kind, np.zeros(1), np.ones(1), mu, sd)
    p, q, w, w_weak, thresholds = [float(qfunc(mu / sd))], [], [], [], [threshold]
    for _ in range(max_iters):
        cn = _cn_distribution(kind, dist, dc)
        if kind == 'tmp':
            w_l = _llr_weight(cn[2], cn[0])
            values = np.array([-w_l, 0.0, w_l])
            q.append(float(cn[0] + 0.5 * cn[1]))
        else:
            w_l = _llr_weight(cn[3], cn[0])
            w_weak.append(_llr_weight(cn[2], cn[1]))
            values = np.array([-w_l, -w_weak[-1], w_weak[-1], w_l])
            q.append(float(cn[0] + cn[1]))
        w.append(w_l)
        sums, sum_probs = _sum_distribution(values, cn, dv - 1)
        threshold, dist = _choose_threshold(kind, sums, sum_probs, mu, sd)
        thresholds.append(threshold)
        p.append(_message_error(kind, dist))
        if stop_p is not None and p[-1] <= stop_p:
            break
    return DeTrajectory(kind=kind, dv=dv, dc=dc, esno_db=esno_db, p=np.array(p), q=np.array(q),
                        weights=np.array(w), thresholds=np.array(thresholds),
                        weak_weights=np.array(w_weak) if kind == 'qmp' else None)


def de_run(kind, dv, dc, esno_db, max_iters=DE_MAX_ITERS, stop_p=None):
    """
    Berechnet die DE-Trajektorie eines Decoders.

    Args:
        kind (str): 'bmp', 'tmp' oder 'qmp'
        dv (int): VN-Grad
        dc (int): CN-Grad
        esno_db (float): Es/N0 in dB
        max_iters (int): Anzahl der Iterationen
        stop_p (float, optional): Vorzeitiger Abbruch, sobald p <= stop_p

    Returns:
        DeTrajectory: Verlauf von p, q, Gewichten und Schwellen

    Raises:
        ValueError: Bei unbekanntem Decoder oder ungültigen Graden
    """
    kind = kind.lower()
    if kind not in DE_KINDS:
        raise ValueError(f"unsupported kind '{kind}' für die Dichteentwicklung (erlaubt: {', '.join(DE_KINDS)})")
    _check_degrees(dv, dc)
    if kind == 'bmp':
        return _run_bmp(dv, dc, esno_db, max_iters, stop_p)
    return _run_quantized(kind, dv, dc, esno_db, max_iters, stop_p)


def de_threshold(kind, dv, dc, target_p=1e-10, tol_db=0.01, bracket=DEFAULT_BRACKET_DB,
                 max_iters=DE_MAX_ITERS):
    """
    Iterative Decodierschwelle per Bisektion.

    Args:
        kind (str): 'bmp', 'tmp' oder 'qmp'
        dv (int): VN-Grad
        dc (int): CN-Grad
        target_p (float): Ziel-Fehlerwahrscheinlichkeit (> 0)
        tol_db (float): Genauigkeit in dB (> 0)
        bracket (tuple): Suchintervall (untere, obere Grenze) in dB
        max_iters (int): Iterationsbudget je DE-Lauf

    Returns:
        float: Kleinstes Es/N0 (bis auf tol_db), bei dem p <= target_p erreicht wird

    Raises:
        ValueError: Bei nicht unterstütztem Decoder oder ungültigen Parametern
        BracketError: Wenn das Intervall die Schwelle nicht einschließt
    """
    if kind.lower() not in DE_KINDS:
        raise ValueError(f"unsupported kind '{kind}' für die Schwellenberechnung")
    if target_p <= 0 or tol_db <= 0:
        raise ValueError(f"target_p={target_p} und tol_db={tol_db} müssen positiv sein")

    def converges(esno_db):
        return de_run(kind, dv, dc, esno_db, max_iters, stop_p=target_p).reached(target_p)

    lo, hi = bracket
    if converges(lo) or not converges(hi):
        raise BracketError(f"Schwelle für {kind} ({dv},{dc}) liegt nicht im Suchintervall", (lo, hi))
    while hi - lo > tol_db:
        mid = 0.5 * (lo + hi)
        if converges(mid):
            hi = mid
        else:
            lo = mid
    logger.info("DE-Schwelle %s (%d,%d): %.4f dB", kind, dv, dc, hi)
    return hi


def _fit_length(values, length):
    if length <= len(values):
        return values[:length]
    fill = values[-1] if len(values) else W_MAX
    return np.concatenate([values, np.full(length - len(values), fill)])


def export_weight_schedule(trajectory, esno_db, length=None):
    """
    Erstellt einen Gewichtsplan aus einer Trajektorie.

    Ist die Trajektorie kürzer als length (vorzeitige Konvergenz), wird der
    letzte Eintrag fortgeschrieben.

    Args:
        trajectory (DeTrajectory): DE-Verlauf
        esno_db (float): Es/N0, bei dem die Trajektorie berechnet wurde
        length (int, optional): Länge des Plans (Standard: Länge der Trajektorie)

    Returns:
        WeightSchedule: Plan mit Gewichten in [0, W_MAX]
    """
    if not math.isclose(esno_db, trajectory.esno_db, abs_tol=1e-9):
        logger.warning("Trajektorie wurde bei %.4f dB berechnet, nicht bei %.4f dB",
                       trajectory.esno_db, esno_db)
    length = trajectory.iterations if length is None else int(length)
    column = lambda values: None if values is None else _fit_length(np.clip(values, 0.0, W_MAX), length)
    thresholds = None
    if trajectory.thresholds is not None:
        thresholds = _fit_length(trajectory.thresholds[:max(trajectory.iterations, 1)], length)
    return WeightSchedule(kind=trajectory.kind, weights=column(trajectory.weights),
                          thresholds=thresholds, weak_weights=column(trajectory.weak_weights),
                          esno_db=float(trajectory.esno_db),
                          meta={'dv': trajectory.dv, 'dc': trajectory.dc})


def schedule_for_graph(kind, graph, esno_db, length):
    """
    Gewichtsplan eines quantisierten Decoders für einen konkreten Graphen.

    SC-LDPC-Graphen verwenden das (dv,dc)-reguläre Ensemble ihrer Parameter;
    die Randknoten mit kleinerem CN-Grad gehen nicht ein. Andere Graphen
    verwenden den größten VN- und CN-Grad.

    Args:
        kind (str): 'bmp', 'tmp' oder 'qmp'
        graph (TannerGraph): Der Code
        esno_db (float): Arbeitspunkt
        length (int): Länge des Plans

    Returns:
        WeightSchedule: Plan bei esno_db
    """
    if isinstance(graph.spec, ScLdpcSpec):
        dv, dc = graph.spec.dv, graph.spec.dc
    else:
        dv, dc = int(graph.vn_degrees.max()), int(graph.cn_degrees.max())
    trajectory = de_run(kind, dv, dc, esno_db, max_iters=length)
    return export_weight_schedule(trajectory, esno_db, length=length)
