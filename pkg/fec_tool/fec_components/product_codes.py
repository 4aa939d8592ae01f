#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Produktcodes und Staircase-Codes

Produktcodes (PC) und Staircase-Codes aus BCH-Komponentencodes mit iterativer
Bounded-Distance-Decodierung (iBDD) und iBDD mit skalierter Zuverlässigkeit
(iBDD-SR).

Funktionen:
- Systematische PC-Codierung (erst Zeilen, dann Spalten)
- iBDD: abwechselnd Zeilen- und Spalten-BDD mit harten Nachrichten
- iBDD-SR: mu = w * mu_bar + L, psi = f(mu) mit ternärem BDD-Ausgang
- Staircase-Codierung und Decodierung im gleitenden Fenster
- Gittersuche der iBDD-SR-Gewichte über Pilotrahmen
- BSC-Simulation des Staircase-Codes

Technische Details:
- Bits: 0 entspricht psi = -1, 1 entspricht psi = +1; L > 0 spricht für Bit 1
- Ein BDD-Versagen setzt mu_bar für die ganze Zeile auf 0
- Zwischen den Komponentendecodern werden nur harte Entscheidungen ausgetauscht
- Staircase: jede Zeile von [B_{i-1}^T | B_i] ist ein Komponentencodewort,
  B_0 ist der Nullblock; ein ausgegebener Block wird nicht mehr verändert
- Fehlkorrekturen werden nicht erkannt

Verwendung:
    spec = parse_product_code('pc:bch:255,231,3')
    result = ibdd_sr(CodeArray.from_llr(llr), spec, weights, max_iters=10)

    sc = parse_product_code('staircase:bch:510,483,3:W=7')
    decoder = StaircaseDecoder(sc)
    for block in received_blocks:
        for decided in decoder.push(block):
            ...

Autor: Team A2-2
"""

import logging
from collections import deque
from dataclasses import dataclass

import numpy as np

from ..config import (PC_MAX_ITERS, SR_PILOT_FRAMES, SR_WEIGHT_GRID, STAIRCASE_SWEEPS,
                      STAIRCASE_WINDOW)
from .channel_capacity import ChannelParams, llr as channel_llr, transmit
from .galois_bch import bch_encode, bdd_decode_rows, is_bch_codeword, parse_bch_spec
from .mp_decoders import WeightSchedule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PcSpec:
    """
    Produktcode mit gleichem Komponentencode für Zeilen und Spalten.

    Attribute:
        component (BchSpec): Komponentencode (n, k, t)
    """
    component: object

    @property
    def n(self):
        return self.component.n

    @property
    def k(self):
        return self.component.k

    @property
    def shape(self):
        return (self.n, self.n)

    @property
    def rate(self):
        return (self.k / self.n) ** 2

    def __str__(self):
        return f"pc:{self.component}"


@dataclass(frozen=True)
class StaircaseSpec:
    """
    Staircase-Code aus einem Komponentencode gerader Länge.

    Attribute:
        component (BchSpec): Komponentencode (n, k, t), n gerade
        window (int): Blöcke im Decodierfenster
        sweeps (int): Komponentendurchläufe pro Fensterverschiebung
    """
    component: object
    window: int = STAIRCASE_WINDOW
    sweeps: int = STAIRCASE_SWEEPS

    def __post_init__(self):
        if self.component.n % 2 != 0:
            raise ValueError(f"Staircase-Komponentencode benötigt gerade Länge, nicht n={self.component.n}")
        if self.side <= self.component.redundancy:
            raise ValueError(f"Blockseite {self.side} muss größer als n-k={self.component.redundancy} sein")
        if self.window < 2:
            raise ValueError(f"Decodierfenster mit {self.window} Blöcken ist kürzer als 2")
        if self.sweeps < 1:
            raise ValueError(f"Mindestens ein Durchlauf pro Verschiebung erforderlich, nicht {self.sweeps}")

    @property
    def side(self):
        return self.component.n // 2

    @property
    def info_per_block(self):
        return self.side * (self.side - self.component.redundancy)

    @property
    def bits_per_block(self):
        return self.side * self.side

    @property
    def rate(self):
        return 1.0 - 2.0 * self.component.redundancy / self.component.n

    def __str__(self):
        return f"staircase:{self.component}:W={self.window}"


def parse_product_code(text):
    """
    Erstellt einen Produkt- oder Staircase-Code aus einem String.

    Args:
        text (str): 'pc:bch:n,k,t' oder 'staircase:bch:n,k,t[:W=7][:S=2]'

    Returns:
        PcSpec | StaircaseSpec: Der beschriebene Code

    Raises:
        ValueError: Bei unbekanntem Format
    """
    parts = text.strip().split(':')
    if len(parts) < 3 or parts[1].lower() != 'bch':
        raise ValueError(f"Ungültiger Code-String '{text}'")
    component = parse_bch_spec(parts[2])
    if parts[0] == 'pc' and len(parts) == 3:
        return PcSpec(component)
    if parts[0] == 'staircase':
        options = {'W': STAIRCASE_WINDOW, 'S': STAIRCASE_SWEEPS}
        for option in parts[3:]:
            key, sep, value = option.partition('=')
            if not sep or key not in options:
                raise ValueError(f"Unbekannte Staircase-Option '{option}' in '{text}'")
            try:
                options[key] = int(value)
            except ValueError:
                raise ValueError(f"Option '{option}' erwartet eine ganze Zahl")
        return StaircaseSpec(component, window=options['W'], sweeps=options['S'])
    raise ValueError(f"Unbekannter Code-String '{text}'")


@dataclass
class CodeArray:
    """
    Zustand eines Produktcodes während der Decodierung.

    Attribute:
        bits (np.ndarray): Harte Entscheidungen als Bits (n x n, uint8)
        llr (np.ndarray, optional): Kanal-LLRs gleicher Form (L > 0 -> Bit 1)
        iteration (int): Bisher ausgeführte Iterationen
    """
    bits: np.ndarray
    llr: np.ndarray = None
    iteration: int = 0

    def __post_init__(self):
        self.bits = np.ascontiguousarray(self.bits, dtype=np.uint8)
        if self.llr is not None:
            self.llr = np.asarray(self.llr, dtype=float)
            if self.llr.shape != self.bits.shape:
                raise ValueError(f"LLR-Form {self.llr.shape} passt nicht zu {self.bits.shape}")

    @classmethod
    def from_llr(cls, llr):
        """Startzustand psi = f(L) aus den Kanal-LLRs."""
        llr = np.asarray(llr, dtype=float)
        return cls(bits=(llr > 0).astype(np.uint8), llr=llr)

    @property
    def psi(self):
        """Harte Entscheidungen in {-1, +1}."""
        return 2 * self.bits.astype(np.int8) - 1


@dataclass(frozen=True, eq=False)
class PcDecodeResult:
    """
    Ergebnis einer Produktcode-Decodierung.

    Attribute:
        bits (np.ndarray): Entscheidungen (n x n)
        converged (bool): True, wenn alle Zeilen und Spalten Codewörter sind
        iterations (int): Ausgeführte Iterationen (Zeilen- plus Spaltendurchlauf)
    """
    bits: np.ndarray
    converged: bool
    iterations: int


def pc_encode(info, spec):
    """
    Systematische Produktcode-Codierung.

    Args:
        info (np.ndarray): Informationsbits (k x k)
        spec (PcSpec): Der Produktcode

    Returns:
        np.ndarray: Codearray (n x n), Zeilen und Spalten sind Komponentencodewörter

    Raises:
        ValueError: Wenn info nicht die Form k x k hat
    """
    info = np.asarray(info, dtype=np.uint8)
    if info.shape != (spec.k, spec.k):
        raise ValueError(f"Informationsmatrix {info.shape} passt nicht zu ({spec.k}, {spec.k})")
    rows = bch_encode(info, spec.component)
    return np.ascontiguousarray(bch_encode(rows.T, spec.component).T)


def pc_is_codeword(bits, spec):
    """True, wenn alle Zeilen und Spalten Komponentencodewörter sind."""
    bits = np.asarray(bits, dtype=np.uint8)
    return bool(np.all(is_bch_codeword(bits, spec.component)) and
                np.all(is_bch_codeword(bits.T, spec.component)))


def _check_array(array, spec):
    if array.bits.shape != spec.shape:
        raise ValueError(f"Codearray {array.bits.shape} passt nicht zu {spec.shape}")


def _sr_weights(weights, count):
    """Gewichte für iBDD-SR als Array der Länge >= count, alle > 0."""
    if isinstance(weights, WeightSchedule):
        values = weights.weights
    else:
        values = np.atleast_1d(np.asarray(weights, dtype=float))
        if values.size == 1:
            values = np.full(max(count, 1), float(values[0]))
    if values.shape[0] < count:
        raise ValueError(f"Skalierungsplan mit {values.shape[0]} Einträgen ist kürzer als {count}")
    if not np.all(np.isfinite(values[:count])) or np.any(values[:count] <= 0):
        raise ValueError("Skalierungsfaktoren für iBDD-SR müssen endlich und positiv sein")
    return values


def _frozen_touched(out, bits, frozen):
    """Zeilen, deren Korrektur eine der ersten frozen Spalten ändert."""
    if not frozen:
        return np.zeros(bits.shape[0], dtype=bool)
    return np.any(out[:, :frozen] != bits[:, :frozen], axis=1)


def _bdd_rows_frozen(bits, component, frozen=0):
    """BDD je Zeile; Korrekturen in den ersten frozen Spalten gelten als Versagen."""
    out, _ = bdd_decode_rows(bits, component)
    touched = _frozen_touched(out, bits, frozen)
    out[touched] = bits[touched]
    return out


def _sr_half(bits, llr, weight, component, frozen=0):
    """Eine Hälfte einer iBDD-SR-Iteration über die Zeilen von bits."""
    out, status = bdd_decode_rows(bits, component)
    ok = (status >= 0) & ~_frozen_touched(out, bits, frozen)
    mu_bar = np.where(ok[:, None], 2.0 * out - 1.0, 0.0)
    return (weight * mu_bar + llr > 0).astype(np.uint8)


def _sr_iteration(bits, llr, weight, component):
    rows = _sr_half(bits, llr, weight, component)
    return np.ascontiguousarray(_sr_half(rows.T, llr.T, weight, component).T)


def ibdd(array, spec, max_iters=PC_MAX_ITERS):
    """
    Iterative Bounded-Distance-Decodierung eines Produktcodes.

    Zeilen und Spalten werden abwechselnd mit BDD decodiert; bei Erfolg wird
    das Codewort übernommen, bei Versagen bleiben die Bits unverändert.

    Args:
        array (CodeArray): Startzustand aus harten Kanalentscheidungen
        spec (PcSpec): Der Produktcode
        max_iters (int): Maximale Anzahl Zeilen-plus-Spalten-Durchläufe

    Returns:
        PcDecodeResult: Entscheidungen, Konvergenz, Iterationen

    Raises:
        ValueError: Bei falscher Form
    """
    _check_array(array, spec)
    bits = array.bits.copy()
    iterations = 0
    for iterations in range(1, max_iters + 1):
        rows, _ = bdd_decode_rows(bits, spec.component)
        cols, _ = bdd_decode_rows(rows.T, spec.component)
        updated = np.ascontiguousarray(cols.T)
        changed = np.any(updated != bits)
        bits = updated
        if not changed:
            break
    array.bits, array.iteration = bits, array.iteration + iterations
    return PcDecodeResult(bits=bits, converged=pc_is_codeword(bits, spec), iterations=iterations)


def ibdd_sr(array, spec, weights, max_iters=PC_MAX_ITERS):
    """
    iBDD mit skalierter Zuverlässigkeit (iBDD-SR).

    Pro Zeile: BDD auf psi, mu_bar in {-1, 0, +1} (0 bei Versagen für die ganze
    Zeile), mu = w^(l) * mu_bar + L, psi = f(mu). Die Spalten folgen
    symmetrisch mit den neuen psi als Eingang.

    Args:
        array (CodeArray): Zustand mit Kanal-LLRs (psi wird als f(L) gestartet)
        spec (PcSpec): Der Produktcode
        weights (WeightSchedule | sequence | float): Skalierung w^(l) > 0 pro Iteration
        max_iters (int): Maximale Anzahl Iterationen

    Returns:
        PcDecodeResult: Entscheidungen, Konvergenz, Iterationen

    Raises:
        ValueError: Wenn LLRs fehlen, ein Gewicht nicht positiv ist oder der
            Plan zu kurz ist
    """
    _check_array(array, spec)
    if array.llr is None:
        raise ValueError("iBDD-SR benötigt Kanal-LLRs im Codearray")
    w = _sr_weights(weights, max_iters)
    bits = (array.llr > 0).astype(np.uint8)
    iterations = 0
    for iterations in range(1, max_iters + 1):
        updated = _sr_iteration(bits, array.llr, w[iterations - 1], spec.component)
        changed = np.any(updated != bits)
        bits = updated
        if not changed or pc_is_codeword(bits, spec):
            break
    array.bits, array.iteration = bits, array.iteration + iterations
    return PcDecodeResult(bits=bits, converged=pc_is_codeword(bits, spec), iterations=iterations)


def staircase_encode(info_stream, spec, prev=None):
    """
    Codiert einen Informationsstrom in Staircase-Blöcke.

    Block B_i enthält a * (a - (n-k)) Informationsbits; die letzten n-k Spalten
    jeder Zeile sind Paritätsbits, sodass jede Zeile von [B_{i-1}^T | B_i]
    ein Komponentencodewort ist.

    Args:
        info_stream (np.ndarray): Informationsbits, ein Vielfaches von info_per_block
        spec (StaircaseSpec): Der Staircase-Code
        prev (np.ndarray, optional): Vorgängerblock, Standard ist der Nullblock B_0

    Returns:
        np.ndarray: Blöcke der Form (Anzahl, a, a)

    Raises:
        ValueError: Wenn der Strom nicht in ganze Blöcke aufgeht
    """
    info_stream = np.asarray(info_stream, dtype=np.uint8).ravel()
    a, per_block = spec.side, spec.info_per_block
    if info_stream.size % per_block != 0:
        raise ValueError(f"stream underflow: {info_stream.size} Bits sind kein Vielfaches von {per_block}")
    prev = np.zeros((a, a), dtype=np.uint8) if prev is None else np.asarray(prev, dtype=np.uint8)
    info_blocks = info_stream.reshape(-1, a, a - spec.component.redundancy)
    blocks = np.empty((info_blocks.shape[0], a, a), dtype=np.uint8)
    for i, info in enumerate(info_blocks):
        codewords = bch_encode(np.concatenate([prev.T, info], axis=1), spec.component)
        blocks[i] = codewords[:, a:]
        prev = blocks[i]
    return blocks


def staircase_is_valid(blocks, spec, prev=None):
    """True, wenn jede Zeile jedes Blockpaars [B_{i-1}^T | B_i] ein Codewort ist."""
    a = spec.side
    prev = np.zeros((a, a), dtype=np.uint8) if prev is None else prev
    for block in blocks:
        if not np.all(is_bch_codeword(np.concatenate([prev.T, block], axis=1), spec.component)):
            return False
        prev = block
    return True


class StaircaseDecoder:
    """
    Gleitendes Fenster über einen Staircase-Blockstrom.

    push() nimmt einen empfangenen Block auf; sobald das Fenster W Blöcke
    enthält, wird es decodiert und der älteste Block ausgegeben. flush()
    decodiert und leert den Rest. Der zuletzt ausgegebene Block dient als
    fester Anker des ersten Blockpaars.

    Args:
        spec (StaircaseSpec): Der Staircase-Code
        mode (str): 'ibdd' oder 'ibdd_sr'
        weights (WeightSchedule | sequence | float, optional): Skalierung pro
            Durchlauf (nur ibdd_sr)
        anchor (np.ndarray, optional): Block vor dem ersten empfangenen Block
    """

    def __init__(self, spec, mode='ibdd', weights=None, anchor=None):
        if mode not in ('ibdd', 'ibdd_sr'):
            raise ValueError(f"Unbekannter Staircase-Modus '{mode}'")
        if mode == 'ibdd_sr':
            if weights is None:
                raise ValueError("iBDD-SR benötigt Skalierungsfaktoren")
            self._weights = _sr_weights(weights, spec.sweeps)
        self.spec = spec
        self.mode = mode
        a = spec.side
        self._anchor = np.zeros((a, a), dtype=np.uint8) if anchor is None else np.asarray(anchor, np.uint8)
        self._bits = deque()
        self._llrs = deque()
        self.emitted = 0

    def __len__(self):
        return len(self._bits)

    def push(self, block, llr=None):
        """
        Nimmt einen Block auf und gibt ggf. den ältesten entschiedenen Block zurück.

        Args:
            block (np.ndarray): Harte Entscheidungen (a x a)
            llr (np.ndarray, optional): Kanal-LLRs des Blocks (Pflicht bei ibdd_sr)

        Returns:
            list: Null oder ein ausgegebener Block
        """
        a = self.spec.side
        block = np.asarray(block, dtype=np.uint8)
        if block.shape != (a, a):
            raise ValueError(f"Block {block.shape} passt nicht zu ({a}, {a})")
        if self.mode == 'ibdd_sr':
            if llr is None:
                raise ValueError("iBDD-SR benötigt Kanal-LLRs je Block")
            llr = np.asarray(llr, dtype=float)
            block = (llr > 0).astype(np.uint8)
        self._bits.append(block.copy())
        self._llrs.append(llr)
        if len(self._bits) < self.spec.window:
            return []
        return [self._emit()]

    def flush(self):
        """Decodiert und gibt alle verbleibenden Blöcke aus."""
        emitted = []
        while self._bits:
            emitted.append(self._emit())
        return emitted

    def _emit(self):
        self._decode_window()
        block = self._bits.popleft()
        self._llrs.popleft()
        self._anchor = block
        self.emitted += 1
        return block

    def _decode_window(self):
        a, component = self.spec.side, self.spec.component
        for sweep in range(self.spec.sweeps):
            for j in range(len(self._bits)):
                prev = self._anchor if j == 0 else self._bits[j - 1]
                # Der Ankerblock ist bereits ausgegeben und bleibt fest
                frozen = a if j == 0 else 0
                words = np.concatenate([prev.T, self._bits[j]], axis=1)
                if self.mode == 'ibdd':
                    decided = _bdd_rows_frozen(words, component, frozen)
                else:
                    prev_llr = np.zeros((a, a)) if j == 0 else self._llrs[j - 1]
                    llr = np.concatenate([prev_llr.T, self._llrs[j]], axis=1)
                    decided = _sr_half(words, llr, self._weights[sweep], component, frozen)
                if j > 0:
                    self._bits[j - 1] = np.ascontiguousarray(decided[:, :a].T)
                self._bits[j] = np.ascontiguousarray(decided[:, a:])


def staircase_decode(blocks, spec, mode='ibdd', weights=None, llrs=None, anchor=None):
    """
    Decodiert eine Folge empfangener Staircase-Blöcke im gleitenden Fenster.

    Args:
        blocks (np.ndarray): Harte Entscheidungen (Anzahl, a, a)
        spec (StaircaseSpec): Der Staircase-Code
        mode (str): 'ibdd' oder 'ibdd_sr'
        weights (WeightSchedule | sequence | float, optional): Skalierung (ibdd_sr)
        llrs (np.ndarray, optional): Kanal-LLRs gleicher Form (ibdd_sr)
        anchor (np.ndarray, optional): Bekannter Vorgängerblock, Standard B_0 = 0

    Returns:
        np.ndarray: Entschiedene Blöcke (Anzahl, a, a)
    """
    decoder = StaircaseDecoder(spec, mode=mode, weights=weights, anchor=anchor)
    decided = []
    for i, block in enumerate(blocks):
        decided.extend(decoder.push(block, None if llrs is None else llrs[i]))
    decided.extend(decoder.flush())
    a = spec.side
    return np.array(decided, dtype=np.uint8).reshape(-1, a, a)


@dataclass(frozen=True)
class StaircaseRun:
    """
    Ergebnis einer Staircase-Simulation.

    Attribute:
        blocks (int): Ausgewertete Blöcke
        bits (int): Ausgewertete Bits
        bit_errors (int): Restfehler nach der Decodierung
        block_errors (int): Blöcke mit mindestens einem Restfehler
    """
    blocks: int
    bits: int
    bit_errors: int
    block_errors: int

    @property
    def ber(self):
        return self.bit_errors / self.bits if self.bits else 0.0


def simulate_staircase_bsc(spec, p, num_blocks, seed=0):
    """
    Staircase-Decodierung (iBDD) über einen BSC mit Übergangswahrscheinlichkeit p.

    Gesendet wird die Nullfolge. Hinter den ausgewerteten Blöcken folgen W
    weitere Blöcke, damit auch die letzten ausgewerteten Blöcke voll geschützt sind.

    Args:
        spec (StaircaseSpec): Der Staircase-Code
        p (float): Bitfehlerwahrscheinlichkeit des Kanals
        num_blocks (int): Anzahl ausgewerteter Blöcke
        seed (int): Seed der Fehlermuster

    Returns:
        StaircaseRun: Fehlerstatistik der ausgewerteten Blöcke
    """
    if not 0.0 <= p <= 0.5:
        raise ValueError(f"Übergangswahrscheinlichkeit {p} liegt nicht in [0, 1/2]")
    rng = np.random.default_rng(seed)
    a = spec.side
    decoder = StaircaseDecoder(spec)
    bit_errors = block_errors = counted = 0

    def account(decided):
        nonlocal bit_errors, block_errors, counted
        for block in decided:
            if counted >= num_blocks:
                return
            errors = int(np.count_nonzero(block))
            bit_errors += errors
            block_errors += errors > 0
            counted += 1

    for _ in range(num_blocks + spec.window):
        account(decoder.push((rng.random((a, a)) < p).astype(np.uint8)))
    account(decoder.flush())
    logger.debug("Staircase-BSC p=%.3e: %d Fehler in %d Blöcken", p, bit_errors, counted)
    return StaircaseRun(blocks=counted, bits=counted * a * a, bit_errors=bit_errors, block_errors=block_errors)


def _pilot_llrs(spec, esno_db, frames, seed):
    """Kanal-LLRs für Nullcodewort-Pilotrahmen (Bit 0 -> Symbol -1)."""
    params = ChannelParams(esno_db=esno_db)
    seeds = np.random.SeedSequence(seed).spawn(frames)
    return [channel_llr(transmit(-np.ones(spec.shape), params, np.random.default_rng(s)), params)
            for s in seeds]


def optimize_sr_weights(spec, esno_db, grid=SR_WEIGHT_GRID, max_iters=PC_MAX_ITERS,
                        pilot_frames=SR_PILOT_FRAMES, seed=0):
    """
    Gierige Wahl der iBDD-SR-Skalierung pro Iteration über Pilotrahmen.

    In Iteration l wird jedes Gittergewicht auf den Zustand nach den bereits
    gewählten Gewichten angewendet; gewählt wird das Gewicht mit der kleinsten
    Pilot-BER. Ist ein konstanter Plan aus dem Gitter auf den Pilotrahmen
    besser, wird dieser zurückgegeben.

    Args:
        spec (PcSpec): Der Produktcode
        esno_db (float): Arbeitspunkt der Pilotrahmen
        grid (sequence): Kandidatengewichte (endlich, positiv)
        max_iters (int): Länge des Plans
        pilot_frames (int): Anzahl Pilotrahmen
        seed (int): Seed der Pilotrahmen

    Returns:
        WeightSchedule: Plan der Art 'ibdd_sr'

    Raises:
        ValueError: Bei leerem oder ungültigem Gitter
    """
    grid = np.asarray(list(grid), dtype=float)
    if grid.size == 0:
        raise ValueError("Leeres Gewichtsgitter")
    if not np.all(np.isfinite(grid)) or np.any(grid <= 0):
        raise ValueError("Gewichtsgitter muss endlich und positiv sein")
    component = spec.component
    llrs = _pilot_llrs(spec, esno_db, pilot_frames, seed)

    def errors(states):
        return sum(int(np.count_nonzero(bits)) for bits in states)

    def evaluate(schedule):
        return errors([ibdd_sr(CodeArray.from_llr(L), spec, schedule, max_iters).bits for L in llrs])

    # ibdd_sr hält bei Stillstand oder gültigem Codewort an; die Suche bildet das nach
    states = [(L > 0).astype(np.uint8) for L in llrs]
    done = [False] * len(llrs)
    chosen = []
    for _ in range(max_iters):
        candidates = [[bits if finished else _sr_iteration(bits, L, w, component)
                       for bits, L, finished in zip(states, llrs, done)] for w in grid]
        best = int(np.argmin([errors(c) for c in candidates]))
        chosen.append(float(grid[best]))
        done = [finished or np.array_equal(new, old) or pc_is_codeword(new, spec)
                for finished, new, old in zip(done, candidates[best], states)]
        states = candidates[best]
    greedy_errors = evaluate(chosen)

    constant_errors = [evaluate(float(w)) for w in grid]
    best = int(np.argmin(constant_errors))
    if constant_errors[best] < greedy_errors:
        logger.info("Konstantes Gewicht %.1f besser als gieriger Plan (%d < %d Fehler)",
                    grid[best], constant_errors[best], greedy_errors)
        chosen = [float(grid[best])] * max_iters
    return WeightSchedule(kind='ibdd_sr', weights=chosen, esno_db=float(esno_db),
                          meta={'code': str(spec), 'pilot_frames': pilot_frames, 'seed': seed})
