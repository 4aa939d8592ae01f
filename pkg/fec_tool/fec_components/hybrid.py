#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Hybride SD/HD-Verkettung

Verkettung eines inneren Soft-Decision-LDPC-Codes mit einem äußeren
Hard-Decision-Staircase-Code. Der innere Decoder senkt die Bitfehlerrate unter
die Schwelle p_SC des äußeren Codes, der äußere Decoder erledigt den Rest.

Funktionen:
- Block-Interleaver zwischen inneren Rahmen und äußeren Blöcken
- Ende-zu-Ende-Simulation mit Messpunkten am inneren und äußeren Ausgang
- Bisektion des für eine innere Ziel-BER nötigen Es/N0

Technische Details:
- Innere Rahmen werden als Nullcodewort simuliert; das Fehlermuster des
  inneren Decoders wird auf die eingebetteten Staircase-Bits addiert
- Jeder innere Rahmen trägt floor(n * R) Bits des äußeren Stroms
- Die innere BER zählt alle n Codebits eines Rahmens
- Gleiche Seeds ergeben bei jedem Es/N0 dieselben Rauschmuster
  (gemeinsame Zufallszahlen für die Bisektion)

Verwendung:
    spec = HybridSpec(inner=graph, inner_decoder='bmp',
                      outer=parse_product_code('staircase:bch:510,483,3'))
    result = hybrid_transmit_decode(100, spec, ChannelParams(esno_db=2.4, seed=1))
    print(result.inner_ber, result.outer_ber)

Autor: Team A2-2
"""

import logging
import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_MAX_ITERS, P_SC
from ..errors import BracketError, ConfidenceError
from .channel_capacity import ChannelParams, llr as channel_llr, transmit
from .density_evolution import schedule_for_graph
from .mp_decoders import get_decoder
from .product_codes import StaircaseDecoder, staircase_encode

logger = logging.getLogger(__name__)

# Standard-Suchintervall für inner_required_snr in dB
INNER_BRACKET_DB = (-2.0, 8.0)


@dataclass(frozen=True, eq=False)
class HybridSpec:
    """
    Parameter der Verkettung.

    Attribute:
        inner (TannerGraph | int): Innerer Code; eine ganze Zahl N steht für
            uncodierte Rahmen der Länge N (nur mit inner_decoder='none')
        inner_decoder (str): 'bp', 'bmp', 'tmp', 'qmp' oder 'none'
        outer (StaircaseSpec): Äußerer Staircase-Code
        inner_schedule (WeightSchedule, optional): Fester Gewichtsplan; fehlt er,
            wird für BMP/TMP/QMP pro Es/N0 ein DE-Plan erzeugt
        max_iters (int): Iterationen des inneren Decoders
        interleaver_seed (int): Seed des Block-Interleavers
        interleaver_blocks (int, optional): Staircase-Blöcke pro Interleaver,
            Standard ist die Fenstergröße des äußeren Decoders
        p_target (float): Ziel-BER am inneren Ausgang
    """
    inner: object
    inner_decoder: str
    outer: object
    inner_schedule: object = None
    max_iters: int = DEFAULT_MAX_ITERS
    interleaver_seed: int = 0
    interleaver_blocks: int = None
    p_target: float = P_SC

    def __post_init__(self):
        get_decoder(self.inner_decoder)
        if isinstance(self.inner, int) and self.inner_decoder != 'none':
            raise ValueError("Uncodierte innere Rahmen erlauben nur den Decoder 'none'")
        if not 0.0 < self.p_target < 0.5:
            raise ValueError(f"p_target={self.p_target} liegt nicht in (0, 0.5)")
        if self.payload < self.outer.bits_per_block:
            raise ValueError(f"rate mismatch: innerer Rahmen trägt {self.payload} Bits, "
                             f"ein Staircase-Block hat {self.outer.bits_per_block}")

    @property
    def inner_n(self):
        return self.inner if isinstance(self.inner, int) else self.inner.n

    @property
    def inner_rate(self):
        return 1.0 if isinstance(self.inner, int) else self.inner.design_rate

    @property
    def payload(self):
        """Staircase-Bits pro innerem Rahmen."""
        return int(math.floor(self.inner_n * self.inner_rate + 1e-9))

    @property
    def span(self):
        """Staircase-Blöcke pro Interleaver."""
        return self.interleaver_blocks or self.outer.window

    @property
    def rate(self):
        return self.inner_rate * self.outer.rate


@dataclass(frozen=True)
class HybridResult:
    """
    Fehlerstatistik an beiden Messpunkten.

    Attribute:
        inner_frames (int): Simulierte innere Rahmen
        inner_bits (int): Gezählte innere Codebits
        inner_bit_errors (int): Bitfehler nach dem inneren Decoder
        inner_frame_errors (int): Innere Rahmen mit Restfehlern
        outer_blocks (int): Ausgewertete Staircase-Blöcke
        outer_bits (int): Ausgewertete Bits nach dem äußeren Decoder
        outer_bit_errors (int): Bitfehler nach dem äußeren Decoder
        outer_block_errors (int): Staircase-Blöcke mit Restfehlern
    """
    inner_frames: int
    inner_bits: int
    inner_bit_errors: int
    inner_frame_errors: int
    outer_blocks: int
    outer_bits: int
    outer_bit_errors: int
    outer_block_errors: int

    @property
    def inner_ber(self):
        return self.inner_bit_errors / self.inner_bits if self.inner_bits else 0.0

    @property
    def outer_ber(self):
        return self.outer_bit_errors / self.outer_bits if self.outer_bits else 0.0

    @property
    def outer_fer(self):
        return self.outer_block_errors / self.outer_blocks if self.outer_blocks else 0.0


def _permutation(length, seed):
    return np.random.default_rng(seed).permutation(length)


def interleave(bits, seed):
    """Gleichverteilte Permutation der Bits, bestimmt durch seed."""
    bits = np.asarray(bits)
    return bits[_permutation(bits.shape[0], seed)]


def deinterleave(bits, seed):
    """Umkehrung von interleave()."""
    bits = np.asarray(bits)
    out = np.empty_like(bits)
    out[_permutation(bits.shape[0], seed)] = bits
    return out


def _inner_decoder(spec, params):
    """Decodierfunktion llr -> Fehlermuster für den inneren Code bei params."""
    if spec.inner_decoder == 'none':
        return lambda llr: (llr <= 0).astype(np.uint8)
    schedule = spec.inner_schedule
    if schedule is None and spec.inner_decoder in ('bmp', 'tmp', 'qmp'):
        schedule = schedule_for_graph(spec.inner_decoder, spec.inner, params.esno_db, spec.max_iters)
    decode = get_decoder(spec.inner_decoder)
    return lambda llr: decode(spec.inner, llr, schedule, spec.max_iters).bits


def _inner_frame_errors(decode, spec, params, rng):
    """Ein innerer Rahmen als Nullcodewort (Symbol +1) über den Kanal."""
    received = transmit(np.ones(spec.inner_n), params, rng)
    return decode(channel_llr(received, params))


def hybrid_transmit_decode(num_blocks, spec, params, seed=None):
    """
    Ende-zu-Ende-Simulation der Verkettung.

    Ablauf: Staircase-Codierung zufälliger Informationsbits, Interleaving,
    innere Übertragung und Decodierung, Deinterleaving, Staircase-iBDD im
    gleitenden Fenster. Hinter den ausgewerteten Blöcken werden weitere Blöcke
    übertragen, damit alle ausgewerteten Blöcke voll geschützt sind.

    Args:
        num_blocks (int): Auszuwertende Staircase-Blöcke
        spec (HybridSpec): Parameter der Verkettung
        params (ChannelParams): Kanal
        seed (int, optional): Seed, Standard ist params.seed

    Returns:
        HybridResult: Fehlerstatistik am inneren und äußeren Ausgang

    Raises:
        ValueError: Wenn num_blocks < 1
    """
    if num_blocks < 1:
        raise ValueError(f"window underflow: mindestens ein Staircase-Block nötig, nicht {num_blocks}")
    seed = params.seed if seed is None else seed
    root = np.random.SeedSequence(0 if seed is None else seed)
    info_rng = np.random.default_rng(root.spawn(1)[0])
    decode = _inner_decoder(spec, params)
    outer, a = spec.outer, spec.outer.side
    span_bits = spec.span * outer.bits_per_block
    frames_per_group = math.ceil(span_bits / spec.payload)
    groups = math.ceil((num_blocks + outer.window) / spec.span)

    decoder = StaircaseDecoder(outer)
    sent = deque()
    prev = None
    inner = dict(frames=0, bits=0, bit_errors=0, frame_errors=0)
    counted = outer_errors = outer_block_errors = 0

    def account(decided):
        nonlocal counted, outer_errors, outer_block_errors
        for block in decided:
            reference = sent.popleft()
            if counted >= num_blocks:
                continue
            errors = int(np.count_nonzero(block != reference))
            outer_errors += errors
            outer_block_errors += errors > 0
            counted += 1

    for group in range(groups):
        info = info_rng.integers(0, 2, spec.span * outer.info_per_block, dtype=np.uint8)
        blocks = staircase_encode(info, outer, prev=prev)
        prev = blocks[-1]
        sent.extend(blocks)
        stream = interleave(blocks.ravel(), spec.interleaver_seed)
        for frame in range(frames_per_group):
            rng = np.random.default_rng(np.random.SeedSequence([root.entropy, group, frame]))
            errors = _inner_frame_errors(decode, spec, params, rng)
            num_errors = int(np.count_nonzero(errors))
            inner['frames'] += 1
            inner['bits'] += spec.inner_n
            inner['bit_errors'] += num_errors
            inner['frame_errors'] += num_errors > 0
            chunk = slice(frame * spec.payload, min((frame + 1) * spec.payload, span_bits))
            stream[chunk] ^= errors[:chunk.stop - chunk.start]
        received = deinterleave(stream, spec.interleaver_seed).reshape(-1, a, a)
        for block in received:
            account(decoder.push(block))
    account(decoder.flush())

    logger.info("Hybrid %.3f dB: innere BER %.3e, äußere BER %.3e", params.esno_db,
                inner['bit_errors'] / max(inner['bits'], 1), outer_errors / max(counted * a * a, 1))
    return HybridResult(inner_frames=inner['frames'], inner_bits=inner['bits'],
                        inner_bit_errors=inner['bit_errors'], inner_frame_errors=inner['frame_errors'],
                        outer_blocks=counted, outer_bits=counted * a * a,
                        outer_bit_errors=outer_errors, outer_block_errors=outer_block_errors)


def inner_ber(spec, esno_db, frames, seed=0):
    """
    BER am Ausgang des inneren Decoders über alle n Codebits.

    Rahmen f nutzt den Seed (seed, f) unabhängig von esno_db.

    Returns:
        tuple: (Bitfehler, gezählte Bits)
    """
    params = ChannelParams(esno_db=esno_db, seed=seed)
    decode = _inner_decoder(spec, params)
    errors = 0
    for frame in range(frames):
        rng = np.random.default_rng(np.random.SeedSequence([seed, frame]))
        errors += int(np.count_nonzero(_inner_frame_errors(decode, spec, params, rng)))
    return errors, frames * spec.inner_n


def inner_required_snr(spec, p_target=None, tol_db=0.05, bracket=INNER_BRACKET_DB, frames=100,
                       min_errors=100, seed=0):
    """
    Es/N0, bei dem der innere Decoder die Ziel-BER erreicht (Bisektion).

    Args:
        spec (HybridSpec): Innerer Code und Decoder
        p_target (float, optional): Ziel-BER, Standard ist spec.p_target
        tol_db (float): Genauigkeit in dB
        bracket (tuple): Suchintervall in dB
        frames (int): Monte-Carlo-Rahmen pro Auswertung
        min_errors (int): Mindestanzahl erwarteter Fehler bei p_target
        seed (int): Seed der Rauschmuster

    Returns:
        float: Kleinstes Es/N0 (bis auf tol_db) mit BER <= p_target

    Raises:
        ValueError: Bei ungültigen Parametern
        ConfidenceError: Wenn das Rahmenbudget bei p_target weniger als
            min_errors Fehler erwarten lässt
        BracketError: Wenn das Ziel im Intervall nicht erreicht wird
    """
    p_target = spec.p_target if p_target is None else p_target
    if p_target <= 0 or tol_db <= 0:
        raise ValueError(f"p_target={p_target} und tol_db={tol_db} müssen positiv sein")
    budget = frames * spec.inner_n
    if budget * p_target < min_errors:
        raise ConfidenceError(f"{budget} Bits reichen nicht für {min_errors} Fehler bei BER {p_target:.2e}; "
                              f"mindestens {math.ceil(min_errors / p_target)} Bits nötig")

    def meets(esno_db):
        errors, bits = inner_ber(spec, esno_db, frames, seed)
        return errors / bits <= p_target

    lo, hi = bracket
    if meets(lo):
        return lo
    if not meets(hi):
        raise BracketError(f"Innere BER {p_target:.2e} wird nicht erreicht", (lo, hi))
    while hi - lo > tol_db:
        mid = 0.5 * (lo + hi)
        if meets(mid):
            hi = mid
        else:
            lo = mid
    logger.info("Inneres Es/N0 für BER %.2e: %.3f dB", p_target, hi)
    return hi
