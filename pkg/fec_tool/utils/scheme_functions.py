#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Schema-Funktionen

Löst Schema-Strings der Simulationsumgebung in Code und Decoder auf und
simuliert einzelne Rahmen. Ein Schema beschreibt, was pro Rahmen gesendet,
decodiert und gezählt wird.

Funktionen:
- Auflösen von Schema-Strings (uncodiert, LDPC, Produkt-, Staircase- und Hybridcodes)
- Gewichtspläne pro Arbeitspunkt (DE-Pläne für BMP/TMP/QMP, iBDD-SR-Skalierung)
- Simulation eines Rahmens mit vorgegebenem Zufallsgenerator

Schema-Strings:
    uncoded:N
    scldpc:dv,dc,L,Q,mem[,seed]@bp|bmp|tmp|qmp|none
    ldpc:dv,dc,n[,seed]@bp|bmp|tmp|qmp|none
    pc:bch:n,k,t@ibdd|ibdd_sr
    staircase:bch:n,k,t[:W=7][:S=2]@ibdd|ibdd_sr
    hybrid:<innerer Code>@<Decoder>+staircase:bch:n,k,t[:W=7][:seed=5][:blocks=7]

Technische Details:
- Gesendet wird immer das Nullcodewort; gezählt werden alle Codebits
- LDPC-Seite: Bit 0 -> Symbol +1; Produktcode-Seite: Bit 0 -> Symbol -1
- Staircase- und Hybridrahmen umfassen STAIRCASE_FRAME_BLOCKS ausgewertete Blöcke

Verwendung:
    scheme = build_scheme('ldpc:3,6,1000@bmp')
    schedule = point_schedule(scheme, 3.0)
    rng = np.random.default_rng(1)
    outcome = simulate_frame(scheme, 3.0, schedule, rng)

Autor: Team A2-2
"""

import dataclasses
import logging
from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_MAX_ITERS, PC_MAX_ITERS, STAIRCASE_FRAME_BLOCKS
from ..errors import ConfigError
from ..fec_components.channel_capacity import ChannelParams, llr as channel_llr, transmit
from ..fec_components.density_evolution import schedule_for_graph
from ..fec_components.hybrid import HybridSpec, hybrid_transmit_decode
from ..fec_components.ldpc_codes import parse_ldpc_code
from ..fec_components.mp_decoders import WeightSchedule, get_decoder
from ..fec_components.product_codes import (
    CodeArray, PcSpec, StaircaseDecoder, StaircaseSpec, ibdd, ibdd_sr, optimize_sr_weights,
    parse_product_code,
)

logger = logging.getLogger(__name__)

# Decoder je Codefamilie; der erste Eintrag ist der Standard
SCHEME_DECODERS = {
    'uncoded': ('none',),
    'ldpc': ('bp', 'bmp', 'tmp', 'qmp', 'none'),
    'pc': ('ibdd', 'ibdd_sr'),
    'staircase': ('ibdd', 'ibdd_sr'),
    'hybrid': ('ibdd',),
}

# Decoder, die einen DE-Gewichtsplan benötigen
QUANTIZED_DECODERS = ('bmp', 'tmp', 'qmp')


@dataclass(frozen=True, eq=False)
class Scheme:
    """
    Aufgelöstes Schema.

    Attribute:
        text (str): Ursprünglicher Schema-String
        family (str): 'uncoded', 'ldpc', 'pc', 'staircase' oder 'hybrid'
        code (object): Graph, PcSpec, StaircaseSpec, HybridSpec oder Rahmenlänge
        decoder (str): Decoder des Codes (bei Hybrid: der innere Decoder)
        max_iters (int): Iterationen des Decoders
        bits_per_frame (int): Gezählte Codebits pro Rahmen
        rate (float): Gesamtcoderate
    """
    text: str
    family: str
    code: object
    decoder: str
    max_iters: int
    bits_per_frame: int
    rate: float

    @property
    def graph(self):
        """Tanner-Graph des (inneren) LDPC-Codes oder None."""
        if self.family == 'ldpc':
            return self.code
        if self.family == 'hybrid' and not isinstance(self.code.inner, int):
            return self.code.inner
        return None

    @property
    def needs_schedule(self):
        return self.decoder in QUANTIZED_DECODERS or self.decoder == 'ibdd_sr'

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class FrameOutcome:
    """
    Ergebnis eines simulierten Rahmens.

    Attribute:
        bit_errors (int): Fehlerhafte Codebits
        iterations (int): Ausgeführte Decoder-Iterationen
    """
    bit_errors: int
    iterations: int

    @property
    def frame_error(self):
        return self.bit_errors > 0


def _split_decoder(text, family):
    code, sep, decoder = text.rpartition('@')
    if not sep:
        return text, SCHEME_DECODERS[family][0]
    if decoder not in SCHEME_DECODERS[family]:
        raise ValueError(f"Decoder '{decoder}' passt nicht zur Codefamilie '{family}'")
    return code, decoder


def _parse_uncoded(text):
    _, _, body = text.partition(':')
    try:
        n = int(body)
    except ValueError:
        raise ValueError(f"Ungültige Rahmenlänge in '{text}'")
    if n < 1:
        raise ValueError(f"Rahmenlänge muss positiv sein, nicht {n}")
    return n


def _parse_hybrid(body, max_iters):
    inner_text, sep, outer_text = body.partition('+')
    if not sep:
        raise ValueError(f"Hybridschema benötigt '<innen>+<außen>', nicht '{body}'")
    options = {}
    outer_parts = []
    for part in outer_text.split(':'):
        key, eq, value = part.partition('=')
        if eq and key in ('seed', 'blocks'):
            options[key] = int(value)
        else:
            outer_parts.append(part)
    outer_text, _ = _split_decoder(':'.join(outer_parts), 'hybrid')
    outer = parse_product_code(outer_text)
    if not isinstance(outer, StaircaseSpec):
        raise ValueError(f"Äußerer Code muss ein Staircase-Code sein, nicht '{outer_text}'")
    if inner_text.startswith('uncoded:'):
        inner, decoder = _parse_uncoded(inner_text), 'none'
    else:
        inner_code, decoder = _split_decoder(inner_text, 'ldpc')
        inner = parse_ldpc_code(inner_code)
    return HybridSpec(inner=inner, inner_decoder=decoder, outer=outer,
                      max_iters=max_iters or DEFAULT_MAX_ITERS,
                      interleaver_seed=options.get('seed', 0),
                      interleaver_blocks=options.get('blocks'))


def build_scheme(text, max_iters=None):
    """
    Löst einen Schema-String auf.

    Args:
        text (str): Schema-String (siehe Moduldokumentation)
        max_iters (int, optional): Iterationen; Standard je Familie
            (DEFAULT_MAX_ITERS bzw. PC_MAX_ITERS)

    Returns:
        Scheme: Code, Decoder und Zählgrößen

    Raises:
        ConfigError: Wenn das Schema nicht aufgelöst werden kann
    """
    text = text.strip()
    head = text.split(':', 1)[0]
    try:
        if head == 'uncoded':
            n = _parse_uncoded(text)
            return Scheme(text, 'uncoded', n, 'none', 0, n, 1.0)
        if head in ('ldpc', 'scldpc'):
            code, decoder = _split_decoder(text, 'ldpc')
            graph = parse_ldpc_code(code)
            iters = max_iters or DEFAULT_MAX_ITERS
            return Scheme(text, 'ldpc', graph, decoder, iters, graph.n, graph.design_rate)
        if head == 'pc':
            code, decoder = _split_decoder(text, 'pc')
            spec = parse_product_code(code)
            return Scheme(text, 'pc', spec, decoder, max_iters or PC_MAX_ITERS, spec.n * spec.n, spec.rate)
        if head == 'staircase':
            code, decoder = _split_decoder(text, 'staircase')
            spec = parse_product_code(code)
            return Scheme(text, 'staircase', spec, decoder, spec.sweeps,
                          STAIRCASE_FRAME_BLOCKS * spec.bits_per_block, spec.rate)
        if head == 'hybrid':
            spec = _parse_hybrid(text.split(':', 1)[1], max_iters)
            return Scheme(text, 'hybrid', spec, spec.inner_decoder, spec.max_iters,
                          STAIRCASE_FRAME_BLOCKS * spec.outer.bits_per_block, spec.rate)
    except (ValueError, IndexError) as e:
        raise ConfigError(f"Fehler beim Auflösen des Schemas '{text}': {e}") from e
    raise ConfigError(f"Unbekannte Codefamilie '{head}' in Schema '{text}'")


def point_schedule(scheme, esno_db, sr_weights='optimize', seed=0):
    """
    Gewichtsplan für einen Arbeitspunkt.

    BMP/TMP/QMP erhalten einen DE-Plan des Ersatzensembles bei esno_db;
    iBDD-SR erhält entweder die angegebenen Faktoren oder eine Gittersuche
    auf Pilotrahmen bei esno_db. Alle anderen Decoder brauchen keinen Plan.

    Args:
        scheme (Scheme): Aufgelöstes Schema
        esno_db (float): Arbeitspunkt des Plans
        sr_weights (str | sequence): 'optimize' oder Skalierungsfaktoren
        seed (int): Seed der Pilotrahmen

    Returns:
        WeightSchedule | None: Plan oder None
    """
    if scheme.decoder in QUANTIZED_DECODERS:
        return schedule_for_graph(scheme.decoder, scheme.graph, esno_db, scheme.max_iters)
    if scheme.decoder != 'ibdd_sr':
        return None
    if isinstance(sr_weights, str):
        if sr_weights != 'optimize':
            raise ConfigError(f"sr_weights '{sr_weights}' ist weder 'optimize' noch eine Liste")
        pc = scheme.code if scheme.family == 'pc' else PcSpec(scheme.code.component)
        return optimize_sr_weights(pc, esno_db, max_iters=scheme.max_iters, seed=seed)
    weights = [float(w) for w in sr_weights]
    if len(weights) == 1:
        weights = weights * scheme.max_iters
    if len(weights) < scheme.max_iters:
        raise ConfigError(f"{len(weights)} Skalierungsfaktoren für {scheme.max_iters} Iterationen")
    if any(w <= 0 for w in weights):
        raise ConfigError("Skalierungsfaktoren für iBDD-SR müssen positiv sein")
    return WeightSchedule(kind='ibdd_sr', weights=weights)


def check_schedule(scheme, schedule):
    """
    Prüft, ob ein geladener Plan zum Decoder des Schemas passt.

    Raises:
        ConfigError: Bei falscher Plan-Art oder zu kurzem Plan
    """
    if schedule is None:
        return
    if schedule.kind != scheme.decoder:
        raise ConfigError(f"Plan der Art '{schedule.kind}' passt nicht zum Decoder '{scheme.decoder}'")
    try:
        schedule.require(scheme.max_iters)
    except ValueError as e:
        raise ConfigError(str(e)) from e


def _zero_blocks_llr(spec, params, rng):
    a = spec.side
    return channel_llr(transmit(-np.ones((a, a)), params, rng), params)


def _simulate_staircase(spec, mode, schedule, params, rng):
    decoder = StaircaseDecoder(spec, mode=mode, weights=schedule)
    decided = []
    for _ in range(STAIRCASE_FRAME_BLOCKS + spec.window):
        llr = _zero_blocks_llr(spec, params, rng)
        decided.extend(decoder.push((llr > 0).astype(np.uint8), llr))
    decided.extend(decoder.flush())
    return sum(int(np.count_nonzero(block)) for block in decided[:STAIRCASE_FRAME_BLOCKS])


def simulate_frame(scheme, esno_db, schedule, rng):
    """
    Simuliert einen Rahmen des Schemas.

    Args:
        scheme (Scheme): Aufgelöstes Schema
        esno_db (float): Es/N0 in dB
        schedule (WeightSchedule | None): Plan aus point_schedule()
        rng (np.random.Generator): Zufallsquelle des Rahmens

    Returns:
        FrameOutcome: Bitfehler und Iterationen
    """
    params = ChannelParams(esno_db=esno_db)
    family = scheme.family
    if family == 'uncoded':
        llr = channel_llr(transmit(np.ones(scheme.code), params, rng), params)
        return FrameOutcome(bit_errors=int(np.count_nonzero(llr <= 0)), iterations=0)
    if family == 'ldpc':
        llr = channel_llr(transmit(np.ones(scheme.code.n), params, rng), params)
        result = get_decoder(scheme.decoder)(scheme.code, llr, schedule, scheme.max_iters)
        return FrameOutcome(bit_errors=int(np.count_nonzero(result.bits)), iterations=result.iterations)
    if family == 'pc':
        shape = scheme.code.shape
        array = CodeArray.from_llr(channel_llr(transmit(-np.ones(shape), params, rng), params))
        if scheme.decoder == 'ibdd_sr':
            result = ibdd_sr(array, scheme.code, schedule, scheme.max_iters)
        else:
            result = ibdd(array, scheme.code, scheme.max_iters)
        return FrameOutcome(bit_errors=int(np.count_nonzero(result.bits)), iterations=result.iterations)
    if family == 'staircase':
        errors = _simulate_staircase(scheme.code, scheme.decoder, schedule, params, rng)
        return FrameOutcome(bit_errors=errors, iterations=scheme.max_iters)
    spec = scheme.code
    if schedule is not None:
        spec = dataclasses.replace(spec, inner_schedule=schedule)
    result = hybrid_transmit_decode(STAIRCASE_FRAME_BLOCKS, spec, params,
                                    seed=int(rng.integers(0, 2 ** 63 - 1)))
    return FrameOutcome(bit_errors=result.outer_bit_errors, iterations=0)
