#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - FEC-Komponenten

Sammlung der Codierungs- und Analysekomponenten. Jede Komponente deckt einen
Baustein der Werkbank ab und kann einzeln verwendet werden.

Komponenten-Übersicht:
- galois_bch: GF(2^m)-Arithmetik, BCH-Codierung und BDD
- ldpc_codes: SC-LDPC- und reguläre LDPC-Codes als Tanner-Graphen
- mp_decoders: BP, BMP, TMP und QMP
- density_evolution: DE-Trajektorien, Schwellen und Gewichtspläne
- product_codes: Produkt- und Staircase-Codes mit iBDD und iBDD-SR
- hybrid: Verkettung innerer SD-LDPC / äußerer HD-Staircase-Code
- channel_capacity: Bi-AWGN-Kanal, LLRs und Kapazitäten

Technische Details:
- Numerik mit numpy und scipy
- BDD-Kernels mit numba kompiliert
- Alle Zufallsgrößen über numpy.random.Generator mit festen Seeds

Autor: Team A2-2
"""

from .channel_capacity import (
    ChannelParams, binary_entropy, capacity, ebno_to_esno, esno_to_ebno, esno_to_sigma,
    gap_to_capacity, hd_crossover, inverse_capacity, llr, overhead, qfunc, sigma_to_esno,
    transmit, uncoded_ber,
)
from .density_evolution import (
    DeTrajectory, de_bmp_step, de_run, de_threshold, export_weight_schedule, schedule_for_graph,
)
from .galois_bch import (
    BchSpec, Corrected, Failure, GfTable, bch_encode, bch_syndromes, bdd_decode, bdd_decode_rows,
    build_bch_spec, build_gf_table, gf_inv, gf_mul, gf_pow, is_bch_codeword, parse_bch_spec,
)
from .hybrid import (
    HybridResult, HybridSpec, deinterleave, hybrid_transmit_decode, inner_ber, inner_required_snr,
    interleave,
)
from .ldpc_codes import (
    ScLdpcSpec, TannerGraph, build_regular_ldpc, build_sc_ldpc, dataflow_score, is_codeword,
    parse_ldpc_code, read_graph, write_graph,
)
from .mp_decoders import (
    DecodeResult, WeightSchedule, decode_bmp, decode_bp, decode_none, decode_qmp, decode_tmp,
    get_decoder,
)
from .product_codes import (
    CodeArray, PcDecodeResult, PcSpec, StaircaseDecoder, StaircaseRun, StaircaseSpec, ibdd,
    ibdd_sr, optimize_sr_weights, parse_product_code, pc_encode, pc_is_codeword,
    simulate_staircase_bsc, staircase_decode, staircase_encode, staircase_is_valid,
)

__all__ = [
    # Kanal und Kapazität
    'ChannelParams',            # Es/N0, sigma und Seed
    'transmit',                 # Y = X + N
    'llr',                      # L = 2y / sigma^2
    'uncoded_ber',              # Q(1/sigma)
    'capacity',                 # SD-/HD-Kapazität
    'inverse_capacity',         # Shannon-Grenze in dB
    'qfunc', 'binary_entropy', 'hd_crossover', 'esno_to_sigma', 'sigma_to_esno',
    'esno_to_ebno', 'ebno_to_esno', 'overhead', 'gap_to_capacity',

    # Galois-Körper und BCH
    'GfTable', 'build_gf_table', 'gf_mul', 'gf_inv', 'gf_pow',
    'BchSpec', 'build_bch_spec', 'parse_bch_spec',
    'bch_encode', 'is_bch_codeword', 'bch_syndromes',
    'bdd_decode',               # BDD eines Wortes
    'bdd_decode_rows',          # BDD aller Zeilen einer Matrix
    'Corrected', 'Failure',

    # LDPC-Codes
    'ScLdpcSpec', 'TannerGraph', 'build_sc_ldpc', 'build_regular_ldpc', 'parse_ldpc_code',
    'is_codeword', 'dataflow_score', 'write_graph', 'read_graph',

    # Message-Passing-Decoder
    'WeightSchedule', 'DecodeResult',
    'decode_bp', 'decode_bmp', 'decode_tmp', 'decode_qmp', 'decode_none',
    'get_decoder',              # Auswahl über den Namen

    # Dichteentwicklung
    'DeTrajectory', 'de_bmp_step', 'de_run', 'de_threshold', 'export_weight_schedule',
    'schedule_for_graph',

    # Produkt- und Staircase-Codes
    'PcSpec', 'StaircaseSpec', 'CodeArray', 'PcDecodeResult', 'parse_product_code',
    'pc_encode', 'pc_is_codeword', 'ibdd', 'ibdd_sr', 'optimize_sr_weights',
    'staircase_encode', 'staircase_is_valid', 'staircase_decode', 'StaircaseDecoder',
    'StaircaseRun', 'simulate_staircase_bsc',

    # Hybride Verkettung
    'HybridSpec', 'HybridResult', 'interleave', 'deinterleave',
    'hybrid_transmit_decode', 'inner_ber', 'inner_required_snr',
]
