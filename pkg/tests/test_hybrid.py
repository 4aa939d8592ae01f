#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Tests für die Verkettung aus LDPC- und Staircase-Code

Autor: Team A2-2
"""

import numpy as np
import pytest

from fec_tool.errors import BracketError, ConfidenceError
from fec_tool.fec_components.channel_capacity import ChannelParams, uncoded_ber
from fec_tool.fec_components.hybrid import (
    HybridSpec, deinterleave, hybrid_transmit_decode, inner_ber, inner_required_snr, interleave,
)
from fec_tool.fec_components.ldpc_codes import build_regular_ldpc


@pytest.fixture(scope='module')
def inner_graph():
    return build_regular_ldpc(3, 6, 2000, seed=1)


@pytest.fixture(scope='module')
def uncoded_spec(staircase62):
    return HybridSpec(inner=1000, inner_decoder='none', outer=staircase62)


def test_interleaver_round_trip():
    bits = np.random.default_rng(0).integers(0, 2, 5000, dtype=np.uint8)
    mixed = interleave(bits, seed=5)
    assert not np.array_equal(mixed, bits)
    assert np.array_equal(np.sort(mixed), np.sort(bits))
    assert np.array_equal(deinterleave(mixed, seed=5), bits)
    assert np.array_equal(interleave(bits, seed=5), mixed)


def test_spec_properties(inner_graph, staircase62):
    spec = HybridSpec(inner=inner_graph, inner_decoder='bmp', outer=staircase62)
    assert spec.inner_n == 2000
    assert spec.payload == 1000
    assert spec.span == staircase62.window
    assert spec.rate == pytest.approx(0.5 * staircase62.rate)


def test_rate_mismatch(staircase62):
    with pytest.raises(ValueError, match='rate mismatch'):
        HybridSpec(inner=500, inner_decoder='none', outer=staircase62)


def test_spec_rejects(inner_graph, staircase62):
    with pytest.raises(ValueError):
        HybridSpec(inner=1000, inner_decoder='bmp', outer=staircase62)
    with pytest.raises(ValueError):
        HybridSpec(inner=inner_graph, inner_decoder='turbo', outer=staircase62)
    with pytest.raises(ValueError):
        HybridSpec(inner=1000, inner_decoder='none', outer=staircase62, p_target=0.6)


def test_outer_code_cleans_inner_errors(uncoded_spec):
    result = hybrid_transmit_decode(5, uncoded_spec, ChannelParams(esno_db=8.0), seed=2)
    assert result.outer_blocks == 5
    assert result.outer_bits == 5 * 961
    assert result.inner_bits == result.inner_frames * 1000
    assert result.outer_bit_errors == 0
    assert result.outer_ber == 0.0


def test_inner_ber_statistics(uncoded_spec):
    result = hybrid_transmit_decode(3, uncoded_spec, ChannelParams(esno_db=2.0), seed=3)
    assert result.inner_ber == pytest.approx(uncoded_ber(2.0), rel=0.15)
    # Weit über der Staircase-Schwelle bleiben Restfehler
    assert result.outer_bit_errors > 0
    assert result.outer_fer > 0


def test_hybrid_is_reproducible(uncoded_spec):
    params = ChannelParams(esno_db=4.0)
    a = hybrid_transmit_decode(2, uncoded_spec, params, seed=9)
    b = hybrid_transmit_decode(2, uncoded_spec, params, seed=9)
    assert a == b


def test_hybrid_with_ldpc_inner(inner_graph, staircase62):
    spec = HybridSpec(inner=inner_graph, inner_decoder='bp', outer=staircase62, max_iters=20)
    result = hybrid_transmit_decode(2, spec, ChannelParams(esno_db=4.0), seed=1)
    assert result.inner_bit_errors == 0
    assert result.outer_bit_errors == 0


def test_hybrid_rejects_empty_run(uncoded_spec):
    with pytest.raises(ValueError, match='window underflow'):
        hybrid_transmit_decode(0, uncoded_spec, ChannelParams(esno_db=4.0))


def test_inner_ber(uncoded_spec):
    errors, bits = inner_ber(uncoded_spec, 3.0, frames=50, seed=1)
    assert bits == 50 * 1000
    assert errors / bits == pytest.approx(uncoded_ber(3.0), rel=0.2)


def test_inner_required_snr_needs_budget(uncoded_spec):
    with pytest.raises(ConfidenceError):
        inner_required_snr(uncoded_spec, p_target=1e-3, frames=10)


def test_inner_required_snr_bracket(uncoded_spec):
    with pytest.raises(BracketError):
        inner_required_snr(uncoded_spec, bracket=(-2.0, 1.0), frames=100)


@pytest.mark.slow
def test_inner_required_snr_uncoded(uncoded_spec):
    """Uncodiert: Q(1/sigma) = p_SC liegt bei etwa 5.2 dB."""
    esno_db = inner_required_snr(uncoded_spec, tol_db=0.02, frames=200)
    assert uncoded_ber(esno_db) <= 5.02e-3 * 1.2
    assert esno_db == pytest.approx(5.2, abs=0.2)
