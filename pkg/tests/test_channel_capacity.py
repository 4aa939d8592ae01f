#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Tests für Kanal und Kapazität

Autor: Team A2-2
"""

import math

import numpy as np
import pytest

from fec_tool.fec_components.channel_capacity import (
    ChannelParams, capacity, ebno_to_esno, esno_to_ebno, esno_to_sigma, gap_to_capacity,
    inverse_capacity, llr, overhead, qfunc, transmit, uncoded_ber,
)


@pytest.mark.parametrize('rate, mode, expected', [
    (5 / 6, 'sd', 1.5713),
    (5 / 6, 'hd', 2.8633),
    (0.894, 'sd', 2.6180),
    (0.894, 'hd', 3.8324),
])
def test_shannon_limits(rate, mode, expected):
    assert inverse_capacity(rate, mode) == pytest.approx(expected, abs=0.005)


def test_hd_sd_gap_at_five_sixths():
    gap = inverse_capacity(5 / 6, 'hd') - inverse_capacity(5 / 6, 'sd')
    assert gap == pytest.approx(1.292, abs=0.01)


def test_capacity_at_sd_limit():
    assert capacity(1.5713, 'sd') == pytest.approx(5 / 6, abs=5e-4)


def test_capacity_limits_and_ordering():
    grid = np.linspace(-10.0, 8.0, 37)
    sd = capacity(grid, 'sd')
    hd = capacity(grid, 'hd')
    assert np.all(np.diff(sd) > 0)
    assert np.all(np.diff(hd) > 0)
    assert np.all(sd >= hd)
    assert capacity(-40.0, 'sd') < 1e-3
    assert capacity(25.0, 'sd') > 1 - 1e-6


def test_inverse_is_consistent_with_capacity():
    for esno_db in (-2.0, 0.5, 3.0, 6.0):
        for mode in ('sd', 'hd'):
            rate = capacity(esno_db, mode)
            assert inverse_capacity(rate, mode) == pytest.approx(esno_db, abs=1e-3)


@pytest.mark.parametrize('rate', [0.0, 1.0, -0.2, 1.5])
def test_inverse_capacity_rejects_rate(rate):
    with pytest.raises(ValueError):
        inverse_capacity(rate, 'sd')


def test_capacity_rejects_mode():
    with pytest.raises(ValueError):
        capacity(1.0, 'soft')


def test_llr_examples():
    params = ChannelParams(esno_db=10 * math.log10(2.0))  # sigma = 0.5
    assert params.sigma == pytest.approx(0.5)
    assert llr(np.array([0.5, -1.0, 0.0]), params) == pytest.approx([4.0, -8.0, 0.0])


def test_sigma_conversion_round_trip():
    params = ChannelParams.from_sigma(0.8)
    assert params.sigma == pytest.approx(0.8)
    assert esno_to_sigma(0.0) == pytest.approx(math.sqrt(0.5))


def test_transmit_is_reproducible():
    params = ChannelParams(esno_db=2.0, seed=7)
    a = transmit(np.ones(100), params)
    b = transmit(np.ones(100), params)
    assert np.array_equal(a, b)
    c = transmit(np.ones(100), params, np.random.default_rng(8))
    assert not np.array_equal(a, c)


def test_uncoded_ber_closed_form():
    assert uncoded_ber(0.0) == pytest.approx(qfunc(math.sqrt(2.0)))
    assert uncoded_ber(0.0) == pytest.approx(0.0786, abs=1e-4)
    assert uncoded_ber(-60.0) == pytest.approx(0.5, abs=1e-3)
    assert uncoded_ber(20.0) < 1e-20


def test_uncoded_ber_matches_monte_carlo():
    params = ChannelParams(esno_db=3.0)
    rng = np.random.default_rng(5)
    bits = 2_000_000
    errors = int(np.count_nonzero(llr(transmit(np.ones(bits), params, rng), params) <= 0))
    p = uncoded_ber(3.0)
    stderr = math.sqrt(p * (1 - p) / bits)
    assert abs(errors / bits - p) < 3 * stderr


def test_rate_helpers():
    assert overhead(5 / 6) == pytest.approx(0.2)
    assert float(esno_to_ebno(2.0, 0.5)) == pytest.approx(2.0 + 10 * math.log10(2.0))
    assert float(ebno_to_esno(esno_to_ebno(1.3, 0.8), 0.8)) == pytest.approx(1.3)
    assert gap_to_capacity(2.5713, 5 / 6) == pytest.approx(1.0, abs=0.005)
