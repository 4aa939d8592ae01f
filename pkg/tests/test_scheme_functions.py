#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Tests für Schema-Strings und Einzelrahmen

Autor: Team A2-2
"""

import glob
import os

import numpy as np
import pytest

from fec_tool.config import RECIPE_DIR, STAIRCASE_FRAME_BLOCKS
from fec_tool.errors import ConfigError
from fec_tool.fec_components.mp_decoders import WeightSchedule
from fec_tool.fec_components.product_codes import PcSpec, StaircaseSpec
from fec_tool.utils.scheme_functions import (
    build_scheme, check_schedule, point_schedule, simulate_frame,
)
from fec_tool.utils.sim_functions import load_config


def test_uncoded_scheme():
    scheme = build_scheme('uncoded:500')
    assert (scheme.family, scheme.code, scheme.decoder) == ('uncoded', 500, 'none')
    assert scheme.bits_per_frame == 500
    assert scheme.rate == 1.0
    assert not scheme.needs_schedule


def test_ldpc_scheme():
    scheme = build_scheme('ldpc:3,6,96@tmp', max_iters=12)
    assert scheme.family == 'ldpc'
    assert scheme.decoder == 'tmp'
    assert scheme.max_iters == 12
    assert scheme.graph is scheme.code
    assert scheme.rate == pytest.approx(0.5)
    assert scheme.needs_schedule
    assert build_scheme('ldpc:3,6,96').decoder == 'bp'


def test_product_schemes():
    pc = build_scheme('pc:bch:62,44,3@ibdd_sr')
    assert isinstance(pc.code, PcSpec)
    assert pc.bits_per_frame == 62 * 62
    assert pc.max_iters == 10
    sc = build_scheme('staircase:bch:62,44,3:W=4:S=3')
    assert isinstance(sc.code, StaircaseSpec)
    assert (sc.decoder, sc.max_iters) == ('ibdd', 3)
    assert sc.bits_per_frame == STAIRCASE_FRAME_BLOCKS * 31 * 31


def test_hybrid_scheme():
    scheme = build_scheme('hybrid:ldpc:3,6,2000@bmp+staircase:bch:62,44,3:W=5:seed=7')
    spec = scheme.code
    assert scheme.family == 'hybrid'
    assert scheme.decoder == 'bmp'
    assert scheme.graph is spec.inner
    assert spec.interleaver_seed == 7
    assert spec.outer.window == 5
    assert scheme.rate == pytest.approx(0.5 * spec.outer.rate)
    uncoded = build_scheme('hybrid:uncoded:1000+staircase:bch:62,44,3')
    assert uncoded.decoder == 'none'
    assert uncoded.graph is None


@pytest.mark.parametrize('text', [
    'turbo:1,2,3',
    'uncoded:abc',
    'uncoded:0',
    'ldpc:3,6,96@ibdd',
    'pc:bch:62,44,3@bmp',
    'pc:bch:62,40,3',
    'hybrid:ldpc:3,6,2000@bp',
    'hybrid:ldpc:3,6,2000@bp+pc:bch:62,44,3',
    'hybrid:uncoded:500+staircase:bch:62,44,3',
])
def test_build_scheme_rejects(text):
    with pytest.raises(ConfigError):
        build_scheme(text)


def test_point_schedule():
    scheme = build_scheme('ldpc:3,6,96@qmp', max_iters=8)
    schedule = point_schedule(scheme, 3.0)
    assert schedule.kind == 'qmp'
    assert len(schedule) == 8
    assert point_schedule(build_scheme('ldpc:3,6,96@bp'), 3.0) is None


def test_point_schedule_sr_weights():
    scheme = build_scheme('pc:bch:62,44,3@ibdd_sr', max_iters=4)
    schedule = point_schedule(scheme, 4.0, sr_weights=(1.5,))
    assert list(schedule.weights) == [1.5] * 4
    with pytest.raises(ConfigError):
        point_schedule(scheme, 4.0, sr_weights=(1.0, 2.0))
    with pytest.raises(ConfigError):
        point_schedule(scheme, 4.0, sr_weights=(1.0, 0.0, 1.0, 1.0))
    with pytest.raises(ConfigError):
        point_schedule(scheme, 4.0, sr_weights='grid')


def test_check_schedule():
    scheme = build_scheme('ldpc:3,6,96@bmp', max_iters=5)
    check_schedule(scheme, None)
    check_schedule(scheme, WeightSchedule.constant('bmp', 1.0, 5))
    with pytest.raises(ConfigError):
        check_schedule(scheme, WeightSchedule.constant('bmp', 1.0, 4))
    with pytest.raises(ConfigError):
        check_schedule(scheme, WeightSchedule.constant('tmp', 1.0, 5, threshold=1.0))


@pytest.mark.parametrize('text', [
    'uncoded:200',
    'ldpc:3,6,96@bp',
    'ldpc:3,6,96@bmp',
    'pc:bch:62,44,3@ibdd',
    'staircase:bch:62,44,3:W=3',
    'hybrid:uncoded:1000+staircase:bch:62,44,3:W=3',
])
def test_clean_channel_frames(text):
    scheme = build_scheme(text, max_iters=5)
    schedule = point_schedule(scheme, 20.0)
    outcome = simulate_frame(scheme, 20.0, schedule, np.random.default_rng(1))
    assert outcome.bit_errors == 0
    assert not outcome.frame_error


def test_noisy_frame_is_reproducible():
    scheme = build_scheme('pc:bch:62,44,3@ibdd_sr')
    schedule = point_schedule(scheme, 3.0, sr_weights=(1.0,))
    a = simulate_frame(scheme, 3.0, schedule, np.random.default_rng(5))
    b = simulate_frame(scheme, 3.0, schedule, np.random.default_rng(5))
    assert a == b
    assert 1 <= a.iterations <= scheme.max_iters


def test_recipes_load():
    paths = sorted(glob.glob(os.path.join(RECIPE_DIR, '*.ini')))
    assert paths
    for path in paths:
        config = load_config(path)
        assert config.esno_grid
        if config.scheme.startswith(('pc:', 'staircase:')):
            build_scheme(config.scheme, config.max_iters)
