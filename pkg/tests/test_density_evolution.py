#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Tests für die Dichteentwicklung

Autor: Team A2-2
"""

import numpy as np
import pytest

from fec_tool.config import W_MAX
from fec_tool.errors import BracketError
from fec_tool.fec_components.channel_capacity import esno_to_sigma, qfunc
from fec_tool.fec_components.density_evolution import (
    de_bmp_step, de_run, de_threshold, export_weight_schedule, schedule_for_graph,
)
from fec_tool.fec_components.ldpc_codes import ScLdpcSpec, build_sc_ldpc


def test_bmp_step_example():
    q, w, p_next = de_bmp_step(0.01, 4, 24, 2.0)
    assert q == pytest.approx((1 - 0.98 ** 23) / 2)
    assert q == pytest.approx(0.18585, abs=1e-5)
    assert w == pytest.approx(1.477, abs=1e-3)
    assert 0.0 < p_next < 0.5


def test_bmp_step_error_free_input():
    q, w, p_next = de_bmp_step(0.0, 4, 24, 2.0)
    assert q == 0.0
    assert w == W_MAX
    assert p_next < 1e-12


def test_bmp_step_uninformative_input():
    esno_db = 2.0
    q, w, p_next = de_bmp_step(0.5, 4, 24, esno_db)
    assert q == 0.5
    assert w == 0.0
    assert p_next == pytest.approx(float(qfunc(1.0 / esno_to_sigma(esno_db))))


def test_bmp_step_is_monotone_in_snr():
    values = [de_bmp_step(0.05, 4, 24, esno)[2] for esno in (0.0, 1.0, 2.0, 3.0, 4.0)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_bmp_step_rejects_input():
    with pytest.raises(ValueError):
        de_bmp_step(0.6, 4, 24, 2.0)
    with pytest.raises(ValueError):
        de_bmp_step(0.1, 1, 24, 2.0)


def test_trajectory_starts_at_channel_error():
    trajectory = de_run('bmp', 4, 24, 2.0, max_iters=5)
    assert trajectory.p[0] == pytest.approx(float(qfunc(1.0 / esno_to_sigma(2.0))))
    assert trajectory.iterations == 5
    assert len(trajectory.p) == 6
    q, w, p_next = de_bmp_step(trajectory.p[0], 4, 24, 2.0)
    assert trajectory.weights[0] == pytest.approx(w)
    assert trajectory.p[1] == pytest.approx(p_next)


def test_trajectory_stops_early():
    trajectory = de_run('bmp', 4, 24, 6.0, max_iters=200, stop_p=1e-10)
    assert trajectory.reached(1e-10)
    assert trajectory.iterations < 200


@pytest.mark.parametrize('kind', ['tmp', 'qmp'])
def test_quantized_trajectory_shapes(kind):
    trajectory = de_run(kind, 4, 24, 3.0, max_iters=8)
    assert trajectory.iterations == 8
    assert len(trajectory.thresholds) == 9
    assert np.all(trajectory.weights >= 0) and np.all(trajectory.weights <= W_MAX)
    assert np.all(trajectory.thresholds >= 0)
    assert np.all((trajectory.p >= 0) & (trajectory.p <= 0.5 + 1e-12))
    if kind == 'qmp':
        assert len(trajectory.weak_weights) == 8
    else:
        assert trajectory.weak_weights is None


@pytest.mark.parametrize('kind', ['bmp', 'tmp', 'qmp'])
def test_de_improves_with_snr(kind):
    low = de_run(kind, 4, 24, 1.0, max_iters=30).final_p
    high = de_run(kind, 4, 24, 4.0, max_iters=30).final_p
    assert high < low


def test_de_rejects_kind():
    with pytest.raises(ValueError, match='unsupported kind'):
        de_run('bp', 4, 24, 2.0)
    with pytest.raises(ValueError, match='unsupported kind'):
        de_threshold('bp', 4, 24)


def test_bmp_threshold_between_shannon_limits():
    threshold = de_threshold('bmp', 4, 24, tol_db=0.01)
    assert 1.5713 < threshold < 2.8633


def test_threshold_grows_with_rate():
    assert de_threshold('bmp', 4, 40, tol_db=0.02) > de_threshold('bmp', 4, 24, tol_db=0.02)


def test_threshold_bracket_error():
    with pytest.raises(BracketError) as info:
        de_threshold('bmp', 4, 24, bracket=(-5.0, 0.0))
    assert info.value.interval == (-5.0, 0.0)


@pytest.mark.slow
@pytest.mark.parametrize('kind', ['tmp', 'qmp'])
def test_two_bit_thresholds_beat_bmp(kind):
    bmp = de_threshold('bmp', 4, 24, tol_db=0.02)
    assert de_threshold(kind, 4, 24, tol_db=0.02, max_iters=200) < bmp + 0.02


def test_export_caps_and_pads():
    trajectory = de_run('bmp', 4, 24, 6.0, max_iters=100, stop_p=1e-12)
    schedule = export_weight_schedule(trajectory, 6.0, length=trajectory.iterations + 10)
    assert len(schedule) == trajectory.iterations + 10
    assert np.all(schedule.weights <= W_MAX)
    assert np.all(schedule.weights[trajectory.iterations:] == schedule.weights[trajectory.iterations - 1])
    assert schedule.kind == 'bmp'
    assert schedule.esno_db == pytest.approx(6.0)


def test_export_truncates():
    trajectory = de_run('tmp', 4, 24, 3.0, max_iters=12)
    schedule = export_weight_schedule(trajectory, 3.0, length=5)
    assert len(schedule) == 5
    assert np.allclose(schedule.thresholds, trajectory.thresholds[:5])
    assert np.allclose(schedule.weights, trajectory.weights[:5])


def test_schedule_for_graph(small_graph):
    schedule = schedule_for_graph('qmp', small_graph, 3.0, length=7)
    assert len(schedule) == 7
    assert schedule.meta == {'dv': 3, 'dc': 6}
    assert schedule.weak_weights is not None


def test_schedule_for_coupled_graph_uses_ensemble_degrees():
    """Randknoten mit kleinem CN-Grad verändern das Ersatzensemble nicht."""
    graph = build_sc_ldpc(ScLdpcSpec(4, 24, 8, 20, 3, 0))
    assert graph.num_edges / graph.n_cn < 23
    schedule = schedule_for_graph('bmp', graph, 3.0, length=5)
    assert schedule.meta == {'dv': 4, 'dc': 24}
    reference = export_weight_schedule(de_run('bmp', 4, 24, 3.0, max_iters=5), 3.0, length=5)
    assert np.allclose(schedule.weights, reference.weights)
