#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Tests für die Simulationsumgebung

Autor: Team A2-2
"""

import csv
import dataclasses
import os
import zipfile

import numpy as np
import pytest

from fec_tool.config import EXPORT_DIR, WORKERS_ENV_VAR
from fec_tool.errors import BracketError, ConfigError, FecToolError
from fec_tool.fec_components.channel_capacity import uncoded_ber
from fec_tool.utils.sim_functions import (
    FLAG_UNMET, FLAG_ZERO_ERRORS, SimConfig, SimPoint, SimResult, emit_plotdata, frame_seed,
    load_config, measure_gap, read_csv, run_sweep, write_csv,
)


@pytest.fixture(autouse=True)
def no_worker_override(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV_VAR, raising=False)


def _write_ini(path, **values):
    lines = ['[simulation]'] + [f"{key} = {value}" for key, value in values.items()]
    path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
    return path


def _curve(scheme, points, bits_per_frame=1000):
    """Kurve aus (esno_db, frames, bit_errors, frame_errors)-Tupeln."""
    return SimResult(scheme=scheme, rate=1.0, bits_per_frame=bits_per_frame, points=[
        SimPoint(esno_db=e, bits_per_frame=bits_per_frame, frames=f, bit_errors=b, frame_errors=fe,
                 stop_rule_met=True)
        for e, f, b, fe in points])


WATERFALL = [(1.0, 100, 10000, 100), (2.0, 100, 1000, 90), (3.0, 100, 100, 50), (4.0, 1000, 100, 60)]


# Konfiguration

def test_load_config(tmp_path):
    schedule = tmp_path / 'weights.txt'
    path = _write_ini(tmp_path / 'run.ini', scheme='ldpc:3,6,96@bmp', esno='1.0, 1.5, 2.0',
                      e_min=20, f_max=500, seed=4, workers=2, output=str(tmp_path / 'out.csv'),
                      max_iters=12, schedule='fixed', schedule_file='weights.txt',
                      sr_weights='1.0, 1.5', batch_size=8)
    config = load_config(str(path))
    assert config.scheme == 'ldpc:3,6,96@bmp'
    assert config.esno_grid == (1.0, 1.5, 2.0)
    assert (config.e_min, config.f_max, config.seed, config.workers) == (20, 500, 4, 2)
    assert config.output == str(tmp_path / 'out.csv')
    assert config.max_iters == 12
    assert config.schedule_file == str(schedule)
    assert config.sr_weights == (1.0, 1.5)
    assert config.batch_size == 8


def test_load_config_defaults(tmp_path):
    path = _write_ini(tmp_path / 'sweep.ini', scheme='uncoded:100', esno_start=0.0, esno_stop=1.0,
                      esno_step=0.25)
    config = load_config(str(path))
    assert config.esno_grid == (0.0, 0.25, 0.5, 0.75, 1.0)
    assert config.output == os.path.join(EXPORT_DIR, 'sweep.csv')
    assert config.schedule == 'per-snr'
    assert config.sr_weights == 'optimize'
    assert config.max_iters is None


@pytest.mark.parametrize('values', [
    {'scheme': 'uncoded:10', 'esno': '1.0', 'colour': 'blue'},
    {'esno': '1.0'},
    {'scheme': 'uncoded:10'},
    {'scheme': 'uncoded:10', 'esno': '1.0', 'e_min': 0},
    {'scheme': 'uncoded:10', 'esno': '1.0', 'schedule': 'fixed'},
    {'scheme': 'uncoded:10', 'esno_start': 2.0, 'esno_stop': 1.0, 'esno_step': 0.5},
    {'scheme': 'uncoded:10', 'esno': '1.0', 'f_max': 'many'},
])
def test_load_config_rejects(tmp_path, values):
    path = _write_ini(tmp_path / 'bad.ini', **values)
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_load_config_missing_file_and_section(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / 'missing.ini'))
    path = tmp_path / 'other.ini'
    path.write_text('[other]\nscheme = uncoded:10\n', encoding='utf-8')
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_sim_config_validation():
    with pytest.raises(ValueError):
        SimConfig(scheme='uncoded:10', esno_grid=())
    with pytest.raises(ValueError):
        SimConfig(scheme='uncoded:10', esno_grid=(1.0,), seed=-1)
    with pytest.raises(ValueError):
        SimConfig(scheme='uncoded:10', esno_grid=(1.0,), schedule='adaptive')
    config = SimConfig(scheme='uncoded:10', esno_grid=[1, 2])
    assert config.esno_grid == (1.0, 2.0)


# Seeds und Zähler

def test_frame_seed_is_unique():
    states = {tuple(frame_seed(seed, point, frame).generate_state(4))
              for seed in range(3) for point in range(3) for frame in range(50)}
    assert len(states) == 3 * 3 * 50
    assert np.array_equal(frame_seed(1, 2, 3).generate_state(4), frame_seed(1, 2, 3).generate_state(4))


def test_sim_point_statistics():
    point = SimPoint(esno_db=1.0, bits_per_frame=100, frames=10, bit_errors=25, frame_errors=4,
                     iterations=55)
    assert point.bits == 1000
    assert point.ber == pytest.approx(0.025)
    assert point.fer == pytest.approx(0.4)
    assert point.mean_iters == pytest.approx(5.5)
    assert point.ber_stderr == pytest.approx(np.sqrt(0.025 * 0.975 / 1000))
    assert point.flag == FLAG_UNMET
    assert SimPoint(esno_db=1.0, bits_per_frame=100, frames=10).flag == FLAG_ZERO_ERRORS
    assert SimPoint(esno_db=1.0, bits_per_frame=100, stop_rule_met=True).flag is None


# Sweeps

def test_sweep_stops_at_e_min(tmp_path):
    config = SimConfig(scheme='uncoded:1000', esno_grid=(3.0,), e_min=7, f_max=1000, batch_size=4,
                       output=str(tmp_path / 'u.csv'))
    result = run_sweep(config, progress=False)
    point = result.points[0]
    assert point.stop_rule_met
    assert point.frame_errors == 7
    assert point.frames == 7
    assert not result.unmet


def test_sweep_flags_zero_errors(tmp_path):
    output = tmp_path / 'clean.csv'
    config = SimConfig(scheme='uncoded:1000', esno_grid=(3.0, 12.0), e_min=5, f_max=20,
                       output=str(output))
    result = run_sweep(config, progress=False)
    clean = result.points[1]
    assert clean.frames == 20
    assert clean.bit_errors == 0
    assert clean.flag == FLAG_ZERO_ERRORS
    assert result.unmet == [clean]
    text = output.read_text(encoding='utf-8')
    assert f"# flag esno_db=12.0000: {FLAG_ZERO_ERRORS}" in text
    loaded = read_csv(str(output))
    assert [p.stop_rule_met for p in loaded.points] == [True, False]
    assert loaded.bits_per_frame == 1000


def test_uncoded_sweep_matches_closed_form():
    config = SimConfig(scheme='uncoded:1000', esno_grid=(3.0,), e_min=60, f_max=60, seed=2)
    point = run_sweep(config, progress=False).points[0]
    assert abs(point.ber - uncoded_ber(3.0)) < 3 * point.ber_stderr


def test_sweep_is_independent_of_workers():
    base = SimConfig(scheme='uncoded:20', esno_grid=(5.0, 6.0), e_min=4, f_max=400, seed=9,
                     batch_size=3)
    serial = run_sweep(base, progress=False)
    parallel = run_sweep(dataclasses.replace(base, workers=2), progress=False)
    for a, b in zip(serial.points, parallel.points):
        assert (a.frames, a.bit_errors, a.frame_errors) == (b.frames, b.bit_errors, b.frame_errors)


def test_sweep_rejects_bad_scheme():
    with pytest.raises(ConfigError):
        run_sweep(SimConfig(scheme='turbo:1,2', esno_grid=(1.0,)), progress=False)


def test_sweep_with_schedule_file(tmp_path):
    from fec_tool.fec_components.mp_decoders import WeightSchedule
    path = tmp_path / 'bmp.txt'
    WeightSchedule.constant('bmp', 1.0, 10).write(path)
    config = SimConfig(scheme='ldpc:3,6,96@bmp', esno_grid=(5.0,), e_min=1, f_max=3, max_iters=10,
                       schedule_file=str(path))
    assert len(run_sweep(config, progress=False).points) == 1
    short = SimConfig(scheme='ldpc:3,6,96@bmp', esno_grid=(5.0,), max_iters=20, schedule_file=str(path))
    with pytest.raises(ConfigError):
        run_sweep(short, progress=False)


# CSV

def test_csv_round_trip_keeps_flags(tmp_path):
    result = _curve('ldpc:3,6,96@bp', WATERFALL)
    result.points[-1].stop_rule_met = False
    path = tmp_path / 'curve.csv'
    write_csv(result, str(path))
    loaded = read_csv(str(path))
    assert loaded.scheme == 'ldpc:3,6,96@bp'
    assert [p.frames for p in loaded.points] == [100, 100, 100, 1000]
    assert [p.stop_rule_met for p in loaded.points] == [True, True, True, False]


def test_read_csv_rejects(tmp_path):
    with pytest.raises(FecToolError):
        read_csv(str(tmp_path / 'missing.csv'))
    path = tmp_path / 'bad.csv'
    path.write_text('a,b,c\n1,2,3\n', encoding='utf-8')
    with pytest.raises(FecToolError):
        read_csv(str(path))


# Abstandsmessung

def test_gap_of_identical_curves():
    curve = _curve('a', WATERFALL)
    gap = measure_gap(curve, curve, 1e-2)
    assert float(gap) == pytest.approx(0.0)
    assert gap.esno_a == pytest.approx(2.0)
    assert gap.stderr_db > 0


def test_gap_of_shifted_curves():
    a = _curve('a', [(e + 0.3, f, b, fe) for e, f, b, fe in WATERFALL])
    b = _curve('b', WATERFALL)
    gap = measure_gap(a, b, 3e-3)
    assert gap.gap_db == pytest.approx(0.3)
    assert gap.esno_b == pytest.approx(2.0 + np.log10(3e-3 / 1e-2) / np.log10(1e-3 / 1e-2))


def test_gap_errors():
    curve = _curve('a', WATERFALL)
    with pytest.raises(BracketError):
        measure_gap(curve, curve, 1e-6)
    with pytest.raises(ValueError):
        measure_gap(curve, curve, 1.5)


# Plotdaten

def test_emit_plotdata_with_limits(tmp_path):
    written = emit_plotdata([_curve('ldpc:3,6,96@bmp', WATERFALL)], limits=[5 / 6],
                            output_dir=str(tmp_path), zip_path=str(tmp_path / 'plots.zip'))
    names = [os.path.basename(p) for p in written]
    assert names == ['curve_00_ldpc_3_6_96_bmp.csv', 'limits.csv']
    with open(tmp_path / 'limits.csv', encoding='utf-8') as fh:
        rows = list(csv.DictReader(fh))
    values = {row['line']: row for row in rows}
    assert float(values['sd_limit']['value']) == pytest.approx(1.5713, abs=0.005)
    assert float(values['hd_limit']['value']) == pytest.approx(2.8633, abs=0.005)
    assert float(values['p_sc']['value']) == pytest.approx(5.02e-3)
    with zipfile.ZipFile(tmp_path / 'plots.zip') as zf:
        assert sorted(zf.namelist()) == sorted(names)


def test_emit_plotdata_curves_only(tmp_path):
    written = emit_plotdata([_curve('a', WATERFALL), _curve('b', WATERFALL)], limits=[],
                            output_dir=str(tmp_path))
    assert len(written) == 2
    assert not (tmp_path / 'limits.csv').exists()
    lines = (tmp_path / 'curve_01_b.csv').read_text(encoding='utf-8').splitlines()
    assert lines[1] == 'esno_db,ber,fer,ber_stderr,frames'
    assert len(lines) == 2 + len(WATERFALL)
    with pytest.raises(ValueError):
        emit_plotdata([], output_dir=str(tmp_path))
