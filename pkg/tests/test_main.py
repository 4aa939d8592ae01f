#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Tests für die Kommandozeile

Autor: Team A2-2
"""

import csv
import io

import pytest

from fec_tool.config import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_STOP_RULE_UNMET, WORKERS_ENV_VAR
from fec_tool.fec_components.channel_capacity import esno_to_ebno
from fec_tool.main import main
from fec_tool.utils.sim_functions import SimPoint, SimResult, read_csv, write_csv


@pytest.fixture(autouse=True)
def no_worker_override(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV_VAR, raising=False)


def _write_curve(path, scheme, shift_db):
    points = [SimPoint(esno_db=e + shift_db, bits_per_frame=1000, frames=f, bit_errors=b, frame_errors=fe,
                       stop_rule_met=True)
              for e, f, b, fe in [(1.0, 100, 10000, 100), (2.0, 100, 1000, 90), (3.0, 100, 100, 50)]]
    write_csv(SimResult(scheme=scheme, rate=0.5, bits_per_frame=1000, points=points), str(path))
    return str(path)


def test_capacity(capsys):
    assert main(['capacity', '--rate', '5/6']) == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert [row['mode'] for row in rows] == ['sd', 'hd']
    assert float(rows[0]['rate']) == pytest.approx(5 / 6, abs=1e-6)
    assert float(rows[0]['esno_db']) == pytest.approx(1.5713, abs=5e-3)
    assert float(rows[1]['esno_db']) == pytest.approx(2.8633, abs=5e-3)
    assert float(rows[0]['ebno_db']) == pytest.approx(esno_to_ebno(float(rows[0]['esno_db']), 5 / 6),
                                                      abs=1e-3)


def test_capacity_single_mode(capsys):
    assert main(['capacity', '--rate', '0.894', '--mode', 'hd']) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'rate,mode,esno_db,ebno_db'
    assert len(lines) == 2
    rate, mode, esno_db, _ = lines[1].split(',')
    assert (rate, mode) == ('0.894000', 'hd')
    assert float(esno_db) == pytest.approx(3.8324, abs=5e-3)


@pytest.mark.parametrize('rate', ['1.2', '0', 'abc', '1/0'])
def test_capacity_rejects_rate(rate):
    with pytest.raises(SystemExit):
        main(['capacity', '--rate', rate])


def test_simulate_config_error(tmp_path):
    path = tmp_path / 'bad.ini'
    path.write_text('[simulation]\nscheme = turbo:1\nesno = 1.0\n', encoding='utf-8')
    assert main(['--quiet', 'simulate', str(path)]) == EXIT_CONFIG_ERROR
    assert main(['--quiet', 'simulate', str(tmp_path / 'missing.ini')]) == EXIT_CONFIG_ERROR


def test_simulate_unmet_stop_rule(tmp_path, capsys):
    path = tmp_path / 'clean.ini'
    path.write_text('[simulation]\nscheme = uncoded:100\nesno = 12.0\ne_min = 5\nf_max = 20\n',
                    encoding='utf-8')
    output = tmp_path / 'clean.csv'
    assert main(['--quiet', 'simulate', str(path), '--output', str(output)]) == EXIT_STOP_RULE_UNMET
    assert '12.0000 dB' in capsys.readouterr().out
    result = read_csv(str(output))
    assert result.points[0].frames == 20
    assert result.points[0].bit_errors == 0


def test_simulate_success(tmp_path):
    path = tmp_path / 'noisy.ini'
    path.write_text('[simulation]\nscheme = uncoded:200\nesno = 0.0, 1.0\ne_min = 3\nf_max = 100\n',
                    encoding='utf-8')
    output = tmp_path / 'noisy.csv'
    assert main(['--quiet', 'simulate', str(path), '--output', str(output), '--workers', '1']) == EXIT_OK
    assert [p.frames for p in read_csv(str(output)).points] == [3, 3]


def test_gap(tmp_path, capsys):
    a = _write_curve(tmp_path / 'a.csv', 'ldpc:3,6,96@bp', 0.0)
    b = _write_curve(tmp_path / 'b.csv', 'ldpc:3,6,96@bmp', 0.5)
    assert main(['gap', b, a, '--ber', '1e-2']) == EXIT_OK
    assert '+0.500 dB' in capsys.readouterr().out
    assert main(['gap', a, b, '--ber', '1e-2']) == EXIT_OK
    assert '-0.500 dB' in capsys.readouterr().out
    assert main(['--quiet', 'gap', a, b, '--ber', '1e-9']) != EXIT_OK


def test_dataflow(capsys):
    assert main(['dataflow', 'ldpc:3,6,96', '--bits', '1,2']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'q=1: 288 Bit' in out
    assert 'q=2: 576 Bit' in out
    assert main(['--quiet', 'dataflow', 'ldpc:3,7,96']) == EXIT_CONFIG_ERROR


def test_dataflow_default_bits(capsys):
    assert main(['dataflow', 'ldpc:3,6,96']) == EXIT_OK
    rows = [line for line in capsys.readouterr().out.splitlines() if line.startswith('q=')]
    assert rows == ['q=1: 288 Bit pro Iteration', 'q=2: 576 Bit pro Iteration', 'q=6: 1728 Bit pro Iteration']


def test_threshold_and_weights(tmp_path, capsys):
    assert main(['threshold', '--ensemble', '4,24', '--tol', '0.05']) == EXIT_OK
    assert 'BMP-Schwelle (4,24)' in capsys.readouterr().out
    output = tmp_path / 'weights.txt'
    assert main(['de-weights', '--ensemble', '4,24', '--esno', '3.0', '--length', '6',
                 '--output', str(output)]) == EXIT_OK
    assert output.exists()
    assert main(['de-weights', '--ensemble', '4,24', '--esno', '3.0', '--length', '3',
                 '--decoder', 'tmp']) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[-4] == 'iteration weight threshold'
    assert len(lines) >= 4


def test_plotdata(tmp_path, capsys):
    a = _write_curve(tmp_path / 'a.csv', 'ldpc:3,6,96@bp', 0.0)
    out_dir = tmp_path / 'plots'
    assert main(['plotdata', a, '--rate', '1/2', '--out', str(out_dir)]) == EXIT_OK
    printed = capsys.readouterr().out.split()
    assert any(p.endswith('limits.csv') for p in printed)
    assert (out_dir / 'limits.csv').exists()
