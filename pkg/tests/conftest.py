#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Gemeinsame Test-Fixtures

Kleine Graphen, Codewörter und Komponentencodes, die in mehreren
Testmodulen gebraucht werden.

Autor: Team A2-2
"""

import numpy as np
import pytest

from fec_tool.fec_components.galois_bch import parse_bch_spec
from fec_tool.fec_components.ldpc_codes import _graph_from_lists, build_regular_ldpc, parse_ldpc_code
from fec_tool.fec_components.product_codes import PcSpec, StaircaseSpec


def gf2_nullspace(matrix):
    """Basis des Nullraums einer Bitmatrix über GF(2), eine Zeile pro Basisvektor."""
    a = np.array(matrix, dtype=np.uint8) & 1
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        a[[r, p]] = a[[p, r]]
        hit = a[:, c].astype(bool)
        hit[r] = False
        a[hit] ^= a[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    basis[np.arange(len(free)), free] = 1
    basis[:, pivots] = a[:len(pivots)][:, free].T
    return basis


@pytest.fixture(scope='session')
def small_graph():
    """Regulärer (3,6)-Code mit 96 VNs."""
    return build_regular_ldpc(3, 6, 96, seed=3)


@pytest.fixture(scope='session')
def parity_graph():
    """Ein einzelner CN über drei VNs."""
    return _graph_from_lists(3, [[0, 1, 2]], name='parity3')


def random_codewords(graph, count, seed):
    """Zufällige, nichttriviale Codewörter eines Graphen."""
    basis = gf2_nullspace(graph.parity_matrix.toarray())
    rng = np.random.default_rng(seed)
    words = []
    while len(words) < count:
        pick = rng.integers(0, 2, basis.shape[0], dtype=np.uint8)
        word = (pick.astype(np.int64) @ basis.astype(np.int64)) & 1
        if word.any():
            words.append(word.astype(np.uint8))
    return words


@pytest.fixture(scope='session')
def codewords(small_graph):
    return random_codewords(small_graph, 4, seed=11)


@pytest.fixture(scope='session')
def graph1000():
    """Regulärer (3,6)-Code mit 1000 VNs."""
    return parse_ldpc_code('ldpc:3,6,1000')


@pytest.fixture(scope='session')
def codewords1000(graph1000):
    return random_codewords(graph1000, 3, seed=12)


@pytest.fixture(scope='session')
def bch15():
    return parse_bch_spec('bch:15,5,3')


@pytest.fixture(scope='session')
def bch62():
    return parse_bch_spec('bch:62,44,3')


@pytest.fixture(scope='session')
def pc15(bch15):
    return PcSpec(bch15)


@pytest.fixture(scope='session')
def staircase62(bch62):
    return StaircaseSpec(bch62)
