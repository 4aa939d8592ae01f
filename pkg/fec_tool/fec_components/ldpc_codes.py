#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - LDPC-Codes und Tanner-Graphen

Konstruiert terminierte, protographbasierte räumlich gekoppelte LDPC-Codes
(SC-LDPC) sowie reguläre LDPC-Codes als Tanner-Graphen.

Funktionen:
- SC-LDPC-Konstruktion mit Kantenaufteilung über mem + 1 Positionen
  und zirkulanter Liftung mit Zufallsverschiebungen
- Reguläre (dv, dc)-Codes über einen Kanten-Interleaver ohne Mehrfachkanten
- Prüfung der Codewort-Zugehörigkeit
- Datenfluss-Kennzahl n * d_v * q eines Decoders
- Export/Import im Adjazenz-Textformat

Technische Details:
- Kanten sind nach Prüfknoten sortiert (CSR-Layout: edge_vn, cn_ptr)
- Die Paritätsprüfmatrix wird als scipy.sparse.csr_matrix gehalten
- Gleiche Parameter inklusive Seed ergeben identische Graphen

Textformat (write_graph/read_graph):
    Zeile 1:       n n_cn
    Zeile 2 ff.:   VN-Indizes eines Prüfknotens, durch Leerzeichen getrennt

Verwendung:
    graph = build_sc_ldpc(ScLdpcSpec(dv=4, dc=24, L=50, Q=320, mem=3))
    print(graph.n, graph.design_rate)
    ok = is_codeword(np.zeros(graph.n, dtype=np.uint8), graph)

Autor: Team A2-2
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix

from ..errors import FecToolError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScLdpcSpec:
    """
    Parameter eines terminierten SC-LDPC-Codes.

    Attribute:
        dv (int): VN-Grad
        dc (int): CN-Grad (Vielfaches von dv)
        L (int): Anzahl räumlicher Positionen
        Q (int): Liftungsfaktor
        mem (int): Kopplungsgedächtnis
        seed (int): Seed für die Zirkulanten-Verschiebungen
    """
    dv: int = 4
    dc: int = 24
    L: int = 50
    Q: int = 320
    mem: int = 3
    seed: int = 0

    def __str__(self):
        return f"scldpc:{self.dv},{self.dc},{self.L},{self.Q},{self.mem},{self.seed}"


@dataclass(frozen=True, eq=False)
class TannerGraph:
    """
    Bipartiter Graph aus Variablenknoten (VN) und Prüfknoten (CN).

    Attribute:
        n (int): Anzahl der VNs
        n_cn (int): Anzahl der CNs
        edge_vn (np.ndarray): VN jeder Kante, Kanten nach CN sortiert
        cn_ptr (np.ndarray): CSR-Offsets; Kanten von CN c sind cn_ptr[c]:cn_ptr[c+1]
        name (str): Beschreibung der Herkunft (z.B. der Code-String)
    """
    n: int
    n_cn: int
    edge_vn: np.ndarray
    cn_ptr: np.ndarray
    name: str = ''
    spec: object = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def num_edges(self):
        return int(self.edge_vn.shape[0])

    @property
    def edge_cn(self):
        """CN jeder Kante."""
        if 'edge_cn' not in self._cache:
            self._cache['edge_cn'] = np.repeat(np.arange(self.n_cn), np.diff(self.cn_ptr))
        return self._cache['edge_cn']

    @property
    def vn_degrees(self):
        return np.bincount(self.edge_vn, minlength=self.n)

    @property
    def cn_degrees(self):
        return np.diff(self.cn_ptr)

    @property
    def design_rate(self):
        return 1.0 - self.n_cn / self.n

    @property
    def parity_matrix(self):
        """Paritätsprüfmatrix H (n_cn x n) als csr_matrix."""
        if 'H' not in self._cache:
            data = np.ones(self.num_edges, dtype=np.int64)
            self._cache['H'] = csr_matrix((data, self.edge_vn, self.cn_ptr), shape=(self.n_cn, self.n))
        return self._cache['H']

    def cn_neighbors(self, c):
        """VN-Nachbarn von CN c in Kantenreihenfolge."""
        return self.edge_vn[self.cn_ptr[c]:self.cn_ptr[c + 1]]


def _graph_from_lists(n, neighbor_lists, name='', spec=None):
    """Erstellt einen Graphen aus CN-Nachbarlisten; CNs ohne Kanten entfallen."""
    neighbor_lists = [np.asarray(nb, dtype=np.int64) for nb in neighbor_lists if len(nb) > 0]
    degrees = np.array([len(nb) for nb in neighbor_lists], dtype=np.int64)
    cn_ptr = np.concatenate([[0], np.cumsum(degrees)]).astype(np.int64)
    edge_vn = np.concatenate(neighbor_lists).astype(np.int64) if neighbor_lists else np.zeros(0, np.int64)
    return TannerGraph(n=int(n), n_cn=len(neighbor_lists), edge_vn=edge_vn, cn_ptr=cn_ptr,
                       name=name, spec=spec)


def build_sc_ldpc(spec):
    """
    Konstruiert einen terminierten SC-LDPC-Code.

    Jeder VN an Position p sendet seine dv Kanten reihum an die CN-Gruppen der
    Positionen p, p+1, ..., p+mem. Jede Protographkante wird mit einer
    unabhängigen zyklischen Verschiebung aus dem PRNG geliftet.

    Args:
        spec (ScLdpcSpec): Code-Parameter

    Returns:
        TannerGraph: Graph mit n = L * dc/dv * Q VNs und (L + mem) * Q CNs

    Raises:
        ValueError: Bei ungültigen Parametern oder wenn eine Protographkante
            mehr parallele Kanten verlangt, als der Liftungsfaktor erlaubt
    """
    dv, dc, L, Q, mem = spec.dv, spec.dc, spec.L, spec.Q, spec.mem
    if min(dv, dc, L, Q) < 1 or mem < 0:
        raise ValueError(f"Ungültige SC-LDPC-Parameter {spec}")
    if dc % dv != 0:
        raise ValueError(f"dc={dc} ist kein Vielfaches von dv={dv}")
    if mem >= L:
        raise ValueError(f"Kopplungsgedächtnis mem={mem} muss kleiner als L={L} sein")

    vn_types = dc // dv
    # Vielfachheit der Protographkanten von einem VN-Typ zu den Positionen p + offset
    multiplicity = np.bincount(np.arange(dv) % (mem + 1), minlength=mem + 1)
    if multiplicity.max() > Q:
        raise ValueError("insufficient VNs for CN degree: "
                         f"{multiplicity.max()} parallele Kanten bei Liftungsfaktor Q={Q}")

    rng = np.random.default_rng(spec.seed)
    n = L * vn_types * Q
    num_cn_positions = L + mem
    lift = np.arange(Q)
    neighbor_lists = [[] for _ in range(num_cn_positions * Q)]
    for p in range(L):
        for v in range(vn_types):
            vn_base = (p * vn_types + v) * Q
            for offset in range(mem + 1):
                count = multiplicity[offset]
                if count == 0:
                    continue
                cn_base = (p + offset) * Q
                shifts = rng.choice(Q, size=count, replace=False)
                for shift in shifts:
                    cns = cn_base + (lift + shift) % Q
                    for z in range(Q):
                        neighbor_lists[cns[z]].append(vn_base + z)

    graph = _graph_from_lists(n, neighbor_lists, name=str(spec), spec=spec)
    logger.info("SC-LDPC %s: n=%d, n_cn=%d, Rate=%.5f", spec, graph.n, graph.n_cn, graph.design_rate)
    return graph


def _find_conflicts(edge_vn, edge_cn, n_cn):
    """Kanten, deren VN im selben CN bereits vorkommt."""
    members = [set() for _ in range(n_cn)]
    conflicts = []
    for e in range(edge_vn.shape[0]):
        c, v = edge_cn[e], edge_vn[e]
        if v in members[c]:
            conflicts.append(e)
        else:
            members[c].add(v)
    return members, conflicts


def build_regular_ldpc(dv, dc, n, seed=0, max_passes=200):
    """
    Konstruiert einen regulären (dv, dc)-LDPC-Code ohne Mehrfachkanten.

    Die VN-Sockel werden zufällig permutiert den CN-Sockeln zugeordnet;
    Mehrfachkanten werden anschließend durch Kantentausch aufgelöst.

    Args:
        dv (int): VN-Grad
        dc (int): CN-Grad
        n (int): Anzahl der VNs
        seed (int): Seed des Interleavers
        max_passes (int): Obergrenze der Reparaturdurchläufe

    Returns:
        TannerGraph: Der reguläre Graph mit n * dv / dc CNs

    Raises:
        ValueError: Wenn n * dv nicht durch dc teilbar ist oder dc > n
        FecToolError: Wenn die Mehrfachkanten nicht aufgelöst werden können
    """
    if min(dv, dc, n) < 1:
        raise ValueError(f"Ungültige Parameter dv={dv}, dc={dc}, n={n}")
    if (n * dv) % dc != 0:
        raise ValueError(f"n*dv={n * dv} ist nicht durch dc={dc} teilbar")
    if dc > n:
        raise ValueError(f"insufficient VNs for CN degree: dc={dc} > n={n}")

    rng = np.random.default_rng(seed)
    num_edges = n * dv
    n_cn = num_edges // dc
    edge_vn = rng.permutation(num_edges) // dv
    edge_cn = np.arange(num_edges) // dc
    members, conflicts = _find_conflicts(edge_vn, edge_cn, n_cn)
    passes = 0
    while conflicts:
        passes += 1
        if passes > max_passes:
            raise FecToolError(f"Mehrfachkanten nach {max_passes} Durchläufen nicht auflösbar")
        # CNs mit Konflikten tauschen nur mit konfliktfreien CNs
        busy = {edge_cn[e] for e in conflicts}
        for e in conflicts:
            c, v = edge_cn[e], edge_vn[e]
            for f in rng.integers(0, num_edges, size=64):
                c2, v2 = edge_cn[f], edge_vn[f]
                if c2 in busy or v2 in members[c] or v in members[c2]:
                    continue
                members[c2].discard(v2)
                members[c2].add(v)
                members[c].add(v2)
                edge_vn[e], edge_vn[f] = v2, v
                break
        members, conflicts = _find_conflicts(edge_vn, edge_cn, n_cn)

    neighbor_lists = [edge_vn[c * dc:(c + 1) * dc] for c in range(n_cn)]
    return _graph_from_lists(n, neighbor_lists, name=f"ldpc:{dv},{dc},{n},{seed}")


def parse_ldpc_code(text):
    """
    Erstellt einen Graphen aus einem Code-String.

    Args:
        text (str): 'scldpc:dv,dc,L,Q,mem[,seed]' oder 'ldpc:dv,dc,n[,seed]'

    Returns:
        TannerGraph: Der konstruierte Graph

    Raises:
        ValueError: Bei unbekanntem Format
    """
    kind, _, body = text.strip().partition(':')
    try:
        values = [int(v) for v in body.split(',')]
    except ValueError:
        raise ValueError(f"Ungültiger LDPC-String '{text}'")
    if kind == 'scldpc' and len(values) in (5, 6):
        return build_sc_ldpc(ScLdpcSpec(*values))
    if kind == 'ldpc' and len(values) in (3, 4):
        return build_regular_ldpc(*values)
    raise ValueError(f"Unbekannter LDPC-String '{text}'")


def is_codeword(word, graph):
    """
    Prüft, ob alle Prüfgleichungen erfüllt sind.

    Args:
        word (np.ndarray): Bitvektor der Länge n
        graph (TannerGraph): Der Code

    Returns:
        bool: True, wenn die Nachbarschaft jedes CN zu 0 summiert (mod 2)

    Raises:
        ValueError: Wenn die Länge nicht n ist
    """
    word = np.asarray(word)
    if word.shape != (graph.n,):
        raise ValueError(f"Wortlänge {word.shape} passt nicht zu n={graph.n}")
    return not np.any((graph.parity_matrix @ word.astype(np.int64)) & 1)


def dataflow_score(graph, q):
    """
    Datenfluss pro Iteration: n * mittlerer VN-Grad * q.

    Args:
        graph (TannerGraph): Der Code
        q (int): Bits pro Nachricht (>= 1)

    Returns:
        float: Übertragene Bits pro Iteration

    Raises:
        ValueError: Wenn q < 1
    """
    if q < 1:
        raise ValueError(f"Bits pro Nachricht q={q} muss mindestens 1 sein")
    mean_vn_degree = graph.num_edges / graph.n
    return float(graph.n * mean_vn_degree * q)


def write_graph(graph, path):
    """
    Schreibt einen Graphen im Adjazenz-Textformat.

    Raises:
        FecToolError: Wenn die Datei nicht geschrieben werden kann
    """
    try:
        with open(path, 'w', encoding='utf-8') as fh:
            fh.write(f"{graph.n} {graph.n_cn}\n")
            for c in range(graph.n_cn):
                fh.write(' '.join(str(v) for v in graph.cn_neighbors(c)) + '\n')
    except OSError as e:
        raise FecToolError(f"Fehler beim Schreiben des Graphen: {e}") from e


def read_graph(path):
    """
    Liest einen Graphen im Adjazenz-Textformat.

    Returns:
        TannerGraph: Der gelesene Graph

    Raises:
        FecToolError: Wenn die Datei fehlt oder nicht dem Format entspricht
    """
    try:
        with open(path, 'r', encoding='utf-8') as fh:
            n, n_cn = (int(v) for v in fh.readline().split())
            neighbor_lists = [[int(v) for v in line.split()] for line in fh if line.strip()]
    except (OSError, ValueError) as e:
        raise FecToolError(f"Fehler beim Lesen des Graphen: {e}") from e
    if len(neighbor_lists) != n_cn:
        raise FecToolError(f"Kopfzeile nennt {n_cn} CNs, Datei enthält {len(neighbor_lists)}")
    return _graph_from_lists(n, neighbor_lists, name=str(path))
