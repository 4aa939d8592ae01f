#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Galois-Körper und BCH-Komponentencodes

Implementiert die Arithmetik in GF(2^m) über Log-/Antilog-Tabellen sowie
binäre (verkürzte) BCH-Codes mit systematischer Codierung und
Bounded Distance Decoding (BDD).

Funktionen:
- Aufbau der Log-/Antilog-Tabellen für 4 <= m <= 16
- Multiplikation, Inversion und Potenzen in GF(2^m)
- Generatorpolynom aus den Kreisteilungsklassen von alpha^1 ... alpha^2t
- Systematische Codierung (Informationsbits vor den Paritätsbits)
- BDD mit Syndromberechnung, Berlekamp-Massey und Chien-Suche

Technische Details:
- Position i eines Codeworts der Länge n entspricht der Potenz x^(n-1-i);
  verkürzte Positionen sind die höchsten Potenzen und werden nie übertragen
- Die BDD-Kernels sind mit numba kompiliert, Zeilenstapel laufen parallel
- Ein Decodierversagen ist ein normales Ergebnis (Failure), kein Fehler
- Fehlkorrekturen werden nicht unterdrückt

Verwendung:
    spec = parse_bch_spec('bch:255,231,3')
    codeword = bch_encode(info_bits, spec)
    outcome = bdd_decode(received, spec)
    if outcome.ok:
        print(outcome.num_flips)

Autor: Team A2-2
"""

import functools
import logging
from dataclasses import dataclass

import numpy as np
from numba import njit, prange

logger = logging.getLogger(__name__)

# Primitive Polynomiale als Bitmaske, Bit i = Koeffizient von x^i
PRIMITIVE_POLYS = {
    4: 0x13,      # x^4 + x + 1
    5: 0x25,      # x^5 + x^2 + 1
    6: 0x43,      # x^6 + x + 1
    7: 0x89,      # x^7 + x^3 + 1
    8: 0x11D,     # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,     # x^9 + x^4 + 1
    10: 0x409,    # x^10 + x^3 + 1
    11: 0x805,    # x^11 + x^2 + 1
    12: 0x1053,   # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,   # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,   # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,   # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}


@dataclass(frozen=True, eq=False)
class GfTable:
    """
    Log-/Antilog-Tabellen für GF(2^m).

    Attribute:
        m (int): Erweiterungsgrad des Körpers
        primitive_poly (int): Bitmaske des primitiven Polynoms
        log_table (np.ndarray): Element -> diskreter Logarithmus (log_table[0] = -1)
        antilog_table (np.ndarray): Logarithmus -> Element, Länge 2 * (2^m - 1),
            damit Summen zweier Logarithmen ohne Modulo nachgeschlagen werden können
    """
    m: int
    primitive_poly: int
    log_table: np.ndarray
    antilog_table: np.ndarray

    @property
    def order(self):
        """Ordnung der multiplikativen Gruppe (2^m - 1)."""
        return (1 << self.m) - 1

    @property
    def size(self):
        return 1 << self.m


@functools.lru_cache(maxsize=None)
def build_gf_table(m, primitive_poly=None):
    """
    Erstellt die Log-/Antilog-Tabellen für GF(2^m).

    Args:
        m (int): Erweiterungsgrad (4 <= m <= 16)
        primitive_poly (int, optional): Bitmaske des primitiven Polynoms;
            Standard ist der Tabelleneintrag in PRIMITIVE_POLYS

    Returns:
        GfTable: Die (geteilte, unveränderliche) Tabelle

    Raises:
        ValueError: Wenn m außerhalb des Bereichs liegt oder das Polynom nicht primitiv ist
    """
    if not 4 <= m <= 16:
        raise ValueError(f"Körpergrad m={m} liegt außerhalb von 4..16")
    poly = PRIMITIVE_POLYS[m] if primitive_poly is None else int(primitive_poly)
    size = 1 << m
    if poly >> m != 1:
        raise ValueError(f"Polynom 0x{poly:X} hat nicht den Grad {m}")

    order = size - 1
    log_table = np.full(size, -1, dtype=np.int64)
    antilog_table = np.zeros(2 * order, dtype=np.int64)
    element = 1
    for exponent in range(order):
        if log_table[element] != -1:
            raise ValueError(f"Polynom 0x{poly:X} ist nicht primitiv")
        antilog_table[exponent] = element
        log_table[element] = exponent
        element <<= 1
        if element & size:
            element ^= poly
    antilog_table[order:] = antilog_table[:order]
    return GfTable(m=m, primitive_poly=poly, log_table=log_table, antilog_table=antilog_table)


def gf_mul(a, b, tbl):
    """
    Multipliziert zwei Elemente von GF(2^m).

    Args:
        a (int): Erster Faktor (< 2^m)
        b (int): Zweiter Faktor (< 2^m)
        tbl (GfTable): Körpertabelle

    Returns:
        int: Produkt a * b modulo des primitiven Polynoms
    """
    if a == 0 or b == 0:
        return 0
    return int(tbl.antilog_table[tbl.log_table[a] + tbl.log_table[b]])


def gf_inv(a, tbl):
    """Multiplikatives Inverses; ValueError für 0."""
    if a == 0:
        raise ValueError("0 besitzt kein Inverses")
    return int(tbl.antilog_table[(tbl.order - tbl.log_table[a]) % tbl.order])


def gf_pow(a, exponent, tbl):
    if a == 0:
        return 1 if exponent == 0 else 0
    return int(tbl.antilog_table[(tbl.log_table[a] * exponent) % tbl.order])


@dataclass(frozen=True, eq=False)
class BchSpec:
    """
    Parameter eines binären, ggf. verkürzten BCH-Codes.

    Attribute:
        m (int): Körpergrad
        t (int): Korrekturfähigkeit
        shorten (int): Anzahl führender, auf 0 fixierter Informationsbits
        field (GfTable): Zugehörige Körpertabelle
        generator_poly (np.ndarray): Binäre Koeffizienten, Index = Potenz
        parity_matrix (np.ndarray): k x (n-k) Matrix P mit Parität = Info @ P (mod 2)
    """
    m: int
    t: int
    shorten: int
    field: GfTable
    generator_poly: np.ndarray
    parity_matrix: np.ndarray

    @property
    def n_native(self):
        return (1 << self.m) - 1

    @property
    def k_native(self):
        return self.n_native - (len(self.generator_poly) - 1)

    @property
    def n(self):
        return self.n_native - self.shorten

    @property
    def k(self):
        return self.k_native - self.shorten

    @property
    def redundancy(self):
        """Anzahl der Paritätsbits n - k."""
        return self.n - self.k

    @property
    def rate(self):
        return self.k / self.n

    def __str__(self):
        return f"bch:{self.n},{self.k},{self.t}"


def _generator_poly(tbl, t):
    """Generatorpolynom als Produkt der Minimalpolynome von alpha^1 ... alpha^2t."""
    order = tbl.order
    roots = set()
    for i in range(1, 2 * t + 1):
        j = i % order
        while j not in roots:
            roots.add(j)
            j = (2 * j) % order
    if len(roots) >= order:
        raise ValueError(f"t={t} ist für GF(2^{tbl.m}) zu groß")

    coeffs = [1]
    for root in sorted(roots):
        alpha_root = int(tbl.antilog_table[root])
        shifted = [0] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] ^= gf_mul(c, alpha_root, tbl)
        coeffs = shifted
    if any(c not in (0, 1) for c in coeffs):
        raise RuntimeError("Generatorpolynom hat nicht-binäre Koeffizienten")
    return np.array(coeffs, dtype=np.uint8)


def _parity_matrix(generator_poly, n, k):
    """Zeile i enthält den Rest von x^(n-1-i) modulo g, höchste Potenz zuerst."""
    r = n - k
    g_mask = 0
    for power, c in enumerate(generator_poly):
        if c:
            g_mask |= 1 << power
    remainders = []
    rem = 1
    for _ in range(n):
        remainders.append(rem)
        rem <<= 1
        if (rem >> r) & 1:
            rem ^= g_mask
    parity = np.zeros((k, r), dtype=np.uint8)
    for i in range(k):
        rem = remainders[n - 1 - i]
        for j in range(r):
            parity[i, j] = (rem >> (r - 1 - j)) & 1
    return parity


@functools.lru_cache(maxsize=None)
def build_bch_spec(m, t, shorten=0, primitive_poly=None):
    """
    Erstellt einen (verkürzten) binären BCH-Code.

    Args:
        m (int): Körpergrad, native Länge ist 2^m - 1
        t (int): Korrekturfähigkeit (>= 1)
        shorten (int): Anzahl verkürzter Informationsbits
        primitive_poly (int, optional): Abweichendes primitives Polynom

    Returns:
        BchSpec: Die Code-Parameter inklusive Paritätsmatrix

    Raises:
        ValueError: Bei ungültigen Parametern
    """
    if t < 1:
        raise ValueError(f"Korrekturfähigkeit t={t} muss mindestens 1 sein")
    tbl = build_gf_table(m, primitive_poly)
    generator = _generator_poly(tbl, t)
    n_native = tbl.order
    k_native = n_native - (len(generator) - 1)
    if not 0 <= shorten < k_native:
        raise ValueError(f"Verkürzung {shorten} nicht in 0..{k_native - 1}")
    n = n_native - shorten
    k = k_native - shorten
    logger.debug("BCH(%d,%d,%d) aus GF(2^%d) erstellt", n, k, t, m)
    return BchSpec(m=m, t=t, shorten=shorten, field=tbl, generator_poly=generator,
                   parity_matrix=_parity_matrix(generator, n, k))


def parse_bch_spec(text):
    """
    Erstellt einen BCH-Code aus einem Tripel-String.

    Aus (n, k, t) wird der kleinste passende Körper bestimmt; die Differenz zur
    nativen Länge wird verkürzt, z.B. (310,283,3) = (511,484,3) um 201 verkürzt.

    Args:
        text (str): 'bch:n,k,t' oder 'n,k,t'

    Returns:
        BchSpec: Der passende Code

    Raises:
        ValueError: Wenn kein BCH-Code mit diesen Parametern existiert
    """
    body = text.strip()
    if body.lower().startswith('bch:'):
        body = body[4:]
    try:
        n, k, t = (int(part) for part in body.split(','))
    except ValueError:
        raise ValueError(f"Ungültiger BCH-String '{text}', erwartet 'bch:n,k,t'")
    if n < 1 or k < 1 or k >= n:
        raise ValueError(f"Ungültige BCH-Parameter ({n},{k},{t})")
    m = max(4, int(n).bit_length())
    native = build_bch_spec(m, t)
    shorten = native.n_native - n
    if shorten < 0 or native.k_native - shorten != k:
        raise ValueError(f"Kein BCH-Code ({n},{k},{t}) über GF(2^{m}) "
                         f"(nativ: ({native.n_native},{native.k_native},{t}))")
    return build_bch_spec(m, t, shorten)


def bch_encode(info, spec):
    """
    Codiert Informationsbits systematisch.

    Args:
        info (np.ndarray): Bitvektor der Länge k oder Matrix mit k Spalten
        spec (BchSpec): Der Komponentencode

    Returns:
        np.ndarray: Codewort(e) der Länge n (Info-Bits, danach n-k Paritätsbits)

    Raises:
        ValueError: Wenn die Länge nicht k ist
    """
    info = np.asarray(info, dtype=np.uint8)
    if info.shape[-1] != spec.k:
        raise ValueError(f"Informationslänge {info.shape[-1]} passt nicht zu k={spec.k}")
    parity = (info.astype(np.int64) @ spec.parity_matrix.astype(np.int64)) & 1
    return np.concatenate([info, parity.astype(np.uint8)], axis=-1)


def is_bch_codeword(words, spec):
    """Prüft Codewort-Zugehörigkeit für einen Vektor oder zeilenweise für eine Matrix."""
    words = np.asarray(words, dtype=np.uint8)
    parity = (words[..., :spec.k].astype(np.int64) @ spec.parity_matrix.astype(np.int64)) & 1
    return np.all(parity == words[..., spec.k:], axis=-1)


@njit
def _syndromes(word, two_t, antilog_table, order):
    n = word.shape[0]
    syn = np.zeros(two_t, dtype=np.int64)
    for i in range(n):
        if word[i]:
            power = n - 1 - i
            for j in range(two_t):
                syn[j] ^= antilog_table[((j + 1) * power) % order]
    return syn


@njit
def _bdd_kernel(word, t, log_table, antilog_table, order, flips):
    """Gibt die Anzahl der Korrekturen zurück (Positionen in flips) oder -1."""
    n = word.shape[0]
    two_t = 2 * t
    syn = _syndromes(word, two_t, antilog_table, order)
    nonzero = False
    for j in range(two_t):
        if syn[j] != 0:
            nonzero = True
    if not nonzero:
        return 0

    # Berlekamp-Massey
    conn = np.zeros(two_t + 1, dtype=np.int64)
    prev = np.zeros(two_t + 1, dtype=np.int64)
    conn[0] = 1
    prev[0] = 1
    length = 0
    shift = 1
    prev_disc = 1
    for r in range(two_t):
        disc = syn[r]
        for i in range(1, length + 1):
            if conn[i] != 0 and syn[r - i] != 0:
                disc ^= antilog_table[log_table[conn[i]] + log_table[syn[r - i]]]
        if disc == 0:
            shift += 1
            continue
        scale = (log_table[disc] - log_table[prev_disc] + order) % order
        saved = conn.copy()
        for i in range(two_t + 1 - shift):
            if prev[i] != 0:
                conn[i + shift] ^= antilog_table[scale + log_table[prev[i]]]
        if 2 * length <= r:
            length = r + 1 - length
            prev = saved
            prev_disc = disc
            shift = 1
        else:
            shift += 1
    if length > t:
        return -1

    # Chien-Suche nur über übertragene Positionen
    count = 0
    for power in range(n):
        acc = conn[0]
        for i in range(1, length + 1):
            if conn[i] != 0:
                acc ^= antilog_table[(log_table[conn[i]] - (power * i) % order + order) % order]
        if acc == 0:
            if count >= length:
                return -1
            flips[count] = n - 1 - power
            count += 1
    if count != length:
        return -1

    # Das korrigierte Wort muss ein Codewort sein
    for f in range(count):
        power = n - 1 - flips[f]
        for j in range(two_t):
            syn[j] ^= antilog_table[((j + 1) * power) % order]
    for j in range(two_t):
        if syn[j] != 0:
            return -1
    return count


@njit(parallel=True)
def _bdd_rows_kernel(words, t, log_table, antilog_table, order, out, status):
    for r in prange(words.shape[0]):
        flips = np.zeros(t, dtype=np.int64)
        res = _bdd_kernel(words[r], t, log_table, antilog_table, order, flips)
        status[r] = res
        for c in range(words.shape[1]):
            out[r, c] = words[r, c]
        for f in range(max(res, 0)):
            out[r, flips[f]] = 1 - out[r, flips[f]]


@dataclass(frozen=True, eq=False)
class Corrected:
    """
    Erfolgreiche BDD: Codewort im Abstand num_flips <= t zum Eingang.

    Attribute:
        codeword (np.ndarray): Das decodierte Codewort
        num_flips (int): Anzahl korrigierter Bits
    """
    codeword: np.ndarray
    num_flips: int
    ok = True


@dataclass(frozen=True)
class Failure:
    """Kein Codewort im Abstand <= t."""
    ok = False


def bch_syndromes(word, spec, tbl=None):
    """Syndrome S_1 ... S_2t des Wortes als Körperelemente."""
    tbl = tbl or spec.field
    word = np.ascontiguousarray(word, dtype=np.uint8)
    return _syndromes(word, 2 * spec.t, tbl.antilog_table, tbl.order)


def bdd_decode(word, spec, tbl=None):
    """
    Bounded Distance Decoding eines einzelnen Wortes.

    Args:
        word (np.ndarray): Empfangener Bitvektor der Länge n
        spec (BchSpec): Der Komponentencode
        tbl (GfTable, optional): Körpertabelle, Standard ist spec.field

    Returns:
        Corrected | Failure: Decodierergebnis; Failure, wenn kein Codewort im
        Abstand t liegt oder ein Fehler auf eine verkürzte Position fällt

    Raises:
        ValueError: Wenn die Länge nicht n ist
    """
    word = np.ascontiguousarray(word, dtype=np.uint8)
    if word.ndim != 1 or word.shape[0] != spec.n:
        raise ValueError(f"Wortlänge {word.shape} passt nicht zu n={spec.n}")
    tbl = tbl or spec.field
    flips = np.zeros(spec.t, dtype=np.int64)
    res = _bdd_kernel(word, spec.t, tbl.log_table, tbl.antilog_table, tbl.order, flips)
    if res < 0:
        return Failure()
    codeword = word.copy()
    codeword[flips[:res]] ^= 1
    return Corrected(codeword=codeword, num_flips=int(res))


def bdd_decode_rows(words, spec):
    """
    Decodiert alle Zeilen einer Bitmatrix unabhängig voneinander.

    Args:
        words (np.ndarray): Matrix mit n Spalten
        spec (BchSpec): Der Komponentencode

    Returns:
        tuple: (decodierte Matrix, Status je Zeile: Anzahl Korrekturen oder -1)
            Bei Versagen bleibt die Zeile unverändert.

    Raises:
        ValueError: Wenn die Spaltenzahl nicht n ist
    """
    words = np.ascontiguousarray(words, dtype=np.uint8)
    if words.ndim != 2 or words.shape[1] != spec.n:
        raise ValueError(f"Matrixform {words.shape} passt nicht zu n={spec.n}")
    out = np.empty_like(words)
    status = np.empty(words.shape[0], dtype=np.int64)
    tbl = spec.field
    _bdd_rows_kernel(words, spec.t, tbl.log_table, tbl.antilog_table, tbl.order, out, status)
    return out, status
