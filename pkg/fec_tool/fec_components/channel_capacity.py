#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
FEC Tool - Bi-AWGN-Kanal und Kanalkapazität

Simuliert den binären AWGN-Kanal Y = X + N mit X aus {-1, +1} und
N ~ N(0, sigma^2), berechnet Kanal-LLRs, die uncodierte Bitfehlerrate sowie
die Kapazitäten bei Soft- und Hard-Decision und deren Umkehrfunktionen
(Shannon-Grenzen für eine gegebene Coderate).

Funktionen:
- Umrechnung Es/N0 <-> sigma und Es/N0 <-> Eb/N0
- Kanalübertragung mit reproduzierbarem Rauschen
- LLR-Berechnung L = 2y / sigma^2
- Uncodierte BER Q(1/sigma)
- SD-Kapazität (Gauss-Hermite-Quadratur) und HD-Kapazität 1 - h2(Q(1/sigma))
- Inverse Kapazität, Overhead und Abstand zur Kapazitätsgrenze

Technische Details:
- Es/N0 = 1 / (2 sigma^2)
- Q(x) = erfc(x / sqrt(2)) / 2 über scipy.special.erfc
- Die SD-Kapazität nutzt 64 Stützstellen (config.GAUSS_HERMITE_NODES)
- Die Umkehrfunktion sucht mit scipy.optimize.brentq

Verwendung:
    params = ChannelParams(esno_db=3.0, seed=1)
    y = transmit(np.ones(1000), params)
    L = llr(y, params)
    print(inverse_capacity(5 / 6, 'sd'))   # ~1.5713 dB

Autor: Team A2-2
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.hermite import hermgauss
from scipy.optimize import brentq
from scipy.special import entr, erfc

from ..config import GAUSS_HERMITE_NODES
from ..errors import BracketError

logger = logging.getLogger(__name__)

# Suchintervall der inversen Kapazität in dB
CAPACITY_SEARCH_DB = (-50.0, 30.0)

_HERMITE_NODES, _HERMITE_WEIGHTS = hermgauss(GAUSS_HERMITE_NODES)


def esno_to_sigma(esno_db):
    """Rauschstandardabweichung zu Es/N0 in dB."""
    return np.sqrt(1.0 / (2.0 * 10.0 ** (np.asarray(esno_db, dtype=float) / 10.0)))


def sigma_to_esno(sigma):
    """Es/N0 in dB zur Rauschstandardabweichung."""
    return 10.0 * np.log10(1.0 / (2.0 * np.asarray(sigma, dtype=float) ** 2))


@dataclass(frozen=True)
class ChannelParams:
    """
    Parameter des Bi-AWGN-Kanals.

    Attribute:
        esno_db (float): Es/N0 in dB
        seed (int, optional): Seed des Rauschgenerators
    """
    esno_db: float
    seed: object = None

    @property
    def sigma(self):
        return float(esno_to_sigma(self.esno_db))

    @property
    def sigma2(self):
        return self.sigma ** 2

    @classmethod
    def from_sigma(cls, sigma, seed=None):
        if sigma <= 0:
            raise ValueError(f"sigma muss positiv sein, nicht {sigma}")
        return cls(esno_db=float(sigma_to_esno(sigma)), seed=seed)


def transmit(symbols, params, rng=None):
    """
    Überträgt Symbole aus {-1, +1} über den AWGN-Kanal.

    Args:
        symbols (np.ndarray): Sendesymbole
        params (ChannelParams): Kanalparameter
        rng (np.random.Generator, optional): Rauschquelle; Standard ist ein
            Generator aus params.seed

    Returns:
        np.ndarray: Empfangswerte y = x + n
    """
    if rng is None:
        rng = np.random.default_rng(params.seed)
    symbols = np.asarray(symbols, dtype=float)
    return symbols + params.sigma * rng.standard_normal(symbols.shape)


def llr(y, params):
    """
    Kanal-LLR L = 2y / sigma^2; L > 0 spricht für x = +1.

    Args:
        y (np.ndarray): Empfangswerte
        params (ChannelParams): Kanalparameter

    Returns:
        np.ndarray: LLRs gleicher Form
    """
    return 2.0 * np.asarray(y, dtype=float) / params.sigma2


def qfunc(x):
    """Gaußsche Tail-Wahrscheinlichkeit Q(x)."""
    return 0.5 * erfc(np.asarray(x, dtype=float) / math.sqrt(2.0))


def binary_entropy(p):
    """Binäre Entropie h2(p) in Bit, mit h2(0) = h2(1) = 0."""
    p = np.asarray(p, dtype=float)
    return (entr(p) + entr(1.0 - p)) / math.log(2.0)


def uncoded_ber(esno_db):
    """
    Bitfehlerrate der Hard-Decision ohne Codierung.

    Args:
        esno_db (float | np.ndarray): Es/N0 in dB

    Returns:
        float | np.ndarray: Q(sqrt(2 Es/N0)) = Q(1/sigma)
    """
    esno_lin = 10.0 ** (np.asarray(esno_db, dtype=float) / 10.0)
    result = qfunc(np.sqrt(2.0 * esno_lin))
    return float(result) if np.ndim(result) == 0 else result


hd_crossover = uncoded_ber


def _sd_capacity(esno_db):
    # L | x=+1 ~ N(mu, 2 mu) mit mu = 2 / sigma^2
    mu = 4.0 * 10.0 ** (np.asarray(esno_db, dtype=float) / 10.0)
    std = np.sqrt(2.0 * mu)
    samples = mu[..., None] + math.sqrt(2.0) * std[..., None] * _HERMITE_NODES
    penalty = np.logaddexp(0.0, -samples) / math.log(2.0)
    return 1.0 - (penalty @ _HERMITE_WEIGHTS) / math.sqrt(math.pi)


def capacity(esno_db, mode='sd'):
    """
    Kapazität des Bi-AWGN-Kanals in Bit pro Kanalbenutzung.

    Args:
        esno_db (float | np.ndarray): Es/N0 in dB
        mode (str): 'sd' (Soft-Decision) oder 'hd' (Hard-Decision, BSC)

    Returns:
        float | np.ndarray: Kapazität in [0, 1]

    Raises:
        ValueError: Bei unbekanntem Modus
    """
    if mode == 'sd':
        result = _sd_capacity(esno_db)
    elif mode == 'hd':
        result = 1.0 - binary_entropy(uncoded_ber(esno_db))
    else:
        raise ValueError(f"Unbekannter Kapazitätsmodus '{mode}', erwartet 'sd' oder 'hd'")
    result = np.clip(result, 0.0, 1.0)
    return float(result) if np.ndim(result) == 0 else result


def inverse_capacity(rate, mode='sd', tol=1e-6):
    """
    Kleinstes Es/N0, bei dem die Kapazität die Coderate erreicht.

    Args:
        rate (float): Coderate in (0, 1)
        mode (str): 'sd' oder 'hd'
        tol (float): Zulässige Abweichung |capacity(Ergebnis) - rate|

    Returns:
        float: Shannon-Grenze in dB

    Raises:
        ValueError: Wenn rate nicht in (0, 1) liegt
        BracketError: Wenn die Rate im Suchintervall nicht erreicht wird
    """
    if not 0.0 < rate < 1.0:
        raise ValueError(f"Coderate {rate} liegt nicht in (0, 1)")
    lo, hi = CAPACITY_SEARCH_DB
    f_lo = capacity(lo, mode) - rate
    f_hi = capacity(hi, mode) - rate
    if f_lo > 0 or f_hi < 0:
        raise BracketError(f"Rate {rate} wird im Modus '{mode}' nicht eingeschlossen", (lo, hi))
    if f_lo == 0:
        return lo
    result = brentq(lambda x: capacity(x, mode) - rate, lo, hi, xtol=1e-10, rtol=1e-12)
    if abs(capacity(result, mode) - rate) > tol:
        raise BracketError(f"Toleranz {tol} für Rate {rate} nicht erreicht", (lo, hi))
    logger.debug("Shannon-Grenze R=%.6f (%s): %.4f dB", rate, mode, result)
    return float(result)


def esno_to_ebno(esno_db, rate):
    """Eb/N0 = Es/N0 - 10 log10(R)."""
    return np.asarray(esno_db, dtype=float) - 10.0 * math.log10(rate)


def ebno_to_esno(ebno_db, rate):
    """Es/N0 = Eb/N0 + 10 log10(R)."""
    return np.asarray(ebno_db, dtype=float) + 10.0 * math.log10(rate)


def overhead(rate):
    """FEC-Overhead 1/R - 1, z.B. 0.2 für R = 5/6."""
    if not 0.0 < rate <= 1.0:
        raise ValueError(f"Coderate {rate} liegt nicht in (0, 1]")
    return 1.0 / rate - 1.0


def gap_to_capacity(esno_db, rate, mode='sd'):
    """Abstand eines Arbeitspunkts zur Shannon-Grenze in dB."""
    return float(esno_db) - inverse_capacity(rate, mode)
