"""Convolution-type products and convex combinations of harmonic maps.

All products act coefficient-wise and truncate to the shorter degree.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .harmap import HarmonicPolyMap
from .series import COEFF_TOL, AnalyticSeries, hadamard, integral_hadamard, linear_combine


def convolve(f: HarmonicPolyMap, F: HarmonicPolyMap) -> HarmonicPolyMap:
    """Harmonic convolution ``h*H + conj(g*G)``."""
    return HarmonicPolyMap(hadamard(f.h, F.h), hadamard(f.g, F.g))


def integral_convolve(f: HarmonicPolyMap, F: HarmonicPolyMap) -> HarmonicPolyMap:
    """Coefficients ``a_n A_n / n`` and ``b_n B_n / n``."""
    return HarmonicPolyMap(integral_hadamard(f.h, F.h), integral_hadamard(f.g, F.g))


def _check_normalized(phi: AnalyticSeries):
    if abs(phi.coeffs[0] - 1) > COEFF_TOL:
        raise ValueError(f"phi must be normalized with phi_1 = 1, got {phi.coeffs[0]}")


def tilde_product(phi: AnalyticSeries, f: HarmonicPolyMap) -> HarmonicPolyMap:
    """Hadamard product of an analytic ``phi`` with both parts: ``h*phi + conj(g*phi)``."""
    _check_normalized(phi)
    return HarmonicPolyMap(hadamard(phi, f.h), hadamard(phi, f.g))


def shear_product(phi: AnalyticSeries, alpha: complex, f: HarmonicPolyMap) -> HarmonicPolyMap:
    """``(alpha conj(phi) + phi) * f = phi*h + conj(conj(alpha) (phi*g))`` for ``|alpha| <= 1``."""
    if abs(alpha) > 1 + COEFF_TOL:
        raise ValueError(f"|alpha| must not exceed 1, got {abs(alpha)}")
    _check_normalized(phi)
    return HarmonicPolyMap(hadamard(phi, f.h), linear_combine([(np.conj(alpha), hadamard(phi, f.g))]))


def convex_combination(weights: Sequence[float], maps: Sequence[HarmonicPolyMap]) -> HarmonicPolyMap:
    weights = [float(w) for w in weights]
    if len(weights) != len(maps) or not maps:
        raise ValueError("need one weight per map and at least one map")
    if any(w < 0 for w in weights) or abs(sum(weights) - 1) > COEFF_TOL:
        raise ValueError("weights must be nonnegative and sum to 1")
    h = linear_combine(zip(weights, (m.h for m in maps)))
    g = linear_combine(zip(weights, (m.g for m in maps)))
    return HarmonicPolyMap(h, g)
