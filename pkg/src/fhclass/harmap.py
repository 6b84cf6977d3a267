"""Harmonic polynomial maps ``f = h + conj(g)`` on the closed unit disk."""

from __future__ import annotations

from dataclasses import InitVar, dataclass, field
from functools import cached_property

import numpy as np

from .series import (
    COEFF_TOL,
    AnalyticSeries,
    DerivativeSeries,
    as_series,
    derivative,
    evaluate,
    linear_combine,
)

DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999)
DEFAULT_ANGLES = 720
DEFAULT_EPS_COUNT = 64


@dataclass(frozen=True, eq=False)
class HarmonicPolyMap:
    """``f = h + conj(g)`` with analytic part ``h`` and co-analytic part ``g``.

    Both parts are stored at a common degree.  The normalization
    ``a_1 = 1`` is enforced unless ``check=False`` (used for deliberately
    unnormalized counterexamples such as ``2z``).
    """

    h: AnalyticSeries
    g: AnalyticSeries
    check: InitVar[bool] = True

    def __post_init__(self, check):
        h, g = as_series(self.h), as_series(self.g)
        n = max(h.degree, g.degree)
        object.__setattr__(self, "h", h.padded(n))
        object.__setattr__(self, "g", g.padded(n))
        if check and abs(self.h.coeffs[0] - 1) > COEFF_TOL:
            raise ValueError(f"analytic part must start with z (a_1 = 1), got {self.h.coeffs[0]}")

    @classmethod
    def from_coeffs(cls, a, b=None, check=True) -> "HarmonicPolyMap":
        """Build from ``a = [a_1, a_2, ...]`` and ``b = [b_1, b_2, ...]``."""
        b = [0j] if b is None or len(b) == 0 else b
        return cls(AnalyticSeries(a), AnalyticSeries(b), check=check)

    @classmethod
    def identity(cls, degree: int = 1) -> "HarmonicPolyMap":
        a = np.zeros(degree, dtype=complex)
        a[0] = 1
        return cls(AnalyticSeries(a), AnalyticSeries(np.zeros(degree)))

    @property
    def degree(self) -> int:
        return self.h.degree

    @property
    def a(self) -> np.ndarray:
        return self.h.coeffs

    @property
    def b(self) -> np.ndarray:
        return self.g.coeffs

    @property
    def b1(self) -> complex:
        return complex(self.g.coeffs[0])

    @property
    def is_analytic(self) -> bool:
        return bool(np.all(np.abs(self.g.coeffs) <= COEFF_TOL))

    @cached_property
    def dh(self) -> DerivativeSeries:
        return derivative(self.h)

    @cached_property
    def dg(self) -> DerivativeSeries:
        return derivative(self.g)

    @cached_property
    def d2h(self) -> DerivativeSeries:
        return derivative(self.dh)

    @cached_property
    def d2g(self) -> DerivativeSeries:
        return derivative(self.dg)

    def __call__(self, z):
        return eval_map(self, z)

    def __repr__(self):
        return f"HarmonicPolyMap(a={np.round(self.a, 6).tolist()}, b={np.round(self.b, 6).tolist()})"


@dataclass(frozen=True)
class DiskGrid:
    """Concentric circles with equispaced angles, starting at angle 0."""

    radii: tuple = DEFAULT_RADII
    angles: int = DEFAULT_ANGLES
    r_max: float = field(default=None)

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)
        if self.r_max is None:
            object.__setattr__(self, "r_max", radii[-1])
        if any(r1 <= r0 for r0, r1 in zip(radii, radii[1:])):
            raise ValueError("grid radii must be strictly increasing")
        if radii[0] <= 0 or radii[-1] != self.r_max or self.r_max > 1:
            raise ValueError("grid radii must lie in (0, r_max] with r_max <= 1 as last radius")
        if self.angles < 8:
            raise ValueError("a DiskGrid needs at least 8 angles")

    @classmethod
    def default(cls, r_max: float = DEFAULT_RADII[-1], angles: int = DEFAULT_ANGLES) -> "DiskGrid":
        radii = [r for r in DEFAULT_RADII if r < r_max] + [r_max]
        return cls(tuple(radii), angles, r_max)

    def thetas(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.angles) / self.angles

    def points(self) -> np.ndarray:
        """Complex sample points, shape ``(len(radii), angles)``."""
        return np.outer(self.radii, np.exp(1j * self.thetas()))


def eval_map(f: HarmonicPolyMap, z):
    return evaluate(f.h, z) + np.conj(evaluate(f.g, z))


def jacobian(f: HarmonicPolyMap, z):
    return np.abs(f.dh(z)) ** 2 - np.abs(f.dg(z)) ** 2


def epsilon_slice(f: HarmonicPolyMap, eps: complex) -> AnalyticSeries:
    """The analytic function ``h + eps*g`` for a unimodular ``eps``."""
    if abs(abs(eps) - 1) > COEFF_TOL:
        raise ValueError(f"|eps| must be 1, got {abs(eps)}")
    return linear_combine([(1, f.h), (eps, f.g)])


def unit_sweep(count: int = DEFAULT_EPS_COUNT) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(count) / count)


def theta_derivative(f: HarmonicPolyMap, z):
    """Derivative of ``f(r e^{i theta})`` with respect to ``theta``.

    Equals ``i (z h'(z) - conj(z g'(z)))``.
    """
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ValueError("theta derivative is undefined at z = 0")
    out = 1j * (z * f.dh(z) - np.conj(z * f.dg(z)))
    return out if np.ndim(out) else complex(out)
