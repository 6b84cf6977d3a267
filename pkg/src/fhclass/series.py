"""Truncated power series vanishing at the origin.

An :class:`AnalyticSeries` stores the coefficients ``c_1 .. c_N`` of
``s(z) = c_1 z + c_2 z**2 + ... + c_N z**N``.  Differentiating such a
series produces a constant term, so derivatives live in a separate
:class:`DerivativeSeries` whose slot 0 holds that constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

COEFF_TOL = 1e-12
DEFAULT_DEGREE = 64


def _frozen_array(values) -> np.ndarray:
    arr = np.array(values, dtype=complex).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise ValueError("series coefficients must be finite")
    arr.setflags(write=False)
    return arr


def _horner(coeffs: np.ndarray, z):
    """Evaluate ``sum coeffs[k] z**k`` by nested multiplication."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc if acc.ndim else complex(acc)


@dataclass(frozen=True, eq=False)
class AnalyticSeries:
    """Coefficients ``c_1..c_N``; ``coeffs[n - 1]`` multiplies ``z**n``."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.coeffs)
        if arr.size < 1:
            raise ValueError("an AnalyticSeries needs at least one coefficient")
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return int(self.coeffs.size)

    def coeff(self, n: int) -> complex:
        """Coefficient of ``z**n`` (zero beyond the stored degree)."""
        if n < 1:
            raise IndexError("AnalyticSeries coefficients start at n = 1")
        return complex(self.coeffs[n - 1]) if n <= self.degree else 0j

    def padded(self, degree: int) -> "AnalyticSeries":
        if degree < self.degree:
            raise ValueError("padding cannot shrink a series")
        out = np.zeros(degree, dtype=complex)
        out[: self.degree] = self.coeffs
        return AnalyticSeries(out)

    def truncated(self, degree: int) -> "AnalyticSeries":
        return AnalyticSeries(self.coeffs[:degree])

    def __call__(self, z):
        return evaluate(self, z)

    def __repr__(self):
        return f"AnalyticSeries({np.array2string(self.coeffs, precision=6)})"


@dataclass(frozen=True, eq=False)
class DerivativeSeries:
    """Polynomial with an explicit constant term: ``coeffs[k]`` multiplies ``z**k``."""

    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _frozen_array(self.coeffs))

    @property
    def is_constant(self) -> bool:
        return bool(np.all(np.abs(self.coeffs[1:]) <= COEFF_TOL))

    def __call__(self, z):
        return evaluate_derivative(self, z)


def evaluate(s: AnalyticSeries, z):
    """Value of ``s`` at ``z`` (scalar or array), computed with Horner's scheme."""
    return _horner(np.concatenate(([0j], s.coeffs)), z)


def evaluate_derivative(d: DerivativeSeries, z):
    return _horner(d.coeffs, z)


def derivative(s):
    """Term-wise derivative.

    ``AnalyticSeries [c_1..c_N]`` maps to the polynomial
    ``c_1 + 2 c_2 z + ... + N c_N z**(N-1)``; a ``DerivativeSeries`` is
    differentiated again in the same representation.
    """
    if isinstance(s, AnalyticSeries):
        n = np.arange(1, s.degree + 1)
        return DerivativeSeries(n * s.coeffs)
    if isinstance(s, DerivativeSeries):
        if s.coeffs.size <= 1:
            return DerivativeSeries([0j])
        k = np.arange(1, s.coeffs.size)
        return DerivativeSeries(k * s.coeffs[1:])
    raise TypeError(f"cannot differentiate {type(s).__name__}")


def antiderivative(d: DerivativeSeries) -> AnalyticSeries:
    """Inverse of :func:`derivative` with zero constant of integration."""
    k = np.arange(1, d.coeffs.size + 1)
    return AnalyticSeries(d.coeffs / k)


def hadamard(s: AnalyticSeries, t: AnalyticSeries) -> AnalyticSeries:
    """Coefficient-wise product, truncated to the shorter degree."""
    n = min(s.degree, t.degree)
    return AnalyticSeries(s.coeffs[:n] * t.coeffs[:n])


def integral_hadamard(s: AnalyticSeries, t: AnalyticSeries) -> AnalyticSeries:
    """Coefficient-wise product divided by the index: ``s_n t_n / n``."""
    n = min(s.degree, t.degree)
    return AnalyticSeries(s.coeffs[:n] * t.coeffs[:n] / np.arange(1, n + 1))


def linear_combine(terms: Iterable[tuple[complex, AnalyticSeries]]) -> AnalyticSeries:
    terms = list(terms)
    if not terms:
        raise ValueError("linear_combine needs at least one term")
    degree = max(s.degree for _, s in terms)
    out = np.zeros(degree, dtype=complex)
    for w, s in terms:
        out[: s.degree] += complex(w) * s.coeffs
    return AnalyticSeries(out)


def ones(N: int = DEFAULT_DEGREE) -> AnalyticSeries:
    """Degree-N truncation of z/(1 - z), the identity for :func:`hadamard`."""
    return named_series("half_plane", N)


def named_series(kind: str, N: int = DEFAULT_DEGREE, m: int | None = None,
                 c: complex | None = None) -> AnalyticSeries:
    """Standard series truncated at degree ``N``.

    ``half_plane``  z/(1 - z), all coefficients 1
    ``koebe``       z/(1 - z)**2, coefficient n is n
    ``log_convex``  -log(1 - z), coefficient n is 1/n
    ``monomial``    z + c z**m
    """
    if N < 1:
        raise ValueError("degree must be positive")
    n = np.arange(1, N + 1, dtype=float)
    if kind == "half_plane":
        return AnalyticSeries(np.ones(N))
    if kind == "koebe":
        return AnalyticSeries(n)
    if kind == "log_convex":
        return AnalyticSeries(1.0 / n)
    if kind == "monomial":
        if m is None or c is None:
            raise ValueError("monomial needs both m and c")
        if not 1 <= m <= N:
            raise ValueError(f"monomial power m={m} outside 1..{N}")
        out = np.zeros(N, dtype=complex)
        out[0] = 1.0
        out[m - 1] += c
        return AnalyticSeries(out)
    raise ValueError(f"unknown series kind {kind!r}")


def allclose(s: AnalyticSeries, t: AnalyticSeries, tol: float = COEFF_TOL) -> bool:
    """Coefficient equality up to ``tol``; the shorter series is zero-padded."""
    n = max(s.degree, t.degree)
    return bool(np.all(np.abs(s.padded(n).coeffs - t.padded(n).coeffs) <= tol))


def as_series(values: Sequence[complex] | AnalyticSeries) -> AnalyticSeries:
    return values if isinstance(values, AnalyticSeries) else AnalyticSeries(values)
