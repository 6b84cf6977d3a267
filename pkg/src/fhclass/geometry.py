"""Geometric functionals of harmonic polynomial maps.

Growth envelopes, image area (closed form and quadrature), the Jacobian
bound, the boundary trace, and the angular functionals

    starlike:  d/dtheta arg f(r e^{i theta})
    convex:    d/dtheta arg (d/dtheta f(r e^{i theta}))

together with their grid infima (orders) and radius brackets.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .harmap import DEFAULT_ANGLES, DiskGrid, HarmonicPolyMap, eval_map, jacobian

log = logging.getLogger(__name__)

DEGENERATE_TOL = 1e-12
BOUND_TOL = 1e-9


class DegenerateError(ValueError):
    """A functional was requested where its denominator vanishes."""


@dataclass(frozen=True)
class GrowthCheck:
    ok: bool
    slack: float
    worst_point: complex


@dataclass(frozen=True)
class BoundaryTrace:
    points: np.ndarray  # M samples plus the first one repeated at the end
    length: float
    winding_about_origin: int

    @property
    def samples(self) -> int:
        return len(self.points) - 1


@dataclass(frozen=True)
class OrderEstimate:
    value: float
    argmin_point: complex
    skipped: int = 0

    @property
    def reported(self) -> float:
        return max(self.value, 0.0)


@dataclass(frozen=True)
class RadiusBracket:
    lo: float
    hi: float
    tol: float
    failing: tuple = ()

    def __contains__(self, r):
        return self.lo <= r <= self.hi


def growth_bounds(lam: float, r):
    """Envelope ``(r - lam r^2/2, r + lam r^2/2)`` for ``|f(z)|`` at ``|z| = r``."""
    return r - lam * r**2 / 2, r + lam * r**2 / 2


def check_growth(f: HarmonicPolyMap, lam: float, grid: DiskGrid | None = None) -> GrowthCheck:
    grid = grid or DiskGrid.default()
    z = grid.points()
    r = np.abs(z)
    mod = np.abs(eval_map(f, z))
    lower, upper = growth_bounds(lam, r)
    slack = np.minimum(mod - lower, upper - mod)
    k = np.unravel_index(np.argmin(slack), slack.shape)
    worst = float(slack[k])
    return GrowthCheck(worst >= -BOUND_TOL, worst, complex(z[k]))


def area_exact(f: HarmonicPolyMap) -> float:
    """Area of ``f(D)`` counted with multiplicity: ``pi sum n (|a_n|^2 - |b_n|^2)``."""
    n = np.arange(1, f.degree + 1, dtype=float)
    return float(np.pi * np.sum(n * (np.abs(f.a) ** 2 - np.abs(f.b) ** 2)))


def area_quadrature(f: HarmonicPolyMap, radial_nodes: int = 64, angular_nodes: int = 256) -> float:
    """Integral of the Jacobian over the disk.

    Gauss-Legendre nodes on ``r in [0, 1]`` carry the polar weight ``r``;
    the angle uses the trapezoid rule, exact for trigonometric
    polynomials of degree below ``angular_nodes``.
    """
    if radial_nodes < 16 or angular_nodes < 16:
        raise ValueError("need at least 16 nodes in each direction")
    x, w = np.polynomial.legendre.leggauss(radial_nodes)
    r = (x + 1) / 2
    wr = w / 2 * r
    theta = 2 * np.pi * np.arange(angular_nodes) / angular_nodes
    J = jacobian(f, np.outer(r, np.exp(1j * theta)))
    return float(np.sum(wr * J.sum(axis=1)) * (2 * np.pi / angular_nodes))


def jacobian_bound_margin(f: HarmonicPolyMap, grid: DiskGrid | None = None) -> float:
    """Smallest value of ``(1 + |z|)^2 - J_f(z)`` over the grid."""
    grid = grid or DiskGrid.default()
    z = grid.points()
    return float(np.min((1 + np.abs(z)) ** 2 - jacobian(f, z)))


def winding_number(points: np.ndarray, about: complex = 0j) -> int:
    """Winding number of a closed polyline (first point repeated last)."""
    w = np.asarray(points) - about
    if np.any(np.abs(w) < DEGENERATE_TOL):
        raise DegenerateError("curve passes through the winding centre")
    turns = np.sum(np.angle(w[1:] / w[:-1])) / (2 * np.pi)
    return int(np.rint(turns))


def boundary_trace(f: HarmonicPolyMap, M: int = 4096) -> BoundaryTrace:
    if M < 64:
        raise ValueError("boundary trace needs at least 64 samples")
    z = np.exp(2j * np.pi * np.arange(M) / M)
    w = eval_map(f, z)
    pts = np.append(w, w[0])
    length = float(np.sum(np.abs(np.diff(pts))))
    pts.setflags(write=False)
    return BoundaryTrace(pts, length, winding_number(pts))


def _starlike_values(f: HarmonicPolyMap, z):
    z = np.asarray(z, dtype=complex)
    w = eval_map(f, z)
    num = z * f.dh(z) - np.conj(z * f.dg(z))
    bad = np.abs(w) < DEGENERATE_TOL
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.real(num / w)
    return np.where(bad, np.nan, out)


def _convex_values(f: HarmonicPolyMap, z):
    z = np.asarray(z, dtype=complex)
    zh1, zg1 = z * f.dh(z), z * f.dg(z)
    num = zh1 + z**2 * f.d2h(z) + np.conj(zg1 + z**2 * f.d2g(z))
    den = zh1 - np.conj(zg1)
    bad = np.abs(den) < DEGENERATE_TOL
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.real(num / den)
    return np.where(bad, np.nan, out)


_FUNCTIONALS = {"starlike": _starlike_values, "convex": _convex_values}


def _functional(kind: str):
    try:
        return _FUNCTIONALS[kind]
    except KeyError:
        raise ValueError(f"kind must be 'starlike' or 'convex', got {kind!r}") from None


def _public(values_fn, f, z, what):
    if np.any(np.asarray(z) == 0):
        raise ValueError("functional is undefined at z = 0")
    out = values_fn(f, z)
    if np.ndim(out) == 0:
        if np.isnan(out):
            raise DegenerateError(f"{what} vanishes at z = {complex(z)}")
        return float(out)
    return out


def starlike_functional(f: HarmonicPolyMap, z):
    """``Re[(z h' - conj(z g')) / f]``, the angular speed of ``arg f``.

    Raises :class:`DegenerateError` at a scalar ``z`` where ``|f(z)|`` is
    below 1e-12; array input gets NaN at such points instead.
    """
    return _public(_starlike_values, f, z, "f(z)")


def convex_functional(f: HarmonicPolyMap, z):
    """Angular speed of the tangent direction ``arg(d f / d theta)``.

    Closed form ``Re[(zh' + z^2 h'' + conj(zg' + z^2 g'')) / (zh' - conj(zg'))]``.
    Degenerate points (``|d f / d theta| < 1e-12``) behave as in
    :func:`starlike_functional`.
    """
    return _public(_convex_values, f, z, "d f / d theta")


def order_estimate(f: HarmonicPolyMap, kind: str, grid: DiskGrid | None = None) -> OrderEstimate:
    """Grid infimum of the chosen functional, an upper estimate of the true order."""
    grid = grid or DiskGrid.default()
    z = grid.points()
    vals = _functional(kind)(f, z)
    bad = np.isnan(vals)
    if bad.all():
        raise DegenerateError(f"{kind} functional is degenerate on the whole grid")
    if bad.any():
        log.info("order_estimate(%s): skipped %d degenerate grid points", kind, int(bad.sum()))
    k = np.unravel_index(np.nanargmin(vals), vals.shape)
    return OrderEstimate(float(vals[k]), complex(z[k]), int(bad.sum()))


def _circle_status(f, fn, r, angles):
    """True if every nondegenerate sample on ``|z| = r`` is positive, None if all are degenerate."""
    vals = fn(f, r * np.exp(2j * np.pi * np.arange(angles) / angles))
    vals = vals[~np.isnan(vals)]
    if vals.size == 0:
        return None
    return bool(np.all(vals > 0))


def radius_bracket(f: HarmonicPolyMap, kind: str, tol: float = 1e-3, r_max: float = 0.999,
                   angles: int = DEFAULT_ANGLES, scan_step: float = 0.01) -> RadiusBracket:
    """Bracket the first radius at which the functional stops being positive.

    Circles ``r = scan_step, 2 scan_step, ..., r_max`` are scanned
    outward and every failing circle is recorded.  Between the last
    passing circle and the first failing one the bracket is bisected
    until narrower than ``tol``.  No monotonicity in ``r`` is assumed:
    ``lo`` is only certified through the circles actually sampled.
    """
    if tol < 1e-4:
        raise ValueError("tol must be at least 1e-4")
    fn = _functional(kind)
    radii = np.round(np.arange(1, int(np.floor(r_max / scan_step)) + 1) * scan_step, 12)
    radii = np.append(radii[radii < r_max], r_max)

    seen_value = False
    failing = []
    lo = 0.0
    for r in radii:
        status = _circle_status(f, fn, r, angles)
        if status is None:
            log.info("radius_bracket(%s): circle r=%g fully degenerate", kind, r)
            continue
        seen_value = True
        if not status:
            failing.append(float(r))
        elif not failing:
            lo = float(r)
    if not seen_value:
        raise DegenerateError(f"{kind} functional is degenerate on every scanned circle")
    if not failing:
        return RadiusBracket(float(r_max), float(r_max), tol)

    hi = failing[0]
    while hi - lo > tol:
        mid = (lo + hi) / 2
        status = _circle_status(f, fn, mid, angles)
        if status is False:
            hi = mid
        else:
            lo = mid
    return RadiusBracket(lo, hi, tol, tuple(failing))
