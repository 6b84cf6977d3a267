"""Membership tests, extremal maps and random members of F_H(lambda).

A harmonic map ``f = h + conj(g)`` belongs to ``F_H(lambda)`` when its
defect ``D(z) = |h'(z) - 1| + |g'(z)|`` stays below ``lambda`` on the open
unit disk; the pinned subclass additionally requires ``g'(0) = 0``.

``D`` is a sum of moduli of analytic functions, hence subharmonic, so its
supremum over the disk is read off the unit circle.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .harmap import HarmonicPolyMap, unit_sweep
from .series import COEFF_TOL

SCAN_ANGLES = 2048
REFINE_XTOL = 1e-10
VERDICT_BAND = 1e-9
NECESSARY_TOL = 1e-9


class Verdict(str, Enum):
    MEMBER = "member"
    NON_MEMBER = "non_member"
    BOUNDARY_CASE = "boundary_case"


class Method(str, Enum):
    NUMERIC_SUP = "numeric_sup"
    COEFF_SUFFICIENT = "coeff_sufficient"
    COEFF_NECESSARY_VIOLATION = "coeff_necessary_violation"


@dataclass(frozen=True)
class ClassSpec:
    """Parameter ``lam`` in (0, 1]; ``pinned`` selects the ``g'(0) = 0`` subclass.

    Only ``lam = 1`` may be unpinned.
    """

    lam: float = 1.0
    pinned: bool = True

    def __post_init__(self):
        if not 0 < self.lam <= 1:
            raise ValueError(f"lambda must lie in (0, 1], got {self.lam}")
        if self.lam < 1 and not self.pinned:
            raise ValueError("lambda < 1 is only supported for the pinned class")


@dataclass(frozen=True)
class Violation:
    constraint: str
    value: float
    bound: float
    n: int | None = None

    def __str__(self):
        where = f" (n={self.n})" if self.n is not None else ""
        return f"{self.constraint}{where}: {self.value:.12g} > {self.bound:.12g}"


@dataclass(frozen=True)
class MembershipReport:
    verdict: Verdict
    defect_sup: float
    margin: float
    witness: complex
    method: Method
    boundary: bool = False
    violations: tuple = ()
    notes: tuple = ()

    @property
    def is_member(self) -> bool:
        return self.verdict is Verdict.MEMBER

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "defect_sup": self.defect_sup,
            "margin": self.margin,
            "witness": [self.witness.real, self.witness.imag],
            "method": self.method.value,
            "boundary_case": self.boundary,
            "violations": [asdict(v) for v in self.violations],
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class NeighborhoodDistance:
    value: float


@dataclass(frozen=True)
class SliceSweep:
    sup: float
    witness: complex
    eps: complex


def defect(f: HarmonicPolyMap, z):
    return np.abs(f.dh(z) - 1) + np.abs(f.dg(z))


def boundary_sup(fun, angle_count: int = SCAN_ANGLES, xtol: float = REFINE_XTOL,
                 band: float = 1e-2, max_peaks: int = 8) -> tuple[float, complex]:
    """Maximum of a real function on the unit circle.

    ``fun`` takes complex points.  A coarse equispaced scan picks the
    local maxima within a relative ``band`` of the best sample; each is
    then polished by a bounded scalar search over one grid spacing.
    """
    step = 2 * np.pi / angle_count
    thetas = step * np.arange(angle_count)
    vals = np.asarray(fun(np.exp(1j * thetas)), dtype=float)
    k_best = int(np.argmax(vals))
    best, best_theta = float(vals[k_best]), float(thetas[k_best])

    peaks = np.flatnonzero((vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1)))
    peaks = peaks[vals[peaks] >= best - band * max(abs(best), 1e-300)]
    peaks = peaks[np.argsort(-vals[peaks], kind="stable")][:max_peaks]
    for k in peaks:
        t0 = thetas[k]
        res = minimize_scalar(lambda t: -float(fun(np.exp(1j * t))), bounds=(t0 - step, t0 + step),
                              method="bounded", options={"xatol": xtol})
        if -res.fun > best:
            best, best_theta = float(-res.fun), float(res.x)
    return best, complex(np.exp(1j * best_theta))


def sup_defect(f: HarmonicPolyMap, angle_count: int = SCAN_ANGLES) -> tuple[float, complex]:
    """Largest defect over ``angle_count`` equispaced points of the unit circle."""
    z = np.exp(2j * np.pi * np.arange(angle_count) / angle_count)
    d = defect(f, z)
    k = int(np.argmax(d))
    return float(d[k]), complex(z[k])


def refined_sup_defect(f: HarmonicPolyMap) -> tuple[float, complex]:
    return boundary_sup(lambda z: defect(f, z))


def _defect_is_constant(f: HarmonicPolyMap) -> bool:
    return f.dh.is_constant and f.dg.is_constant


def _check_finite(f: HarmonicPolyMap):
    if not (np.all(np.isfinite(f.a)) and np.all(np.isfinite(f.b))):
        raise ValueError("map has non-finite coefficients")


def is_member_numeric(f: HarmonicPolyMap, spec: ClassSpec,
                      resolve_boundary: bool = True) -> MembershipReport:
    """Decide membership from the refined boundary supremum of the defect.

    A supremum inside the ``+-1e-9`` band around lambda is a boundary case.
    When ``resolve_boundary`` is set it is settled by the maximum
    principle: a non-constant defect stays strictly below its boundary
    maximum inside the disk, a constant one does not.
    """
    _check_finite(f)
    lam = spec.lam
    S, witness = refined_sup_defect(f)
    notes = []
    boundary = False
    if spec.pinned and abs(f.b1) > COEFF_TOL:
        verdict = Verdict.NON_MEMBER
        notes.append(f"pinned class requires b1 = 0, got |b1| = {abs(f.b1):.6g}")
    elif S < lam - VERDICT_BAND:
        verdict = Verdict.MEMBER
    elif S > lam + VERDICT_BAND:
        verdict = Verdict.NON_MEMBER
    else:
        boundary = True
        if not resolve_boundary:
            verdict = Verdict.BOUNDARY_CASE
        elif _defect_is_constant(f):
            verdict = Verdict.NON_MEMBER
            notes.append("defect is constant and equals lambda")
        else:
            verdict = Verdict.MEMBER
            notes.append("boundary supremum equals lambda; defect non-constant so strict inside")
    return MembershipReport(verdict, S, lam - S, witness, Method.NUMERIC_SUP, boundary,
                            notes=tuple(notes))


def weighted_coeff_sum(f: HarmonicPolyMap, power: int = 1) -> float:
    """``sum_{n>=2} n**power (|a_n| + |b_n|)``."""
    n = np.arange(2, f.degree + 1, dtype=float)
    return float(np.sum(n**power * (np.abs(f.a[1:]) + np.abs(f.b[1:]))))


def coeff_sufficient(f: HarmonicPolyMap, lam: float) -> bool:
    if not 0 < lam <= 1:
        raise ValueError("lambda must lie in (0, 1]")
    if lam < 1 and abs(f.b1) > COEFF_TOL:
        return False
    return weighted_coeff_sum(f) <= lam - abs(f.b1) + COEFF_TOL


def coeff_necessary_checks(f: HarmonicPolyMap, spec: ClassSpec,
                           tol: float = NECESSARY_TOL) -> list[Violation]:
    """Coefficient inequalities every member satisfies; any failure rules membership out."""
    lam = spec.lam
    a, b = np.abs(f.a), np.abs(f.b)
    b1 = b[0]
    n = np.arange(1, f.degree + 1, dtype=float)
    out = []

    if spec.pinned and b1 > COEFF_TOL:
        out.append(Violation("b1 = 0 (pinned)", b1, 0.0, 1))

    sq = float(np.sum(n[1:] ** 2 * (a[1:] ** 2 + b[1:] ** 2)))
    sq_bound = 1 - b1**2 if lam == 1 else lam**2
    if sq > sq_bound + tol:
        out.append(Violation("sum n^2(|a_n|^2+|b_n|^2)", sq, sq_bound))

    for k in range(1, f.degree):
        m = k + 1
        if a[k] > lam / m + tol:
            out.append(Violation("|a_n| <= lambda/n", a[k], lam / m, m))
        if b[k] > lam / m + tol:
            out.append(Violation("|b_n| <= lambda/n", b[k], lam / m, m))
        if spec.pinned and a[k] + b[k] > 1 / m + tol:
            out.append(Violation("|a_n|+|b_n| <= 1/n", a[k] + b[k], 1 / m, m))
        if b1 <= COEFF_TOL and abs(a[k] - b[k]) > 1 / m + tol:
            out.append(Violation("||a_n|-|b_n|| <= 1/n", abs(a[k] - b[k]), 1 / m, m))
    return out


def classify(f: HarmonicPolyMap, spec: ClassSpec, resolve_boundary: bool = True) -> MembershipReport:
    """Membership with coefficient shortcuts reported alongside the numeric verdict.

    A necessary-condition failure decides non-membership outright; a
    numeric member that also meets the coefficient sufficient condition
    is labelled with that method.
    """
    num = is_member_numeric(f, spec, resolve_boundary)
    violations = tuple(coeff_necessary_checks(f, spec))
    if violations:
        return MembershipReport(Verdict.NON_MEMBER, num.defect_sup, num.margin, num.witness,
                                Method.COEFF_NECESSARY_VIOLATION, num.boundary, violations, num.notes)
    method = num.method
    if num.verdict is Verdict.MEMBER and coeff_sufficient(f, spec.lam):
        method = Method.COEFF_SUFFICIENT
    return MembershipReport(num.verdict, num.defect_sup, num.margin, num.witness, method,
                            num.boundary, (), num.notes)


def slice_sweep_sup(f: HarmonicPolyMap, eps_count: int = 64,
                    angle_count: int = SCAN_ANGLES) -> SliceSweep:
    """Joint maximum of ``|F_eps'(z) - 1|`` over unit ``z`` and unit ``eps``.

    ``F_eps = h + eps g`` is the analytic slice.  The sweep evaluates
    ``eps_count`` slices on the coarse circle and polishes the best
    candidates in both angles at once, without using the closed-form
    choice of ``eps`` that aligns the two terms.
    """
    eps = unit_sweep(eps_count)
    thetas = 2 * np.pi * np.arange(angle_count) / angle_count
    z = np.exp(1j * thetas)
    H = f.dh(z) - 1
    G = f.dg(z)
    V = np.abs(H[None, :] + eps[:, None] * G[None, :])
    col = V.max(axis=0)
    arg_eps = V.argmax(axis=0)
    best = float(col.max())

    peaks = np.flatnonzero((col >= np.roll(col, 1)) & (col >= np.roll(col, -1)))
    peaks = peaks[col[peaks] >= best * (1 - 1e-2)]
    peaks = peaks[np.argsort(-col[peaks], kind="stable")][:8]

    def neg(x):
        zz = np.exp(1j * x[0])
        return -abs(f.dh(zz) - 1 + np.exp(1j * x[1]) * f.dg(zz))

    k0 = int(np.argmax(col))
    best_x = (thetas[k0], 2 * np.pi * arg_eps[k0] / eps_count)
    for k in peaks:
        x0 = np.array([thetas[k], 2 * np.pi * arg_eps[k] / eps_count])
        simplex = np.array([x0, x0 + [2 * np.pi / angle_count, 0], x0 + [0, 2 * np.pi / eps_count]])
        res = minimize(neg, x0, method="Nelder-Mead",
                       options={"initial_simplex": simplex, "xatol": 1e-11, "fatol": 1e-15,
                                "maxiter": 4000})
        if -res.fun > best:
            best, best_x = float(-res.fun), tuple(res.x)
    return SliceSweep(best, complex(np.exp(1j * best_x[0])), complex(np.exp(1j * best_x[1])))


def extremal(m: int, lam: float = 1.0, side: str = "coanalytic", N: int | None = None) -> HarmonicPolyMap:
    """``z + (lam/m) z^m`` (analytic) or ``z + (lam/m) conj(z)^m`` (coanalytic)."""
    if m < 2:
        raise ValueError("extremal power must be at least 2")
    N = m if N is None else N
    if m > N:
        raise ValueError(f"power m={m} exceeds degree N={N}")
    a = np.zeros(N, dtype=complex)
    b = np.zeros(N, dtype=complex)
    a[0] = 1
    if side == "analytic":
        a[m - 1] = lam / m
    elif side == "coanalytic":
        b[m - 1] = lam / m
    else:
        raise ValueError(f"side must be 'analytic' or 'coanalytic', got {side!r}")
    return HarmonicPolyMap.from_coeffs(a, b)


def _complex_normal(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def random_coeff_ball(lam: float, degree: int, seed: int, power: int = 1, pinned: bool = True,
                      tau: float | None = None) -> HarmonicPolyMap:
    """Random map with ``|b_1| + sum_{n>=2} n**power (|a_n| + |b_n|) = tau * lam``.

    Draw order from ``numpy.random.default_rng(seed)``: tau (uniform in
    (0, 1]), keep-probability p (uniform in [0.2, 1)), complex normal a_n
    then b_n for n = 2..degree, the keep mask for a then b, and finally
    b_1 when unpinned.  At least one higher coefficient is always kept.
    """
    if degree < 2:
        raise ValueError("degree must be at least 2")
    rng = np.random.default_rng(seed)
    t = 1.0 - rng.random()
    if tau is not None:
        t = tau
    p = rng.uniform(0.2, 1.0)
    a = _complex_normal(rng, degree - 1)
    b = _complex_normal(rng, degree - 1)
    keep_a = rng.random(degree - 1) < p
    keep_b = rng.random(degree - 1) < p
    if not (keep_a.any() or keep_b.any()):
        keep_a[0] = True
    a, b = a * keep_a, b * keep_b
    b1 = 0j if pinned else complex(_complex_normal(rng, 1)[0])

    n = np.arange(2, degree + 1, dtype=float)
    total = abs(b1) + np.sum(n**power * (np.abs(a) + np.abs(b)))
    scale = t * lam / total
    return HarmonicPolyMap.from_coeffs(np.concatenate(([1], scale * a)),
                                       np.concatenate(([scale * b1], scale * b)))


def random_member_coeff(spec: ClassSpec, degree: int, seed: int,
                        tau: float | None = None) -> HarmonicPolyMap:
    """Member built from the coefficient sufficient condition."""
    return random_coeff_ball(spec.lam, degree, seed, power=1, pinned=spec.pinned, tau=tau)


def random_member_boundary(spec: ClassSpec, degree: int, seed: int,
                           tau: float | None = None) -> HarmonicPolyMap:
    """Member whose defect supremum is ``tau * lam`` by construction.

    Random polynomials ``p`` (with ``p(0) = 0``) and ``q`` of degree
    ``degree - 1`` are scaled by the boundary maximum ``M`` of
    ``|p| + |q|``; then ``h' = 1 + tau lam p / M`` and
    ``g' = tau lam q / M``.  Draw order: tau (uniform in [1e-6, 1)),
    decay rho (uniform in [0.3, 1]), p_1..p_{d-1}, q_0..q_{d-1}.
    ``q_0`` is discarded for pinned classes.
    """
    if degree < 2:
        raise ValueError("degree must be at least 2")
    rng = np.random.default_rng(seed)
    t = rng.uniform(1e-6, 1.0)
    if tau is not None:
        t = tau
    rho = rng.uniform(0.3, 1.0)
    k = np.arange(degree)
    p = _complex_normal(rng, degree) * rho**k
    q = _complex_normal(rng, degree) * rho**k
    p[0] = 0
    if spec.pinned:
        q[0] = 0
    p_fun = np.polynomial.Polynomial(p)
    q_fun = np.polynomial.Polynomial(q)
    M, _ = boundary_sup(lambda z: np.abs(p_fun(z)) + np.abs(q_fun(z)))
    scale = t * spec.lam / M
    a = np.concatenate(([1], scale * p[1:] / (k[1:] + 1)))
    b = scale * q / (k + 1)
    return HarmonicPolyMap.from_coeffs(a, b)


def random_member(spec: ClassSpec, degree: int, seed: int, kind: str = "boundary",
                  tau: float | None = None) -> HarmonicPolyMap:
    if kind == "coeff":
        return random_member_coeff(spec, degree, seed, tau)
    if kind == "boundary":
        return random_member_boundary(spec, degree, seed, tau)
    raise ValueError(f"unknown generator {kind!r}")


def nbhd_distance(f: HarmonicPolyMap, F: HarmonicPolyMap) -> NeighborhoodDistance:
    """``sum_{n>=2} n(|a_n - A_n| + |b_n - B_n|) + |b_1 - B_1|``."""
    N = max(f.degree, F.degree)
    da = f.h.padded(N).coeffs - F.h.padded(N).coeffs
    db = f.g.padded(N).coeffs - F.g.padded(N).coeffs
    n = np.arange(2, N + 1, dtype=float)
    return NeighborhoodDistance(float(np.sum(n * (np.abs(da[1:]) + np.abs(db[1:]))) + abs(db[0])))


def random_neighbor(center: HarmonicPolyMap, delta: float, degree: int, seed: int,
                    pinned: bool = True) -> HarmonicPolyMap:
    """Random map at neighborhood distance ``tau * delta`` from ``center``.

    The perturbation comes from :func:`random_coeff_ball` (which draws
    tau); with ``pinned`` the perturbation leaves ``b_1`` untouched.
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    N = max(center.degree, degree)
    bump = random_coeff_ball(1.0, N, seed, power=1, pinned=pinned)
    a = center.h.padded(N).coeffs + delta * np.concatenate(([0], bump.a[1:]))
    b = center.g.padded(N).coeffs + delta * bump.b
    return HarmonicPolyMap.from_coeffs(a, b)


@dataclass(frozen=True)
class Sample:
    f: HarmonicPolyMap
    lam: float
    kind: str
    seed: int


def member_stream(seed: int, count: int, lam: float | None = None,
                  kinds: tuple = ("coeff", "boundary"), degree_range: tuple = (2, 12),
                  lam_range: tuple = (0.05, 1.0), stream: int = 0):
    """Deterministic sequence of pinned members.

    ``numpy.random.default_rng([seed, stream])`` supplies, per sample,
    lambda (unless fixed), the degree, and a 63-bit seed for the
    generator; generators alternate through ``kinds``.
    """
    rng = np.random.default_rng([seed, stream])
    for i in range(count):
        lam_i = lam if lam is not None else float(rng.uniform(*lam_range))
        lam_i = min(lam_i, 1.0)
        degree = int(rng.integers(degree_range[0], degree_range[1] + 1))
        sub = int(rng.integers(2**63 - 1))
        kind = kinds[i % len(kinds)]
        yield Sample(random_member(ClassSpec(lam_i), degree, sub, kind), lam_i, kind, sub)
