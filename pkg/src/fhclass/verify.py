"""Sampled verification suites for the class F_H(lambda).

Each suite draws members from :func:`fhclass.classes.member_stream`,
evaluates one family of inequalities, and reports violations together
with the worst slack (positive means the inequality held everywhere).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import classes, geometry, products
from .classes import ClassSpec, Verdict, extremal, is_member_numeric, member_stream
from .harmap import DiskGrid, HarmonicPolyMap
from .series import named_series

SUITES = ("coefficients", "growth", "area", "jacobian", "boundary", "orders", "products",
          "neighborhoods")
ORDER_TOL = 0.02
SQRT5_LAM = 2 / math.sqrt(5)


@dataclass
class SuiteEntry:
    theorem: str
    anchor: str
    samples: int = 0
    violations: int = 0
    worst_margin: float = math.inf
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, margin: float, ok: bool | None = None):
        """Count one sample; ``ok`` defaults to ``margin >= 0``."""
        self.samples += 1
        self.worst_margin = min(self.worst_margin, float(margin))
        if not (margin >= 0 if ok is None else ok):
            self.violations += 1

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "anchor": self.anchor,
            "samples": self.samples,
            "violations": self.violations,
            "worst_margin": self.worst_margin,
            "elapsed": round(self.elapsed, 6),
            "passed": self.passed,
            "details": self.details,
        }


@dataclass
class VerifyReport:
    seed: int
    entries: list

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


class _Timer:
    def __init__(self, entry):
        self.entry = entry

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.entry

    def __exit__(self, *exc):
        self.entry.elapsed += time.perf_counter() - self.t0


def _member_margin(report) -> float:
    return report.margin if report.verdict is Verdict.MEMBER else -abs(report.margin)


def suite_coefficients(seed, n, grid):
    nec = SuiteEntry("coeff-necessary", "members: sum n^2(|a_n|^2+|b_n|^2) <= lambda^2, |a_n|,|b_n| <= lambda/n")
    suf = SuiteEntry("coeff-sufficient", "sum n(|a_n|+|b_n|) <= lambda - |b_1| implies membership")
    ext = SuiteEntry("coeff-extremal", "z + (lambda/m) z^m and its co-analytic twin are members with equality")
    con = SuiteEntry("coeff-contrapositive", "inflated extremals fail both the necessary checks and the numeric test")
    sl = SuiteEntry("slice-equivalence", "f in F_H^0(lambda) iff every slice h + eps g lies in F(lambda)")
    with _Timer(nec):
        for s in member_stream(seed, n, stream=1):
            spec = ClassSpec(s.lam)
            n_idx = np.arange(2, s.f.degree + 1)
            sq = float(np.sum(n_idx**2 * (np.abs(s.f.a[1:]) ** 2 + np.abs(s.f.b[1:]) ** 2)))
            nec.record(s.lam**2 - sq, ok=not classes.coeff_necessary_checks(s.f, spec))
    with _Timer(suf):
        for s in member_stream(seed, n, kinds=("coeff",), stream=2):
            rep = is_member_numeric(s.f, ClassSpec(s.lam))
            suf.record(_member_margin(rep), ok=classes.coeff_sufficient(s.f, s.lam) and rep.is_member)
    with _Timer(ext), _Timer(con):
        for m in range(2, 7):
            for side in ("analytic", "coanalytic"):
                for lam in (0.5, 1.0):
                    f = extremal(m, lam, side)
                    spec = ClassSpec(lam)
                    rep = is_member_numeric(f, spec)
                    ext.record(_member_margin(rep), ok=rep.is_member and not classes.coeff_necessary_checks(f, spec))
                    g = HarmonicPolyMap.from_coeffs(np.concatenate(([1], 1.01 * f.a[1:])), 1.01 * f.b)
                    bad = is_member_numeric(g, spec)
                    con.record(-bad.margin, ok=(not bad.is_member) and bool(classes.coeff_necessary_checks(g, spec)))
    with _Timer(sl):
        for s in member_stream(seed, n, stream=3):
            sweep = classes.slice_sweep_sup(s.f)
            sup, _ = classes.refined_sup_defect(s.f)
            sl.record(1e-6 - abs(sweep.sup - sup))
    return [nec, suf, ext, con, sl]


def suite_growth(seed, n, grid):
    e = SuiteEntry("growth", "|z| - lambda|z|^2/2 <= |f(z)| <= |z| + lambda|z|^2/2")
    with _Timer(e):
        for s in member_stream(seed, n, stream=4):
            e.record(geometry.check_growth(s.f, s.lam, grid).slack + geometry.BOUND_TOL)
        sharp = geometry.check_growth(extremal(2), 1.0, grid)
        e.details["extremal_slack"] = sharp.slack
    return [e]


def suite_area(seed, n, grid):
    mx = SuiteEntry("area-max", "area <= pi(1 + lambda^2/2), 3pi/2 at lambda = 1")
    qd = SuiteEntry("area-quadrature", "closed-form area equals the Jacobian integral (rel 1e-6)")
    ex = SuiteEntry("area-extremes", "z + z^2/2 has area 3pi/2, z + conj(z)^2/2 has area pi/2")
    with _Timer(mx), _Timer(qd):
        for s in member_stream(seed, n, degree_range=(2, 16), stream=5):
            A = geometry.area_exact(s.f)
            mx.record(math.pi * (1 + s.lam**2 / 2) + 1e-9 - A)
            Aq = geometry.area_quadrature(s.f)
            qd.record(1e-6 - abs(Aq - A) / A)
    with _Timer(ex):
        for f, want in ((extremal(2, 1.0, "analytic"), 1.5 * math.pi), (extremal(2), 0.5 * math.pi)):
            A = geometry.area_exact(f)
            ex.record(1e-12 - abs(A - want))
            ex.record(1e-6 - abs(geometry.area_quadrature(f) - want) / want)
        ex.details["max_area"] = geometry.area_exact(extremal(2, 1.0, "analytic"))
        ex.details["min_area"] = geometry.area_exact(extremal(2))
    return [mx, qd, ex]


def suite_jacobian(seed, n, grid):
    e = SuiteEntry("jacobian-bound", "J_f(z) <= (1 + |z|)^2")
    with _Timer(e):
        for s in member_stream(seed, n, stream=6):
            e.record(geometry.jacobian_bound_margin(s.f, grid) + geometry.BOUND_TOL)
    return [e]


def suite_boundary(seed, n, grid):
    ln = SuiteEntry("boundary-length", "boundary curve length <= 2pi(1 + lambda), 4pi at lambda = 1")
    wd = SuiteEntry("boundary-winding", "boundary curve winds once about the origin")
    ex = SuiteEntry("boundary-extremal", "boundary of z + conj(z)^2/2 has length 8")
    with _Timer(ln), _Timer(wd):
        for s in member_stream(seed, n, stream=7):
            tr = geometry.boundary_trace(s.f, 4096)
            ln.record(2 * math.pi * (1 + s.lam) + 1e-6 - tr.length)
            wd.record(0.0, ok=tr.winding_about_origin == 1)
    with _Timer(ex):
        L = geometry.boundary_trace(extremal(2), 4096).length
        ex.record(1e-3 - abs(L - 8))
        ex.details["length"] = L
    return [ln, wd, ex]


def suite_orders(seed, n, grid):
    so = SuiteEntry("starlike-order", "sum n(|a_n|+|b_n|) = t <= 1 gives starlike order 2(1-t)/(2+t)")
    r0 = SuiteEntry("starlike-radius", "F_H^0 members are starlike on |z| <= 0.974")
    s5 = SuiteEntry("starlike-2/sqrt5", "F_H^0(2/sqrt5) members are starlike")
    ext = SuiteEntry("extremal-orders", "z + lambda conj(z)^2/2 has starlike order 2(1-lambda)/(2+lambda)")
    cr = SuiteEntry("convexity-radius", "radius of convexity 1/2, sharp for z + conj(z)^2/2")
    inner = DiskGrid(tuple(r for r in grid.radii if r <= 0.974), grid.angles)
    with _Timer(so):
        for s in member_stream(seed, n, kinds=("coeff",), stream=8):
            t = classes.weighted_coeff_sum(s.f)
            bound = 2 * (1 - t) / (2 + t) - ORDER_TOL
            so.record(geometry.order_estimate(s.f, "starlike", grid).value - bound)
    with _Timer(r0):
        for s in member_stream(seed, n, lam=1.0, stream=9):
            r0.record(geometry.order_estimate(s.f, "starlike", inner).value)
    with _Timer(s5):
        for s in member_stream(seed, n, lam=SQRT5_LAM, stream=10):
            s5.record(geometry.order_estimate(s.f, "starlike", grid).value + 1e-6)
    with _Timer(ext):
        for lam in (0.5, 1.0):
            est = geometry.order_estimate(extremal(2, lam), "starlike", grid).value
            ext.record(ORDER_TOL - abs(est - 2 * (1 - lam) / (2 + lam)))
        g = HarmonicPolyMap.from_coeffs([1, 0], [0, 1 / 8])
        ext.record(ORDER_TOL - abs(geometry.order_estimate(g, "starlike", grid).value - 2 / 3))
        ext.record(ORDER_TOL - abs(geometry.order_estimate(g, "convex", grid).value - 2 / 5))
    with _Timer(cr):
        br = geometry.radius_bracket(extremal(2), "convex", 1e-3)
        cr.record(min(0.5 - br.lo, br.hi - 0.5))
        cr.details["bracket"] = [br.lo, br.hi]
    return [so, r0, s5, ext, cr]


def _pairs(seed, n, stream, lam=None):
    a = member_stream(seed, n, lam=lam, stream=stream)
    b = member_stream(seed, n, lam=lam, stream=stream + 1000)
    for x, y in zip(a, b):
        lam_xy = max(x.lam, y.lam)
        yield x.f, y.f, lam_xy


def suite_products(seed, n, grid):
    cv = SuiteEntry("convolution", "f*F in F_H^0(lambda^2/2), starlike 2(2-l^2)/(4+l^2), convex 2(1-l^2)/(2+l^2)")
    c1 = SuiteEntry("convolution-convex", "convolutions of F_H^0 members are convex in the disk")
    ic = SuiteEntry("integral-convolution", "integral convolution in F_H^0(lambda^2/4), starlike 2(4-l^2)/(8+l^2), convex 2(2-l^2)/(4+l^2)")
    sh = SuiteEntry("shear", "(alpha conj(phi) + phi)*f stays in F_H^0(lambda) for convex phi, |alpha| <= 1")
    td = SuiteEntry("tilde", "phi in F and f in F_H^0 give a convex member of F_H^0")
    tr = SuiteEntry("tilde-radii", "convex phi: product convex on |z| <= 0.49, starlike on |z| <= 0.974")
    t5 = SuiteEntry("tilde-2/sqrt5", "convex phi and f in F_H^0(2/sqrt5) give a starlike product")
    cc = SuiteEntry("convex-combination", "F_H^0(lambda) is closed under convex combinations")
    gw = SuiteEntry("gateway", "sum n^2(|a_n|+|b_n|) <= lambda: member of F_H^0(lambda/2), convex order 2(1-l)/(2+l)")

    inner_c = DiskGrid(tuple(r for r in grid.radii if r <= 0.49), grid.angles)
    inner_s = DiskGrid(tuple(r for r in grid.radii if r <= 0.974), grid.angles)
    phis = (named_series("half_plane", 64), named_series("log_convex", 64))
    alphas = (0.0, 0.5, np.exp(1j * np.pi / 4), -1.0, 1j)

    with _Timer(cv):
        for f, F, lam in _pairs(seed, n, 11):
            c = products.convolve(f, F)
            rep = is_member_numeric(c, ClassSpec(lam**2 / 2))
            cv.record(_member_margin(rep), ok=rep.is_member)
            st = geometry.order_estimate(c, "starlike", grid).value
            cx = geometry.order_estimate(c, "convex", grid).value
            cv.record(st - (2 * (2 - lam**2) / (4 + lam**2) - ORDER_TOL))
            cv.record(cx - (2 * (1 - lam**2) / (2 + lam**2) - ORDER_TOL))
    with _Timer(c1):
        for f, F, _ in _pairs(seed, n, 12, lam=1.0):
            c = products.convolve(f, F)
            c1.record(geometry.order_estimate(c, "convex", grid).value + 1e-6)
            c1.record(geometry.order_estimate(c, "starlike", grid).value - (0.4 - ORDER_TOL))
    with _Timer(ic):
        for f, F, lam in _pairs(seed, n, 13):
            c = products.integral_convolve(f, F)
            rep = is_member_numeric(c, ClassSpec(lam**2 / 4))
            ic.record(_member_margin(rep), ok=rep.is_member)
            ic.record(geometry.order_estimate(c, "starlike", grid).value - (2 * (4 - lam**2) / (8 + lam**2) - ORDER_TOL))
            ic.record(geometry.order_estimate(c, "convex", grid).value - (2 * (2 - lam**2) / (4 + lam**2) - ORDER_TOL))
    with _Timer(sh):
        for i, s in enumerate(member_stream(seed, n, stream=14)):
            phi = phis[i % 2]
            for alpha in alphas:
                rep = is_member_numeric(products.shear_product(phi, alpha, s.f), ClassSpec(s.lam))
                sh.record(_member_margin(rep), ok=rep.is_member)
    with _Timer(td):
        for s, p in zip(member_stream(seed, n, lam=1.0, stream=15),
                        member_stream(seed, n, lam=1.0, stream=16)):
            phi = p.f.h  # analytic part of an F_H^0 member lies in F
            t = products.tilde_product(phi, s.f)
            rep = is_member_numeric(t, ClassSpec(1.0))
            td.record(_member_margin(rep), ok=rep.is_member)
            td.record(geometry.order_estimate(t, "convex", grid).value + 1e-6)
    with _Timer(tr):
        for i, s in enumerate(member_stream(seed, n, lam=1.0, stream=17)):
            t = products.tilde_product(phis[i % 2], s.f)
            tr.record(geometry.order_estimate(t, "convex", inner_c).value)
            tr.record(geometry.order_estimate(t, "starlike", inner_s).value)
    with _Timer(t5):
        for i, s in enumerate(member_stream(seed, n, lam=SQRT5_LAM, stream=18)):
            t = products.tilde_product(phis[i % 2], s.f)
            t5.record(geometry.order_estimate(t, "starlike", grid).value + 1e-6)
    with _Timer(cc):
        rng = np.random.default_rng([seed, 19])
        for i in range(n):
            lam = float(rng.uniform(0.05, 1.0))
            maps = [s.f for s in member_stream(seed, 5, lam=lam, stream=20 + 1000 * i)]
            w = rng.dirichlet(np.ones(5))
            w[-1] = 1 - w[:-1].sum()
            rep = is_member_numeric(products.convex_combination(w, maps), ClassSpec(lam))
            cc.record(_member_margin(rep), ok=rep.is_member)
    with _Timer(gw):
        rng = np.random.default_rng([seed, 21])
        for i in range(n):
            lam = float(rng.uniform(0.05, 1.0))
            f = classes.random_coeff_ball(lam, int(rng.integers(2, 13)), int(rng.integers(2**63 - 1)), power=2)
            rep = is_member_numeric(f, ClassSpec(lam / 2))
            gw.record(_member_margin(rep), ok=rep.is_member)
            gw.record(geometry.order_estimate(f, "convex", grid).value - (2 * (1 - lam) / (2 + lam) - ORDER_TOL))
    return [cv, c1, ic, sh, td, tr, t5, cc, gw]


def suite_neighborhoods(seed, n, grid):
    e = SuiteEntry("neighborhood", "maps within distance 1 of the identity are starlike members of F_H")
    ident = HarmonicPolyMap.identity()
    rng = np.random.default_rng([seed, 22])
    with _Timer(e):
        for _ in range(n):
            F = classes.random_neighbor(ident, 1.0, int(rng.integers(2, 13)), int(rng.integers(2**63 - 1)))
            d = classes.nbhd_distance(ident, F).value
            rep = is_member_numeric(F, ClassSpec(1.0, pinned=False))
            st = geometry.order_estimate(F, "starlike", grid).value
            e.record(min(_member_margin(rep), st + 1e-6, 1 + 1e-12 - d),
                     ok=rep.is_member and st >= -1e-6 and d <= 1 + 1e-12)
    return [e]


_SUITE_FUNCS = {
    "coefficients": suite_coefficients,
    "growth": suite_growth,
    "area": suite_area,
    "jacobian": suite_jacobian,
    "boundary": suite_boundary,
    "orders": suite_orders,
    "products": suite_products,
    "neighborhoods": suite_neighborhoods,
}


def run(suite: str, seed: int = 0, samples: int = 50, grid: DiskGrid | None = None) -> VerifyReport:
    if samples < 1:
        raise ValueError("sample count must be at least 1")
    if suite != "all" and suite not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    grid = grid or DiskGrid.default()
    names = SUITES if suite == "all" else (suite,)
    entries = []
    for name in names:
        entries.extend(_SUITE_FUNCS[name](seed, samples, grid))
    return VerifyReport(seed, entries)
