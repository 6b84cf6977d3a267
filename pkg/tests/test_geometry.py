import numpy as np
import pytest
from scipy.integrate import quad

from fhclass.classes import ClassSpec, extremal, random_member, random_member_coeff
from fhclass.geometry import (
    DegenerateError,
    area_exact,
    area_quadrature,
    boundary_trace,
    check_growth,
    convex_functional,
    growth_bounds,
    jacobian_bound_margin,
    order_estimate,
    radius_bracket,
    starlike_functional,
    winding_number,
)
from fhclass.harmap import DiskGrid, HarmonicPolyMap, theta_derivative

from oracles import fd_convex, fd_starlike

EXT = extremal(2)
ANALYTIC_EXT = extremal(2, side="analytic")
IDENTITY = HarmonicPolyMap.identity()


class TestGrowth:
    def test_bounds_half(self):
        assert growth_bounds(1, 0.5) == pytest.approx((0.375, 0.625))

    @pytest.mark.parametrize("lam,limit", [(1, 0.5), (0.5, 0.75)])
    def test_covered_disk(self, lam, limit):
        assert growth_bounds(lam, 1 - 1e-9)[0] == pytest.approx(limit, abs=1e-8)

    def test_extremal_sharp(self):
        res = check_growth(EXT, 1.0)
        assert res.ok
        assert res.slack == pytest.approx(0, abs=1e-12)
        # threefold symmetry: the worst point is a positive real multiple of a cube root of unity
        assert abs((res.worst_point**3).imag) < 1e-9

    def test_identity_slack(self):
        res = check_growth(IDENTITY, 1.0)
        assert res.ok and res.slack > 0

    def test_counterexample(self):
        assert not check_growth(HarmonicPolyMap.from_coeffs([2], check=False), 1.0).ok


class TestArea:
    def test_exact(self):
        assert area_exact(ANALYTIC_EXT) == pytest.approx(3 * np.pi / 2, abs=1e-12)
        assert area_exact(EXT) == pytest.approx(np.pi / 2, abs=1e-12)
        assert area_exact(IDENTITY) == pytest.approx(np.pi, abs=1e-12)

    def test_quadrature(self):
        assert area_quadrature(IDENTITY) == pytest.approx(np.pi, abs=1e-9)
        assert area_quadrature(ANALYTIC_EXT) == pytest.approx(3 * np.pi / 2, abs=1e-6)
        assert area_quadrature(EXT) == pytest.approx(np.pi / 2, abs=1e-6)

    def test_quadrature_random(self):
        for seed in range(100):
            f = random_member(ClassSpec(1.0), 2 + seed % 15, seed)
            assert area_quadrature(f) == pytest.approx(area_exact(f), rel=1e-6)

    def test_area_bound(self):
        for seed in range(100):
            lam = 0.1 + 0.9 * (seed % 10) / 9
            f = random_member(ClassSpec(lam), 6, seed, kind="coeff" if seed % 2 else "boundary")
            assert area_exact(f) <= np.pi * (1 + lam**2 / 2) + 1e-9

    def test_node_minimum(self):
        with pytest.raises(ValueError):
            area_quadrature(IDENTITY, radial_nodes=8)


class TestJacobianBound:
    def test_analytic_extremal_sharp(self):
        assert jacobian_bound_margin(ANALYTIC_EXT) == pytest.approx(0, abs=1e-12)

    def test_identity(self):
        assert jacobian_bound_margin(IDENTITY) == pytest.approx((1.1) ** 2 - 1)

    def test_coanalytic_extremal(self):
        assert jacobian_bound_margin(EXT) > 0


class TestBoundaryTrace:
    def test_identity(self):
        t = boundary_trace(IDENTITY, 1024)
        assert t.samples == 1024 and len(t.points) == 1025
        assert t.points[0] == t.points[-1]
        assert t.length == pytest.approx(2 * np.pi, abs=1e-4)
        assert t.winding_about_origin == 1

    def test_extremal_length_oracle(self):
        oracle, _ = quad(lambda s: abs(1 - np.exp(-3j * s)), 0, 2 * np.pi, limit=200)
        assert oracle == pytest.approx(8, abs=1e-10)
        t = boundary_trace(EXT, 4096)
        assert t.length == pytest.approx(oracle, abs=1e-3)
        assert t.winding_about_origin == 1

    def test_analytic_extremal(self):
        t = boundary_trace(ANALYTIC_EXT, 4096)
        assert t.length <= 4 * np.pi and t.winding_about_origin == 1

    def test_rejects_small_M(self):
        with pytest.raises(ValueError):
            boundary_trace(IDENTITY, 32)

    def test_winding_double_loop(self):
        z = np.exp(4j * np.pi * np.arange(101) / 100)
        assert winding_number(z) == 2
        with pytest.raises(DegenerateError):
            winding_number(np.array([1, 0, 1j, 1]))


class TestFunctionals:
    @pytest.mark.parametrize("r", [0.5, 0.999])
    def test_starlike_extremal(self, r):
        assert starlike_functional(EXT, r) == pytest.approx(2 * (1 - r) / (2 + r), abs=1e-12)

    @pytest.mark.parametrize("z", [0.3, 0.5j, -0.9 + 0.1j])
    def test_identity(self, z):
        assert starlike_functional(IDENTITY, z) == pytest.approx(1)
        assert convex_functional(IDENTITY, z) == pytest.approx(1)

    @pytest.mark.parametrize("r", [0.5, 0.25])
    def test_convex_extremal(self, r):
        exact = (1 - 2 * r) / (1 + r)
        assert convex_functional(EXT, -r) == pytest.approx(exact, abs=1e-12)
        assert fd_convex(EXT, complex(-r)) == pytest.approx(exact, abs=1e-6)

    def test_convex_cusp_degenerate(self):
        with pytest.raises(DegenerateError):
            convex_functional(EXT, 1)

    def test_origin_rejected(self):
        with pytest.raises(ValueError):
            starlike_functional(EXT, 0)

    def test_array_marks_degenerate(self):
        vals = convex_functional(EXT, np.array([1, 0.5]))
        assert np.isnan(vals[0]) and np.isfinite(vals[1])

    def test_starlike_oracle(self):
        rng = np.random.default_rng(8)
        for k in range(50):
            f = random_member(ClassSpec(1.0), 8, k)
            z = rng.uniform(0.1, 0.95) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            exact = starlike_functional(f, z)
            assert exact == pytest.approx(fd_starlike(f, z), rel=1e-6, abs=1e-9)

    def test_convex_equals_tangent_turning(self):
        f = random_member_coeff(ClassSpec(0.5), 6, 3)
        z = 0.6 * np.exp(0.4j)
        assert convex_functional(f, z) == pytest.approx(fd_convex(f, z), rel=1e-5)
        assert abs(theta_derivative(f, z)) > 0


class TestOrders:
    @pytest.mark.parametrize("lam", [0.5, 1.0])
    def test_starlike_extremal(self, lam):
        est = order_estimate(extremal(2, lam), "starlike", DiskGrid.default(0.999))
        assert est.value == pytest.approx(2 * (1 - lam) / (2 + lam), abs=0.02)
        assert est.reported >= 0
        w = est.argmin_point**3
        assert abs(w.imag) < 1e-9 and w.real > 0

    def test_self_integral_convolution(self):
        f = HarmonicPolyMap.from_coeffs([1], [0, 1 / 8])
        assert order_estimate(f, "starlike").value == pytest.approx(2 / 3, abs=0.02)
        assert order_estimate(f, "convex").value == pytest.approx(2 / 5, abs=0.02)

    def test_skips_cusps(self):
        est = order_estimate(EXT, "convex", DiskGrid((0.5, 1.0), 12, 1.0))
        assert est.skipped == 3
        # remaining boundary samples include z = -1, where (1 - 2r)/(1 + r) = -1/2
        assert est.value == pytest.approx(-0.5, abs=1e-12)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            order_estimate(EXT, "spiral")


class TestRadiusBracket:
    def test_convexity_radius(self):
        br = radius_bracket(EXT, "convex", tol=1e-3)
        assert 0.5 in br
        assert br.hi - br.lo <= 1e-3
        assert br.failing and br.failing[0] == pytest.approx(0.5)

    @pytest.mark.parametrize("kind", ["starlike", "convex"])
    def test_identity(self, kind):
        br = radius_bracket(IDENTITY, kind)
        assert (br.lo, br.hi) == (0.999, 0.999)

    def test_starlike_whole_disk(self):
        br = radius_bracket(extremal(2, 2 / np.sqrt(5)), "starlike")
        assert (br.lo, br.hi) == (0.999, 0.999)

    def test_tol_floor(self):
        with pytest.raises(ValueError):
            radius_bracket(EXT, "convex", tol=1e-5)
