import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fhclass.series import (
    AnalyticSeries,
    DerivativeSeries,
    allclose,
    antiderivative,
    derivative,
    evaluate,
    evaluate_derivative,
    hadamard,
    integral_hadamard,
    linear_combine,
    named_series,
    ones,
)

TOL = 1e-12


def coeffs_equal(s, expected):
    return np.allclose(s.coeffs, expected, atol=TOL, rtol=0)


class TestEvaluate:
    def test_half_point(self):
        assert evaluate(AnalyticSeries([1, 0.5]), 0.5) == pytest.approx(0.625, abs=TOL)

    @pytest.mark.parametrize("z", [0.3, -0.7j, 0.2 + 0.9j, 1.0])
    def test_identity_series(self, z):
        assert evaluate(AnalyticSeries([1]), z) == pytest.approx(z, abs=TOL)

    def test_at_i(self):
        assert evaluate(AnalyticSeries([1, 0.5]), 1j) == pytest.approx(1j - 0.5, abs=TOL)

    def test_vectorized_matches_scalar(self):
        s = AnalyticSeries([1, 0.25 - 0.1j, 0.3j])
        z = np.array([0.1, 0.5j, -0.9 + 0.1j])
        vec = evaluate(s, z)
        assert vec.shape == z.shape
        assert np.allclose(vec, [evaluate(s, w) for w in z], atol=TOL)

    def test_call_shortcut(self):
        s = AnalyticSeries([1, 2])
        assert s(0.5) == evaluate(s, 0.5)


class TestDerivative:
    def test_quadratic(self):
        d = derivative(AnalyticSeries([1, 0.5]))
        assert isinstance(d, DerivativeSeries)
        assert coeffs_equal(d, [1, 1])

    def test_linear(self):
        d = derivative(AnalyticSeries([1]))
        assert coeffs_equal(d, [1])
        assert d.is_constant

    def test_cubic(self):
        d = derivative(AnalyticSeries([1, 0, 1 / 3]))
        assert coeffs_equal(d, [1, 0, 1])
        assert evaluate_derivative(d, 0.5) == pytest.approx(1.25, abs=TOL)

    def test_second_derivative(self):
        dd = derivative(derivative(AnalyticSeries([1, 0.5, 1 / 3])))
        assert coeffs_equal(dd, [1, 2])

    def test_antiderivative_inverts(self):
        s = AnalyticSeries([1, 0.5j, -0.25, 0.125])
        assert allclose(antiderivative(derivative(s)), s)

    def test_finite_difference(self):
        s = AnalyticSeries([1, 0.3 - 0.2j, 0.1j, -0.05])
        z, h = 0.4 + 0.3j, 1e-6
        fd = (evaluate(s, z + h) - evaluate(s, z - h)) / (2 * h)
        assert derivative(s)(z) == pytest.approx(fd, rel=1e-8)


class TestProducts:
    def test_hadamard_extremal(self):
        s = AnalyticSeries([1, 0.5])
        assert coeffs_equal(hadamard(s, s), [1, 0.25])

    def test_hadamard_with_z(self):
        s = AnalyticSeries([1, 0.5, 0.2j])
        out = hadamard(s, AnalyticSeries([1]))
        assert out.degree == 1 and coeffs_equal(out, [1])

    def test_hadamard_identity(self):
        s = AnalyticSeries([1, 0.5, 0.2j, -0.1])
        assert allclose(hadamard(s, ones(4)), s)

    def test_hadamard_truncates_to_shorter(self):
        assert hadamard(ones(3), ones(7)).degree == 3

    def test_integral_hadamard(self):
        s = AnalyticSeries([1, 0.5])
        assert coeffs_equal(integral_hadamard(s, s), [1, 0.125])
        t = AnalyticSeries([1, 0.5, 0.3])
        assert coeffs_equal(integral_hadamard(t, ones(3)), [1, 0.25, 0.1])
        assert coeffs_equal(integral_hadamard(AnalyticSeries([1]), AnalyticSeries([1])), [1])

    def test_linear_combine(self):
        assert coeffs_equal(linear_combine([(1, AnalyticSeries([1, 0.5])), (1, AnalyticSeries([0, 0.5]))]), [1, 1])
        assert coeffs_equal(linear_combine([(0.5, AnalyticSeries([1, 0.5])),
                                            (0.5, AnalyticSeries([1, -0.5]))]), [1, 0])
        assert coeffs_equal(linear_combine([(2, AnalyticSeries([1]))]), [2])

    def test_linear_combine_degree_is_max(self):
        out = linear_combine([(1, AnalyticSeries([1])), (1j, AnalyticSeries([0, 0, 1]))])
        assert out.degree == 3 and coeffs_equal(out, [1, 0, 1j])

    def test_linear_combine_empty(self):
        with pytest.raises(ValueError):
            linear_combine([])


class TestNamedSeries:
    def test_half_plane(self):
        assert coeffs_equal(named_series("half_plane", 3), [1, 1, 1])

    def test_koebe(self):
        assert coeffs_equal(named_series("koebe", 3), [1, 2, 3])

    def test_log_convex(self):
        assert coeffs_equal(named_series("log_convex", 4), [1, 1 / 2, 1 / 3, 1 / 4])

    def test_monomial(self):
        assert coeffs_equal(named_series("monomial", 2, m=2, c=0.5), [1, 0.5])

    def test_monomial_power_too_large(self):
        with pytest.raises(ValueError):
            named_series("monomial", 2, m=3, c=0.5)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            named_series("cardioid", 4)

    def test_default_degree(self):
        assert named_series("half_plane").degree == 64


def test_rejects_nonfinite():
    with pytest.raises(ValueError):
        AnalyticSeries([1, np.nan])
    with pytest.raises(ValueError):
        AnalyticSeries([])


def test_immutable():
    s = AnalyticSeries([1, 2])
    with pytest.raises(ValueError):
        s.coeffs[0] = 3


# -- properties -------------------------------------------------------------

_c = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)
_series = st.lists(_c, min_size=1, max_size=8).map(AnalyticSeries)


@settings(max_examples=200)
@given(_series, _series, _series)
def test_hadamard_commutative_associative(s, t, u):
    n = min(s.degree, t.degree, u.degree)
    s, t, u = s.truncated(n), t.truncated(n), u.truncated(n)
    assert allclose(hadamard(s, t), hadamard(t, s))
    assert np.allclose(hadamard(hadamard(s, t), u).coeffs, hadamard(s, hadamard(t, u)).coeffs,
                       rtol=1e-12, atol=1e-12)


@settings(max_examples=200)
@given(_series, _series, _c, _c)
def test_derivative_linear(s, t, w1, w2):
    lhs = derivative(linear_combine([(w1, s), (w2, t)]))
    n = max(s.degree, t.degree)
    rhs = w1 * derivative(s.padded(n)).coeffs + w2 * derivative(t.padded(n)).coeffs
    assert np.allclose(lhs.coeffs, rhs, rtol=1e-12, atol=1e-12)


@given(_series)
def test_vanishes_at_origin(s):
    assert evaluate(s, 0) == 0


@settings(max_examples=200)
@given(_series, _series)
def test_integral_hadamard_consistent_with_hadamard(s, t):
    n = np.arange(1, min(s.degree, t.degree) + 1)
    lhs = derivative(integral_hadamard(s, t)).coeffs
    assert np.allclose(lhs, hadamard(s, t).coeffs, rtol=1e-12, atol=1e-12)
    assert np.allclose(n * integral_hadamard(s, t).coeffs, hadamard(s, t).coeffs, rtol=1e-12, atol=1e-12)
