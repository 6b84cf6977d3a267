"""Numerical toolkit for the close-to-convex harmonic class F_H(lambda)."""

from .classes import (
    ClassSpec,
    MembershipReport,
    Method,
    Verdict,
    classify,
    coeff_necessary_checks,
    coeff_sufficient,
    extremal,
    is_member_numeric,
    nbhd_distance,
    random_member,
    random_member_boundary,
    random_member_coeff,
    sup_defect,
)
from .geometry import (
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
)
from .harmap import DiskGrid, HarmonicPolyMap, epsilon_slice, eval_map, jacobian, theta_derivative
from .products import convex_combination, convolve, integral_convolve, shear_product, tilde_product
from .series import AnalyticSeries, derivative, evaluate, hadamard, integral_hadamard, named_series

__version__ = "0.1.0"
