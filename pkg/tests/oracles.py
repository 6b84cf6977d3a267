"""Independent reference computations used only by the tests.

Map values come from numpy's own polynomial evaluator on raw
coefficients, and derivatives from fourth-order central differences,
so none of these share code with the closed forms under test.
"""

import numpy as np
from numpy.polynomial import polynomial as P


def raw_eval(a, b, z):
    a = np.concatenate(([0], np.asarray(a, dtype=complex)))
    b = np.concatenate(([0], np.asarray(b, dtype=complex)))
    return P.polyval(z, a) + np.conj(P.polyval(z, b))


def _d4(F, x, step):
    return (-F(x + 2 * step) + 8 * F(x + step) - 8 * F(x - step) + F(x - 2 * step)) / (12 * step)


def fd_theta_derivative(f, z, step=1e-4):
    r, t = abs(z), np.angle(z)
    return _d4(lambda s: raw_eval(f.a, f.b, r * np.exp(1j * s)), t, step)


def fd_convex(f, z, step=1e-3):
    r, t = abs(z), np.angle(z)
    w0 = fd_theta_derivative(f, z)
    return _d4(lambda s: np.angle(fd_theta_derivative(f, r * np.exp(1j * s)) / w0), t, step)


def fd_starlike(f, z, step=1e-4):
    r, t = abs(z), np.angle(z)
    w0 = raw_eval(f.a, f.b, z)
    return _d4(lambda s: np.angle(raw_eval(f.a, f.b, r * np.exp(1j * s)) / w0), t, step)


def dense_boundary_max(fun, n=400_000):
    z = np.exp(2j * np.pi * np.arange(n) / n)
    return float(np.max(fun(z)))


def brute_defect(f, z):
    n = np.arange(1, len(f.a) + 1)
    dh = P.polyval(z, n * f.a)
    dg = P.polyval(z, n * f.b)
    return np.abs(dh - 1) + np.abs(dg)
