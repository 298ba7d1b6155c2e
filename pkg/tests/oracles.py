"""Independent reference computations used by the tests.

Each oracle re-derives a quantity from first principles with plain ``math``
or a generic numerical solver, without importing the package under test.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.integrate import solve_ivp

F, R, T = 96485.0, 8.314, 298.0


def kelvin_voigt_k(rho_si, G_si, eta, f):
    """k1, k2 from the complex wave number of a Kelvin-Voigt solid.

    The complex shear modulus is G* = G + i omega eta and k = omega sqrt(rho / G*);
    k1 = Re k, k2 = -Im k.  This is a different route to the same roots.
    """
    w = 2 * math.pi * f
    k = w * cmath.sqrt(rho_si / complex(G_si, w * eta))
    return k.real, -k.imag


def butterworth_gain(f, fc, order):
    return 1.0 / math.sqrt(1.0 + (f / fc) ** (2 * order))


def ema_step_response(t, tau):
    return 1.0 - math.exp(-t / tau)


def gk_relaxed(nu1, nu2, j1, j2, t_end=None):
    """Unmodified fraction after integrating the two-enzyme cycle to rest.

    dG/dt = nu1 (1 - G) / (j1 + 1 - G) - nu2 G / (j2 + G), from G = 1/2.
    """
    def rhs(_, y):
        g = y[0]
        return [nu1 * (1 - g) / (j1 + 1 - g) - nu2 * g / (j2 + g)]

    def jac(_, y):
        g = y[0]
        return [[-nu1 * j1 / (j1 + 1 - g) ** 2 - nu2 * j2 / (j2 + g) ** 2]]

    # slowest linear relaxation rate bounds the time needed to settle
    rate = min(nu1 * j1 / (j1 + 1) ** 2, nu2 * j2 / (j2 + 1) ** 2)
    t_end = t_end or 60.0 / rate
    sol = solve_ivp(rhs, (0, t_end), [0.5], method="Radau", jac=jac, rtol=1e-12, atol=1e-15)
    return float(sol.y[0, -1])


def nernst(c_out, c_in, z=2):
    return R * T / (z * F) * math.log(c_out / c_in)


def nernst_planck_current(D, dc, dx, c_in, dE, area, z=2):
    return -z * F * D * (dc / dx + F * z * c_in * dE / (R * T * dx)) * area


def logistic(x):
    return 1.0 / (1.0 + math.exp(-x))


def welch_slope(x, fs, f_lo=10.0, f_hi=500.0):
    """Least-squares log-log slope of a Welch periodogram between two frequencies."""
    from scipy.signal import welch

    f, p = welch(x, fs=fs, nperseg=4096)
    m = (f >= f_lo) & (f <= f_hi)
    return float(np.polyfit(np.log10(f[m]), np.log10(p[m]), 1)[0])
