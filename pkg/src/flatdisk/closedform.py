"""Closed-form radial stretch function and its solution chain.

The flat-disk map sends colatitude theta (0 at the pole, pi/2 at the
equator) to the disk radius f(theta).  The minimum-stress radial function is

    f(theta) = (2 log 2 - (cos theta + 1) log(cos theta + 1)) / sin theta

together with the auxiliary functions that arise while solving the
boundary-value problem: the substitution f = gamma * g with
gamma = 1/sin theta, the integrated function g, its derivative h, and the
two homogeneous solutions beta of the transformed ODE in x = sin theta.

All evaluators accept scalars or numpy arrays and are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "TWO_LN2",
    "POLE_SLOPE",
    "clamp_colatitude",
    "eval_f",
    "eval_f_prime",
    "eval_f_second",
    "eval_f_mathematica_form",
    "eval_g",
    "eval_h",
    "eval_gamma",
    "eval_beta_regular",
    "eval_beta_singular",
    "SeriesCoefficients",
    "series_coefficients",
    "eval_beta_series",
]

LN2 = math.log(2.0)
#: disk radius of the flattened hemisphere, f(pi/2) = 2 ln 2
TWO_LN2 = 2.0 * LN2
#: limiting slope f'(0) = (1 + ln 2) / 2
POLE_SLOPE = 0.5 * (1.0 + LN2)

# Colatitude values may stray past [0, pi/2] by float noise from upstream
# degree->radian conversion; anything worse is a caller bug.
CLAMP_TOL = 1e-12

# Below this angle the direct formula loses ~8 digits to cancellation, so
# the Taylor expansion of the closed form is used instead.
SMALL_ANGLE = 1e-4

# Taylor coefficients of f(theta) = C1*theta + C3*theta^3 + C5*theta^5 + ...
# (odd powers only; derived once from the closed form by series expansion)
_C1 = 0.5 * (1.0 + LN2)
_C3 = LN2 / 24.0 - 1.0 / 48.0
_C5 = LN2 / 240.0 - 1.0 / 960.0


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def _scalar_or_array(arr, scalar):
    return float(arr) if scalar else arr


def clamp_colatitude(theta):
    """Validate and clamp a colatitude (radians) into [0, pi/2].

    Values outside the interval by more than CLAMP_TOL raise ValueError;
    smaller excursions are clamped onto the boundary.
    """
    arr, scalar = _as_array(theta)
    if np.any(arr < -CLAMP_TOL) or np.any(arr > math.pi / 2 + CLAMP_TOL):
        bad = arr[(arr < -CLAMP_TOL) | (arr > math.pi / 2 + CLAMP_TOL)]
        raise ValueError(
            f"colatitude out of range [0, pi/2]: {np.atleast_1d(bad)[0]!r}"
        )
    clipped = np.clip(arr, 0.0, math.pi / 2)
    return _scalar_or_array(clipped, scalar)


def eval_f(theta):
    """Minimum-stress disk radius f(theta); total on [0, pi/2].

    f(0) = 0 and f(pi/2) = 2 ln 2.  Near zero the Taylor expansion of the
    closed form is used to avoid 0/0 cancellation.
    """
    arr, scalar = _as_array(clamp_colatitude(theta))
    arr = np.atleast_1d(arr)
    out = np.empty_like(arr)
    small = arr < SMALL_ANGLE
    t = arr[small]
    out[small] = t * (_C1 + t * t * (_C3 + t * t * _C5))
    t = arr[~small]
    c1 = np.cos(t) + 1.0
    out[~small] = (TWO_LN2 - c1 * np.log(c1)) / np.sin(t)
    return _scalar_or_array(out[0] if scalar else out, scalar)


def eval_f_prime(theta):
    """Analytic derivative f'(theta); f'(pi/2) = 1, f'(0) = (1+ln 2)/2."""
    arr, scalar = _as_array(clamp_colatitude(theta))
    arr = np.atleast_1d(arr)
    out = np.empty_like(arr)
    small = arr < SMALL_ANGLE
    t = arr[small]
    out[small] = _C1 + t * t * (3.0 * _C3 + t * t * 5.0 * _C5)
    t = arr[~small]
    s, c = np.sin(t), np.cos(t)
    g = TWO_LN2 - (c + 1.0) * np.log(c + 1.0)
    h = s * (1.0 + np.log(c + 1.0))
    out[~small] = h / s - g * c / (s * s)
    return _scalar_or_array(out[0] if scalar else out, scalar)


def eval_f_second(theta):
    """Analytic second derivative f''(theta); f''(pi/2) = 2 ln 2 - 1."""
    arr, scalar = _as_array(clamp_colatitude(theta))
    arr = np.atleast_1d(arr)
    out = np.empty_like(arr)
    small = arr < SMALL_ANGLE
    t = arr[small]
    out[small] = t * (6.0 * _C3 + t * t * 20.0 * _C5)
    t = arr[~small]
    s, c = np.sin(t), np.cos(t)
    lc = np.log(c + 1.0)
    g = TWO_LN2 - (c + 1.0) * lc
    h = s * (1.0 + lc)
    hp = 2.0 * c - 1.0 + c * lc
    out[~small] = hp / s - 2.0 * h * c / (s * s) + g / s + 2.0 * g * c * c / (s ** 3)
    return _scalar_or_array(out[0] if scalar else out, scalar)


def eval_f_mathematica_form(theta):
    """Alternate closed form log2*tan(t/2) - 2*cot(t/2)*log(cos(t/2)).

    Singular at theta = 0 (cot blows up); agrees with eval_f elsewhere.
    """
    arr, scalar = _as_array(clamp_colatitude(theta))
    if np.any(np.atleast_1d(arr) == 0.0):
        raise ValueError("alternate form is singular at theta = 0")
    half = arr / 2.0
    out = LN2 * np.tan(half) - 2.0 * (np.cos(half) / np.sin(half)) * np.log(np.cos(half))
    return _scalar_or_array(out, scalar)


def eval_g(theta):
    """Substitution function g(theta) = 2 log 2 - (cos t + 1) log(cos t + 1)."""
    arr, scalar = _as_array(clamp_colatitude(theta))
    c1 = np.cos(arr) + 1.0
    return _scalar_or_array(TWO_LN2 - c1 * np.log(c1), scalar)


def eval_h(theta):
    """h(theta) = sin t * (1 + log(cos t + 1)); this is g'."""
    arr, scalar = _as_array(clamp_colatitude(theta))
    out = np.sin(arr) * (1.0 + np.log(np.cos(arr) + 1.0))
    return _scalar_or_array(out, scalar)


def eval_gamma(theta):
    """Singular homogeneous factor gamma(theta) = 1/sin(theta), theta > 0."""
    arr, scalar = _as_array(clamp_colatitude(theta))
    if np.any(np.atleast_1d(arr) == 0.0):
        raise ValueError("gamma is singular at theta = 0")
    return _scalar_or_array(1.0 / np.sin(arr), scalar)


def eval_beta_regular(x):
    """Regular homogeneous solution beta(x) = 2x / (1 + sqrt(1 - x^2))."""
    arr, scalar = _as_array(x)
    if np.any(np.abs(np.atleast_1d(arr)) > 1.0):
        raise ValueError("beta_regular requires |x| <= 1")
    return _scalar_or_array(2.0 * arr / (1.0 + np.sqrt(1.0 - arr * arr)), scalar)


def eval_beta_singular(x):
    """Singular homogeneous solution beta(x) = 1/x, x != 0."""
    arr, scalar = _as_array(x)
    if np.any(np.atleast_1d(arr) == 0.0):
        raise ValueError("beta_singular is undefined at x = 0")
    return _scalar_or_array(1.0 / arr, scalar)


@dataclass(frozen=True)
class SeriesCoefficients:
    """Odd-index power-series coefficients a1, a3, ..., a_max as exact rationals.

    Even-index coefficients are identically zero and not stored.  The stored
    values satisfy (j+1) a_j = (j-2) a_{j-2} exactly.
    """

    coeffs: tuple  # Fraction for j = 1, 3, 5, ..., max_index
    max_index: int

    def coefficient(self, j: int) -> Fraction:
        """a_j for any index j in range; zero for even j."""
        if j < 1 or j > self.max_index:
            raise IndexError(f"index {j} outside stored range 1..{self.max_index}")
        if j % 2 == 0:
            return Fraction(0)
        return self.coeffs[(j - 1) // 2]

    def as_floats(self) -> np.ndarray:
        return np.array([float(a) for a in self.coeffs])


def series_coefficients(max_index: int) -> SeriesCoefficients:
    """Coefficients of the regular beta power series, a1 = 1, a_j = (j-2)/(j+1) a_{j-2}."""
    if max_index < 1 or max_index % 2 == 0:
        raise ValueError(f"max_index must be odd and >= 1, got {max_index}")
    coeffs = [Fraction(1)]
    for j in range(3, max_index + 1, 2):
        coeffs.append(coeffs[-1] * Fraction(j - 2, j + 1))
    return SeriesCoefficients(coeffs=tuple(coeffs), max_index=max_index)


def eval_beta_series(x, n_terms: int):
    """Partial sum of the beta power series through j = 2*n_terms - 1.

    Converges to eval_beta_regular(x) for |x| < 1 as n_terms grows.
    """
    if n_terms < 1:
        raise ValueError(f"n_terms must be >= 1, got {n_terms}")
    arr, scalar = _as_array(x)
    if np.any(np.abs(np.atleast_1d(arr)) >= 1.0):
        raise ValueError("beta series requires |x| < 1")
    a = series_coefficients(2 * n_terms - 1).as_floats()
    x2 = arr * arr
    # Horner in x^2 on the odd-power series
    acc = np.zeros_like(arr)
    for coeff in a[::-1]:
        acc = acc * x2 + coeff
    return _scalar_or_array(acc * arr, scalar)
