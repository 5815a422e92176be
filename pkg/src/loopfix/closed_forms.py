"""Closed-form critical ratios for four graph families.

Each family admits an exact rational expression in its size and self-loop
strengths; these evaluators are the oracles the general coalescence engine is
cross-checked against, and vice versa. Numerator/denominator pairs returned
here are positive multiples of (eta2, eta3 - eta1), so regime classification
by sign matches the engine.

Families and their loop parameters:

    regular       N vertices of degree k, common loop strength ell
    star          hub + (N-1) leaves; alpha on leaves, beta on the hub
    hub-hub star  two N-vertex stars joined hub-to-hub (2N vertices);
                  alpha on leaves, gamma on the hubs
    ceiling fan   star with N odd whose leaves are perfectly matched;
                  eps on leaves (degree 2), beta on the hub
"""
from __future__ import annotations

import math
from numbers import Integral

from .errors import (
    InvalidFamilyParamsError,
    NotDenseRegimeError,
    UnsupportedNError,
)
from .threshold import ThresholdResult, result_from_num_den

__all__ = [
    "regular_num_den",
    "bc_regular",
    "regular_spite_transition",
    "star_num_den",
    "bc_star",
    "star_limit_beta0",
    "star_exception_threshold_N3",
    "hubhub_num_den",
    "bc_hubhub",
    "hubhub_limit",
    "cf_num_den",
    "bc_ceiling_fan",
    "cf_limit",
    "cf_exception_epsilon",
]


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidFamilyParamsError(msg)


def _check_size(N, minimum, label) -> None:
    _require(isinstance(N, Integral) and not isinstance(N, bool) and N >= minimum,
             f"{label}: N must be an integer >= {minimum}, got {N!r}")


def _check_loop(value, name) -> None:
    _require(value >= 0 and math.isfinite(value), f"loop strength {name} must be finite and >= 0")


# ---------------------------------------------------------------------------
# regular graphs


def regular_num_den(N, k, ell):
    """Numerator/denominator pair for k-regular graphs with loop strength ell.

    Plain-arithmetic polynomial, so exact types (int, Fraction) pass through
    unchanged.
    """
    num = N * (k * k + 3 * k * ell + 2 * ell * ell) - 2 * (k + ell) ** 2
    den = N * (k * ell + k + 2 * ell * ell) - 2 * (k + ell) ** 2
    return num, den


def bc_regular(N: int, k: int, ell: float) -> ThresholdResult:
    """Critical ratio for N-vertex k-regular graphs with common loop ell."""
    _check_size(N, 3, "regular")
    _require(isinstance(k, Integral) and 1 <= k < N, f"regular: need integer 1 <= k < N, got k={k!r}")
    _check_loop(ell, "ell")
    num, den = regular_num_den(N, k, float(ell))
    return result_from_num_den(num, den)


def regular_spite_transition(N: int, k: int) -> float:
    """Loop strength where a dense regular graph (N < 2k) leaves the spite regime.

    The threshold denominator N*(k*ell + k + 2*ell^2) - 2*(k + ell)^2 is a
    quadratic in ell, 2*(N-1)*ell^2 + k*(N-4)*ell + k*(N-2k), with exactly one
    positive root when N < 2k; below it the regime is spite, above it
    cooperation.
    """
    _check_size(N, 3, "regular")
    _require(isinstance(k, Integral) and 1 <= k < N, f"regular: need integer 1 <= k < N, got k={k!r}")
    if N >= 2 * k:
        raise NotDenseRegimeError(f"transition exists only for N < 2k, got N={N}, k={k}")
    disc = N * k * (N * k - 8 * N + 8 * k + 8)
    return (k * (4 - N) + math.sqrt(disc)) / (4 * (N - 1))


# ---------------------------------------------------------------------------
# stars


def star_num_den(N: int, alpha: float, beta: float):
    """Numerator/denominator polynomials for the star family."""
    a, B = alpha, beta
    num = 3 * (1 + a) * (-1 + N + B) * (
        -8 / 3
        + N**3 * (4 / 3 + 11 * a / 3 + a * a)
        + 14 * B / 3
        - 4 * B * B / 3
        + a * a * (-2 + 8 * B / 3)
        + a * (-6 + 10 * B - 8 * B * B / 3)
        + N**2 * (-16 / 3 + 3 * B + a * a * (-4 + 4 * B / 3) + a * (-40 / 3 + 7 * B))
        + N * (20 / 3 + a * a * (5 - 4 * B) - 23 * B / 3 + 4 * B * B / 3
               + a * (47 / 3 - 17 * B + 8 * B * B / 3))
    )
    den = 2 * (
        B * (-N**3 + N * (-1 - B / 2) + N**2 * (2 - B / 2) + B)
        + a**3 * (2 + N**4 - 5 * B + 4 * B * B
                  + N**3 * (-5 + 5 * B / 2)
                  + N * (-7 + 25 * B / 2 - 6 * B * B)
                  + N**2 * (9 - 10 * B + 2 * B * B))
        + a * (4 + N**4 - 11 * B + 12 * B * B - 2 * B**3
               + N**3 * (-7 + 5 * B / 2)
               + N**2 * (15 - 16 * B + 5 * B * B)
               + N * (-13 + 49 * B / 2 - 17 * B * B + 2 * B**3))
        + a * a * (8 + 4 * N**4 - 22 * B + 21 * B * B - 4 * B**3
                   + N**3 * (-20 + 12 * B)
                   + N**2 * (36 - 46 * B + 27 * B * B / 2)
                   + N * (-28 + 56 * B - 69 * B * B / 2 + 4 * B**3))
    )
    return num, den


def bc_star(N: int, alpha: float, beta: float) -> ThresholdResult:
    """Critical ratio for an N-vertex star; alpha on leaves, beta on the hub."""
    _check_size(N, 3, "star")
    _check_loop(alpha, "alpha")
    _check_loop(beta, "beta")
    num, den = star_num_den(N, float(alpha), float(beta))
    return result_from_num_den(num, den)


def star_limit_beta0(alpha: float) -> float:
    """Large-N limit of the star ratio with a loop-free hub (alpha > 0)."""
    _check_loop(alpha, "alpha")
    a = float(alpha)
    return (3 * a**3 + 14 * a**2 + 15 * a + 4) / (2 * a**3 + 8 * a**2 + 2 * a)


def star_exception_threshold_N3() -> float:
    """Leaf-loop strength separating spite from cooperation for the 3-star
    with a loop-free hub: sqrt(5) - 2."""
    return math.sqrt(5.0) - 2.0


# ---------------------------------------------------------------------------
# hub-hub joined stars


def hubhub_num_den(N: int, alpha: float, gamma: float):
    """Numerator/denominator polynomials for two stars joined hub-to-hub."""
    a, g = alpha, gamma
    num = 3 * (1 + a) * (N + g) * (
        N**4 * (a**3 + 16 * a * a / 3 + 25 * a / 3 + 10 / 3)
        + N**3 * (a**3 * (4 * g / 3 - 2)
                  + a * a * (10 * g - 25 / 3)
                  + a * (20 * g - 34 / 3)
                  + 29 * g / 3 - 13 / 3)
        + N**2 * (a**3 * (-7 * g / 3 + 1 / 3)
                  + a * a * (11 * g * g / 3 - 38 * g / 3 + 1)
                  + a * (40 * g * g / 3 - 64 * g / 3 + 1)
                  + 26 * g * g / 3 - 9 * g + 1 / 3)
        + N * (a**3 * (-g / 3 + 2 / 3)
               + a * a * (-10 * g * g / 3 - g + 2)
               + a * (8 * g**3 / 3 - 32 * g * g / 3 - g + 2)
               + 3 * g**3 - 16 * g * g / 3 - g / 3 + 2 / 3)
        + g * (4 * a**3 / 3 + 4 * a * a + a * (-5 * g * g / 3 + 4)
               + g**3 / 3 - g * g + 4 / 3)
    )
    den = 2 * (
        N**5 * (a**4 + 11 * a**3 / 2 + 9 * a * a + 5 * a + 2)
        + N**4 * (a**4 * (5 * g / 2 - 5 / 2)
                  + a**3 * (33 * g / 2 - 23 / 2)
                  + a * a * (61 * g / 2 - 19)
                  + a * (33 * g / 2 - 25 / 2)
                  + 6 * g - 4)
        + N**3 * (a**4 * (2 * g * g - 11 * g / 2 + 2)
                  + a**3 * (37 * g * g / 2 - 29 * g + 15 / 2)
                  + a * a * (44 * g * g - 107 * g / 2 + 11)
                  + a * (29 * g * g - 36 * g + 7)
                  + 21 * g * g / 2 - 12 * g + 3 / 2)
        + N**2 * (a**4 * (-7 * g * g / 2 + 2 * g - 1 / 2)
                  + a**3 * g * (11 * g * g / 2 - 49 * g / 2 + 15 / 2)
                  + a * a * (47 * g**3 / 2 - 111 * g * g / 2 + 23 * g / 2 + 7 / 2)
                  + a * (21 * g**3 - 79 * g * g / 2 + 7 * g + 5)
                  + 9 * g**3 - 14 * g * g + g + 2)
        + N * (a**4 * (-g * g / 2 + g - 1)
               + a**3 * (-5 * g**3 - 2 * g * g + 6 * g - 11 / 2)
               + a * a * (4 * g**4 - 41 * g**3 / 2 - 5 * g * g / 2 + 13 * g - 21 / 2)
               + a * (6 * g**4 - 16 * g**3 - 5 * g * g / 2 + 12 * g - 17 / 2)
               + 7 * g**4 / 2 - 13 * g**3 / 2 - 3 * g * g / 2 + 4 * g - 5 / 2)
        + a**4 * (2 * g * g + 1)
        + a**3 * (8 * g * g - 3 * g / 2 + 4)
        + a * a * (-5 * g**4 / 2 + 25 * g * g / 2 - 9 * g / 2 + 6)
        + a * (g**5 / 2 - 2 * g**4 - g**3 / 2 + 9 * g * g - 9 * g / 2 + 4)
        + g**5 / 2 - g**4 - g**3 / 2 + 5 * g * g / 2 - 3 * g / 2 + 1
    )
    return num, den


def bc_hubhub(N: int, alpha: float, gamma: float) -> ThresholdResult:
    """Critical ratio for hub-hub joined stars; N is the size of one panel."""
    _check_size(N, 2, "hub-hub star")
    _check_loop(alpha, "alpha")
    _check_loop(gamma, "gamma")
    num, den = hubhub_num_den(N, float(alpha), float(gamma))
    return result_from_num_den(num, den)


def hubhub_limit(alpha: float) -> float:
    """Large-N limit of the hub-hub ratio (independent of the hub loops)."""
    _check_loop(alpha, "alpha")
    a = float(alpha)
    return (3 * a**4 + 19 * a**3 + 41 * a**2 + 35 * a + 10) / (
        2 * a**4 + 11 * a**3 + 18 * a**2 + 10 * a + 4
    )


# ---------------------------------------------------------------------------
# ceiling fans


def cf_num_den(N: int, eps: float, beta: float):
    """Numerator/denominator polynomials for the ceiling fan."""
    e, B = eps, beta
    num = (2 + e) * (-1 + N + B) * (
        78
        + 4 * N * N * (9 + 11 * e + 2 * e * e)
        + e * e * (17 - 22 * B)
        - 122 * B
        + 24 * B * B
        + e * (83 - 125 * B + 22 * B * B)
        + N * (-114 + 68 * B + 5 * e * e * (-5 + 2 * B) + e * (-127 + 74 * B))
    )
    den = (
        -57
        + N**3 * (9 + 25 * e + 34 * e * e + 6 * e**3)
        + 157 * B
        - 155 * B * B
        + 15 * B**3
        + e**3 * (-12 + 29 * B - 22 * B * B)
        + e * e * (-76 + 201 * B - 177 * B * B + 22 * B**3)
        + e * (-109 + 294 * B - 273 * B * B + 28 * B**3)
        + N * N * (25 * (-3 + B) + 48 * e * e * (-3 + 2 * B)
                   + 2 * e**3 * (-12 + 7 * B) + 3 * e * (-53 + 26 * B))
        + N * (123 - 182 * B + 47 * B * B
               + e**3 * (30 - 43 * B + 10 * B * B)
               + 3 * e * e * (62 - 99 * B + 32 * B * B)
               + 3 * e * (81 - 124 * B + 35 * B * B))
    )
    return num, den


def bc_ceiling_fan(N: int, eps: float, beta: float) -> ThresholdResult:
    """Critical ratio for an N-vertex ceiling fan (N odd >= 3)."""
    _check_size(N, 3, "ceiling fan")
    _require(N % 2 == 1, f"ceiling fan needs odd N, got {N}")
    _check_loop(eps, "eps")
    _check_loop(beta, "beta")
    num, den = cf_num_den(N, float(eps), float(beta))
    return result_from_num_den(num, den)


def cf_limit(eps: float) -> float:
    """Large-N limit of the ceiling-fan ratio (independent of the hub loop)."""
    _check_loop(eps, "eps")
    e = float(eps)
    return (8 * e**3 + 60 * e**2 + 124 * e + 72) / (6 * e**3 + 34 * e**2 + 25 * e + 9)


_CF_EXCEPTION_CUBICS = {
    3: (3.0, 13.0, -17.0, -15.0),
    5: (9.0, 47.0, 8.0, -6.0),
}


def _largest_positive_root(c3: float, c2: float, c1: float, c0: float) -> float:
    """Largest real root of a cubic with f(0) < 0 and positive leading term.

    Bracketed bisection on [0, hi], then one Newton polish.
    """

    def f(x: float) -> float:
        return ((c3 * x + c2) * x + c1) * x + c0

    def fp(x: float) -> float:
        return (3.0 * c3 * x + 2.0 * c2) * x + c1

    lo, hi = 0.0, 1.0
    while f(hi) <= 0.0:
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if f(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    root = 0.5 * (lo + hi)
    slope = fp(root)
    if slope != 0.0:
        root -= f(root) / slope
    return root


def cf_exception_epsilon(N: int) -> float:
    """Leaf-loop strength above which the small ceiling fans (N = 3 or 5)
    favor cooperation regardless of the hub loop."""
    if N not in _CF_EXCEPTION_CUBICS:
        raise UnsupportedNError(f"exceptional ceiling-fan sizes are 3 and 5, got {N}")
    return _largest_positive_root(*_CF_EXCEPTION_CUBICS[N])
