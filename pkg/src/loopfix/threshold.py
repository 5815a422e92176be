"""Critical benefit-to-cost ratio and regime classification.

Weak selection favors cooperation to first order when
-c * eta2 + b * (eta3 - eta1) > 0, so the critical ratio is

    (b/c)* = eta2 / (eta3 - eta1).

The sign of the denominator fixes the regime: positive gives a finite
cooperation threshold, negative a spite threshold in (-inf, -1), and a
(relatively) vanishing denominator means no finite ratio favors the mutant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import coalescence
from .errors import UndefinedSigmaError
from .graph import Graph, validate

__all__ = [
    "Regime",
    "ThresholdResult",
    "classify_regime",
    "critical_ratio",
    "result_from_num_den",
    "structure_coefficient",
]

_DENOMINATOR_REL_TOL = 1e-12


class Regime(str, Enum):
    COOPERATION = "cooperation"
    SPITE = "spite"
    NEUTRAL_INFINITE = "neutral_infinite"

    def __str__(self) -> str:  # CSV-friendly
        return self.value


@dataclass(frozen=True)
class ThresholdResult:
    """Critical ratio with the quantities that produced it.

    ``numerator`` and ``denominator`` are positive multiples of eta2 and
    eta3 - eta1 (exact values from the coalescence engine; scaled polynomial
    values from the closed-form family evaluators). ``sigma`` is the structure
    coefficient, present only when the ratio is finite.
    """

    bc_star: float
    regime: Regime
    numerator: float
    denominator: float
    sigma: float | None = None


def classify_regime(numerator: float, denominator: float) -> Regime:
    """Regime from the signs, treating |den| <= 1e-12 * max(1, |num|) as zero."""
    tol = _DENOMINATOR_REL_TOL * max(1.0, abs(numerator))
    if denominator > tol:
        return Regime.COOPERATION
    if denominator < -tol:
        return Regime.SPITE
    return Regime.NEUTRAL_INFINITE


def structure_coefficient(bc_star: float) -> float:
    """sigma = (x + 1) / (x - 1); an involution on its domain."""
    if not math.isfinite(bc_star) or bc_star == 1.0:
        raise UndefinedSigmaError(f"structure coefficient undefined at {bc_star}")
    return (bc_star + 1.0) / (bc_star - 1.0)


def result_from_num_den(numerator: float, denominator: float) -> ThresholdResult:
    """Assemble a ThresholdResult from a numerator/denominator pair."""
    regime = classify_regime(numerator, denominator)
    if regime is Regime.NEUTRAL_INFINITE:
        return ThresholdResult(
            bc_star=math.inf,
            regime=regime,
            numerator=float(numerator),
            denominator=float(denominator),
        )
    bc = float(numerator / denominator)
    return ThresholdResult(
        bc_star=bc,
        regime=regime,
        numerator=float(numerator),
        denominator=float(denominator),
        sigma=structure_coefficient(bc),
    )


def critical_ratio(g: Graph, method: str = "direct") -> ThresholdResult:
    """Critical benefit-to-cost ratio of a valid graph (n >= 3, connected)."""
    validate(g, threshold=True)
    res = coalescence.compute(g, method=method)
    return result_from_num_den(res.eta2, res.eta3 - res.eta1)
