"""Bosonic entropy function g(x) = (1+x)log(1+x) - x log x and friends.

Everything here works in natural log; conversion to bits is a single
multiplication applied at presentation time (see LogBase.factor).
"""

import math
from enum import Enum

__all__ = ["LogBase", "g", "g_prime", "log_mean_bounds"]


class LogBase(Enum):
    NATURAL = "nats"
    TWO = "bits"

    @property
    def factor(self) -> float:
        """Multiplier converting a natural-log value to this base."""
        return 1.0 if self is LogBase.NATURAL else 1.0 / math.log(2.0)


# Below this, (1+x)log(1+x) loses all significant digits of the x log x
# part; the series truncation error is < 1e-16 relative there.
_SERIES_CUTOFF = 1e-8


def g(x: float) -> float:
    """Mean-photon-number entropy of a thermal state, in nats.

    g(0) = 0 by the standard x log x -> 0 limit; small arguments use the
    series x(1 - log x) + x^2/2 to dodge catastrophic cancellation.
    """
    if x < 0.0:
        raise ValueError(f"g(x) requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    if x < _SERIES_CUTOFF:
        return x * (1.0 - math.log(x)) + 0.5 * x * x
    # (1+x)log(1+x) - x log x rearranged so nothing large cancels: both
    # terms stay O(log x) instead of O(x log x).
    return x * math.log1p(1.0 / x) + math.log1p(x)


def g_prime(x: float) -> float:
    """dg/dx = log((1+x)/x). Returns +inf at x = 0."""
    if x < 0.0:
        raise ValueError(f"g_prime(x) requires x >= 0, got {x}")
    if x == 0.0:
        return math.inf
    return math.log1p(1.0 / x)


def log_mean_bounds(x: float) -> tuple[float, float]:
    """Lower bounds on g_prime(x): the strict chain is

        log((1+x)/x) > 2/(2x+1) > 1/(x+1)   for x > 0,

    the tighter one being a case of the logarithmic mean inequality.
    """
    if x <= 0.0:
        raise ValueError(f"log_mean_bounds requires x > 0, got {x}")
    return 2.0 / (2.0 * x + 1.0), 1.0 / (x + 1.0)
