"""Supremum of the coherent information, stationary-point location, the
noise threshold, a brute-force grid oracle, and (tau, y)-plane
classification.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import brentq

from .channel import cp_check, k_from_y
from .cohinfo import coherent_info, dG_dN, limit_inf

__all__ = [
    "Attained",
    "CurveShape",
    "Region",
    "SubLabel",
    "StationaryReport",
    "RegionLabel",
    "MultipleStationaryPoints",
    "NoThreshold",
    "supremum",
    "grid_oracle",
    "stationary_point",
    "k_threshold",
    "classify",
    "region_map",
]


class MultipleStationaryPoints(RuntimeError):
    """More than one sign change of dG/dN found; contradicts uniqueness."""


class NoThreshold(ValueError):
    """The infinite-power limit is already nonpositive at K = 0."""


class Attained(Enum):
    INFINITE_N = "infinite_n"
    ZERO_N = "zero_n"


class CurveShape(Enum):
    MONOTONE_INCREASING_K0 = "monotone_increasing_k0"
    DIP_THEN_POSITIVE = "dip_then_positive"
    DIP_ALL_NEGATIVE = "dip_all_negative"
    MONOTONE_DECREASING = "monotone_decreasing"
    UNRESOLVED = "unresolved"


class Region(Enum):
    UNPHYSICAL = "unphysical"
    POSITIVE_CI = "positive_ci"
    ZERO_CI = "zero_ci"


class SubLabel(Enum):
    NONE = "none"
    ZERO_NOISE_BOUNDARY = "zero_noise_boundary"
    LOW_TAU = "low_tau"
    CONJUGATE_AMP = "conjugate_amp"


@dataclass(frozen=True)
class StationaryReport:
    exists: bool
    n_star: float | None
    value: float | None
    shape: CurveShape


@dataclass(frozen=True)
class RegionLabel:
    label: Region
    sub: SubLabel
    limit_value: float | None


_DERIV_TOL = 1e-10
_K_TOL = 1e-12


def supremum(k: float, tau: float) -> tuple[float, Attained]:
    """sup_N G(N, K, tau).

    On tau in (1/2, inf) the supremum is max(limit_inf, 0), attained at
    infinite input power when positive and at N = 0 otherwise.  For
    tau <= 1/2 (and tau <= 0) the channel cannot carry coherent
    information, so the supremum is 0 at N = 0.
    """
    if k < 0.0:
        raise ValueError(f"K must be >= 0, got {k}")
    if tau <= 0.5:
        return 0.0, Attained.ZERO_N
    li = limit_inf(k, tau)
    if li > 0.0:
        return li, Attained.INFINITE_N
    return 0.0, Attained.ZERO_N


def grid_oracle(
    k: float, tau: float, n_max: float, points: int
) -> tuple[float, float]:
    """Brute-force maximum of G over {0} plus a log grid [1e-6, n_max]."""
    if points < 16:
        raise ValueError(f"points must be >= 16, got {points}")
    if n_max <= 0.0:
        raise ValueError(f"n_max must be > 0, got {n_max}")
    grid = np.concatenate(([0.0], np.logspace(-6.0, math.log10(n_max), points)))
    vals = np.array([coherent_info(float(n), k, tau) for n in grid])
    i = int(np.argmax(vals))
    return float(vals[i]), float(grid[i])


def _shape_for_limit(li: float, found: bool) -> CurveShape:
    if found:
        return (
            CurveShape.DIP_THEN_POSITIVE if li > 0.0 else CurveShape.DIP_ALL_NEGATIVE
        )
    if li <= 0.0:
        return CurveShape.MONOTONE_DECREASING
    return CurveShape.UNRESOLVED


def stationary_point(
    k: float, tau: float, n_lo: float = 1e-9, n_hi: float = 1e7, points: int = 800
) -> StationaryReport:
    """Locate the (at most one) stationary point of N -> G(N, K, tau).

    Scans dG/dN on a log grid, refines any sign change by root bracketing
    to |dG/dN| <= 1e-10, and tags the curve shape.  More than one sign
    change raises MultipleStationaryPoints, since uniqueness is a proved
    property of the valid domain.
    """
    if k < 0.0:
        raise ValueError(f"K must be >= 0, got {k}")
    if tau <= 0.5:
        raise ValueError(f"tau must be > 1/2, got {tau}")
    if k == 0.0:
        # No stationary point: G is strictly increasing toward its limit.
        return StationaryReport(False, None, None, CurveShape.MONOTONE_INCREASING_K0)

    grid = np.logspace(math.log10(n_lo), math.log10(n_hi), points)
    der = [dG_dN(float(n), k, tau) for n in grid]
    brackets = [
        (float(grid[i]), float(grid[i + 1]))
        for i in range(points - 1)
        if der[i] == 0.0 or (der[i] < 0.0) != (der[i + 1] < 0.0)
    ]
    li = limit_inf(k, tau)
    # A genuine minimum lies strictly below the infinite-power limit (G rises
    # toward it afterwards); sign flips of the vanishing tail derivative,
    # which are pure round-off, fail that test and are discarded.
    roots = []
    for a, b in brackets:
        n_star = float(brentq(lambda n: dG_dN(n, k, tau), a, b, rtol=8.9e-16))
        value = coherent_info(n_star, k, tau)
        if value < li:
            roots.append((n_star, value))
    if len(roots) > 1:
        raise MultipleStationaryPoints(
            f"{len(roots)} stationary points of G at K={k}, tau={tau}"
        )
    if not roots:
        return StationaryReport(False, None, None, _shape_for_limit(li, False))
    n_star, value = roots[0]
    if abs(dG_dN(n_star, k, tau)) > _DERIV_TOL:
        return StationaryReport(False, None, None, CurveShape.UNRESOLVED)
    return StationaryReport(True, n_star, value, _shape_for_limit(li, True))


def k_threshold(tau: float) -> float:
    """The unique K with limit_inf(K, tau) = 0, for tau > 1/2.

    limit_inf is strictly decreasing in K and positive at K = 0 on this
    domain, so bisection on an expanding bracket always succeeds.
    """
    if tau == 1.0:
        return math.exp(-1.0)
    if tau <= 0.0 or limit_inf(0.0, tau) <= 0.0:
        raise NoThreshold(f"limit_inf(0, tau={tau}) is not positive")
    k_lo = 1e-12
    if limit_inf(k_lo, tau) <= 0.0:
        return k_lo
    k_hi = 1e-6
    while limit_inf(k_hi, tau) > 0.0:
        k_hi *= 2.0
        if k_hi > 1e12:
            raise NoThreshold(f"no sign flip of limit_inf up to K={k_hi}")
    return float(brentq(lambda k: limit_inf(k, tau), k_lo, k_hi, xtol=_K_TOL))


def classify(tau: float, y: float) -> RegionLabel:
    """Label one point of the (tau, y) plane."""
    if not cp_check(tau, y):
        return RegionLabel(Region.UNPHYSICAL, SubLabel.NONE, None)
    if tau <= 0.0:
        return RegionLabel(Region.ZERO_CI, SubLabel.CONJUGATE_AMP, None)
    if tau <= 0.5:
        return RegionLabel(Region.ZERO_CI, SubLabel.LOW_TAU, None)
    k = k_from_y(tau, y)
    li = limit_inf(k, tau)
    sub = SubLabel.ZERO_NOISE_BOUNDARY if k == 0.0 else SubLabel.NONE
    label = Region.POSITIVE_CI if li > 0.0 else Region.ZERO_CI
    return RegionLabel(label, sub, li)


def region_map(
    tau_range: tuple[float, float],
    y_range: tuple[float, float],
    resolution: int | tuple[int, int],
    workers: int = 1,
) -> list[tuple[float, float, RegionLabel]]:
    """Row-major classification grid: tau varying in the outer loop.

    `workers` > 1 classifies cells on a thread pool; the ordered map keeps
    the output identical to the sequential result.
    """
    if isinstance(resolution, int):
        resolution = (resolution, resolution)
    n_tau, n_y = resolution
    if n_tau < 1 or n_y < 1:
        raise ValueError(f"resolution must be positive, got {resolution}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    taus = np.linspace(tau_range[0], tau_range[1], n_tau)
    ys = np.linspace(y_range[0], y_range[1], n_y)
    points = [(float(t), float(y)) for t in taus for y in ys]
    if workers == 1:
        return [(t, y, classify(t, y)) for t, y in points]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        labels = list(pool.map(lambda p: classify(*p), points))
    return [(t, y, lab) for (t, y), lab in zip(points, labels)]
