"""The auxiliary quantities F and h, the K-derivatives for both channel
branches, and the saturated identity underlying stationary-point uniqueness,
exposed as residual computations so they can be property-tested.
"""

import math
from dataclasses import dataclass

from .cohinfo import _slope_term, df_dn, spectral_params
from .entropy import g_prime

__all__ = [
    "IdentityTerms",
    "identity_terms",
    "lhs_dk",
    "saturation_residual",
    "tight_bound_gap",
    "rhs_monotone_check",
]


@dataclass(frozen=True)
class IdentityTerms:
    """Closed-form ingredients of the K-monotonicity argument.

    big_f = f*ell/(f+ell+1); h = df/dN; h_over_hk = h/(dh/dK);
    df_dk = dF/dK; dh_dk = dh/dK; dell_dk = dell/dK.
    """

    big_f: float
    h: float
    h_over_hk: float
    df_dk: float
    dh_dk: float
    dell_dk: float


def _check_branch(n: float, k: float, tau: float) -> bool:
    if n <= 0.0:
        raise ValueError(f"N must be > 0, got {n}")
    if k < 0.0:
        raise ValueError(f"K must be >= 0, got {k}")
    if tau <= 0.0:
        raise ValueError(f"tau must be > 0, got {tau}")
    return tau < 1.0


def big_f(n: float, k: float, tau: float) -> float:
    """F = f*ell/(f+ell+1), via the rationalized (1+q-p)/(2p) forms.

    (1+q)^2 - p^2 = 4KN(1+N)(1+K-tau) on the lossy branch and
    q^2 - p^2 = 4KN(1+N)(K+tau-1) on the amplifier branch, so F is a
    quotient of nonnegative products with no cancellation.
    """
    loss = _check_branch(n, k, tau)
    sp = spectral_params(n, k, tau)
    if loss:
        num = 2.0 * k * n * (1.0 + n) * (1.0 + k - tau)
        return num / (sp.p * (1.0 + sp.q + sp.p))
    num = 2.0 * k * n * (1.0 + n) * (k + tau - 1.0)
    return num / (sp.p * (sp.q + sp.p))


def identity_terms(n: float, k: float, tau: float) -> IdentityTerms:
    """All closed-form terms at one point (branch picked by tau)."""
    loss = _check_branch(n, k, tau)
    sp = spectral_params(n, k, tau)
    p, q = sp.p, sp.q
    h = df_dn(n, k, tau)
    p3 = p * p * p
    if loss:
        w = k * (1.0 + tau) + (tau - 1.0) * (n * (tau - 1.0) - 1.0)
        df_dk = n * (1.0 + n) / p3 * w
        dh_dk = tau * (q + 1.0) / p3
    else:
        w = k * (1.0 + tau) + (tau - 1.0) * (n * (tau - 1.0) + tau)
        df_dk = n * (1.0 + n) / p3 * w
        dh_dk = tau * q / p3
    # h/(dh/dK): the textbook closed form (p^2/(2 tau q'))*(w + (tau-1)p)
    # cancels catastrophically on the lossy branch, so the quotient of the
    # stable factors is used instead (they are algebraically identical).
    h_over_hk = h / dh_dk
    # dell/dK = (A - p)/(2p) with A = N + eta + 1; rationalizing with
    # A^2 - p^2 = 4 tau N(N+1) avoids the small-N cancellation.
    a_sum = n + sp.eta + 1.0
    dell_dk = 2.0 * tau * n * (1.0 + n) / (p * (a_sum + p))
    return IdentityTerms(
        big_f=big_f(n, k, tau),
        h=h,
        h_over_hk=h_over_hk,
        df_dk=df_dk,
        dh_dk=dh_dk,
        dell_dk=dell_dk,
    )


def lhs_dk(n: float, k: float, tau: float) -> float:
    """d/dK of the eta term of the stationary condition; negative everywhere."""
    loss = _check_branch(n, k, tau)
    if loss:
        return -tau / ((k + n * tau) * (1.0 + k + n * tau))
    return -tau / ((tau - 1.0 + k + n * tau) * (k + tau + n * tau))


def saturation_residual(n: float, k: float, tau: float) -> float:
    """Residual of the saturated identity

        2F/(2F+1) = (h/h_K) * F_K/(1+F) + (1-tau) * (F/h_K) * ell_K/((1+ell)ell),

    normalized by the largest participating term.  At domain corners
    (large N with small K) the two RHS summands reach ~1e9 and cancel, so
    only a relative residual is meaningful in double precision.  The
    ell -> 0 boundary is handled by the exact algebraic reduction
    F/ell = f/(f+ell+1), which removes the singularity instead of taking
    a numerical limit.
    """
    t = identity_terms(n, k, tau)
    sp = spectral_params(n, k, tau)
    lhs = 2.0 * t.big_f / (2.0 * t.big_f + 1.0)
    first = t.h_over_hk * t.df_dk / (1.0 + t.big_f)
    f_over_ell = sp.f / ((sp.f + sp.ell + 1.0) * (1.0 + sp.ell))
    second = (1.0 - tau) * f_over_ell * t.dell_dk / t.dh_dk
    scale = max(1.0, abs(lhs), abs(first), abs(second))
    return (lhs - first - second) / scale


def tight_bound_gap(n: float, k: float, tau: float) -> float:
    """F*g'(F) - 2F/(2F+1); strictly positive for F > 0, zero at F = 0."""
    f = big_f(n, k, tau)
    if f == 0.0:
        return 0.0
    return f * g_prime(f) - 2.0 * f / (2.0 * f + 1.0)


def stationary_rhs(n: float, k: float, tau: float) -> float:
    """RHS of the stationary condition: h*g'(F) + (1-tau)*g'(ell)."""
    _check_branch(n, k, tau)
    h = df_dn(n, k, tau)
    sp = spectral_params(n, k, tau)
    return _slope_term(h, big_f(n, k, tau)) + _slope_term(1.0 - tau, sp.ell)


def rhs_monotone_check(n: float, k1: float, k2: float, tau: float) -> bool:
    """True iff the stationary-condition RHS does not decrease from k1 to k2."""
    if not 0.0 <= k1 < k2:
        raise ValueError(f"need 0 <= k1 < k2, got {k1}, {k2}")
    return stationary_rhs(n, k2, tau) >= stationary_rhs(n, k1, tau)
