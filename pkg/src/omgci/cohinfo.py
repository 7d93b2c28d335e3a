"""Non-optimized coherent information G(N, K, tau) and its spectral machinery.

G = g(eta) - g(f) - g(ell), where (eta, f, ell) are the mean photon
numbers of the output mode and of the two joint output-reference modes.
The lossy branch applies for 0 < tau < 1; tau >= 1 routes to the
amplifier branch (the additive-noise class is its tau -> 1 limit).
"""

import math
from dataclasses import dataclass

from .entropy import g, g_prime

__all__ = [
    "SpectralParams",
    "CohInfoSample",
    "spectral_params",
    "coherent_info",
    "df_dn",
    "dG_dN",
    "limit_inf",
    "b2_closed_form",
    "limits_at_zero",
    "limits_at_kinf",
]

# Coefficients smaller than this in a coef*g_prime(x) product are pure
# round-off of an identically-zero prefactor (K=0 branches); they must not
# multiply the +inf of g_prime(0).
_COEF_EPS = 1e-12


@dataclass(frozen=True)
class SpectralParams:
    """(eta, f, ell, p, q) at one evaluation point; all of eta, f, ell >= 0."""

    eta: float
    f: float
    ell: float
    p: float
    q: float


@dataclass(frozen=True)
class CohInfoSample:
    """One scan point: input photon number, G, and dG/dN."""

    n: float
    value: float
    slope: float


def _validate(n: float, k: float, tau: float) -> None:
    if n < 0.0:
        raise ValueError(f"N must be >= 0, got {n}")
    if k < 0.0:
        raise ValueError(f"K must be >= 0, got {k}")
    if tau <= 0.0:
        raise ValueError(f"tau must be > 0, got {tau}")


def spectral_params(n: float, k: float, tau: float) -> SpectralParams:
    """Spectral parameters entering G.

    p is evaluated from the expanded all-nonnegative-summand form, and f,
    ell from rationalized quotients, so no catastrophic cancellation occurs
    anywhere on the domain (in particular at large N and at K = 0, where f
    or ell vanish exactly).
    """
    _validate(n, k, tau)
    loss = tau < 1.0
    if loss:
        eta = tau * n + k
        p = math.sqrt(
            (1.0 + k) ** 2
            + 2.0 * n * (k * tau + k - tau + 1.0)
            + (n * (1.0 - tau)) ** 2
        )
        q = k + n * (1.0 - tau) + 2.0 * k * n
    else:
        eta = tau * n + tau - 1.0 + k
        p = math.sqrt(
            (tau + k) ** 2
            + 2.0 * n * (tau * tau + k * tau + k - tau)
            + (n * (tau - 1.0)) ** 2
        )
        q = k + 2.0 * k * n + n * (tau - 1.0) + tau

    # f = (p + eta - N - 1)/2, rationalized when the direct form would
    # subtract nearly equal numbers.  The factor eta - tau*N simplifies
    # exactly to K (loss) or tau - 1 + K (amp); using the simplified
    # constant matters, the float difference would carry eps*eta error.
    a = n + 1.0 - eta
    if a >= 0.0:
        f = 2.0 * (n + 1.0) * (k if loss else tau - 1.0 + k) / (p + a)
    else:
        f = 0.5 * (p + eta - n - 1.0)

    # ell = (p - eta + N - 1)/2; eta + 1 - tau*(N+1) is exactly
    # 1 - tau + K (loss) or K (amp).
    b = eta + 1.0 - n
    if b >= 0.0:
        ell = 2.0 * n * (1.0 - tau + k if loss else k) / (p + b)
    else:
        ell = 0.5 * (p - eta + n - 1.0)

    return SpectralParams(eta=eta, f=f, ell=ell, p=p, q=q)


def coherent_info(n: float, k: float, tau: float) -> float:
    """G(N, K, tau) = g(eta) - g(f) - g(ell), in nats."""
    sp = spectral_params(n, k, tau)
    return g(sp.eta) - g(sp.f) - g(sp.ell)


def df_dn(n: float, k: float, tau: float) -> float:
    """h = df/dN in closed form (the ell slope is h + 1 - tau).

    h = (num + (tau-1)p)/(2p).  On the lossy branch the two addends
    cancel (h -> 0 at large N), but num^2 - (1-tau)^2 p^2 collapses to the
    N-independent constant 4*K*tau*(1+K-tau), so the rationalized quotient
    is exact; on the amplifier branch both addends are positive as is.
    """
    sp = spectral_params(n, k, tau)
    if tau < 1.0:
        num = (1.0 + k - tau + k * tau) + n * (1.0 - tau) ** 2
        return 2.0 * k * tau * (1.0 + k - tau) / (sp.p * (num + (1.0 - tau) * sp.p))
    num = k * (1.0 + tau) + (tau - 1.0) * (n * (tau - 1.0) + tau)
    return 0.5 * (tau - 1.0 + num / sp.p)


def _slope_term(coef: float, x: float) -> float:
    """coef * g_prime(x) with the 0 * inf corner resolved to 0."""
    if abs(coef) < _COEF_EPS:
        return 0.0
    gp = g_prime(x)
    if math.isinf(gp):
        return math.copysign(math.inf, coef)
    return coef * gp


def dG_dN(n: float, k: float, tau: float) -> float:
    """dG/dN. At N = 0 with K > 0 the derivative diverges to -inf."""
    _validate(n, k, tau)
    if n == 0.0:
        if k > 0.0:
            return -math.inf
        # K = 0 limits: loss diverges to +inf, amp tends to log(tau/(tau-1)).
        if tau <= 1.0:
            return math.inf
        return math.log(tau / (tau - 1.0))
    sp = spectral_params(n, k, tau)
    h = df_dn(n, k, tau)
    return (
        _slope_term(tau, sp.eta)
        - _slope_term(h, sp.f)
        - _slope_term(h + 1.0 - tau, sp.ell)
    )


def limit_inf(k: float, tau: float) -> float:
    """lim_{N->inf} G(N, K, tau), valid for 0 < tau != 1 (tau = 1 delegates
    to the additive-noise closed form).

    With x = K/|1-tau| this is x log x - (1+x) log(1+x) + log(tau/|1-tau|),
    evaluated as -x log1p(1/x) - log1p(x) + log(tau/|1-tau|) for stability
    at large x.
    """
    if k < 0.0:
        raise ValueError(f"K must be >= 0, got {k}")
    if tau <= 0.0:
        raise ValueError(f"tau must be > 0, got {tau}")
    if tau == 1.0:
        return b2_closed_form(k) if k > 0.0 else math.inf
    base = math.log(tau / abs(1.0 - tau))
    if k == 0.0:
        return base
    x = k / abs(1.0 - tau)
    return -x * math.log1p(1.0 / x) - math.log1p(x) + base


def b2_closed_form(k: float) -> float:
    """Infinite-power coherent information of the additive-noise class:
    -1 - log K for K > 0; +inf at K = 0 (identity channel)."""
    if k < 0.0:
        raise ValueError(f"K must be >= 0, got {k}")
    if k == 0.0:
        return math.inf
    return -1.0 - math.log(k)


def limits_at_zero(k: float, tau: float) -> tuple[float, float, float]:
    """N -> 0 limits of (dg(eta)/dN, dg(ell)/dN, dg(f)/dN)."""
    if k < 0.0:
        raise ValueError(f"K must be >= 0, got {k}")
    if tau <= 0.0:
        raise ValueError(f"tau must be > 0, got {tau}")
    if tau < 1.0:
        if k == 0.0:
            return math.inf, math.inf, 0.0
        lg = math.log((1.0 + k) / k)
        return tau * lg, math.inf, (k * tau / (1.0 + k)) * lg
    lo = k - 1.0 + tau
    if lo == 0.0:  # identity-channel corner (tau = 1, K = 0)
        return math.inf, 0.0, 0.0
    lg = math.log((k + tau) / lo)
    dgell = math.inf if k > 0.0 else 0.0
    return tau * lg, dgell, tau * (lo / (k + tau)) * lg


def limits_at_kinf(n: float) -> tuple[float, float, float]:
    """K -> inf limits of (dg(eta)/dN, dg(ell)/dN, dg(f)/dN) = (0, log((1+N)/N), 0)."""
    if n <= 0.0:
        raise ValueError(f"N must be > 0, got {n}")
    return 0.0, math.log1p(1.0 / n), 0.0


def sample(n: float, k: float, tau: float) -> CohInfoSample:
    """Convenience bundle of (N, G, dG/dN)."""
    return CohInfoSample(n=n, value=coherent_info(n, k, tau), slope=dG_dN(n, k, tau))
