"""Phase-insensitive one-mode Gaussian channel classes and parametrizations.

A channel acts on covariance matrices as V -> T V T^T + N. The classes
handled here are the diagonal (canonical) representatives: lossy
(0 < tau < 1), amplifying (tau > 1), additive classical noise (tau = 1)
and, for classification purposes only, conjugate-amplifying (tau < 0).

Coordinates: the stored pair is (tau, K); y = |tau-1| + 2K and
nbar = K/|tau-1| are derived views.
"""

from dataclasses import dataclass, field
from enum import Enum

__all__ = [
    "ChannelClass",
    "ChannelSpec",
    "CanonicalForm",
    "cp_check",
    "k_from_y",
    "nbar_from_k",
    "canonical_form",
]


class ChannelClass(Enum):
    LOSS = "loss"
    AMP = "amp"
    B2 = "b2"
    CONJUGATE_AMP = "conjugate_amp"


def _tau_consistent(cls: ChannelClass, tau: float) -> bool:
    if cls is ChannelClass.LOSS:
        return 0.0 < tau < 1.0
    if cls is ChannelClass.AMP:
        return tau > 1.0
    if cls is ChannelClass.B2:
        return tau == 1.0
    return tau < 0.0


@dataclass(frozen=True)
class ChannelSpec:
    """One channel: class tag, tau = det T, and added classical noise K >= 0."""

    cls: ChannelClass
    tau: float
    k: float = 0.0

    def __post_init__(self):
        if not _tau_consistent(self.cls, self.tau):
            raise ValueError(
                f"tau={self.tau} inconsistent with class {self.cls.value}"
            )
        if self.k < 0.0:
            raise ValueError(f"K must be >= 0, got {self.k}")

    @property
    def y(self) -> float:
        """y = sqrt(det N) = |tau-1| + 2K; always passes cp_check."""
        return abs(self.tau - 1.0) + 2.0 * self.k

    @property
    def nbar(self) -> float:
        """Mean thermal photons in the environment mode (tau != 1)."""
        return nbar_from_k(self.tau, self.k)


@dataclass(frozen=True)
class CanonicalForm:
    """Diagonal representative (T, N) = (t_scale*I, n_scale*I), zero displacement."""

    t_scale: float
    n_scale: float
    delta: tuple[float, float] = field(default=(0.0, 0.0))

    def __post_init__(self):
        if self.n_scale < 0.0:
            raise ValueError(f"n_scale must be >= 0, got {self.n_scale}")


def cp_check(tau: float, y: float) -> bool:
    """Complete positivity: y >= |tau - 1| and y >= 0."""
    return y >= abs(tau - 1.0) and y >= 0.0


def k_from_y(tau: float, y: float) -> float:
    """Added classical noise K = (y - |tau-1|)/2 for a physical channel."""
    if not cp_check(tau, y):
        raise ValueError(f"(tau={tau}, y={y}) violates complete positivity")
    return 0.5 * (y - abs(tau - 1.0))


def nbar_from_k(tau: float, k: float) -> float:
    """Environment thermal photon number nbar = K/|tau-1| (loss/amp only)."""
    if k < 0.0:
        raise ValueError(f"K must be >= 0, got {k}")
    if tau == 1.0:
        raise ValueError("nbar is undefined at tau = 1; B2 uses N = nbar*I directly")
    return k / abs(tau - 1.0)


def canonical_form(spec: ChannelSpec, nbar: float) -> CanonicalForm:
    """Canonical (T, N) scalars for the given class and thermal occupation."""
    if nbar < 0.0:
        raise ValueError(f"nbar must be >= 0, got {nbar}")
    if spec.cls is ChannelClass.LOSS:
        return CanonicalForm(spec.tau ** 0.5, (1.0 - spec.tau) * (2.0 * nbar + 1.0))
    if spec.cls is ChannelClass.AMP:
        return CanonicalForm(spec.tau ** 0.5, (spec.tau - 1.0) * (2.0 * nbar + 1.0))
    if spec.cls is ChannelClass.B2:
        return CanonicalForm(1.0, nbar)
    raise ValueError("conjugate-amplifying channels have no evaluation support")
