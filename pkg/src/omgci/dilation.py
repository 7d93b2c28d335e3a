"""Independent covariance-matrix cross-check of the coherent information.

A two-mode squeezed vacuum purifies the thermal input; the channel acts on
one arm; H(B) - H(BR) is then read off symplectic eigenvalues.  Convention:
vacuum covariance = identity, so a thermal state with mean photon number n
has covariance (2n+1)*I and a mode with symplectic eigenvalue nu
contributes entropy g((nu-1)/2).
"""

import math
from dataclasses import dataclass

import numpy as np

from .channel import CanonicalForm, ChannelClass, ChannelSpec, canonical_form
from .entropy import g

__all__ = ["Cov2", "tmsv_cov", "apply_channel", "symplectic_eigs", "coherent_info_oracle"]


@dataclass(frozen=True)
class Cov2:
    """Two-mode covariance matrix in block form [[a, c], [c^T, b]]."""

    a: np.ndarray  # mode B (channel output arm)
    b: np.ndarray  # mode R (reference)
    c: np.ndarray  # cross block

    def matrix(self) -> np.ndarray:
        return np.block([[self.a, self.c], [self.c.T, self.b]])


def tmsv_cov(n: float) -> Cov2:
    """Two-mode squeezed vacuum with mean photon number n in each arm."""
    if n < 0.0:
        raise ValueError(f"N must be >= 0, got {n}")
    d = (2.0 * n + 1.0) * np.eye(2)
    c = 2.0 * math.sqrt(n * (n + 1.0)) * np.diag([1.0, -1.0])
    return Cov2(a=d.copy(), b=d.copy(), c=c)


def apply_channel(cov: Cov2, form: CanonicalForm) -> Cov2:
    """Act with V -> T V T^T + N on the B arm only (T, N scalar matrices)."""
    s = form.t_scale
    return Cov2(
        a=s * s * cov.a + form.n_scale * np.eye(2),
        b=cov.b.copy(),
        c=s * cov.c,
    )


def symplectic_eigs(cov: Cov2) -> tuple[float, float]:
    """(nu_plus, nu_minus) from the two-mode symplectic invariants.

    nu_minus^2 is evaluated as 2 det V / (Delta + sqrt(Delta^2 - 4 det V))
    to keep precision when the eigenvalues are widely split.
    """
    delta = (
        float(np.linalg.det(cov.a))
        + float(np.linalg.det(cov.b))
        + 2.0 * float(np.linalg.det(cov.c))
    )
    det_v = float(np.linalg.det(cov.matrix()))
    disc = max(delta * delta - 4.0 * det_v, 0.0)
    root = math.sqrt(disc)
    nu_plus = math.sqrt(0.5 * (delta + root))
    nu_minus = math.sqrt(2.0 * det_v / (delta + root))
    return nu_plus, nu_minus


def _thermal_occupation(nu: float) -> float:
    # Round-off can push a pure-state eigenvalue slightly below 1.
    return max(0.5 * (nu - 1.0), 0.0)


def coherent_info_oracle(n: float, spec: ChannelSpec) -> float:
    """H(B) - H(BR) for a TMSV input of power n through the given channel."""
    if spec.cls is ChannelClass.CONJUGATE_AMP:
        raise ValueError("conjugate-amplifying channels are not evaluated")
    if spec.cls is ChannelClass.B2:
        nbar = 2.0 * spec.k  # y = nbar and K = y/2 at tau = 1
    else:
        nbar = spec.nbar
    out = apply_channel(tmsv_cov(n), canonical_form(spec, nbar))
    nu_b = math.sqrt(float(np.linalg.det(out.a)))
    nu_p, nu_m = symplectic_eigs(out)
    return (
        g(_thermal_occupation(nu_b))
        - g(_thermal_occupation(nu_p))
        - g(_thermal_occupation(nu_m))
    )
