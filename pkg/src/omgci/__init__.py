"""Coherent information of phase-insensitive one-mode Gaussian channels
with nonzero added classical noise: evaluation, optimization,
classification, and numerical verification of the underlying identities.
"""

from .analysis import (
    Attained,
    CurveShape,
    MultipleStationaryPoints,
    NoThreshold,
    Region,
    RegionLabel,
    StationaryReport,
    SubLabel,
    classify,
    grid_oracle,
    k_threshold,
    region_map,
    stationary_point,
    supremum,
)
from .channel import (
    CanonicalForm,
    ChannelClass,
    ChannelSpec,
    canonical_form,
    cp_check,
    k_from_y,
    nbar_from_k,
)
from .cohinfo import (
    CohInfoSample,
    SpectralParams,
    b2_closed_form,
    coherent_info,
    dG_dN,
    limit_inf,
    limits_at_kinf,
    limits_at_zero,
    spectral_params,
)
from .dilation import Cov2, apply_channel, coherent_info_oracle, symplectic_eigs, tmsv_cov
from .entropy import LogBase, g, g_prime, log_mean_bounds
from .identity import (
    IdentityTerms,
    identity_terms,
    lhs_dk,
    rhs_monotone_check,
    saturation_residual,
    tight_bound_gap,
)
from .verify import run_verification

__version__ = "0.1.0"
