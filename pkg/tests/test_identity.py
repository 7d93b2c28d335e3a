import numpy as np
import pytest

from omgci.cohinfo import spectral_params
from omgci.identity import (
    big_f,
    identity_terms,
    lhs_dk,
    rhs_monotone_check,
    saturation_residual,
    stationary_rhs,
    tight_bound_gap,
)
from oracle_utils import central_diff


def _random_points(seed, count):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = 10.0 ** rng.uniform(-3, 3)
        k = 10.0 ** rng.uniform(-3, 1)
        tau = rng.uniform(0.501, 0.999) if rng.random() < 0.5 else rng.uniform(1.001, 8)
        yield n, k, tau


def test_big_f_equals_definition():
    for n, k, tau in [(2.0, 0.3, 0.8), (0.4, 0.05, 0.6), (7.0, 1.2, 3.5)]:
        sp = spectral_params(n, k, tau)
        expect = sp.f * sp.ell / (sp.f + sp.ell + 1.0)
        assert big_f(n, k, tau) == pytest.approx(expect, rel=1e-12), (n, k, tau)
    for n, k, tau in _random_points(17, 300):
        sp = spectral_params(n, k, tau)
        expect = sp.f * sp.ell / (sp.f + sp.ell + 1.0)
        assert big_f(n, k, tau) == pytest.approx(expect, rel=1e-9), (n, k, tau)


def test_big_f_vanishes_without_noise():
    assert big_f(1.0, 0.0, 0.75) == 0.0
    assert big_f(3.0, 0.0, 2.0) == 0.0


def test_identity_terms_are_k_derivatives():
    for n, k, tau in [(5.0, 0.7, 1.4), (2.0, 0.3, 0.8), (0.6, 0.1, 0.6)]:
        t = identity_terms(n, k, tau)
        step = 1e-6 * k
        fd_df = central_diff(lambda x: big_f(n, x, tau), k, step)
        fd_dell = central_diff(lambda x: spectral_params(n, x, tau).ell, k, step)
        assert t.df_dk == pytest.approx(fd_df, rel=1e-6), (n, k, tau)
        assert t.dell_dk == pytest.approx(fd_dell, rel=1e-6), (n, k, tau)
        # h = df/dN and dh/dK via a mixed finite difference
        fd_h = central_diff(lambda x: spectral_params(x, k, tau).f, n, 1e-6 * n)
        assert t.h == pytest.approx(fd_h, rel=1e-6), (n, k, tau)
        fd_dh = central_diff(
            lambda x: identity_terms(n, x, tau).h, k, step
        )
        assert t.dh_dk == pytest.approx(fd_dh, rel=1e-5), (n, k, tau)
        assert t.h_over_hk == pytest.approx(t.h / t.dh_dk, rel=1e-12)


def test_lhs_dk_values_and_sign():
    # loss at tau = 1/2, N = K = 1: eta = 3/2, derivative -tau/((K+Ntau)(1+K+Ntau))
    assert lhs_dk(1.0, 1.0, 0.5) == pytest.approx(-0.5 / (1.5 * 2.5), rel=1e-14)
    assert lhs_dk(1.0, 0.5, 2.0) == pytest.approx(-2.0 / (3.5 * 4.5), rel=1e-14)
    for n, k, tau in _random_points(23, 200):
        assert lhs_dk(n, k, tau) < 0.0


def test_saturation_residual_tiny():
    assert saturation_residual(1.0, 1e-300, 0.75) == pytest.approx(0.0, abs=1e-12)
    for n, k, tau in [(1.0, 0.2, 0.8), (30.0, 0.01, 0.6), (0.2, 2.0, 5.0), (1e3, 1e-3, 1.1)]:
        assert abs(saturation_residual(n, k, tau)) < 1e-10, (n, k, tau)
    for n, k, tau in _random_points(29, 500):
        assert abs(saturation_residual(n, k, tau)) < 1e-9, (n, k, tau)


def test_tight_bound_gap_positive():
    assert tight_bound_gap(1.0, 0.0, 0.75) == 0.0
    for n, k, tau in _random_points(31, 300):
        assert tight_bound_gap(n, k, tau) > 0.0, (n, k, tau)


def test_stationary_rhs_monotone_in_k():
    assert rhs_monotone_check(1.0, 0.1, 0.2, 0.8)
    assert rhs_monotone_check(1000.0, 0.0, 10.0, 0.6)
    assert rhs_monotone_check(0.5, 0.05, 5.0, 2.5)
    rng = np.random.default_rng(37)
    for n, k1, tau in _random_points(41, 300):
        k2 = k1 * (1.0 + 10.0 ** rng.uniform(-3, 1))
        assert rhs_monotone_check(n, k1, k2, tau), (n, k1, k2, tau)
    with pytest.raises(ValueError):
        rhs_monotone_check(1.0, 0.5, 0.5, 0.8)


def test_stationary_rhs_noiseless_reduces_to_ell_term():
    import math

    # lossy branch at K = 0: h = 0 and F = 0, leaving (1-tau) g'((1-tau)N)
    expect = 0.2 * math.log1p(1.0 / 0.4)
    assert stationary_rhs(2.0, 0.0, 0.8) == pytest.approx(expect, rel=1e-12)
