import pytest

from omgci.channel import (
    CanonicalForm,
    ChannelClass,
    ChannelSpec,
    canonical_form,
    cp_check,
    k_from_y,
    nbar_from_k,
)


def test_channel_spec_validation():
    ChannelSpec(ChannelClass.LOSS, 0.7, 0.1)
    ChannelSpec(ChannelClass.AMP, 2.0, 0.0)
    ChannelSpec(ChannelClass.B2, 1.0, 0.3)
    ChannelSpec(ChannelClass.CONJUGATE_AMP, -0.5, 0.2)
    with pytest.raises(ValueError):
        ChannelSpec(ChannelClass.LOSS, 1.2, 0.1)
    with pytest.raises(ValueError):
        ChannelSpec(ChannelClass.AMP, 0.9, 0.1)
    with pytest.raises(ValueError):
        ChannelSpec(ChannelClass.B2, 0.99, 0.1)
    with pytest.raises(ValueError):
        ChannelSpec(ChannelClass.LOSS, 0.7, -1e-9)


def test_y_and_nbar_views():
    s = ChannelSpec(ChannelClass.LOSS, 0.75, 0.1)
    assert s.y == pytest.approx(0.25 + 0.2, rel=1e-15)
    assert s.nbar == pytest.approx(0.1 / 0.25, rel=1e-15)
    s = ChannelSpec(ChannelClass.AMP, 3.0, 0.5)
    assert s.y == pytest.approx(2.0 + 1.0, rel=1e-15)
    assert s.nbar == pytest.approx(0.25, rel=1e-15)


def test_cp_check():
    assert cp_check(0.75, 0.25)
    assert cp_check(0.75, 0.5)
    assert not cp_check(0.75, 0.2)
    assert cp_check(1.0, 0.0)
    assert cp_check(2.0, 1.0)
    assert not cp_check(2.0, 0.999)
    assert not cp_check(0.5, -0.1)


def test_k_from_y_roundtrip():
    assert k_from_y(0.75, 0.25) == 0.0
    assert k_from_y(0.75, 0.45) == pytest.approx(0.1, rel=1e-15)
    assert k_from_y(2.0, 1.6) == pytest.approx(0.3, rel=1e-15)
    with pytest.raises(ValueError):
        k_from_y(0.75, 0.1)
    for cls, tau in [(ChannelClass.LOSS, 0.6), (ChannelClass.AMP, 4.2)]:
        s = ChannelSpec(cls, tau, 0.37)
        assert k_from_y(tau, s.y) == pytest.approx(0.37, rel=1e-14)


def test_nbar_from_k():
    assert nbar_from_k(0.5, 0.25) == pytest.approx(0.5, rel=1e-15)
    assert nbar_from_k(3.0, 1.0) == pytest.approx(0.5, rel=1e-15)
    with pytest.raises(ValueError):
        nbar_from_k(1.0, 0.1)
    with pytest.raises(ValueError):
        nbar_from_k(0.5, -0.1)


def test_canonical_form_scalars():
    f = canonical_form(ChannelSpec(ChannelClass.LOSS, 0.64, 0.0), 0.5)
    assert f.t_scale == pytest.approx(0.8, rel=1e-15)
    assert f.n_scale == pytest.approx(0.36 * 2.0, rel=1e-15)
    f = canonical_form(ChannelSpec(ChannelClass.AMP, 4.0, 0.0), 0.0)
    assert f.t_scale == pytest.approx(2.0, rel=1e-15)
    assert f.n_scale == pytest.approx(3.0, rel=1e-15)
    f = canonical_form(ChannelSpec(ChannelClass.B2, 1.0, 0.2), 0.4)
    assert f.t_scale == 1.0
    assert f.n_scale == pytest.approx(0.4, rel=1e-15)
    assert f.delta == (0.0, 0.0)
    with pytest.raises(ValueError):
        canonical_form(ChannelSpec(ChannelClass.CONJUGATE_AMP, -1.0, 0.0), 0.0)
    with pytest.raises(ValueError):
        CanonicalForm(1.0, -0.5)
