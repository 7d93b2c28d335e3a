import json

import numpy as np
import pytest

import omgci.identity
from omgci import cli, verify


def test_small_run_passes_and_serializes():
    report = verify.run_verification(samples=400, seed=1234)
    assert report["passed"]
    assert report["seed"] == 1234
    names = [p["name"] for p in report["properties"]]
    assert len(names) == len(set(names))
    json.dumps(report)  # must be JSON-serializable as emitted by the CLI


def test_deterministic_for_fixed_seed():
    a = verify.run_verification(samples=200, seed=77)
    b = verify.run_verification(samples=200, seed=77)
    a.pop("elapsed_s")
    b.pop("elapsed_s")
    assert a == b


def test_injected_sign_fault_is_caught(monkeypatch):
    """Flipping one sign in the identity terms must turn the suite red."""
    real = omgci.identity.identity_terms

    def flipped(n, k, tau):
        t = real(n, k, tau)
        return omgci.identity.IdentityTerms(
            big_f=t.big_f,
            h=t.h,
            h_over_hk=t.h_over_hk,
            df_dk=t.df_dk,
            dh_dk=t.dh_dk,
            dell_dk=-t.dell_dk,
        )

    monkeypatch.setattr(omgci.identity, "identity_terms", flipped)
    rng = np.random.default_rng(5)
    res = verify.check_saturation(rng, 50, "loss")
    assert not res["passed"]


def test_cli_verify_exit_code_on_fault(monkeypatch, capsys):
    real = omgci.identity.identity_terms

    def flipped(n, k, tau):
        t = real(n, k, tau)
        return omgci.identity.IdentityTerms(
            big_f=t.big_f,
            h=t.h,
            h_over_hk=t.h_over_hk,
            df_dk=-t.df_dk,
            dh_dk=t.dh_dk,
            dell_dk=t.dell_dk,
        )

    monkeypatch.setattr(omgci.identity, "identity_terms", flipped)
    rc = cli.main(["verify", "--samples", "50"])
    capsys.readouterr()
    assert rc == 1
