"""Smoke tests for the python bindings."""

import json
import math
import os
import subprocess

import pytest

import gl2fourier as g2


def test_theta_of_det_inverse():
    assert g2.theta_image("Dinv") == "V1^-1 V2^-1"


def test_theta_of_c_mentions_both_shifts():
    img = g2.theta_image("c")
    assert "V1" in img and "V2" in img and "mu1 - mu2" in img


def test_normal_form_weyl_relation():
    assert g2.normal_form("da*a - a*da") == "1"


def test_parse_error():
    with pytest.raises(g2.OperatorParseError):
        g2.theta_image("a +")


def test_euler_image_is_scalar():
    assert g2.theta_image("a*da + b*db + c*dc + d*dd") == "-mu1 - mu2"


def test_kernel_identity_for_multiplication_by_c():
    mu1, mu2 = 0.23 + 0.31j, -0.41 - 0.17j
    lhs = g2.kernel_of_operator("c", 0.2, 0.2, mu1, mu2, order=32)
    rhs = g2.apply_image("c", 0.2, 0.2, mu1, mu2, order=32)
    assert abs(lhs - rhs) / abs(lhs) < 1e-5


def test_kernel_regression_value():
    k = g2.eval_kernel(0.0, 0.0, 0j, 0j, order=64)
    assert math.isclose(k.real, 2.276592745548633e-03, rel_tol=1e-8)
    assert k.imag == 0.0


def test_j_transform_value():
    v = g2.j_transform(0.0, 0.4j, order=128)
    assert abs(v - (7.853041738934578e-02 - 2.217956416790683e-02j)) < 1e-10


def test_verify_symbolic_json_schema():
    ok, text = g2.verify("symbolic")
    assert ok
    doc = json.loads(text)
    assert list(doc.keys()) == ["config", "cases", "summary"]
    assert doc["summary"]["failures"] == 0
    assert doc["summary"]["total"] == len(doc["cases"])
    for case in doc["cases"]:
        assert case["mode"] in ("symbolic", "numeric")
        assert isinstance(case["pass"], bool)


def test_verify_unknown_suite():
    with pytest.raises(g2.UnknownSuiteError):
        g2.verify("nope")


@pytest.mark.skipif("GL2F_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_roundtrip():
    cli = os.environ["GL2F_CLI"]
    out = subprocess.run([cli, "theta", "Dinv"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "V1^-1 V2^-1" in out.stdout

    bad = subprocess.run([cli, "theta", "a +"], capture_output=True, text=True)
    assert bad.returncode == 2
