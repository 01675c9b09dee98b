import cmath
import math

import pytest

import helmholtz2d as h


def test_special_functions():
    assert h.ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-15)
    assert h.bessel_j(0, 1.0) == pytest.approx(0.76519768655796661, rel=1e-15)
    assert h.kummer_1f1(0.5, 0.5, 1j) == pytest.approx(cmath.exp(1j), abs=1e-15)
    assert h.continuous_hahn(1, 0.8, 0.25, 0.25, 0.25, 0.25) == pytest.approx(0.8, abs=1e-15)


def test_bases():
    assert h.psi_plane(1.0, 0.0, math.pi, 0.0) == pytest.approx(-1 / (2 * math.pi), abs=1e-15)
    assert h.psi_parabolic(1.0, 0.7, "odd", 1.3, 0.0) == 0
    assert h.psi_parabolic(1.0, 0.5, "even", 1.0, 0.8) == pytest.approx(0.13530156372622246, abs=1e-13)
    assert abs(h.psi_polar(1.0, 0, 1.0, 2.7)) == pytest.approx(0.76519768655796661 / math.sqrt(2 * math.pi))


def test_w_routes_agree():
    for method in ("hahn", "three_f_two", "integral"):
        assert h.w_coeff("even", 1.0, 0.0, 0, method) == pytest.approx(1.1803405990161, abs=1e-12)
    w = h.w_coeff("odd", 1.0, 0.5, 2)
    assert w == pytest.approx(h.w_projection_oracle("odd", 1.0, 0.5, 2), abs=1e-10)
    assert abs(w.real) < 1e-15


def test_z_and_s():
    assert h.z_coeff(1.0, 2.0, math.pi / 2) == pytest.approx(1 / (2 * math.sqrt(math.pi)), abs=1e-15)
    assert h.s_coeff("even", 0, 0.3) == pytest.approx(1 / math.sqrt(2 * math.pi), abs=1e-15)
    assert h.angular_integral("odd", 0, 0, 1) == pytest.approx(-1j * math.pi, abs=1e-15)


def test_errors_map_to_python():
    with pytest.raises(h.SingularityError):
        h.z_coeff(1.0, 1.0, 0.0)
    with pytest.raises(h.RangeError):
        h.w_coeff("even", 1.0, 0.0, 40, "three_f_two")
    with pytest.raises(h.ConfigError):
        h.w_coeff("sideways", 1.0, 0.0, 1)
    assert issubclass(h.RangeError, h.Error)
    assert issubclass(h.Error, ValueError)


def test_verify_suite():
    reports = h.verify("jacobi-anger")
    assert len(reports) == 1
    r = reports[0]
    assert r["identity_name"] == "jacobi_anger"
    assert r["pass"] is True
    assert r["max_abs_error"] <= r["tolerance"]
    assert "all" in h.suite_names()
