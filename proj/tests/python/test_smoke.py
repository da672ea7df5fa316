import json
import os
import pathlib

import pytest

import tclass

GOLDEN = pathlib.Path(os.environ.get("TCLASS_GOLDEN_DIR", pathlib.Path(__file__).parent.parent / "golden"))


def dual(n, m, beta, j=1):
    return tclass.ClassParams(n=n, m=m, beta=beta, j=j, mode=tclass.OperatorMode.dual)


def integral(n, m, beta, j=1):
    return tclass.ClassParams(n=n, m=m, beta=beta, j=j, mode=tclass.OperatorMode.integral)


def test_series_basics():
    f = tclass.NegCoeffSeries(1, {2: 0.5})
    assert f.j == 1 and f.K == 2
    assert f.terms == {2: 0.5}
    assert f(0) == 0
    assert tclass.evaluate(f, 1.0, 1) == pytest.approx(0.0)
    assert tclass.hadamard(tclass.NegCoeffSeries(1, {2: 2}), tclass.NegCoeffSeries(1, {2: 3})).terms == {2: 6.0}
    assert tclass.bernardi(tclass.NegCoeffSeries(1, {2: 1}), 1.0).coefficient(2) == pytest.approx(2 / 3)


def test_errors_carry_codes():
    with pytest.raises(tclass.TClassError) as info:
        tclass.NegCoeffSeries(1, {2: -0.5})
    assert info.value.code == "NegativeCoefficient"
    with pytest.raises(ValueError):
        tclass.NegCoeffSeries(1, {1: 0.5})
    with pytest.raises(tclass.TClassError) as info:
        tclass.deficiency(tclass.NegCoeffSeries(1, {2: 0.1}), integral(1, 1, 1.0))
    assert info.value.code == "InvalidWeightFamily"


def test_weights_and_membership():
    assert tclass.weight(2, dual(1, 1, 1.0)) == 6.0
    assert tclass.weight(2, integral(1, 1, 0.0)) == 0.25
    report = tclass.validity(integral(1, 1, 1.0), 64)
    assert not report.valid and report.first_failure_k == 2
    p = integral(1, 1, 0.0)
    d = tclass.deficiency(tclass.NegCoeffSeries(1, {2: 4}), p)
    assert d.sigma == 1.0 and d.member
    for k in range(2, 10):
        assert tclass.deficiency(tclass.extremal(k, p), p).sigma == pytest.approx(1.0, abs=1e-12)


def test_decompose_recompose():
    p = dual(1, 1, 0.5)
    f = tclass.NegCoeffSeries(1, {2: 0.01, 5: 0.002})
    d = tclass.decompose(f, p)
    assert d.mu_j + sum(d.mus.values()) == pytest.approx(1.0, abs=1e-12)
    g = tclass.recompose(d, p)
    for k in (2, 5):
        assert g.coefficient(k) == pytest.approx(f.coefficient(k), abs=1e-12)


def test_radii_products_distortion():
    unit = dual(0, 0, 0.0)
    r = tclass.radius(tclass.RadiusKind.convex, unit, 0.0)
    assert r.value == pytest.approx(0.25) and r.attained_k == 2
    gamma = tclass.product_parameter(tclass.ProductKind.gamma, dual(0, 1, 0.0))
    assert gamma.feasible and gamma.derived_value == pytest.approx(2.0)
    assert gamma.printed_value == pytest.approx(0.5)
    env = tclass.distortion_envelope(integral(1, 1, 0.0), 0, 0.5)
    assert (env.lower, env.upper, env.vacuous_lower) == (-0.5, 1.5, True)
    u = tclass.bernardi_univalence_radius(unit, 0.0)
    assert u.value == pytest.approx(0.25)


def test_oracle_margins():
    p = dual(1, 1, 0.0)
    member = tclass.NegCoeffSeries(1, {2: 0.2})
    assert tclass.membership_margin(member, p).margin >= -1e-9
    outside = tclass.NegCoeffSeries(1, {2: 1.1 / tclass.weight(2, p)})
    assert tclass.membership_margin(outside, p).margin < 0
    grid = tclass.SampleGrid.default_grid()
    assert grid.angles == 256


def test_run_cli_matches_golden():
    code, out, err = tclass.run_cli(
        ["check", "--series", str(GOLDEN / "series_boundary.json"), "--params", str(GOLDEN / "params_integral.json")]
    )
    assert code == 0 and err == ""
    assert out == (GOLDEN / "check_boundary.stdout").read_text()
    code, out, err = tclass.run_cli(
        ["check", "--series", str(GOLDEN / "series_negative.json"), "--params", str(GOLDEN / "params_integral.json")]
    )
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "NegativeCoefficient"
