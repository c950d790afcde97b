import math

import pytest

import cubicrig


def test_first_iterate_terms():
    assert cubicrig.iterate(1) == {(3, 0): -2, (0, 1): 1}
    assert cubicrig.to_string(cubicrig.curve_F(1)) == "-2*x^3 - x + y"


def test_first_resultant():
    assert cubicrig.resultant_x(cubicrig.curve_F(1), cubicrig.curve_G(1)) == [0, 0, 0, -64]
    cert = cubicrig.certify_resultant(1, 1)
    assert cert["lead"] == -64
    assert cert["mod3_leading_term"] == "2*y^3"
    assert cert["ok"]


def test_sign_convention():
    # Res(x - y, x + y) = 2y
    assert cubicrig.resultant_x({(1, 0): 1, (0, 1): -1}, {(1, 0): 1, (0, 1): 1}) == [0, 2]


def test_large_coefficients_are_python_ints():
    cert = cubicrig.certify_resultant(2, 2)
    assert cert["degree"] == 27
    assert isinstance(cert["lead"], int)
    assert cert["lead"] % 3 != 0


def test_jacobian_and_identity():
    for tails in [(0, 0), (0, 1), (1, 0), (1, 1)]:
        assert cubicrig.jacobian_mod3_ok(2, 2, *tails)
    assert cubicrig.factor_identity(3)


def test_solutions_of_first_system():
    sols = cubicrig.solve(1, 1)
    assert len(sols) == 3
    r = 1 / math.sqrt(2)
    got = sorted((s["alpha"].imag, s["J"].real) for s in sols)
    flat = [v for pair in got for v in pair]
    assert flat == pytest.approx([-r, 4.0, 0.0, -2.0, r, 4.0], rel=1e-8, abs=1e-12)
    assert all(abs(s["beta"]) < 1e-12 and s["residual"] <= 1e-8 for s in sols)


def test_report_dict():
    rep = cubicrig.report(1, 2, 1, 0)
    assert rep["overall"] == "pass"
    assert rep["resultant_degree"] == 9


def test_profile_and_finite_fields():
    prof = cubicrig.coefficient_profile(2)
    assert prof["pass"] and len(prof["rows"]) == 10
    closed, enumerated = cubicrig.sum_product(3, 1, 2)
    assert closed == enumerated
    a = cubicrig.artin_schreier(3, 1, 2, oracle=True)
    assert a["closed_form"] == a["oracle"] == "A^9 + A^3 + 2*B^3"


def test_limits_raise():
    with pytest.raises(cubicrig.ResourceLimitError):
        cubicrig.iterate(9)
