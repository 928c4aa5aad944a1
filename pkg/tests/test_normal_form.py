import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dp1.algebra import BinaryForm, TCoeff, WPoly, parse_wpoly
from dp1.generators import random_general_sextic
from dp1.normal_form import (Fibration, GeneralSextic, NormalizationError, gorenstein_check,
                             normalize_sextic)

t = TCoeff.gen()


def sextic(text):
    return GeneralSextic.from_wpoly(parse_wpoly(text, homogeneous=6))


def test_fibration_roundtrip_and_residue():
    X = Fibration.from_wpoly(parse_wpoly("w^2+z^3+t*z*x^2*y^2+t*x^6+t^7*y^6"), allow_degenerate=True)
    assert str(X) == "w^2 + z^3 + t*z*x^2*y^2 + t*x^6 + t^7*y^6"
    f4, f6 = X.central_fiber()
    assert f4.is_zero() and f6.is_zero()


def test_fibration_rejects_negative_valuation():
    with pytest.raises(ValueError):
        Fibration.from_wpoly(parse_wpoly("w^2+z^3+t^-1*x^6"))


def test_degenerate_cone_needs_flag():
    with pytest.raises(ValueError):
        Fibration(BinaryForm.zero(4), BinaryForm.zero(6))
    assert Fibration(BinaryForm.zero(4), BinaryForm.zero(6), allow_degenerate=True).is_degenerate()


def test_fibration_rejects_non_normal_terms():
    with pytest.raises(ValueError):
        Fibration.from_wpoly(parse_wpoly("w^2+z^3+w*x^3"))


@pytest.mark.parametrize("a,b,ok,point", [
    (1, 1, True, None),
    (t, 1, False, "(0:0:0:1)"),
    (1, 1 + t, True, None),
    (1, t ** 2, False, "(0:0:1:0)"),
])
def test_gorenstein(a, b, ok, point):
    rep = gorenstein_check(GeneralSextic(a, b))
    assert rep.ok is ok
    if point:
        assert [v["point"] for v in rep.violations] == [point]


def test_already_normal_is_identity():
    s = sextic("w^2+z^3+t*z*x^4+x^5*y")
    fib, record = normalize_sextic(s)
    assert record.is_identity()
    assert fib.to_wpoly() == s.to_wpoly()


def test_z_squared_term_is_shifted_away():
    s = sextic("w^2+z^3+z^2*x^2+z*y^4+x^6")
    fib, record = normalize_sextic(s)
    assert record.z_image == parse_wpoly("z - 1/3*x^2")
    assert record.apply(s.to_wpoly()) == fib.to_wpoly() * record.scale
    assert GeneralSextic.from_wpoly(fib.to_wpoly()).is_normal()


def test_w_linear_term_completes_the_square():
    s = sextic("w^2+w*x^3+z^3")
    fib, record = normalize_sextic(s)
    assert record.w_image == parse_wpoly("w - 1/2*x^3")
    assert fib.f6 == BinaryForm(6, [Fraction(-1, 4)] + [0] * 6)
    assert fib.f4.is_zero()
    assert record.apply(s.to_wpoly()) == fib.to_wpoly()


def test_constant_units_are_scaled():
    s = sextic("2*w^2+3*z^3+x^6")
    fib, record = normalize_sextic(s)
    assert record.apply(s.to_wpoly()) == fib.to_wpoly() * record.scale
    assert record.scale == TCoeff.const(2 ** 3 * 3 ** 4)


def test_gorenstein_failure_raises():
    with pytest.raises(NormalizationError, match="Gorenstein"):
        normalize_sextic(sextic("t*w^2+z^3+x^6"))


def test_non_constant_unit_that_does_not_divide():
    with pytest.raises(NormalizationError):
        normalize_sextic(GeneralSextic(1 + t, TCoeff.const(1), f6=BinaryForm(6, [1] + [0] * 6)))


@settings(max_examples=80)
@given(st.integers(0, 10 ** 6))
def test_normalize_is_exact_and_idempotent(seed):
    s = random_general_sextic(random.Random(seed))
    fib, record = normalize_sextic(s)
    assert record.apply(s.to_wpoly()) == fib.to_wpoly() * record.scale
    again, rec2 = normalize_sextic(GeneralSextic.from_wpoly(fib.to_wpoly()))
    assert rec2.is_identity() and again == fib


def test_record_apply_uses_substitution():
    z, w = WPoly.var("z"), WPoly.var("w")
    _, record = normalize_sextic(sextic("w^2+z^3+x^6"))
    assert record.apply(w * z) == w * z
