import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from dp1.algebra import BinaryForm, TCoeff, binary_gcd, binary_resultant
from oracles import resultant_oracle, tcoeff_to_sympy
from strategies import binary_forms

x = BinaryForm(1, [1, 0])
y = BinaryForm(1, [0, 1])


def test_resultant_of_coordinates():
    assert binary_resultant(x, y) == TCoeff.const(1)


def test_resultant_sign_convention():
    assert binary_resultant(x * y, x + y) == TCoeff.const(-1)


def test_gcd_of_monomials():
    assert binary_gcd(x * x * y, x * y * y) == x * y


def test_common_factor_kills_resultant():
    f = x + y
    assert not binary_resultant(f * x, f * y)


@settings(max_examples=30)
@given(st.integers(0, 3), st.integers(1, 3), st.data())
def test_resultant_matches_sympy(df, dg, data):
    f = data.draw(binary_forms(df))
    g = data.draw(binary_forms(dg))
    assume(not (f.is_zero() and g.is_zero()))
    ours = tcoeff_to_sympy(binary_resultant(f, g))
    assert sympy.expand(ours - resultant_oracle(f, g)) == 0


@given(binary_forms(2, max_exp=2), binary_forms(1, max_exp=2), binary_forms(1, max_exp=2))
def test_gcd_contains_planted_factor(a, b, h):
    assume(not h.is_zero() and not a.is_zero() and not b.is_zero())
    g = binary_gcd(a * h, b * h)
    # h divides g: the resultant of g with h vanishes or h is a unit multiple
    assert g.degree >= 1
    assert not binary_resultant(g, h) or g.degree == 0
