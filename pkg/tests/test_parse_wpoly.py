from fractions import Fraction

import pytest
from hypothesis import given

from dp1.algebra import ParseError, TCoeff, WPoly, parse_mpoly, parse_tcoeff, parse_wpoly
from strategies import wpolys

t = TCoeff.gen()
x, y, z, w = (WPoly.var(v) for v in "xyzw")


def test_example_sextic():
    X = parse_wpoly("w^2+z^3+x^5*y+t^24*x*y^5")
    assert X == w ** 2 + z ** 3 + x ** 5 * y + WPoly.t() ** 24 * x * y ** 5
    assert X.is_homogeneous(6)
    assert str(X) == "w^2 + z^3 + x^5*y + t^24*x*y^5"


def test_cancellation_gives_empty_term_map():
    p = parse_wpoly("x - x")
    assert p.is_zero() and p.terms == {}


def test_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable"):
        parse_wpoly("w^2+z^3+z*f + 0")


def test_syntax_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_wpoly("x^2 +* y")
    assert err.value.position >= 4
    with pytest.raises(ParseError):
        parse_wpoly("x^1/2")
    with pytest.raises(ParseError):
        parse_wpoly("x^-1")


def test_rationals_and_t_powers():
    p = parse_wpoly("3/4*t^-2*x - x")
    assert p.coeff((1, 0, 0, 0)) == TCoeff({-2: Fraction(3, 4), 0: -1})
    assert parse_tcoeff("1 + 2*t^3") == 1 + 2 * t ** 3


def test_second_variable_set():
    V = parse_wpoly("s^2+r^3+p^5*q+p*q^5", variables="pqrs")
    assert V.names == ("p", "q", "r", "s")
    with pytest.raises(ParseError):
        parse_wpoly("s^2 + x", variables="pqrs")


def test_homogeneity_checked_only_on_request():
    parse_wpoly("x + w")
    with pytest.raises(ValueError):
        parse_wpoly("x + w", homogeneous=3)


def test_parse_mpoly():
    g = parse_mpoly("u^2 - 3*u*v", ("u", "v"))
    assert g.coeff((1, 1)) == -3


def test_canonical_order():
    p = parse_wpoly("y + x + z + w")
    assert str(p) == "w + z + x + y"


@given(wpolys())
def test_print_parse_idempotent(p):
    text = str(p)
    again = parse_wpoly(text)
    assert again == p
    assert str(again) == text


# -- substitution, valuation, derivatives ------------------------------

def test_substitute_monomial_forward_example():
    p = parse_wpoly("x^5*y")
    images = [(6, "p"), (0, "q"), (10, "r"), (15, "s")]
    assert p.substitute_monomial(images, names="pqrs") == parse_wpoly("t^30*p^5*q", "pqrs")


def test_substitute_monomial_identity():
    p = parse_wpoly("w^2+z^3+t*x^5*y")
    assert p.substitute_monomial([(0, v) for v in "xyzw"]) == p


def test_substitute_monomial_swap_example():
    p = parse_wpoly("x*y^5")
    images = [(-1, "y"), (1, "x"), (0, "z"), (0, "w")]
    assert p.substitute_monomial(images) == parse_wpoly("t^4*x^5*y")


@given(wpolys(), wpolys())
def test_substitution_is_multiplicative(f, g):
    images = [(2, "y"), (-1, "x"), (3, "z"), (1, "w")]
    assert (f * g).substitute_monomial(images) == f.substitute_monomial(images) * g.substitute_monomial(images)


@given(wpolys(degree=6))
def test_graded_substitution_preserves_degree(f):
    # weight-1 variables shifted by t-powers keep their weight
    images = [(1, "y"), (4, "x"), (2, "z"), (0, "w")]
    assert f.substitute_monomial(images).is_homogeneous(6)


def test_t_valuation_examples():
    V = parse_wpoly("s^2+r^3+p^5*q+p*q^5", "pqrs")
    assert V.shift_t(30).t_valuation() == 30
    assert parse_wpoly("t*x + 2*y").t_valuation() == 0
    with pytest.raises(ValueError):
        WPoly().t_valuation()


@given(wpolys(), wpolys())
def test_t_valuation_of_product(f, g):
    if f and g:
        assert (f * g).t_valuation() == f.t_valuation() + g.t_valuation()


def test_partial_derivatives():
    assert (w ** 2).partial("w") == 2 * w
    assert parse_wpoly("w^2+z^3+x^5*y").partial("x") == parse_wpoly("5*x^4*y")
    assert parse_wpoly("t^4*x").partial("t") == parse_wpoly("4*t^3*x")


@given(wpolys(), wpolys())
def test_partial_leibniz(f, g):
    for v in ("x", "t"):
        assert (f * g).partial(v) == f.partial(v) * g + f * g.partial(v)


@given(wpolys(), wpolys(), wpolys())
def test_wpoly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
