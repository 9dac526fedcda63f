import math

import pytest
import sympy
from hypothesis import given, strategies as st

from permstat.qpoly import (Poly, closed_form_main, closed_form_petersen, format_poly,
                            poly_from_json, poly_to_csv, poly_to_json, q_integer)

import oracles

q, x, y = Poly.var("q"), Poly.var("x"), Poly.var("y")

polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    st.integers(-5, 5), max_size=6).map(Poly)


def test_ring_examples():
    assert x * y + x * y == 2 * x * y
    assert str(x * y + x * y) == "2*x*y"
    assert (x + y * q) * (x * y) == x ** 2 * y + x * y ** 2 * q
    assert (x + 2) * 1 == x + 2
    assert x - x == Poly() and str(Poly()) == "0"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * 1 == a and a + 0 == a
    assert oracles.to_sympy(a * b) == sympy.expand(oracles.to_sympy(a) * oracles.to_sympy(b))


@given(polys)
def test_zero_coefficients_never_stored(a):
    assert all(a.terms.values())
    assert (a - a).terms == {}


def test_q_integer():
    assert q_integer(1) == 1
    assert q_integer(3) == 1 + q + q ** 2
    for r in range(1, 11):
        assert q_integer(r).eval(1) == r
    assert q_integer(4).eval(2) == 15
    with pytest.raises(ValueError):
        q_integer(0)


@pytest.mark.parametrize("n", range(1, 9))
def test_closed_forms_against_sympy(n):
    assert oracles.to_sympy(closed_form_main(n)) == oracles.F(n)
    assert oracles.to_sympy(closed_form_petersen(n)) == oracles.petersen(n)


def test_closed_form_small():
    assert closed_form_main(1) == x * y
    assert str(closed_form_main(2)) == "x^2*y + q*x*y^2"
    # expansion of xy(x+yq)(x+q+yq^2)
    assert str(closed_form_main(3)) == (
        "x^3*y + q*x^2*y + q*x^2*y^2 + q^2*x*y^2 + q^2*x^2*y^2 + q^3*x*y^3")
    assert closed_form_petersen(1) == x
    assert str(closed_form_petersen(2)) == "x^2 + q*x"


@pytest.mark.parametrize("n", range(1, 9))
def test_closed_form_mass_and_shape(n):
    f = closed_form_main(n)
    assert f.eval(1, 1, 1) == math.factorial(n)
    assert closed_form_petersen(n).eval(1, 1) == math.factorial(n)
    assert f.degree("q") <= n * (n - 1) // 2
    assert f.degree("x") <= n and f.degree("y") <= n
    # at q = 1 the exponents of x and y may be exchanged
    at1 = f.subs("q", 1)
    assert at1 == at1.swap("x", "y")
    # y = 1 collapses to the two-variable product
    assert f.subs("y", 1) == closed_form_petersen(n)


def test_substitution_and_eval():
    f = closed_form_main(3)
    assert f.eval(2, 3, 5) == oracles.F(3).subs({oracles.Q: 2, oracles.X: 3, oracles.Y: 5})


def test_serialisation():
    f = closed_form_main(2)
    assert poly_to_csv(f) == "q_exp,x_exp,y_exp,coeff\n0,2,1,1\n1,1,2,1\n"
    assert poly_to_csv(f, 4).splitlines()[0] == "q_exp,x_exp,y_exp,z_exp,coeff"
    assert poly_from_json(poly_to_json(f)) == f
    assert format_poly(1 + 2 * q + 2 * q ** 2 + q ** 3) == "1 + 2*q + 2*q^2 + q^3"
    assert format_poly(x - 2 * q) == "x - 2*q"


def test_mixed_widths_compare():
    four = Poly({(1, 1, 0, 0): 1}, nvars=4)
    assert four == q * x
    assert Poly({(0, 0, 0, 2): 1}).nvars == 4
