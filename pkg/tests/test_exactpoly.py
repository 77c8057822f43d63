from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from contactsym.exactpoly import (
    DimensionError,
    DomainError,
    Poly,
    as_rational,
    num_vars,
    poly_eval_scalar,
    variable_names,
    xi_index,
)
from conftest import polys, rationals

# n = 1 variable order: q, p, t, xi_q, xi_p, xi_t
Q, P, T, XQ, XP, XT = (Poly.var(1, j) for j in range(6))


def test_rational_sum():
    assert Q.scale(Fraction(1, 2)) + Q.scale(Fraction(1, 3)) == Q.scale(Fraction(5, 6))


def test_additive_identity_and_cancellation():
    P2 = Q * Q
    assert P2 + Poly.zero(1) == P2
    diff = P2 + (-P2)
    assert diff.terms == {} and diff.is_zero()


def test_products():
    assert (Q + P) * (Q - P) == Q ** 2 - P ** 2
    assert (Q * P) * 1 == Q * P
    assert XQ * XQ == Poly.var(1, 3, 2)


def test_derivatives():
    assert (Q * Q * P).diff(0) == (Q * P).scale(2)
    assert XQ.diff(5).is_zero()
    assert (XQ ** 2).diff(3) == XQ.scale(2)


def test_eval():
    assert (Q ** 2 - P ** 2).eval([3, 2, 0, 0, 0, 0]) == 5
    assert Poly.zero(1).eval([1] * 6) == 0
    assert XT.eval([0, 0, 0, 0, 0, Fraction(1, 2)]) == Fraction(1, 2)


def test_validation():
    with pytest.raises(DimensionError):
        Poly(1, {(1, 0): 1})
    with pytest.raises(DimensionError):
        Q + Poly.var(2, 0)
    with pytest.raises(IndexError):
        Q.diff(6)
    with pytest.raises(DimensionError):
        Q.eval([1, 2])
    with pytest.raises((TypeError, ValueError)):
        as_rational(0.5)
    with pytest.raises(DomainError):
        Poly(1, {(-1, 0, 0, 0, 0, 0): 1})


def test_layout_and_degrees():
    assert num_vars(2) == 10
    assert variable_names(1) == ["q", "p", "t", "xi_q", "xi_p", "xi_t"]
    assert xi_index(1, 2) == 5
    u = Q * XQ + XQ * XP * T
    assert u.fiber_degrees() == {1, 2}
    assert u.base_degree() == 1
    assert Poly.zero(1).degree() == -1
    assert sorted(u.split_fiber()) == [1, 2]


def test_canonical_order_is_graded_lex():
    u = Q ** 2 + P + Poly.const(1, 3) + XT
    degrees = [sum(e) for e, _ in u.items()]
    assert degrees == sorted(degrees)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.zero(1)


@given(polys(), st.integers(0, 5), st.integers(0, 5))
def test_partials_commute(a, i, j):
    assert a.diff(i).diff(j) == a.diff(j).diff(i)


@given(polys(), polys(), st.integers(0, 5))
def test_leibniz(a, b, i):
    assert (a * b).diff(i) == a.diff(i) * b + a * b.diff(i)


@given(polys(), polys(), st.lists(rationals, min_size=6, max_size=6))
def test_eval_is_ring_homomorphism(a, b, pt):
    assert poly_eval_scalar(a * b, pt) == poly_eval_scalar(a, pt) * poly_eval_scalar(b, pt)
    assert poly_eval_scalar(a + b, pt) == poly_eval_scalar(a, pt) + poly_eval_scalar(b, pt)
