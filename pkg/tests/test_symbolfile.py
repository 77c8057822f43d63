from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from contactsym.exactpoly import Poly
from contactsym.sampling import make_rng, random_poly, random_symbol
from contactsym.symbolfile import (
    SymbolParseError,
    parse_rational,
    parse_symbol,
    parse_symbols,
    serialize_symbol,
    serialize_symbols,
)
from contactsym.symbols import Symbol

DOC = """\
# a degree-one symbol
n = 1
grading = R
delta = -1/3
terms:
  5/4 : 0 0 0 1 0 0
  -1/2 : 0 1 0 0 0 1   # p xi_t
"""


def test_parse_document():
    u = parse_symbol(DOC)
    assert u.grading == "R" and u.weight == Fraction(-1, 3)
    assert u.poly == Poly.var(1, 3).scale(Fraction(5, 4)) - (Poly.var(1, 1) * Poly.var(1, 5)).scale(Fraction(1, 2))


def test_rationals():
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational(" 7 ") == 7
    for bad in ("1/0", "1.5", "a", "1//2", ""):
        with pytest.raises(SymbolParseError):
            parse_rational(bad)


@pytest.mark.parametrize("text,line,column", [
    ("n = 1\nterms:\n  1 : 0 0 0 1 0\n", 3, 7),
    ("n = 1\ngrading = Q\nterms:\n", 2, 11),
    ("n = 1\nterms:\n  1/x : 0 0 0 0 0 0\n", 3, 3),
    ("terms:\n", 1, 1),
    ("n = 1\nfoo = 2\nterms:\n", 2, 1),
    ("n = 1\n", 2, 1),
    ("n = 1\nterms:\n  1 : 0 0 0 0 0 -1\n", 3, 17),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(SymbolParseError) as info:
        parse_symbol(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_multi_document_with_labels():
    u = Symbol(Poly.var(2, 0), Fraction(1, 2))
    v = Symbol(Poly.var(2, 9, 2), 3, "R")
    text = serialize_symbols([("first", u), ("second", v)])
    assert parse_symbols(text, with_labels=True) == [("first", u), ("second", v)]
    with pytest.raises(SymbolParseError):
        parse_symbol(text)


def test_canonical_output():
    u = Symbol(Poly.var(1, 0, 2) + Poly.var(1, 5) + Poly.const(1, 1))
    lines = serialize_symbol(u).splitlines()
    degrees = [sum(int(x) for x in ln.split(":")[1].split()) for ln in lines if ":" in ln]
    assert degrees == sorted(degrees)


@given(st.integers(0, 2 ** 32), st.sampled_from([1, 2]), st.integers(0, 3),
       st.sampled_from(["S", "R"]))
def test_round_trip(seed, n, k, grading):
    u = random_symbol(seed, n, k, Fraction(seed % 7, 3), 3, grading)
    assert parse_symbol(serialize_symbol(u)) == u


def test_sampling_contract():
    a = random_symbol(42, 2, 3, 1, 3)
    assert a == random_symbol(42, 2, 3, 1, 3)
    c = random_symbol(5, 1, 0, 0, 0)
    assert set(c.poly.terms) <= {(0,) * 6}
    for seed in range(30):
        u = random_symbol(seed, 1, 2, 0, 3)
        assert u.poly.is_zero() or u.degree() == 2
        assert u.poly.is_zero() or u.poly.base_degree() <= 3
    rng = make_rng(1)
    p = random_poly(rng, 1, 1, 2, max_terms=1)
    (c,) = p.terms.values() if p.terms else (Fraction(1),)
    assert abs(c.numerator) <= 9 and c.denominator in (1, 2, 3)
