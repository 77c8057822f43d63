from fractions import Fraction

import pytest

from contactsym.operators import big_X, i_alpha
from contactsym.slices import (
    filter_basis,
    filter_split_account,
    heisenberg_weight,
    slice_basis,
    slice_monomials,
    slice_weights,
    surjectivity_on_slice,
)


def test_weights():
    # q, p, t, xi_q, xi_p, xi_t
    assert heisenberg_weight(1, (1, 1, 1, 0, 0, 0)) == 4
    assert heisenberg_weight(1, (0, 0, 0, 1, 1, 1)) == -4
    assert list(slice_weights(2, 3)) == [-4, -3, -2, -1]


@pytest.mark.parametrize("k,w", [(0, 0), (1, -1), (2, -3), (2, 0)])
def test_slice_monomials(k, w):
    mons = slice_monomials(1, k, w)
    assert mons and all(heisenberg_weight(1, e) == w and sum(e[3:]) == k for e in mons)


@pytest.mark.parametrize("k,w", [(1, -2), (1, 0), (2, -3), (3, -5)])
def test_operators_move_between_slices(k, w):
    for u in slice_basis(1, k, w, 1):
        for op, shift in ((i_alpha, 2), (big_X, -2)):
            v = op(u)
            assert all(heisenberg_weight(1, e) == w + shift for e in v.poly.terms)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_surjective(n, k):
    for w in slice_weights(k, 2):
        r, dim = surjectivity_on_slice(n, k, w)
        assert r == dim


@pytest.mark.parametrize("delta", [Fraction(1), Fraction(7, 5), Fraction(-1, 3)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_filter_split(delta, k):
    for l in range(2, k + 2):
        for w in slice_weights(k, 2):
            acc = filter_split_account(1, k, l, w, delta)
            assert acc.ok, acc


def test_filter_nested():
    for w in slice_weights(3, 2):
        dims = [len(filter_basis(1, 3, l, w, 1)) for l in range(5)]
        assert dims == sorted(dims) and dims[0] == 0
        assert dims[4] == len(slice_monomials(1, 3, w))
