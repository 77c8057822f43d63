from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from contactsym.decomposition import (
    DecompositionResult,
    SingularWeightError,
    coeff_b,
    coeff_c,
    decompose,
    filtration_level,
    graded_inverse_check,
    in_filtration,
    iterate,
    projector_p,
    reconstruct,
    section_power,
    section_s,
    singular_report,
    singular_set,
)
from contactsym.exactpoly import Poly
from contactsym.operators import StructureConstants, big_X, i_alpha
from contactsym.sampling import make_rng, random_poly
from contactsym.slices import filter_basis, slice_weights
from contactsym.symbols import GradingError, Symbol

F = Fraction
Q, P, T, XQ, XP, XT = (Poly.var(1, j) for j in range(6))
PANEL = [F(1), F(1, 2), F(-1, 3), F(7, 5)]
seeds = st.integers(0, 2 ** 32)


def R(poly, delta=1):
    return Symbol(poly, delta, "R")


def rsym(seed, n, k, delta):
    return Symbol(random_poly(make_rng(seed, n, k), n, k, 3), delta, "R")


def regular(n, k, delta):
    return not any(singular_report(j, n, delta).singular for j in range(1, k + 1))


def test_singular_sets():
    for n in (1, 2, 5):
        assert singular_set(1, n) == {0}
    assert singular_set(2, 1) == {F(-1, 4), F(-1, 2)}
    assert singular_set(3, 1) == {F(-1, 2), F(-3, 4), F(-1)}
    assert F(-1, 3) in singular_set(2, 2) and F(-1, 3) in singular_set(3, 2)
    with pytest.raises(ValueError):
        singular_set(0, 1)


def test_coefficients():
    for n in (1, 2):
        for delta in PANEL:
            sc = StructureConstants(n, delta)
            assert coeff_b(1, 1, sc) == 1 / ((n + 1) * delta)
            assert coeff_c(1, 0, sc) == -1 / ((n + 1) * delta)
            assert coeff_c(0, 3, sc) == 1
    sc = StructureConstants(1, 1)
    assert (coeff_b(2, 1, sc), coeff_b(2, 2, sc)) == (F(1, 3), F(1, 15))
    assert coeff_c(1, 0, sc) == F(-1, 2)
    with pytest.raises(SingularWeightError):
        coeff_b(2, 1, StructureConstants(1, F(-1, 4)))
    with pytest.raises(SingularWeightError):
        coeff_c(1, 0, StructureConstants(1, 0))


def test_projector_examples():
    p1 = projector_p(1, 1, 1)
    assert p1(R(XT)).is_zero()
    # second route: b_{1,1} X i(alpha) as a composed operator
    sc = StructureConstants(1, 1)
    assert R(XT) + big_X(i_alpha(R(XT))) * coeff_b(1, 1, sc) == p1(R(XT))
    out = p1(R(XQ))
    assert out == R(XQ + P * XT) * F(5, 4)
    assert i_alpha(out).is_zero()
    assert p1(R(XQ + P * XT)) == R(XQ + P * XT)
    with pytest.raises(SingularWeightError):
        projector_p(2, 1, F(-1, 4))
    with pytest.raises(GradingError):
        p1(R(XQ * XP))
    with pytest.raises(GradingError):
        p1(Symbol(XQ, 1, "S"))


def test_section_examples():
    s0 = section_s(0, 1, 1)
    one = R(Poly.const(1, 1))
    assert s0(one) == R(XT) * -2
    assert i_alpha(s0(one)) == one
    assert big_X(one) * coeff_c(1, 0, StructureConstants(1, 1)) == s0(one)
    assert s0(R(Poly.zero(1))).is_zero()
    with pytest.raises(SingularWeightError):
        section_s(0, 1, 0)


def test_decompose_examples():
    d = decompose(R(XT))
    assert d.component(0).is_zero()
    assert d.component(1) == R(Poly.const(1, F(-1, 2)))
    assert section_power(1, 0, 1, 1)(d.component(1)) == R(XT)
    assert reconstruct(d) == R(XT)
    w = R(XQ + P * XT)
    dw = decompose(w)
    assert dw.component(0) == w and dw.component(1).is_zero()
    assert reconstruct(DecompositionResult(0, 1, F(1), ((0, R(Q)),))) == R(Q)
    assert reconstruct(DecompositionResult(2, 1, F(1), ())).is_zero()
    with pytest.raises(SingularWeightError):
        decompose(R(XT * XT, F(-1, 4)))
    with pytest.raises(SingularWeightError):
        decompose(R(XT, 0))


def test_filtration_examples():
    assert filtration_level(R(Poly.zero(1))).l == 0
    assert filtration_level(R(XQ + P * XT)).l == 1
    assert filtration_level(R(XT)).l == 2
    sc = StructureConstants(1, 1)
    assert graded_inverse_check(R(XQ + P * XT), sc, 1)
    assert big_X(i_alpha(R(XT))) == R(XT) * sc.r(1, 0) == R(XT) * -2
    assert graded_inverse_check(R(XT), sc, 2)
    with pytest.raises(ValueError):
        graded_inverse_check(R(XT), sc, 1)


@given(seeds, st.sampled_from([1, 2]), st.integers(1, 3), st.sampled_from(PANEL))
def test_projector_laws(seed, n, k, delta):
    if singular_report(k, n, delta).singular:
        with pytest.raises(SingularWeightError):
            projector_p(k, n, delta)
        return
    p = projector_p(k, n, delta)
    u = rsym(seed, n, k, delta)
    assert p(p(u)) == p(u)
    assert i_alpha(p(u)).is_zero()
    s = section_s(k - 1, n, delta)
    v = rsym(seed + 1, n, k - 1, delta)
    assert i_alpha(s(v)) == v


@given(seeds, st.sampled_from([1, 2]), st.integers(0, 3), st.sampled_from(PANEL))
def test_round_trip(seed, n, k, delta):
    u = rsym(seed, n, k, delta)
    if not regular(n, k, delta):
        with pytest.raises(SingularWeightError):
            decompose(u)
        return
    d = decompose(u)
    assert reconstruct(d) == u
    sc = StructureConstants(n, delta)
    for l, comp in d.components:
        assert i_alpha(comp).is_zero()
        assert section_power(l, k - l, n, delta)(comp) == iterate(big_X, comp, l) * coeff_c(l, k - l, sc)


@pytest.mark.parametrize("k,l,w", [(2, 1, -2), (2, 2, -1), (3, 2, -4), (3, 3, -3)])
def test_filtration_members(k, l, w):
    delta = F(7, 5)
    sc = StructureConstants(1, delta)
    for u in filter_basis(1, k, l, w, delta):
        assert in_filtration(u, l)
        assert in_filtration(i_alpha(u), l - 1)
        assert in_filtration(big_X(u), l + 1)
        assert graded_inverse_check(u, sc, l)


def test_surjectivity_at_singular_weight():
    # i(alpha) does not see delta, so slices witness surjectivity even on I_k
    from contactsym.slices import surjectivity_on_slice
    for w in slice_weights(2, 3):
        r, dim = surjectivity_on_slice(2, 2, w)
        assert r == dim
