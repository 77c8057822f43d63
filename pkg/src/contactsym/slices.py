"""Finite-dimensional slices of R^k on which i(alpha) and X act.

Give q^i, p^i weight 1, t weight 2, xi_q, xi_p weight -1 and xi_t weight -2.
Both D and multiplication by xi_t lower this weight by 2 and i(alpha)
raises it by 2, so the weight-homogeneous parts ``R^k_[w]`` are finite
dimensional and form a family preserved (up to a shift) by both operators.
Plain base-degree truncation is not: i(alpha) multiplies by p and q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import Poly, base_dim
from .linalg import Echelon, kernel, rank
from .operators import big_X, i_alpha
from .symbols import R_GRADING, Symbol

__all__ = [
    "heisenberg_weight",
    "slice_monomials",
    "slice_weights",
    "slice_basis",
    "filter_basis",
    "SplitAccount",
    "filter_split_account",
    "surjectivity_on_slice",
]


def heisenberg_weight(n: int, exps: tuple[int, ...]) -> int:
    m = base_dim(n)
    t = 2 * n
    w = sum(exps[:m]) + exps[t]
    w -= sum(exps[m:]) + exps[m + t]
    return w


def _compositions(total: int, parts: int):
    for cut in itertools.combinations_with_replacement(range(parts), total):
        e = [0] * parts
        for j in cut:
            e[j] += 1
        yield e


def slice_monomials(n: int, k: int, w: int) -> list[tuple[int, ...]]:
    """Exponent vectors of fiber degree ``k`` and Heisenberg weight ``w``."""
    m = base_dim(n)
    out = []
    for a in range(k + 1):              # power of xi_t
        nbase = w + k + a               # weighted base degree
        if nbase < 0:
            continue
        for fib in _compositions(k - a, 2 * n):
            fiber = fib + [a]
            for b in range(nbase // 2 + 1):      # power of t
                for qp in _compositions(nbase - 2 * b, 2 * n):
                    out.append(tuple(qp + [b] + fiber))
    assert len(set(out)) == len(out)
    return sorted(out)


def slice_weights(k: int, bound: int) -> range:
    """Slices examined for fiber degree ``k`` under base bound ``bound``.

    ``w`` runs from the lowest possible weight ``-2k`` up to ``bound - 2k``;
    the ``xi_t^k`` part of such a slice has base weight at most ``bound``.
    """
    return range(-2 * k, bound - 2 * k + 1)


def _vec(u: Symbol) -> dict:
    return dict(u.poly.terms)


def slice_basis(n: int, k: int, w: int, delta) -> list[Symbol]:
    return [Symbol(Poly(n, {e: Fraction(1)}, _trusted=True), delta, R_GRADING)
            for e in slice_monomials(n, k, w)]


def _combine(basis: list[Symbol], coeffs: dict[int, Fraction], n: int, delta) -> Symbol:
    terms: dict = {}
    for j, c in coeffs.items():
        for e, x in basis[j].poly.terms.items():
            v = terms.get(e, 0) + c * x
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
    return Symbol(Poly(n, terms, _trusted=True), delta, R_GRADING)


def _power(op, u: Symbol, l: int) -> Symbol:
    for _ in range(l):
        u = op(u)
    return u


def filter_basis(n: int, k: int, l: int, w: int, delta) -> list[Symbol]:
    """Basis of ``F^{k,l} ∩ R^k_[w]``."""
    basis = slice_basis(n, k, w, delta)
    if l <= 0:
        return []
    if l > k:
        return basis
    images = [_vec(_power(i_alpha, b, l)) for b in basis]
    return [_combine(basis, v, n, delta) for v in kernel(images)]


@dataclass(frozen=True)
class SplitAccount:
    """Rank bookkeeping for ``F^{k,l} = F^{k,l-1} ⊕ X^{l-1}(F^{k-l+1,1})`` on one slice."""

    n: int
    k: int
    l: int
    w: int
    delta: Fraction
    dim_filter: int
    dim_lower: int
    dim_image: int
    rank_union: int
    contained: bool

    @property
    def ok(self) -> bool:
        return (self.contained
                and self.rank_union == self.dim_lower + self.dim_image
                and self.rank_union == self.dim_filter)


def filter_split_account(n: int, k: int, l: int, w: int, delta) -> SplitAccount:
    delta = Fraction(delta)
    upper = filter_basis(n, k, l, w, delta)
    lower = filter_basis(n, k, l - 1, w, delta)
    top = filter_basis(n, k - l + 1, 1, w + 2 * (l - 1), delta)
    image = [_power(big_X, v, l - 1) for v in top]
    contained = all(_power(i_alpha, x, l).is_zero() for x in image)
    dim_image = rank(_vec(x) for x in image)
    e = Echelon()
    for x in lower + image:
        e.add(_vec(x))
    return SplitAccount(n, k, l, w, delta, len(upper), len(lower), dim_image, len(e), contained)


def surjectivity_on_slice(n: int, k: int, w: int) -> tuple[int, int]:
    """``(rank of i(alpha) on R^k_[w], dim R^{k-1}_[w+2])``; i(alpha) does not
    depend on the weight, so ``delta`` is irrelevant here."""
    basis = slice_basis(n, k, w, 0)
    r = rank(_vec(i_alpha(b)) for b in basis)
    return r, len(slice_monomials(n, k - 1, w + 2))
