"""Projectors, sections and the i(alpha)-adapted decomposition of R^k.

Everything here works in the R-grading: ``R^k_delta`` with a fixed
R-weight ``delta``, on which X raises and i(alpha) lowers the fiber degree
without changing ``delta``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exactpoly import as_rational
from .operators import (
    LinearOperator,
    StructureConstants,
    big_X,
    i_alpha,
)
from .symbols import R_GRADING, GradingError, Symbol

__all__ = [
    "SingularReport",
    "SingularWeightError",
    "DecompositionResult",
    "FiltrationLevel",
    "singular_set",
    "singular_report",
    "coeff_b",
    "coeff_c",
    "projector_p",
    "section_s",
    "section_power",
    "decompose",
    "reconstruct",
    "filtration_level",
    "graded_inverse_check",
    "in_filtration",
    "iterate",
]


@dataclass(frozen=True)
class SingularReport:
    k: int
    n: int
    delta: Fraction
    singular: bool
    witnesses: tuple[int, ...] = ()

    def describe(self) -> str:
        if not self.singular:
            return f"delta={self.delta} is regular for k={self.k}, n={self.n}"
        ps = ", ".join(str(p) for p in self.witnesses)
        return (f"delta={self.delta} lies in I_{self.k} for n={self.n} "
                f"(delta = -p/(2(n+1)) with p in {{{ps}}})")


class SingularWeightError(ValueError):
    def __init__(self, report: SingularReport, message: str | None = None):
        self.report = report
        super().__init__(message or report.describe())


def singular_set(k: int, n: int) -> frozenset[Fraction]:
    """``I_k = {-p/(2(n+1)) : k-1 <= p <= 2k-2}``."""
    if k < 1:
        raise ValueError(f"singular sets are indexed by k >= 1, got {k}")
    return frozenset(Fraction(-p, 2 * (n + 1)) for p in range(k - 1, 2 * k - 1))


def singular_report(k: int, n: int, delta) -> SingularReport:
    delta = as_rational(delta)
    if k < 1:
        return SingularReport(k, n, delta, False)
    hits = tuple(p for p in range(k - 1, 2 * k - 1) if Fraction(-p, 2 * (n + 1)) == delta)
    return SingularReport(k, n, delta, bool(hits), hits)


def _require_regular(k: int, sc: StructureConstants) -> None:
    rep = singular_report(k, sc.n, sc.delta)
    if rep.singular:
        raise SingularWeightError(rep)


def coeff_b(k: int, l: int, sc: StructureConstants) -> Fraction:
    """``b_{k,l} = 1 / prod_{j=1..l} (-r(j, k-j))``."""
    if not 1 <= l <= k:
        raise ValueError(f"b_(k,l) needs 1 <= l <= k, got k={k}, l={l}")
    _require_regular(k, sc)
    prod = Fraction(1)
    for j in range(1, l + 1):
        factor = -sc.r(j, k - j)
        if not factor:
            # regular by I_k but a factor vanished: the two tests disagree
            raise AssertionError(f"r({j},{k - j}) vanishes at regular delta={sc.delta}")
        prod *= factor
    return 1 / prod


def coeff_c(l: int, m: int, sc: StructureConstants) -> Fraction:
    """``c(l, m) = 1 / prod_{i=1..l} r(i, m)``; ``c(0, m) = 1``."""
    prod = Fraction(1)
    for i in range(1, l + 1):
        factor = sc.r(i, m)
        if not factor:
            rep = singular_report(m + i, sc.n, sc.delta)
            assert rep.singular, "vanishing r(i, m) must come from I_(m+i)"
            raise SingularWeightError(rep)
        prod *= factor
    return 1 / prod


def iterate(op: Callable[[Symbol], Symbol], u: Symbol, times: int) -> Symbol:
    for _ in range(times):
        u = op(u)
    return u


def _check_input(u: Symbol, k: int, sc: StructureConstants) -> None:
    if u.grading != R_GRADING:
        raise GradingError("expected an R-graded symbol")
    if u.n != sc.n or u.weight != sc.delta:
        raise GradingError(f"operator built for n={sc.n}, delta={sc.delta}; "
                           f"got n={u.n}, delta={u.weight}")
    d = u.degree()
    if d not in (-1, k):
        raise GradingError(f"expected fiber degree {k}, got {d}")


def projector_p(k: int, n: int, delta, *, b: Callable = coeff_b) -> LinearOperator:
    """``p_k = Id + sum_l b_{k,l} X^l i(alpha)^l`` on ``R^k_delta``.

    ``b`` may be replaced to inject faulty coefficients (negative controls).
    """
    sc = StructureConstants(n, delta)
    if k < 0:
        raise ValueError("k must be >= 0")
    coeffs = [b(k, l, sc) for l in range(1, k + 1)]

    def apply(u: Symbol) -> Symbol:
        _check_input(u, k, sc)
        out = u
        v = u
        for l, c in enumerate(coeffs, start=1):
            v = i_alpha(v)
            if v.is_zero():
                break
            out = out + iterate(big_X, v, l) * c
        return out

    return LinearOperator(apply, Fraction(0), 0, f"p_{k}")


def section_s(k_minus_1: int, n: int, delta, *, b: Callable = coeff_b) -> LinearOperator:
    """Right inverse ``s_{k-1} = -sum_l b_{k,l} X^l i(alpha)^(l-1)`` of i(alpha)."""
    k = k_minus_1 + 1
    sc = StructureConstants(n, delta)
    coeffs = [b(k, l, sc) for l in range(1, k + 1)]

    def apply(u: Symbol) -> Symbol:
        _check_input(u, k_minus_1, sc)
        out = Symbol.zero(n, sc.delta, R_GRADING)
        v = u
        for l, c in enumerate(coeffs, start=1):
            if l > 1:
                v = i_alpha(v)
            if v.is_zero():
                break
            out = out - iterate(big_X, v, l) * c
        return out

    return LinearOperator(apply, Fraction(1, n + 1), 1, f"s_{k_minus_1}")


def section_power(l: int, m: int, n: int, delta, *, b: Callable = coeff_b) -> Callable[[Symbol], Symbol]:
    """``s^l`` restricted to ``R^m``: ``s_{m+l-1} ∘ ... ∘ s_m``."""
    sections = [section_s(j, n, delta, b=b) for j in range(m, m + l)]

    def apply(u: Symbol) -> Symbol:
        for s in sections:
            u = s(u)
        return u
    return apply


@dataclass(frozen=True)
class DecompositionResult:
    """``u = sum_l s^l(u_l)`` with ``u_l`` in ``R^{k-l}`` and ``i(alpha) u_l = 0``."""

    k: int
    n: int
    delta: Fraction
    components: tuple[tuple[int, Symbol], ...] = field(default=())

    def component(self, l: int) -> Symbol:
        for j, u in self.components:
            if j == l:
                return u
        return Symbol.zero(self.n, self.delta, R_GRADING)


def _require_all_regular(k: int, n: int, delta: Fraction) -> None:
    for j in range(1, k + 1):
        rep = singular_report(j, n, delta)
        if rep.singular:
            raise SingularWeightError(
                rep, f"decomposition of R^{k} needs delta outside I_{j}: {rep.describe()}")


def decompose(u: Symbol, *, b: Callable = coeff_b) -> DecompositionResult:
    """Peel off ``p_k(u)``, push the rest down with i(alpha), and recurse."""
    if u.grading != R_GRADING:
        raise GradingError("decompose expects an R-graded symbol")
    k = u.degree()
    n, delta = u.n, u.weight
    if k < 0:
        return DecompositionResult(0, n, delta, ())
    _require_all_regular(k, n, delta)
    comps = []
    cur = u
    for l in range(k + 1):
        m = k - l
        if m == 0:
            comps.append((l, cur))
            break
        head = projector_p(m, n, delta, b=b)(cur)
        comps.append((l, head))
        cur = i_alpha(cur - head)
    return DecompositionResult(k, n, delta, tuple(comps))


def reconstruct(d: DecompositionResult, *, b: Callable = coeff_b) -> Symbol:
    _require_all_regular(d.k, d.n, d.delta)
    out = Symbol.zero(d.n, d.delta, R_GRADING)
    for l, comp in d.components:
        out = out + section_power(l, d.k - l, d.n, d.delta, b=b)(comp)
    return out


@dataclass(frozen=True)
class FiltrationLevel:
    """Smallest ``l`` with ``u`` in ``F^{k,l} = R^k ∩ ker i(alpha)^l``."""

    k: int
    l: int


def filtration_level(u: Symbol) -> FiltrationLevel:
    k = u.degree()
    l = 0
    v = u
    while not v.is_zero():
        v = i_alpha(v)
        l += 1
    return FiltrationLevel(max(k, 0), l)


def in_filtration(u: Symbol, l: int) -> bool:
    return iterate(i_alpha, u, l).is_zero()


def graded_inverse_check(u: Symbol, sc: StructureConstants, l: int | None = None) -> bool:
    """Representative form of ``X~ ∘ i~ = r(l-1, k-l+1) Id`` on ``gr^{k,l}``.

    True iff ``i^(l-1)(X(i(u)) - r(l-1, k-l+1) u) = 0``.
    """
    if u.grading != R_GRADING or u.weight != sc.delta or u.n != sc.n:
        raise GradingError("u must be R-graded at the structure constants' weight")
    k = max(u.degree(), 0)
    if l is None:
        l = max(filtration_level(u).l, 1)
    if l < 1 or not in_filtration(u, l):
        raise ValueError(f"u is not in F^({k},{l})")
    diff = big_X(i_alpha(u)) - u * sc.r(l - 1, k - l + 1)
    return iterate(i_alpha, diff, l - 1).is_zero()
