"""The invariant operators i(alpha), X, H and the operator algebra around them.

All polynomial-level kernels here are first-order operators with monomial
coefficients, applied through :func:`~contactsym.exactpoly.apply_first_order`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .exactpoly import Poly, apply_first_order, as_rational, base_dim, p_index, q_index, t_index, xi_index
from .symbols import (
    R_GRADING,
    S_GRADING,
    GradingError,
    PolyVectorField,
    Symbol,
    lie_derivative_symbol,
)

__all__ = [
    "LinearOperator",
    "StructureConstants",
    "const_a",
    "const_h",
    "const_r",
    "i_alpha",
    "big_X",
    "big_X_mixed",
    "op_H",
    "commutator",
    "i_alpha_operator",
    "X_operator",
    "H_operator",
    "lie_operator",
    "identity_operator",
    "D_poly",
    "i_alpha_poly",
    "mul_xi_t",
    "euler_s_poly",
    "euler_poly",
    "euler_xi_poly",
    "pairing_es_xi",
]


# -- structure constants -----------------------------------------------------

def const_a(k: int, delta, n: int) -> Fraction:
    """``a(k, delta) = 2(n+1) delta - k`` for ``delta`` an S-grading weight."""
    return 2 * (n + 1) * as_rational(delta) - k


def const_h(k: int, delta, n: int) -> Fraction:
    """Eigenvalue of H on R^k_delta."""
    return -((n + 1) * as_rational(delta) + k)


def const_r(l: int, k: int, delta, n: int) -> Fraction:
    return -Fraction(l, 2) * (2 * (n + 1) * as_rational(delta) + 2 * k + l - 1)


@dataclass(frozen=True)
class StructureConstants:
    """Constants attached to ``R_delta`` for a given ``n`` (``delta`` is an R-weight)."""

    n: int
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "delta", as_rational(self.delta))

    def a(self, k: int) -> Fraction:
        # a(k, .) is stated for S-weights; R^k_delta sits at S-weight delta + k/(n+1)
        return const_a(k, self.delta + Fraction(k, self.n + 1), self.n)

    def h(self, k: int) -> Fraction:
        return const_h(k, self.delta, self.n)

    def r(self, l: int, k: int) -> Fraction:
        return const_r(l, k, self.delta, self.n)


# -- polynomial kernels ------------------------------------------------------

@lru_cache(maxsize=None)
def _i_alpha_ops(n: int):
    half = Fraction(1, 2)
    ops = []
    for i in range(n):
        ops.append((half, xi_index(n, q_index(n, i)), ((p_index(n, i), 1),)))
        ops.append((-half, xi_index(n, p_index(n, i)), ((q_index(n, i), 1),)))
    ops.append((-half, xi_index(n, t_index(n)), ()))
    return tuple(ops)


@lru_cache(maxsize=None)
def _D_ops(n: int):
    one = Fraction(1)
    t, xt = t_index(n), xi_index(n, t_index(n))
    ops = []
    for i in range(n):
        qi, pi = q_index(n, i), p_index(n, i)
        ops.append((one, pi, ((xi_index(n, qi), 1),)))
        ops.append((-one, qi, ((xi_index(n, pi), 1),)))
    for j in range(2 * n):
        ops.append((one, j, ((j, 1), (xt, 1))))
        ops.append((-one, t, ((j, 1), (xi_index(n, j), 1))))
    return tuple(ops)


def i_alpha_poly(u: Poly) -> Poly:
    """``sum_j alpha_j d/dxi_j``."""
    return apply_first_order(u, _i_alpha_ops(u.n))


def D_poly(u: Poly) -> Poly:
    return apply_first_order(u, _D_ops(u.n))


def mul_xi_t(u: Poly, c=1) -> Poly:
    return apply_first_order(u, ((as_rational(c), None, ((xi_index(u.n, t_index(u.n)), 1),)),))


def euler_s_poly(u: Poly) -> Poly:
    return apply_first_order(u, tuple((Fraction(1), j, ((j, 1),)) for j in range(2 * u.n)))


def euler_poly(u: Poly) -> Poly:
    return apply_first_order(u, tuple((Fraction(1), j, ((j, 1),)) for j in range(base_dim(u.n))))


def euler_xi_poly(u: Poly) -> Poly:
    m = base_dim(u.n)
    return apply_first_order(u, tuple((Fraction(1), m + j, ((m + j, 1),)) for j in range(m)))


def pairing_es_xi(n: int) -> Poly:
    """The polynomial ``<E_s, xi> = sum q^i xi_q^i + p^i xi_p^i``."""
    out = Poly.zero(n)
    for j in range(2 * n):
        out = out + Poly.var(n, j) * Poly.var(n, xi_index(n, j))
    return out


# -- symbol-level operators --------------------------------------------------

def i_alpha(u: Symbol) -> Symbol:
    """Contraction with the contact form; lowers the S-weight by ``1/(n+1)``."""
    out = i_alpha_poly(u.poly)
    if u.grading == S_GRADING:
        return Symbol(out, u.weight - Fraction(1, u.n + 1), S_GRADING)
    return Symbol(out, u.weight, R_GRADING)


def big_X(u: Symbol) -> Symbol:
    """Extended contact Hamiltonian on a fiber-homogeneous symbol."""
    n = u.n
    k = u.degree()
    shift = Fraction(1, n + 1)
    if u.grading == S_GRADING:
        out_weight = u.weight + shift
        coeff = const_a(k, u.weight, n)
    else:
        out_weight = u.weight
        coeff = 2 * (n + 1) * u.weight + k
    if k < 0:
        return Symbol(Poly.zero(n), out_weight, u.grading)
    ops = _D_ops(n)
    if coeff:
        ops = ops + ((coeff, None, ((xi_index(n, t_index(n)), 1),)),)
    return Symbol(apply_first_order(u.poly, ops), out_weight, u.grading)


def big_X_mixed(u: Symbol) -> Symbol:
    """``big_X`` applied part by part to a symbol with several fiber degrees."""
    n = u.n
    if u.grading == S_GRADING:
        out = Symbol.zero(n, u.weight + Fraction(1, n + 1), S_GRADING)
    else:
        out = Symbol.zero(n, u.weight, R_GRADING)
    for part in u.poly.split_fiber().values():
        out = out + big_X(u.with_poly(part))
    return out


def op_H(u: Symbol) -> Symbol:
    if u.grading != R_GRADING:
        raise GradingError("H is defined on the R-grading only")
    out = Poly.zero(u.n)
    for k, part in u.poly.split_fiber().items():
        out = out + part.scale(const_h(k, u.weight, u.n))
    return u.with_poly(out)


# -- operator algebra --------------------------------------------------------

@dataclass(frozen=True)
class LinearOperator:
    """A linear map on symbols with known weight and fiber-degree shifts.

    ``weight_shift`` is the change of S-grading weight; on R-graded symbols
    the weight is unchanged by construction of the grading.
    """

    apply: Callable[[Symbol], Symbol]
    weight_shift: Fraction = Fraction(0)
    fiber_shift: int = 0
    label: str = "?"

    def __call__(self, u: Symbol) -> Symbol:
        return self.apply(u)

    def __matmul__(self, other: LinearOperator) -> LinearOperator:
        a, b = self.apply, other.apply
        return LinearOperator(lambda u: a(b(u)), self.weight_shift + other.weight_shift,
                              self.fiber_shift + other.fiber_shift,
                              f"{self.label}∘{other.label}")

    def _same_shape(self, other: LinearOperator) -> None:
        if (self.weight_shift, self.fiber_shift) != (other.weight_shift, other.fiber_shift):
            raise GradingError(
                f"cannot add {self.label} (shift {self.weight_shift}, {self.fiber_shift:+d}) "
                f"to {other.label} (shift {other.weight_shift}, {other.fiber_shift:+d})")

    def __add__(self, other: LinearOperator) -> LinearOperator:
        self._same_shape(other)
        a, b = self.apply, other.apply
        return LinearOperator(lambda u: a(u) + b(u), self.weight_shift, self.fiber_shift,
                              f"({self.label} + {other.label})")

    def __sub__(self, other: LinearOperator) -> LinearOperator:
        self._same_shape(other)
        a, b = self.apply, other.apply
        return LinearOperator(lambda u: a(u) - b(u), self.weight_shift, self.fiber_shift,
                              f"({self.label} - {other.label})")

    def __neg__(self) -> LinearOperator:
        a = self.apply
        return LinearOperator(lambda u: -a(u), self.weight_shift, self.fiber_shift,
                              f"-{self.label}")

    def __rmul__(self, c) -> LinearOperator:
        c = as_rational(c)
        a = self.apply
        return LinearOperator(lambda u: a(u) * c, self.weight_shift, self.fiber_shift,
                              f"{c}·{self.label}")

    def __pow__(self, k: int) -> LinearOperator:
        if k < 0:
            raise ValueError("negative operator powers are undefined")
        a = self.apply

        def run(u):
            for _ in range(k):
                u = a(u)
            return u
        return LinearOperator(run, self.weight_shift * k, self.fiber_shift * k,
                              f"{self.label}^{k}")


def commutator(A: LinearOperator, B: LinearOperator) -> LinearOperator:
    """``[A, B] = A∘B - B∘A``."""
    return (A @ B) - (B @ A)


def identity_operator(label: str = "Id") -> LinearOperator:
    return LinearOperator(lambda u: u, Fraction(0), 0, label)


def i_alpha_operator(n: int) -> LinearOperator:
    return LinearOperator(i_alpha, Fraction(-1, n + 1), -1, "i(α)")


def X_operator(n: int) -> LinearOperator:
    return LinearOperator(big_X_mixed, Fraction(1, n + 1), 1, "X")


def H_operator(n: int) -> LinearOperator:
    return LinearOperator(op_H, Fraction(0), 0, "H")


def lie_operator(Z: PolyVectorField, label: str = "L_Z") -> LinearOperator:
    return LinearOperator(lambda u: lie_derivative_symbol(Z, u), Fraction(0), 0, label)
