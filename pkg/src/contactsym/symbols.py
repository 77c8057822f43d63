"""Density-weighted symbols on R^{2n+1} and the Lie derivative action."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .exactpoly import (
    DimensionError,
    DomainError,
    Poly,
    apply_first_order,
    as_rational,
    base_dim,
    xi_index,
)

__all__ = [
    "GradingError",
    "Symbol",
    "PolyVectorField",
    "lie_derivative_density",
    "lie_derivative_symbol",
    "to_R_grading",
    "from_R_grading",
    "fiber_components",
    "vector_field_bracket",
]

S_GRADING = "S"
R_GRADING = "R"


class GradingError(ValueError):
    """Operands disagree on grading or density weight, or a homogeneous
    symbol was required."""


@dataclass(frozen=True)
class Symbol:
    """A polynomial symbol tagged with its density weight and grading.

    Under the ``"S"`` grading ``weight`` is the density weight of every
    fiber-homogeneous part.  Under ``"R"`` the degree-k part has density
    weight ``weight + k/(n+1)``.
    """

    poly: Poly
    weight: Fraction = Fraction(0)
    grading: str = S_GRADING

    def __post_init__(self):
        if self.grading not in (S_GRADING, R_GRADING):
            raise GradingError(f"unknown grading tag {self.grading!r}")
        object.__setattr__(self, "weight", as_rational(self.weight))

    @property
    def n(self) -> int:
        return self.poly.n

    @classmethod
    def zero(cls, n: int, weight=0, grading: str = S_GRADING) -> Symbol:
        return cls(Poly.zero(n), weight, grading)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def fiber_degrees(self) -> set[int]:
        return self.poly.fiber_degrees()

    def degree(self) -> int:
        """Fiber degree of a homogeneous symbol (``-1`` for zero)."""
        degs = self.poly.fiber_degrees()
        if not degs:
            return -1
        if len(degs) > 1:
            raise GradingError(f"symbol is not fiber-homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def density_weight(self, k: int) -> Fraction:
        """Density weight carried by the fiber-degree-``k`` part."""
        if self.grading == S_GRADING:
            return self.weight
        return self.weight + Fraction(k, self.n + 1)

    def with_poly(self, poly: Poly) -> Symbol:
        return Symbol(poly, self.weight, self.grading)

    def _compatible(self, other: Symbol) -> None:
        if not isinstance(other, Symbol):
            raise TypeError(f"expected Symbol, got {type(other).__name__}")
        if self.n != other.n:
            raise DimensionError(f"mismatched n: {self.n} vs {other.n}")
        if self.grading != other.grading or self.weight != other.weight:
            raise GradingError(
                f"cannot combine {self.grading}-graded weight {self.weight} with "
                f"{other.grading}-graded weight {other.weight}")

    def __add__(self, other: Symbol) -> Symbol:
        self._compatible(other)
        return self.with_poly(self.poly + other.poly)

    def __sub__(self, other: Symbol) -> Symbol:
        self._compatible(other)
        return self.with_poly(self.poly - other.poly)

    def __neg__(self) -> Symbol:
        return self.with_poly(-self.poly)

    def __mul__(self, c) -> Symbol:
        if isinstance(c, (int, Fraction)):
            return self.with_poly(self.poly.scale(c))
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Symbol(n={self.n}, {self.grading}, weight={self.weight}, {self.poly.pretty()})"


def fiber_components(u: Symbol) -> list[Symbol]:
    """Split ``u`` by fiber degree, lowest degree first."""
    return [u.with_poly(part) for part in u.poly.split_fiber().values()]


def to_R_grading(u: Symbol) -> Symbol:
    if u.grading == R_GRADING:
        raise GradingError("symbol is already R-graded")
    k = max(u.degree(), 0)
    return Symbol(u.poly, u.weight - Fraction(k, u.n + 1), R_GRADING)


def from_R_grading(u: Symbol) -> Symbol:
    if u.grading == S_GRADING:
        raise GradingError("symbol is already S-graded")
    k = max(u.degree(), 0)
    return Symbol(u.poly, u.weight + Fraction(k, u.n + 1), S_GRADING)


class PolyVectorField:
    """Vector field with polynomial coefficients ``sum Z^i d/dx^i``.

    Stored by its ``2n+1`` base-only component polynomials; the matching
    symbol is ``sum Z^i xi_i`` at weight 0.
    """

    __slots__ = ("n", "components", "__dict__")

    def __init__(self, n: int, components: Sequence[Poly]):
        m = base_dim(n)
        if len(components) != m:
            raise DimensionError(f"expected {m} components, got {len(components)}")
        for c in components:
            if c.n != n:
                raise DimensionError("component built for a different n")
            if not c.is_base_only():
                raise DomainError("vector field components must not contain fiber variables")
        self.n = n
        self.components = tuple(components)

    @classmethod
    def from_symbol(cls, s: Symbol | Poly) -> PolyVectorField:
        if isinstance(s, Symbol):
            if s.weight != 0 and not s.is_zero():
                raise GradingError(f"vector fields carry weight 0, got {s.weight}")
            s = s.poly
        n = s.n
        if s.fiber_degrees() - {1}:
            raise DomainError("a vector field symbol must have fiber degree exactly 1")
        return cls(n, [s.diff(xi_index(n, j)) for j in range(base_dim(n))])

    @classmethod
    def coordinate(cls, n: int, j: int) -> PolyVectorField:
        comps = [Poly.zero(n)] * base_dim(n)
        comps[j] = Poly.const(n, 1)
        return cls(n, comps)

    def to_poly(self) -> Poly:
        out = Poly.zero(self.n)
        for j, c in enumerate(self.components):
            if c:
                out = out + c * Poly.var(self.n, xi_index(self.n, j))
        return out

    def to_symbol(self) -> Symbol:
        return Symbol(self.to_poly(), 0, S_GRADING)

    @cached_property
    def jacobian(self) -> tuple[tuple[Poly, ...], ...]:
        """``jacobian[i][k] = d Z^i / d x^k``."""
        m = base_dim(self.n)
        return tuple(tuple(c.diff(k) for k in range(m)) for c in self.components)

    @cached_property
    def divergence(self) -> Poly:
        out = Poly.zero(self.n)
        for i in range(base_dim(self.n)):
            out = out + self.jacobian[i][i]
        return out

    def apply(self, f: Poly) -> Poly:
        """Directional derivative ``Z.f`` (only base variables are differentiated)."""
        out = Poly.zero(self.n)
        for j, c in enumerate(self.components):
            if c:
                d = f.diff(j)
                if d:
                    out = out + c * d
        return out

    def is_zero(self) -> bool:
        return not any(self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyVectorField):
            return NotImplemented
        return self.n == other.n and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.n, self.components))

    def __add__(self, other: PolyVectorField) -> PolyVectorField:
        return PolyVectorField(self.n, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: PolyVectorField) -> PolyVectorField:
        return PolyVectorField(self.n, [a - b for a, b in zip(self.components, other.components)])

    def __mul__(self, c) -> PolyVectorField:
        return PolyVectorField(self.n, [a.scale(c) for a in self.components])

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"PolyVectorField(n={self.n}, {self.to_poly().pretty()})"


def vector_field_bracket(Z: PolyVectorField, W: PolyVectorField) -> PolyVectorField:
    """``[Z, W]^i = Z.W^i - W.Z^i``."""
    if Z.n != W.n:
        raise DimensionError(f"mismatched n: {Z.n} vs {W.n}")
    return PolyVectorField(Z.n, [Z.apply(w) - W.apply(z)
                                 for z, w in zip(Z.components, W.components)])


def lie_derivative_density(Z: PolyVectorField, f: Poly, lam) -> Poly:
    """Lie derivative of the weight-``lam`` density ``f |dx|^lam``."""
    if Z.n != f.n:
        raise DimensionError(f"mismatched n: {Z.n} vs {f.n}")
    if not f.is_base_only():
        raise DomainError("densities must not contain fiber variables")
    lam = as_rational(lam)
    out = Z.apply(f)
    if lam:
        out = out + (Z.divergence * f).scale(lam)
    return out


def _xi_swap_ops(n: int, i: int, k: int):
    # xi_i * d/dxi_k as a first-order op
    xi_k = xi_index(n, k)
    xi_i = xi_index(n, i)
    return [(Fraction(1), xi_k, ((xi_i, 1),))]


def lie_derivative_symbol(Z: PolyVectorField, u: Symbol) -> Symbol:
    """Natural action of ``Z`` on ``u``; weight and fiber degrees are preserved.

    R-graded input is handled per fiber-homogeneous part, each part using
    its own density weight.
    """
    if not isinstance(u, Symbol):
        raise TypeError("lie_derivative_symbol expects a Symbol")
    n = u.n
    if Z.n != n:
        raise DimensionError(f"mismatched n: {Z.n} vs {n}")
    poly = u.poly
    out = Z.apply(poly)
    div = Z.divergence
    if div:
        if u.grading == S_GRADING:
            if u.weight:
                out = out + (div * poly).scale(u.weight)
        else:
            for k, part in poly.split_fiber().items():
                w = u.density_weight(k)
                if w:
                    out = out + (div * part).scale(w)
    m = base_dim(n)
    jac = Z.jacobian
    for i in range(m):
        row = jac[i]
        for k in range(m):
            dz = row[k]
            if dz:
                moved = apply_first_order(poly, _xi_swap_ops(n, i, k))
                if moved:
                    out = out - dz * moved
    return u.with_poly(out)
