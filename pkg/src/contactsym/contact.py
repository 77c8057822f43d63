"""Standard contact structure on R^{2n+1} and the algebras acting on it."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exactpoly import (
    DimensionError,
    DomainError,
    Poly,
    as_rational,
    base_dim,
    p_index,
    q_index,
    t_index,
    xi_index,
)
from .symbols import PolyVectorField, Symbol

__all__ = [
    "ContactForm",
    "AlgebraBasis",
    "alpha_coefficients",
    "contact_volume_coefficient",
    "lie_derivative_covector",
    "is_contact",
    "euler_s",
    "lagrange_bracket",
    "hamiltonian_density",
    "contact_field",
    "base_monomials",
    "sp_generators",
    "sl_generators",
]

HALF = Fraction(1, 2)


# -- a minimal exterior algebra, only used for the non-degeneracy witness ----

def _wedge(a: dict, b: dict, n: int) -> dict:
    out: dict[tuple[int, ...], Poly] = {}
    for ia, ca in a.items():
        for ib, cb in b.items():
            if set(ia) & set(ib):
                continue
            idx = list(ia + ib)
            # sign of the sorting permutation
            sign = 1
            for x in range(len(idx)):
                for y in range(x + 1, len(idx)):
                    if idx[x] > idx[y]:
                        sign = -sign
            key = tuple(sorted(idx))
            out[key] = out.get(key, Poly.zero(n)) + (ca * cb).scale(sign)
    return {k: v for k, v in out.items() if v}


def _exterior_d(form: dict, n: int) -> dict:
    out: dict[tuple[int, ...], Poly] = {}
    for idx, c in form.items():
        for j in range(base_dim(n)):
            dc = c.diff(j)
            if dc:
                part = _wedge({(j,): dc}, {idx: Poly.const(n, 1)}, n)
                for k, v in part.items():
                    out[k] = out.get(k, Poly.zero(n)) + v
    return {k: v for k, v in out.items() if v}


def contact_volume_coefficient(n: int) -> Poly:
    """Coefficient of ``dq^1..dp^n dt`` in ``alpha ^ (d alpha)^n``."""
    alpha = alpha_coefficients(n, _verify=False)
    a = {(j,): c for j, c in enumerate(alpha.coefficients) if c}
    da = _exterior_d(a, n)
    vol = a
    for _ in range(n):
        vol = _wedge(vol, da, n)
    return vol.get(tuple(range(base_dim(n))), Poly.zero(n))


@dataclass(frozen=True)
class ContactForm:
    """``alpha = 1/2 (sum p^i dq^i - q^i dp^i - dt)`` as a covector of polynomials."""

    n: int
    coefficients: tuple[Poly, ...]

    def contract(self, components) -> Poly:
        """``alpha(Z)`` for a vector field or a sequence of component polys."""
        if isinstance(components, PolyVectorField):
            components = components.components
        out = Poly.zero(self.n)
        for a, z in zip(self.coefficients, components):
            if a and z:
                out = out + a * z
        return out


def alpha_coefficients(n: int, *, _verify: bool = True) -> ContactForm:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    coeffs = [Poly.zero(n)] * base_dim(n)
    for i in range(n):
        coeffs[q_index(n, i)] = Poly.var(n, p_index(n, i)).scale(HALF)
        coeffs[p_index(n, i)] = Poly.var(n, q_index(n, i)).scale(-HALF)
    coeffs[t_index(n)] = Poly.const(n, -HALF)
    form = ContactForm(n, tuple(coeffs))
    if _verify and not contact_volume_coefficient(n):
        raise AssertionError(f"alpha is degenerate for n={n}")
    return form


def lie_derivative_covector(Z: PolyVectorField, omega) -> tuple[Poly, ...]:
    """``(L_Z omega)_j = Z.omega_j + sum_i omega_i dZ^i/dx^j``."""
    comps = omega.coefficients if isinstance(omega, ContactForm) else tuple(omega)
    m = base_dim(Z.n)
    jac = Z.jacobian
    out = []
    for j in range(m):
        v = Z.apply(comps[j])
        for i in range(m):
            if comps[i] and jac[i][j]:
                v = v + comps[i] * jac[i][j]
        out.append(v)
    return tuple(out)


def is_contact(Z: PolyVectorField) -> tuple[bool, Poly | None]:
    """Whether ``L_Z alpha = f alpha`` with ``f = div(Z)/(n+1)``; returns ``f`` on success."""
    n = Z.n
    alpha = alpha_coefficients(n, _verify=False)
    lz = lie_derivative_covector(Z, alpha)
    f = Z.divergence.scale(Fraction(1, n + 1))
    for a, l in zip(alpha.coefficients, lz):
        if l != f * a:
            return False, None
    return True, f


def euler_s(f: Poly) -> Poly:
    """``E_s.f = sum (q^i d/dq^i + p^i d/dp^i) f``."""
    n = f.n
    out = Poly.zero(n)
    for j in range(2 * n):
        d = f.diff(j)
        if d:
            out = out + Poly.var(n, j) * d
    return out


def _check_density(*fs: Poly) -> None:
    n = fs[0].n
    for f in fs:
        if f.n != n:
            raise DimensionError(f"mismatched n: {n} vs {f.n}")
        if not f.is_base_only():
            raise DomainError("densities must not contain fiber variables")


def lagrange_bracket(f: Poly, lam, g: Poly, mu) -> tuple[Poly, Fraction]:
    """Lagrange bracket of ``f`` (weight ``lam``) and ``g`` (weight ``mu``).

    Returns the bracket and its weight ``lam + mu + 1/(n+1)``.
    """
    _check_density(f, g)
    n = f.n
    lam, mu = as_rational(lam), as_rational(mu)
    t = t_index(n)
    out = Poly.zero(n)
    for k in range(n):
        qi, pi = q_index(n, k), p_index(n, k)
        out = out + f.diff(pi) * g.diff(qi) - f.diff(qi) * g.diff(pi)
    ft, gt = f.diff(t), g.diff(t)
    out = out - ft * euler_s(g) + gt * euler_s(f)
    c = 2 * (n + 1)
    out = out + (f * gt).scale(c * lam) - (g * ft).scale(c * mu)
    return out, lam + mu + Fraction(1, n + 1)


def hamiltonian_density(f: Poly, lam) -> Symbol:
    """Contact Hamiltonian of a weight-``lam`` density: a degree-1 symbol of
    weight ``lam + 1/(n+1)``."""
    _check_density(f)
    n = f.n
    lam = as_rational(lam)
    t = t_index(n)
    xi = [Poly.var(n, xi_index(n, j)) for j in range(base_dim(n))]
    out = Poly.zero(n)
    for k in range(n):
        qi, pi = q_index(n, k), p_index(n, k)
        out = out + xi[qi] * f.diff(pi) - xi[pi] * f.diff(qi)
    ft = f.diff(t)
    if ft:
        es_xi = Poly.zero(n)
        for j in range(2 * n):
            es_xi = es_xi + Poly.var(n, j) * xi[j]
        out = out - ft * es_xi
    out = out + xi[t] * (euler_s(f) + f.scale(2 * (n + 1) * lam))
    return Symbol(out, lam + Fraction(1, n + 1), "S")


def contact_field(f: Poly) -> PolyVectorField:
    """The contact vector field generated by ``f`` read as a ``-1/(n+1)``-density."""
    return PolyVectorField.from_symbol(hamiltonian_density(f, Fraction(-1, f.n + 1)).poly)


def base_monomials(n: int, max_degree: int, min_degree: int = 0) -> list[Poly]:
    """Monomials in the base variables, graded-lex within each degree."""
    m = base_dim(n)
    nv = 2 * m
    out = []
    for d in range(min_degree, max_degree + 1):
        exps = []
        for combo in itertools.combinations_with_replacement(range(m), d):
            e = [0] * nv
            for j in combo:
                e[j] += 1
            exps.append(tuple(e))
        for e in sorted(exps, reverse=True):
            out.append(Poly(n, {e: Fraction(1)}, _trusted=True))
    return out


@dataclass(frozen=True)
class AlgebraBasis:
    """Generating list of polynomial vector fields for one of the algebras.

    ``expected_rank`` is the dimension the span is supposed to have.
    """

    name: str
    n: int
    elements: tuple[PolyVectorField, ...]
    labels: tuple[str, ...] = field(default=())
    expected_rank: int = 0

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def sp_generators(n: int) -> AlgebraBasis:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    mons = base_monomials(n, 2)
    elements = tuple(contact_field(m) for m in mons)
    labels = tuple(f"X({m.pretty()})" for m in mons)
    return AlgebraBasis(f"sp({2 * n + 2})", n, elements, labels, (n + 1) * (2 * n + 3))


def sl_generators(n: int) -> AlgebraBasis:
    """Constant fields, linear fields and ``x^j E``; a spanning list of the
    projective algebra."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    m = base_dim(n)
    zero = Poly.zero(n)
    xs = [Poly.var(n, j) for j in range(m)]
    names = [m_.pretty() for m_ in xs]
    elements, labels = [], []
    for j in range(m):
        elements.append(PolyVectorField.coordinate(n, j))
        labels.append(f"d/d{names[j]}")
    for i in range(m):
        for j in range(m):
            comps = [zero] * m
            comps[j] = xs[i]
            elements.append(PolyVectorField(n, comps))
            labels.append(f"{names[i]} d/d{names[j]}")
    for j in range(m):
        elements.append(PolyVectorField(n, [xs[j] * x for x in xs]))
        labels.append(f"{names[j]} E")
    return AlgebraBasis(f"sl({2 * n + 2})", n, tuple(elements), tuple(labels),
                        (2 * n + 2) ** 2 - 1)
