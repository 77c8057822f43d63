"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives on the cotangent bundle of R^{2n+1}: it has ``2n+1`` base
variables ``(q^1..q^n, p^1..p^n, t)`` followed by ``2n+1`` fiber variables
``(xi_q^1..xi_q^n, xi_p^1..xi_p^n, xi_t)``.  Terms are stored as a mapping
from dense exponent tuples to :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "DimensionError",
    "DomainError",
    "Poly",
    "as_rational",
    "base_dim",
    "num_vars",
    "q_index",
    "p_index",
    "t_index",
    "xi_index",
    "poly_add",
    "poly_mul",
    "poly_diff",
    "poly_eval_scalar",
]


class DimensionError(ValueError):
    """Operands were built for different ``n`` or have the wrong length."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q' text")
    return Fraction(x)


def base_dim(n: int) -> int:
    return 2 * n + 1


def num_vars(n: int) -> int:
    return 2 * (2 * n + 1)


def q_index(n: int, i: int) -> int:
    """Index of q^{i+1} (``i`` is zero based)."""
    return i


def p_index(n: int, i: int) -> int:
    return n + i


def t_index(n: int) -> int:
    return 2 * n


def xi_index(n: int, j: int) -> int:
    """Index of the fiber variable dual to base variable ``j``."""
    return 2 * n + 1 + j


def _glex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class Poly:
    """Immutable sparse polynomial over Q in ``2(2n+1)`` variables.

    The zero polynomial has an empty term map.  Never mutate ``terms``.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], Fraction] | None = None,
                 *, _trusted: bool = False):
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        self.n = n
        if _trusted:
            self.terms = terms
        else:
            nv = num_vars(n)
            clean: dict[tuple[int, ...], Fraction] = {}
            for exps, c in (terms or {}).items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nv:
                    raise DimensionError(
                        f"exponent vector of length {len(exps)}, expected {nv}")
                if any(e < 0 for e in exps):
                    raise DomainError(f"negative exponent in {exps}")
                c = as_rational(c)
                if c:
                    c = clean.get(exps, 0) + c
                    if c:
                        clean[exps] = c
                    else:
                        clean.pop(exps, None)
            self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls(n, {}, _trusted=True)

    @classmethod
    def const(cls, n: int, c) -> Poly:
        c = as_rational(c)
        if not c:
            return cls.zero(n)
        return cls(n, {(0,) * num_vars(n): c}, _trusted=True)

    @classmethod
    def var(cls, n: int, index: int, power: int = 1) -> Poly:
        nv = num_vars(n)
        if not 0 <= index < nv:
            raise IndexError(f"variable index {index} out of range for n={n}")
        e = [0] * nv
        e[index] = power
        return cls(n, {tuple(e): Fraction(1)}, _trusted=True)

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], c=1) -> Poly:
        return cls(n, {tuple(exps): as_rational(c)})

    # -- basic protocol ---------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """Terms in canonical graded-lex order."""
        for e in sorted(self.terms, key=_glex_key):
            yield e, self.terms[e]

    def _check(self, other: Poly) -> None:
        if self.n != other.n:
            raise DimensionError(f"mismatched n: {self.n} vs {other.n}")

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.n, other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> Poly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly(self.n, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.n, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> Poly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def scale(self, c) -> Poly:
        c = as_rational(c)
        if not c:
            return Poly.zero(self.n)
        if c == 1:
            return self
        return Poly(self.n, {e: c * v for e, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Poly(self.n, out, _trusted=True)

    def __rmul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise DomainError("negative powers are not polynomials")
        out = Poly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, var: int) -> Poly:
        nv = num_vars(self.n)
        if not 0 <= var < nv:
            raise IndexError(f"variable index {var} out of range for n={self.n}")
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                out[e[:var] + (k - 1,) + e[var + 1:]] = c * k
        return Poly(self.n, out, _trusted=True)

    def eval(self, point: Sequence) -> Fraction:
        nv = num_vars(self.n)
        if len(point) != nv:
            raise DimensionError(f"point of length {len(point)}, expected {nv}")
        pt = [as_rational(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x ** k
            total += v
        return total

    # -- gradings ---------------------------------------------------------
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def base_degree(self) -> int:
        if not self.terms:
            return -1
        m = base_dim(self.n)
        return max(sum(e[:m]) for e in self.terms)

    def fiber_degrees(self) -> set[int]:
        m = base_dim(self.n)
        return {sum(e[m:]) for e in self.terms}

    def split_fiber(self) -> dict[int, Poly]:
        """Fiber-homogeneous parts keyed by fiber degree."""
        m = base_dim(self.n)
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e[m:]), {})[e] = c
        return {k: Poly(self.n, parts[k], _trusted=True) for k in sorted(parts)}

    def is_base_only(self) -> bool:
        m = base_dim(self.n)
        return all(not any(e[m:]) for e in self.terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def __repr__(self) -> str:
        if not self.terms:
            return f"Poly(n={self.n}, 0)"
        return f"Poly(n={self.n}, {self.pretty()})"

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        names = variable_names(self.n)
        parts = []
        for e, c in self.items():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}"
                for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def variable_names(n: int) -> list[str]:
    if n == 1:
        base = ["q", "p", "t"]
    else:
        base = [f"q{i + 1}" for i in range(n)] + [f"p{i + 1}" for i in range(n)] + ["t"]
    return base + ["xi_" + b for b in base]


def apply_first_order(poly: Poly, ops: Iterable[tuple[Fraction, int | None, tuple]]) -> Poly:
    """Apply ``sum c * x^shift * d/dx_var`` to ``poly``.

    Each op is ``(c, var, shift)`` where ``shift`` is a tuple of
    ``(index, increment)`` pairs and ``var`` may be ``None`` for a pure
    multiplication.  This is the inner loop behind every operator whose
    coefficients are monomials (D, i(alpha), the Euler fields, ...).
    """
    out: dict[tuple[int, ...], Fraction] = {}
    get = out.get
    for e, c in poly.terms.items():
        for oc, var, shift in ops:
            if var is None:
                k = 1
                ne = list(e)
            else:
                k = e[var]
                if not k:
                    continue
                ne = list(e)
                ne[var] = k - 1
            for idx, inc in shift:
                ne[idx] += inc
            key = tuple(ne)
            v = get(key, 0) + oc * c * k
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return Poly(poly.n, out, _trusted=True)


# Functional spellings of the core operations.

def poly_add(a: Poly, b: Poly) -> Poly:
    a._check(b)
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    a._check(b)
    return a * b


def poly_diff(a: Poly, var: int) -> Poly:
    return a.diff(var)


def poly_eval_scalar(a: Poly, point: Sequence) -> Fraction:
    return a.eval(point)
