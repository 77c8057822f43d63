"""Exact sparse linear algebra over Q.

Vectors are dicts mapping hashable, mutually comparable keys (exponent
tuples, integers) to Fractions.  Used for rank, span and kernel checks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vector = dict

__all__ = ["Echelon", "rank", "in_span", "kernel", "solve_in_span"]


def _axpy(v: dict, c: Fraction, row: Mapping) -> None:
    # v -= c * row, in place
    for key, x in row.items():
        y = v.get(key, 0) - c * x
        if y:
            v[key] = y
        else:
            v.pop(key, None)


class Echelon:
    """Incrementally built echelon form; each row is normalised at its
    smallest key.  Optional tags record which input combination produced
    a row, which is what :func:`kernel` and :func:`solve_in_span` use."""

    def __init__(self):
        self.rows: dict[Hashable, tuple[dict, dict]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping, tag: Mapping | None = None) -> tuple[dict, dict]:
        v = {k: Fraction(x) for k, x in v.items() if x}
        tag = dict(tag or {})
        rows = self.rows
        while True:
            hits = [k for k in v if k in rows]
            if not hits:
                return v, tag
            piv = min(hits)
            row, rtag = rows[piv]
            c = v[piv]
            _axpy(v, c, row)
            _axpy(tag, c, rtag)

    def add(self, v: Mapping, tag: Mapping | None = None) -> tuple[bool, dict]:
        """Insert ``v``; returns ``(independent, residual_tag)``."""
        r, t = self.reduce(v, tag)
        if not r:
            return False, t
        piv = min(r)
        inv = 1 / r[piv]
        self.rows[piv] = ({k: x * inv for k, x in r.items()},
                          {k: x * inv for k, x in t.items()})
        return True, t


def rank(vectors: Iterable[Mapping]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def in_span(basis: Iterable[Mapping], v: Mapping) -> bool:
    e = Echelon()
    for b in basis:
        e.add(b)
    r, _ = e.reduce(v)
    return not r


def solve_in_span(basis: list[Mapping], v: Mapping) -> dict[int, Fraction] | None:
    """Coefficients ``c`` with ``sum c[i] basis[i] = v``, or None."""
    e = Echelon()
    for i, b in enumerate(basis):
        e.add(b, {i: Fraction(1)})
    r, t = e.reduce(v, {})
    if r:
        return None
    return {i: -c for i, c in t.items() if c}


def kernel(images: list[Mapping]) -> list[dict[int, Fraction]]:
    """Kernel of the linear map sending basis vector ``j`` to ``images[j]``.

    Returned vectors are keyed by domain index.
    """
    e = Echelon()
    out = []
    for j, img in enumerate(images):
        independent, t = e.add(img, {j: Fraction(1)})
        if not independent:
            out.append({k: c for k, c in t.items() if c})
    return out
