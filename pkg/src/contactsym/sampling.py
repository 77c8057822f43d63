"""Seeded random symbols and densities."""

from __future__ import annotations

import random
from fractions import Fraction

from .exactpoly import Poly, as_rational, base_dim
from .symbols import Symbol

__all__ = ["make_rng", "random_poly", "random_symbol", "random_density"]

MAX_TERMS = 5


def make_rng(seed, *context) -> random.Random:
    """Independent deterministic stream for ``(seed, *context)``.

    String seeds are hashed with SHA-512 by :mod:`random`, so the stream does
    not depend on ``PYTHONHASHSEED``.
    """
    return random.Random(":".join(str(x) for x in (seed, *context)))


def _random_coefficient(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))


def random_poly(rng: random.Random, n: int, k: int, base_bound: int,
                max_terms: int = MAX_TERMS) -> Poly:
    """Up to ``max_terms`` terms of fiber degree ``k`` and base degree ``<= base_bound``."""
    m = base_dim(n)
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * (2 * m)
        for _ in range(rng.randint(0, base_bound)):
            e[rng.randrange(m)] += 1
        for _ in range(k):
            e[m + rng.randrange(m)] += 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + _random_coefficient(rng)
    return Poly(n, terms)


def random_symbol(seed, n: int, k: int, delta, B: int, grading: str = "R",
                  max_terms: int = MAX_TERMS) -> Symbol:
    rng = seed if isinstance(seed, random.Random) else make_rng(seed)
    return Symbol(random_poly(rng, n, k, B, max_terms), as_rational(delta), grading)


def random_density(rng: random.Random, n: int, degree: int, max_terms: int = MAX_TERMS) -> Poly:
    return random_poly(rng, n, 0, degree, max_terms)
