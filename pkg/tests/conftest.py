"""Shared deterministic generators for the test batteries."""

from __future__ import annotations

import random
from fractions import Fraction

from eprbell import WeylPolynomial


def rand_fraction(rng: random.Random, span: int = 8, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_point(rng: random.Random, dim: int) -> tuple:
    return tuple(rand_fraction(rng) for _ in range(dim))


def distinct_points(rng: random.Random, n: int, dim: int) -> list:
    pts, seen = [], set()
    while len(pts) < n:
        p = rand_point(rng, dim)
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return pts


def rand_poly(rng: random.Random, dim: int, max_terms: int = 4) -> WeylPolynomial:
    n = rng.randint(1, max_terms)
    terms = {}
    for _ in range(n):
        coeff = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        terms[rand_point(rng, dim)] = coeff
    return WeylPolynomial(dim, terms)
