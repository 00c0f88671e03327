"""Deterministic pseudo-random element and matrix generators.

Every function takes an explicit ``random.Random`` instance so callers fix
the seed; nothing here touches global RNG state.  Used by the sampling
verdicts over infinite rings and by the test suite.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .mat2 import Mat2
from .rings import Elem, LocalRing, SeriesRing, ZLocal, _ResidueRing


def random_elem(rng: random.Random, ring: LocalRing) -> Elem:
    if isinstance(ring, _ResidueRing):
        return Elem(ring, rng.randrange(ring.modulus))
    if isinstance(ring, ZLocal):
        num = rng.randrange(-99, 100)
        den = rng.randrange(1, 30)
        while den % ring.p == 0:
            den = rng.randrange(1, 30)
        return Elem(ring, Fraction(num, den))
    if isinstance(ring, SeriesRing):
        return Elem(
            ring, tuple(random_elem(rng, ring.base) for _ in range(ring.order))
        )
    raise TypeError(f"cannot sample from {ring}")


def random_unit(rng: random.Random, ring: LocalRing) -> Elem:
    while True:
        e = random_elem(rng, ring)
        if e.is_unit():
            return e


def random_radical(rng: random.Random, ring: LocalRing) -> Elem:
    while True:
        e = random_elem(rng, ring)
        if e.in_radical():
            return e


def random_matrix(rng: random.Random, ring: LocalRing) -> Mat2:
    return Mat2(ring, *(random_elem(rng, ring) for _ in range(4)))


def random_gl2(rng: random.Random, ring: LocalRing) -> Mat2:
    while True:
        m = random_matrix(rng, ring)
        if m.is_gl2():
            return m


def random_unit_trace_matrix(rng: random.Random, ring: LocalRing) -> Mat2:
    while True:
        m = random_matrix(rng, ring)
        if m.trace().is_unit():
            return m
