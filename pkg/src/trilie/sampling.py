"""Deterministic sample streams for the verification campaigns.

Each sample gets its own generator seeded from (seed, label, sample index),
so a campaign produces identical samples no matter how the index range is
split across workers.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import BasisIndex, Element, HalfInt
from .scalars import Scalar

#: default window: half-integers with |doubled value| <= 8
DEFAULT_WINDOW = 8


def rng_for(seed: int, label: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{label}:{index}")


def sample_halfint(rng: random.Random, window: int = DEFAULT_WINDOW) -> HalfInt:
    return HalfInt.from_twice(rng.randint(-window, window))


def sample_index(rng: random.Random, window: int = DEFAULT_WINDOW) -> BasisIndex:
    return BasisIndex(
        sample_halfint(rng, window), sample_halfint(rng, window), sample_halfint(rng, window)
    )


def sample_rational(rng: random.Random, max_num: int = 6, max_den: int = 4) -> Fraction:
    num = rng.randint(-max_num, max_num)
    den = rng.randint(1, max_den)
    return Fraction(num, den)


def sample_scalar(rng: random.Random, full_field: bool = False) -> Scalar:
    """A nonzero coefficient; mostly rational, occasionally with i / s2 parts."""
    while True:
        if full_field and rng.random() < 0.5:
            value = Scalar(
                sample_rational(rng), sample_rational(rng), sample_rational(rng), sample_rational(rng)
            )
        else:
            value = Scalar.rational(sample_rational(rng))
        if value:
            return value


def sample_element(
    rng: random.Random,
    window: int = DEFAULT_WINDOW,
    max_terms: int = 3,
    full_field: bool = False,
) -> Element:
    n_terms = rng.randint(1, max_terms)
    terms: dict[BasisIndex, Scalar] = {}
    while len(terms) < n_terms:
        terms[sample_index(rng, window)] = sample_scalar(rng, full_field)
    return Element(terms)
