"""Deterministic integer-valued corpora shared by the test suites.

Generators take a random.Random so each suite pins its own seed.  Values are
small integers: floats hold them exactly, so convexity defects, hull values,
and decompositions are all decided without rounding ambiguity and the
randomized suites never sit on the tolerance boundary.
"""

from __future__ import annotations

import random


def convex_values(rng: random.Random, length: int) -> tuple[float, ...]:
    """Integer sequence built from nonnegative second differences."""
    value = rng.randint(-10, 10)
    delta = rng.randint(-5, 5)
    out = [value]
    for _ in range(length - 1):
        value += delta
        out.append(value)
        delta += rng.randint(0, 4)
    return tuple(float(v) for v in out)


def perturbed_convex_values(rng: random.Random, length: int) -> tuple[float, ...]:
    """Convex values plus one interior bump big enough to break convexity."""
    vals = [int(v) for v in convex_values(rng, length)]
    k = rng.randrange(1, length - 1)
    second = vals[k - 1] - 2 * vals[k] + vals[k + 1]
    vals[k] += second // 2 + 1 + rng.randint(0, 3)
    return tuple(float(v) for v in vals)


def random_values(rng: random.Random, length: int) -> tuple[float, ...]:
    return tuple(float(rng.randint(-10, 10)) for _ in range(length))


def mixed_corpus(
    seed: int = 20250811,
    count_each: int = 350,
    min_len: int = 3,
    max_len: int = 50,
) -> list[tuple[float, ...]]:
    """Convex, perturbed-convex, and random integer sequences, shuffled lengths."""
    rng = random.Random(seed)
    out = []
    for make in (convex_values, perturbed_convex_values, random_values):
        for _ in range(count_each):
            out.append(make(rng, rng.randint(min_len, max_len)))
    return out


def decreasing_nonnegative_values(rng: random.Random, length: int) -> tuple[float, ...]:
    vals = sorted((rng.randint(0, 20) for _ in range(length)), reverse=True)
    return tuple(float(v) for v in vals)


def concave_increasing_nonnegative_values(
    rng: random.Random, length: int
) -> tuple[float, ...]:
    """Nonnegative start, nonincreasing nonnegative increments."""
    delta = rng.randint(0, 8)
    value = rng.randint(0, 10)
    out = [value]
    for _ in range(length - 1):
        value += delta
        out.append(value)
        delta = max(0, delta - rng.randint(0, 2))
    return tuple(float(v) for v in out)


def nonincreasing_difference_values(
    rng: random.Random, length: int
) -> tuple[float, ...]:
    """Arbitrary-sign values whose forward differences never increase."""
    deltas = sorted((rng.randint(-8, 8) for _ in range(length - 1)), reverse=True)
    value = rng.randint(-10, 10)
    out = [value]
    for d in deltas:
        value += d
        out.append(value)
    return tuple(float(v) for v in out)
