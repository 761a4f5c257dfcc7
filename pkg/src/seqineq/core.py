"""Core sequence type, difference operators, and elementary classifiers.

A :class:`Sequence` is a finite real-valued sequence together with the
absolute index of its first entry (0 or 1).  Convexity analysis is naturally
anchored at 0, subadditivity at 1; keeping the anchor on the value makes that
distinction explicit instead of a calling convention.

Everything else in the package builds on the operations here: forward and
second differences, the mediant inequality for ratio bounds, and the
flag-style :func:`classify` used by the monotonicity/subadditivity bridges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class ToleranceConfig:
    """Slack used by every inequality check in the package.

    ``x <= y`` is accepted within tolerance when

        x <= y + max(abs_tol, rel_tol * max(|x|, |y|))

    Both knobs default to 1e-9.  Exact quantities (hull values, witness
    reconstruction, file round trips) never go through a tolerance.
    """

    abs_tol: float = 1e-9
    rel_tol: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("abs_tol", "rel_tol"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0.0:
                raise ValueError(f"{name} must be finite and nonnegative")

    def slack(self, x: float, y: float) -> float:
        return max(self.abs_tol, self.rel_tol * max(abs(x), abs(y)))

    def leq(self, x: float, y: float) -> bool:
        """Whether ``x <= y`` holds within tolerance."""
        return x <= y + self.slack(x, y)

    def geq(self, x: float, y: float) -> bool:
        return self.leq(y, x)


DEFAULT_TOLERANCE = ToleranceConfig()


@dataclass(frozen=True)
class Sequence:
    """Finite real-valued sequence anchored at absolute index 0 or 1.

    Entries are stored as floats and must be finite; the sequence must be
    nonempty.  Indexing is by absolute index: ``u[n]`` is the entry at
    position ``n``, which is only valid for ``start_index <= n <= last_index``.

    >>> u = Sequence((0, -1, 1, 3), start_index=0)
    >>> u[0], u[3]
    (0.0, 3.0)
    >>> len(u), u.last_index
    (4, 3)
    """

    values: tuple[float, ...]
    start_index: int = 1

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ValueError("sequence must be nonempty")
        if any(not math.isfinite(v) for v in vals):
            raise ValueError("sequence entries must be finite")
        if self.start_index not in (0, 1):
            raise ValueError("start_index must be 0 or 1")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    @property
    def last_index(self) -> int:
        return self.start_index + len(self.values) - 1

    def indices(self) -> range:
        """Absolute indices of the entries, in order."""
        return range(self.start_index, self.last_index + 1)

    def __getitem__(self, n: int) -> float:
        if not self.start_index <= n <= self.last_index:
            raise IndexError(
                f"index {n} outside [{self.start_index}, {self.last_index}]"
            )
        return self.values[n - self.start_index]


@dataclass(frozen=True)
class MediantReport:
    """Bounds from the mediant inequality: min_ratio <= combined_ratio <= max_ratio."""

    min_ratio: float
    combined_ratio: float
    max_ratio: float


@dataclass(frozen=True)
class ClassificationFlags:
    """Elementary shape flags for a sequence; see :func:`classify`."""

    nonnegative: bool
    monotone_increasing: bool
    monotone_decreasing: bool
    convex: bool
    concave: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "nonnegative": self.nonnegative,
            "monotone_increasing": self.monotone_increasing,
            "monotone_decreasing": self.monotone_decreasing,
            "convex": self.convex,
            "concave": self.concave,
        }


def forward_differences(u: Sequence) -> Sequence:
    """First differences ``u[n+1] - u[n]``, re-anchored at index 1.

    A sequence starting at 0 has its differences naturally indexed from 1;
    differences of a sequence starting at 1 are re-anchored to 1 as well so
    that difference sequences always live in the base-1 world where the
    subadditivity operations apply.
    """
    if len(u) < 2:
        raise ValueError("sequence too short")
    vals = tuple(b - a for a, b in zip(u.values, u.values[1:]))
    return Sequence(vals, min(u.start_index + 1, 1))


def second_differences(u: Sequence) -> Sequence:
    """Second differences ``u[k] - 2*u[k+1] + u[k+2]``, anchored at index 1.

    Agrees entrywise with ``forward_differences(forward_differences(u))``.
    A nonnegative second difference at each interior point is the discrete
    analogue of a nonnegative second derivative.
    """
    if len(u) < 3:
        raise ValueError("sequence too short")
    v = u.values
    vals = tuple(v[k] - 2.0 * v[k + 1] + v[k + 2] for k in range(len(v) - 2))
    return Sequence(vals, 1)


def mediant_bounds(a: Iterable[float], b: Iterable[float]) -> MediantReport:
    """Bound the combined ratio ``sum(a)/sum(b)`` by the extreme ratios ``a[i]/b[i]``.

    All denominators must be strictly positive.

    >>> r = mediant_bounds((2.0, 2.0), (1.0, 2.0))
    >>> (r.min_ratio, r.max_ratio)
    (1.0, 2.0)
    >>> abs(r.combined_ratio - 4.0 / 3.0) < 1e-15
    True
    """
    av = tuple(float(x) for x in a)
    bv = tuple(float(x) for x in b)
    if len(av) != len(bv):
        raise ValueError("a and b must have the same length")
    if not av:
        raise ValueError("a and b must be nonempty")
    if any(not math.isfinite(x) for x in av + bv):
        raise ValueError("entries must be finite")
    if any(x <= 0.0 for x in bv):
        raise ValueError("denominators must be positive")
    ratios = tuple(x / y for x, y in zip(av, bv))
    return MediantReport(min(ratios), sum(av) / sum(bv), max(ratios))


def classify(u: Sequence, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> ClassificationFlags:
    """Shape flags, each decided within tolerance.

    ``convex``/``concave`` test the signs of the second differences, so they
    are vacuously true for sequences shorter than 3; the monotonicity flags
    are vacuously true for singletons.  A nonnegative decreasing sequence
    anchored at 1 is always pairwise subadditive, and differences of a
    concave increasing nonnegative sequence are decreasing and nonnegative;
    these flags are the hypotheses of those bridges.
    """
    v = u.values
    nonnegative = all(tol.leq(0.0, x) for x in v)
    increasing = all(tol.leq(x, y) for x, y in zip(v, v[1:]))
    decreasing = all(tol.leq(y, x) for x, y in zip(v, v[1:]))
    if len(v) < 3:
        convex = concave = True
    else:
        seconds = second_differences(u).values
        convex = all(tol.leq(0.0, s) for s in seconds)
        concave = all(tol.leq(s, 0.0) for s in seconds)
    return ClassificationFlags(nonnegative, increasing, decreasing, convex, concave)
