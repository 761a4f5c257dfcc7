"""Subadditive hulls, approximate subadditivity, and stability decompositions.

All operations here require sequences anchored at index 1: a part of size j
refers to the entry u[j], so index 0 has no meaning in a partition.

The subadditive hull v of u is the largest subadditive sequence below u,

    v[n] = min over integer partitions n = j1 + ... + jk of u[j1] + ... + u[jk],

computed by dynamic programming in O(N^2) with witness partitions.  The gap
``epsilon_star = max(u[n] - v[n])`` is the smallest eps for which u is
eps-approximately subadditive, and ``u = v + w`` with ``0 <= w <= eps``
splits any approximately subadditive sequence into an exactly subadditive
part plus a small nonnegative remainder.  A brute-force oracle that
enumerates partitions outright is kept alongside the DP so the two routes
can be compared exactly on integer inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import DEFAULT_TOLERANCE, Sequence, ToleranceConfig

ORACLE_MAX_N = 30


@dataclass(frozen=True)
class PartitionWitness:
    """One integer partition of n, parts in nondecreasing order."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive integers")
        if sum(self.parts) != self.n:
            raise ValueError("parts must sum to n")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be nondecreasing")


@dataclass(frozen=True)
class HullResult:
    """Subadditive hull values plus one minimizing partition per index."""

    v: Sequence
    witnesses: tuple[PartitionWitness, ...]


@dataclass(frozen=True)
class PairwiseCheck:
    """Verdict of the pairwise test ``u[m+n] <= u[m] + u[n]`` with violations."""

    ok: bool
    violations: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class Decomposition:
    """Split ``u = v + w`` into subadditive part v and remainder w."""

    v: Sequence
    w: Sequence
    epsilon_star: float


@dataclass(frozen=True)
class CompositionResult:
    """Sum ``u = v + w`` plus the certificate that u is max(w)-subadditive."""

    u: Sequence
    epsilon: float
    certified: bool


def _require_base1(u: Sequence) -> None:
    if u.start_index != 1:
        raise ValueError("subadditivity requires index base 1")


def _partition_iter(n: int, minimum: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for part in range(minimum, n + 1):
        for rest in _partition_iter(n - part, part):
            yield (part,) + rest


@lru_cache(maxsize=None)
def _partition_tuples(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_partition_iter(n, 1))


def enumerate_partitions(n: int) -> list[PartitionWitness]:
    """All integer partitions of n in canonical nondecreasing form.

    Enumeration grows like exp(sqrt(n)); n is capped at ``ORACLE_MAX_N``.
    """
    if not isinstance(n, int) or not 1 <= n <= ORACLE_MAX_N:
        raise ValueError("oracle scale exceeded")
    return [PartitionWitness(n, parts) for parts in _partition_tuples(n)]


def hull_bruteforce(u: Sequence, n: int) -> float:
    """Hull value at n by direct minimization over all partitions of n."""
    _require_base1(u)
    if not isinstance(n, int) or n < 1 or n > len(u):
        raise ValueError(f"index {n} outside sequence range")
    if n > ORACLE_MAX_N:
        raise ValueError("oracle scale exceeded")
    vals = u.values
    return min(sum(vals[p - 1] for p in parts) for parts in _partition_tuples(n))


def _hull_values(u: Sequence) -> list[float]:
    vals = u.values
    n_max = len(vals)
    v = [0.0] * (n_max + 1)  # 1-based; v[0] unused
    for n in range(1, n_max + 1):
        best = vals[n - 1]
        for j in range(1, n):
            cand = vals[j - 1] + v[n - j]
            if cand < best:
                best = cand
        v[n] = best
    return v


def subadditive_hull(u: Sequence) -> HullResult:
    """Largest subadditive sequence below u, with witness partitions.

    ``v[1] = u[1]`` and ``v[n] = min(u[n], min over j of u[j] + v[n-j])``.
    Witnesses are rebuilt by preferring the smallest part j at every step
    that attains the minimum, which yields the lexicographically smallest
    canonical partition among all minimizers.

    >>> hull = subadditive_hull(Sequence((1.0, 3.0, 2.0)))
    >>> hull.v.values
    (1.0, 2.0, 2.0)
    >>> [w.parts for w in hull.witnesses]
    [(1,), (1, 1), (3,)]
    """
    _require_base1(u)
    vals = u.values
    v = _hull_values(u)
    parts_at: list[tuple[int, ...]] = [()] * (len(vals) + 1)
    for n in range(1, len(vals) + 1):
        chosen = None
        for j in range(1, n):
            if vals[j - 1] + v[n - j] == v[n]:
                chosen = (j,) + parts_at[n - j]
                break
        if chosen is None:
            # No split attains the optimum, so the trivial partition does.
            chosen = (n,)
        parts_at[n] = chosen
    witnesses = tuple(
        PartitionWitness(n, parts_at[n]) for n in range(1, len(vals) + 1)
    )
    return HullResult(Sequence(tuple(v[1:]), 1), witnesses)


def is_subadditive_pairwise(
    u: Sequence, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> PairwiseCheck:
    """Check ``u[m+n] <= u[m] + u[n]`` for all m <= n with m+n in range."""
    _require_base1(u)
    last = u.last_index
    violations = []
    for m in range(1, last + 1):
        for n in range(m, last - m + 1):
            if not tol.leq(u[m + n], u[m] + u[n]):
                violations.append((m, n))
    return PairwiseCheck(not violations, tuple(violations))


def epsilon_star(u: Sequence) -> float:
    """Smallest eps such that u is eps-approximately subadditive.

    Equals ``max(u[n] - v[n])`` over the hull v; always nonnegative since
    the trivial partition makes ``v[n] <= u[n]``.  Reported exactly as
    computed, with no tolerance snapping.
    """
    _require_base1(u)
    v = _hull_values(u)
    return max(u.values[n - 1] - v[n] for n in range(1, len(u) + 1))


def is_approx_subadditive(u: Sequence, epsilon: float) -> bool:
    """Whether ``u[n] <= sum of u over parts + epsilon`` for every partition.

    Decided through the hull: the worst partition defect is
    ``epsilon_star(u)``, so the check is a single comparison rather than an
    enumeration.
    """
    epsilon = float(epsilon)
    if not math.isfinite(epsilon) or epsilon < 0.0:
        raise ValueError("epsilon must be finite and nonnegative")
    return epsilon_star(u) <= epsilon


def decompose(u: Sequence) -> Decomposition:
    """Split u into its subadditive hull v and the remainder ``w = u - v``.

    w is entrywise in ``[0, epsilon_star(u)]``; on integer-valued input the
    split is exact and ``v + w`` reproduces u bitwise.
    """
    _require_base1(u)
    v = _hull_values(u)
    w = tuple(u.values[n - 1] - v[n] for n in range(1, len(u) + 1))
    return Decomposition(
        Sequence(tuple(v[1:]), 1),
        Sequence(w, 1),
        max(w),
    )


def compose(
    v: Sequence, w: Sequence, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> CompositionResult:
    """Rebuild ``u = v + w`` from a subadditive part and a small remainder.

    Hypotheses are checked and named on failure: v must be pairwise
    subadditive and w nonnegative (both within tolerance), with equal
    lengths and index base 1.  The result carries the certificate that u is
    approximately subadditive with eps = max(w).
    """
    _require_base1(v)
    _require_base1(w)
    if len(v) != len(w):
        raise ValueError("v and w must have the same length")
    if not is_subadditive_pairwise(v, tol).ok:
        raise ValueError("v not subadditive")
    if not all(tol.leq(0.0, x) for x in w.values):
        raise ValueError("w not nonnegative")
    u = Sequence(tuple(a + b for a, b in zip(v.values, w.values)), 1)
    epsilon = max(0.0, max(w.values))
    return CompositionResult(u, epsilon, is_approx_subadditive(u, epsilon))
