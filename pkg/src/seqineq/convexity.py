"""Convexity certificates for sequences via three equivalent criteria.

A sequence u is convex when ``2*u[n] <= u[n-1] + u[n+1]`` at every interior
index.  Two further equivalent tests are checked independently so the
package can cross-certify its own answers:

* three-point slopes: ``(u[n2]-u[n1])/(n2-n1) <= (u[n3]-u[n2])/(n3-n2)``
  for all index triples ``n1 < n2 < n3``;
* existence of a monotone support sequence v with
  ``u[n] - u[m] <= v[n] * (n - m)`` for all m, n (a discrete subgradient).

:func:`certify_convexity` runs all three and insists that they agree; a
disagreement beyond tolerance is a bug, not a property of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DEFAULT_TOLERANCE, Sequence, ToleranceConfig


@dataclass(frozen=True)
class ConvexityReport:
    """Outcome of the defining-inequality check.

    ``violations`` holds ``(n, defect)`` pairs for every interior absolute
    index n where ``2*u[n] > u[n-1] + u[n+1]`` beyond tolerance, with
    ``defect = 2*u[n] - u[n-1] - u[n+1]``.
    """

    is_convex: bool
    violations: tuple[tuple[int, float], ...] = ()


@dataclass(frozen=True)
class SlopeCheck:
    """Boolean verdict of the slope-monotonicity check plus the first bad triple."""

    ok: bool
    first_violation: tuple[int, int, int] | None = None


@dataclass(frozen=True)
class SupportSequence:
    """Candidate discrete subgradient v for a sequence u.

    ``values[k]`` is v at absolute index ``first_index + k``; the window
    ``[first_index, last_index]`` covers all indices of u except the last.
    ``witness_pairs[k]``, when present, is the index pair whose slope
    realizes ``values[k]`` (lexicographically smallest among minimizers).
    """

    base: Sequence
    values: tuple[float, ...]
    first_index: int
    last_index: int
    witness_pairs: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self) -> None:
        if len(self.values) != self.last_index - self.first_index + 1:
            raise ValueError("support window does not match number of values")
        if self.witness_pairs is not None and len(self.witness_pairs) != len(self.values):
            raise ValueError("witness pairs do not match number of values")

    def value_at(self, n: int) -> float:
        if not self.first_index <= n <= self.last_index:
            raise IndexError(f"index {n} outside [{self.first_index}, {self.last_index}]")
        return self.values[n - self.first_index]


@dataclass(frozen=True)
class SupportCheck:
    """Outcome of :func:`verify_support`: subgradient and monotonicity violations."""

    ok: bool
    subgradient_violations: tuple[tuple[int, int], ...] = ()
    monotonicity_violations: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class ConvexityCertificate:
    """Joint verdict of the three convexity criteria on one sequence."""

    defining: ConvexityReport
    slopes_ok: bool
    slope_violation: tuple[int, int, int] | None
    support: SupportSequence | None
    support_ok: bool

    @property
    def is_convex(self) -> bool:
        return self.defining.is_convex


def check_defining_inequality(
    u: Sequence, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> ConvexityReport:
    """Check ``2*u[n] <= u[n-1] + u[n+1]`` at every interior index."""
    v = u.values
    violations = []
    for k in range(1, len(v) - 1):
        if not tol.leq(2.0 * v[k], v[k - 1] + v[k + 1]):
            violations.append((u.start_index + k, 2.0 * v[k] - v[k - 1] - v[k + 1]))
    return ConvexityReport(not violations, tuple(violations))


def slope(u: Sequence, i: int, j: int) -> float:
    """Divided difference ``(u[j] - u[i]) / (j - i)`` over absolute indices."""
    if i == j:
        raise ValueError("degenerate slope")
    return (u[j] - u[i]) / (j - i)


def check_three_point_slopes(
    u: Sequence,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    exhaustive: bool = False,
) -> SlopeCheck:
    """Check that slopes are monotone across index triples.

    The default mode checks adjacent triples only, which is equivalent and
    O(N).  ``exhaustive=True`` scans all ``n1 < n2 < n3`` in lexicographic
    order and reports the first violating triple; it exists so the
    equivalence of the criteria can be tested without shortcuts.
    """
    n = len(u)
    if n < 3:
        return SlopeCheck(True)
    v = u.values
    base = u.start_index
    if exhaustive:
        for i in range(n - 2):
            for j in range(i + 1, n - 1):
                left = (v[j] - v[i]) / (j - i)
                for k in range(j + 1, n):
                    right = (v[k] - v[j]) / (k - j)
                    if not tol.leq(left, right):
                        return SlopeCheck(False, (base + i, base + j, base + k))
        return SlopeCheck(True)
    for j in range(1, n - 1):
        if not tol.leq(v[j] - v[j - 1], v[j + 1] - v[j]):
            return SlopeCheck(False, (base + j - 1, base + j, base + j + 1))
    return SlopeCheck(True)


def support_sequence(u: Sequence) -> SupportSequence:
    """Build the canonical support candidate ``v[n] = min slope over pairs at or after n``.

    For each n in ``[start_index, last_index - 1]``, ``v[n]`` is the minimum
    of ``slope(u, n1, n2)`` over ``n <= n1 < n2 <= last_index``, together
    with the lexicographically smallest minimizing pair.  For a convex u
    this minimum is the adjacent slope ``u[n+1] - u[n]`` and v is monotone;
    for a non-convex u the candidate always fails :func:`verify_support`.
    """
    if len(u) < 2:
        raise ValueError("sequence too short")
    vals = u.values
    base = u.start_index
    count = len(vals) - 1
    v = [0.0] * count
    witnesses: list[tuple[int, int]] = [(0, 0)] * count
    best = None
    best_pair = (0, 0)
    # Suffix scan: pairs starting at n1 are folded into the running minimum
    # for every n <= n1.  Ties prefer smaller n1, then smaller n2.
    for i in range(count - 1, -1, -1):
        row_best = None
        row_pair = (0, 0)
        for j in range(i + 1, len(vals)):
            s = (vals[j] - vals[i]) / (j - i)
            if row_best is None or s < row_best:
                row_best = s
                row_pair = (base + i, base + j)
        if best is None or row_best <= best:
            best = row_best
            best_pair = row_pair
        v[i] = best
        witnesses[i] = best_pair
    return SupportSequence(
        base=u,
        values=tuple(v),
        first_index=base,
        last_index=base + count - 1,
        witness_pairs=tuple(witnesses),
    )


def verify_support(
    u: Sequence, s: SupportSequence, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> SupportCheck:
    """Check a candidate support sequence against u.

    Accepts any candidate, not only the one built by :func:`support_sequence`.
    The verdict is true iff ``u[n] - u[m] <= v[n] * (n - m)`` within
    tolerance for every m in u's range and n in the support window, and v is
    monotone increasing.  Violating ``(m, n)`` pairs are listed either way;
    monotonicity violations are listed as adjacent window index pairs.
    """
    if not (u.start_index <= s.first_index and s.last_index <= u.last_index):
        raise ValueError("support window outside sequence range")
    sub = []
    for n in range(s.first_index, s.last_index + 1):
        vn = s.value_at(n)
        un = u[n]
        for m in u.indices():
            if not tol.leq(un - u[m], vn * (n - m)):
                sub.append((m, n))
    mono = []
    for n in range(s.first_index, s.last_index):
        if not tol.leq(s.value_at(n), s.value_at(n + 1)):
            mono.append((n, n + 1))
    return SupportCheck(not sub and not mono, tuple(sub), tuple(mono))


def certify_convexity(
    u: Sequence, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> ConvexityCertificate:
    """Run all three convexity criteria and assert that they agree.

    Sequences shorter than 2 carry no support sequence; the support leg is
    then vacuously true.  The three verdicts agree on any input whose
    margins are not at the tolerance boundary; a disagreement is raised as
    an internal error rather than folded into the certificate.
    """
    defining = check_defining_inequality(u, tol)
    slopes = check_three_point_slopes(u, tol)
    if len(u) >= 2:
        support = support_sequence(u)
        support_ok = verify_support(u, support, tol).ok
    else:
        support = None
        support_ok = True
    if not (defining.is_convex == slopes.ok == support_ok):
        raise RuntimeError(
            "convexity criteria disagree "
            f"(defining={defining.is_convex}, slopes={slopes.ok}, support={support_ok}); "
            "input sits at the tolerance boundary or this is a bug"
        )
    return ConvexityCertificate(
        defining=defining,
        slopes_ok=slopes.ok,
        slope_violation=slopes.first_violation,
        support=support,
        support_ok=support_ok,
    )
