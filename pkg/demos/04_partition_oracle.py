"""Cross-check the hull recursion against raw partition enumeration.

The dynamic programme computes v_n in O(N^2) total.  The oracle instead
minimises over every integer partition of n, which is only feasible for
small n but needs no insight about the recursion.  They must agree.
"""

import time

from seqineq import Sequence, enumerate_partitions, hull_bruteforce, subadditive_hull

print("partitions of 6:")
for witness in enumerate_partitions(6):
    print("  ", witness.parts)
print()

u = Sequence((2.0, 5.0, 6.0, 7.0), 1)
print("u =", u.values)
hull = subadditive_hull(u)
for n in u.indices():
    direct = hull_bruteforce(u, n)
    mark = "ok" if direct == hull.v[n] else "MISMATCH"
    print(f"  n={n}: dp={hull.v[n]}  oracle={direct}  {mark}")
print()

# the oracle cost is the partition count, which grows fast
for n in (10, 20, 30):
    u = Sequence(tuple(float(k % 7) + 1.0 for k in range(n)), 1)
    t0 = time.perf_counter()
    count = len(enumerate_partitions(n))
    t1 = time.perf_counter()
    subadditive_hull(u)
    t2 = time.perf_counter()
    print(
        f"n={n}: {count} partitions, oracle enumeration {t1 - t0:.3f}s, "
        f"full dp hull {t2 - t1:.6f}s"
    )
