"""Subadditive hulls, the stability gap, and the u = v + w split."""

import random

from seqineq import (
    Sequence,
    compose,
    decompose,
    epsilon_star,
    is_approx_subadditive,
    is_subadditive_pairwise,
    subadditive_hull,
)

u = Sequence((1.0, 3.0, 2.0), 1)
print("u =", u.values, " (indices start at 1, as subadditivity requires)")

pairwise = is_subadditive_pairwise(u)
print("pairwise subadditive:", pairwise.ok, " violating pairs:", pairwise.violations)

hull = subadditive_hull(u)
print("hull v =", hull.v.values)
for witness in hull.witnesses:
    parts = " + ".join(f"u_{k}" for k in witness.parts)
    print(f"  v_{witness.n} achieved by {parts}  (partition {witness.parts})")

gap = epsilon_star(u)
print("epsilon* =", gap)
print("subadditive within eps=1.0:", is_approx_subadditive(u, 1.0))
print("subadditive within eps=0.999999:", is_approx_subadditive(u, 1.0 - 1e-6))
print()

# a larger randomised round trip: split, check the pieces, reassemble
rng = random.Random(7)
values = tuple(float(rng.randint(-5, 15)) for _ in range(12))
u = Sequence(values, 1)
print("random u =", u.values)

split = decompose(u)
print("v =", split.v.values)
print("w =", split.w.values)
print("epsilon* =", split.epsilon_star)
print("v subadditive:", is_subadditive_pairwise(split.v).ok)
print("w bounded by epsilon*:", all(0.0 <= x <= split.epsilon_star for x in split.w.values))

back = compose(split.v, split.w)
print("compose certifies:", back.certified, " with eps =", back.epsilon)
print("v + w returns u bitwise:", back.u.values == u.values)
