"""Walk one convex sequence and one spiked counterexample through all
three convexity tests and show that they agree.

Run with:  python3 demos/01_convexity_certificates.py
"""

from seqineq import (
    Sequence,
    certify_convexity,
    check_defining_inequality,
    check_three_point_slopes,
    second_differences,
    support_sequence,
    verify_support,
)


def banner(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    u = Sequence((0.0, -1.0, 1.0, 3.0), 0)
    banner(f"convex example  u = {u.values}, indices start at {u.start_index}")

    seconds = second_differences(u)
    print("second differences:", seconds.values)
    print("defining inequality holds:", check_defining_inequality(u).is_convex)

    slopes = check_three_point_slopes(u, exhaustive=True)
    print("slopes nondecreasing over every triple:", slopes.ok)

    s = support_sequence(u)
    print("support sequence:", s.values, "on window", (s.first_index, s.last_index))
    print("slope pairs realising each support value:", s.witness_pairs)
    check = verify_support(u, s)
    print("support certificate verifies:", check.ok)

    cert = certify_convexity(u)
    print("combined certificate says convex:", cert.is_convex)

    spike = Sequence((0.0, 1.0, 0.0), 0)
    banner(f"counterexample  u = {spike.values}")

    report = check_defining_inequality(spike)
    # each violation is (index, defect) with defect = 2 u_n - u_{n-1} - u_{n+1}
    print("defining inequality violations:", report.violations)
    print("first bad triple:", check_three_point_slopes(spike, exhaustive=True).first_violation)

    s = support_sequence(spike)
    check = verify_support(spike, s)
    print("best candidate support:", s.values)
    print("subgradient violations (m, n):", check.subgradient_violations)
    print("so no support sequence exists and", spike.values, "is not convex")


if __name__ == "__main__":
    main()
