#!/usr/bin/env python3
"""Build the two base weak partitions and exercise the verifier.

A partition of [1, n] is strongly sum-free per subset when no subset
solves a + b = c (a == b allowed), and weakly sum-free when only
triples of three distinct members are forbidden.  The gap between the
two notions is exactly the weak pairs (a, 2a).
"""

from weakschur import (
    Kind,
    enumerate_weak_pairs,
    make_partition,
    verify_partition,
)

print("=" * 64)
print("Order-6 base partition: {1,2,6} | {3,4,5}")
print("=" * 64)

p6 = make_partition(6, [[1, 2, 6], [3, 4, 5]], Kind.WEAK)
weak_report = verify_partition(p6, Kind.WEAK)
strong_report = verify_partition(p6, Kind.STRONG)
print(f"weak-valid:   {weak_report.valid}")
print(f"strong-valid: {strong_report.valid}")
for v in strong_report.violations:
    note = " (a = b)" if not v.distinct else ""
    print(f"  strong violation in subset {v.subset}: {v.a} + {v.b} = {v.c}{note}")

print("\nThe only thing keeping it from being strong is its weak pair:")
for pair in enumerate_weak_pairs(p6):
    print(f"  subset {pair.subset}: ({pair.a}, {2 * pair.a})")

print()
print("=" * 64)
print("Order-21 base partition: {1,2,4,8,21} | {3,5,6,7,18,19,20} | [9,17]")
print("=" * 64)

p21 = make_partition(
    21, [[1, 2, 4, 8, 21], [3, 5, 6, 7, 18, 19, 20], list(range(9, 18))], Kind.WEAK
)
print(f"weak-valid: {verify_partition(p21, Kind.WEAK).valid}")
print("weak pairs (exactly four):")
for pair in enumerate_weak_pairs(p21):
    print(f"  subset {pair.subset}: ({pair.a}, {2 * pair.a})")

print()
print("=" * 64)
print("What a failing report looks like")
print("=" * 64)

bad = make_partition(9, [[1, 2, 3], [4, 5, 6, 7, 8, 9]], Kind.WEAK)
report = verify_partition(bad, Kind.WEAK)
print(f"claimed weak, valid: {report.valid}")
for v in report.violations:
    print(f"  subset {v.subset}: {v.a} + {v.b} = {v.c}")
