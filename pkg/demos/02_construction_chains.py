#!/usr/bin/env python3
"""Grow weak partitions of unbounded order from the one-element seed.

The 3m+1 rule keeps partitions strong, so it can be iterated; the
4m+2 and 13m+8 rules trade strongness for a bigger jump and must come
last.  Every stage is verified, so each printed line is a certified
lower-bound witness at its subset count.
"""

from weakschur import Kind, Rule, growth_ratios, make_partition, run_chain

seed = make_partition(1, [[1]], Kind.STRONG)

print("=" * 72)
print("Chain: five 3m+1 steps, then one 4m+2 step")
print("=" * 72)

chain = run_chain(seed, [Rule.STRONG_3M1] * 5 + [Rule.WEAK_4M2])
print(f"{'stage':>5}  {'rule':<5} {'kind':<7} {'r':>3} {'order':>6}  valid")
print(f"{'seed':>5}  {'-':<5} {'strong':<7} {seed.r:>3} {seed.n:>6}  True")
for i, stage in enumerate(chain.stages, start=1):
    p = stage.partition
    print(
        f"{i:>5}  {stage.rule.value:<5} {p.kind.value:<7} {p.r:>3} {p.n:>6}  "
        f"{stage.report.valid}"
    )

print("\nOrder growth (the strong prefix tends to 3 from above):")
for entry in growth_ratios(chain):
    extra = (
        f"   per added color: {entry.per_color:.4f}"
        if entry.per_color is not None
        else ""
    )
    print(
        f"  {entry.rule.value:<5} {entry.order_before:>6} -> {entry.order_after:>6}"
        f"   ratio {float(entry.ratio):.6f}{extra}"
    )

print()
print("=" * 72)
print("The 13m+8 rule pays two subsets for a 13x jump")
print("=" * 72)

chain13 = run_chain(seed, [Rule.STRONG_3M1] * 3 + [Rule.WEAK_13M8])
for entry in growth_ratios(chain13):
    extra = (
        f"   per added color: {entry.per_color:.4f}"
        if entry.per_color is not None
        else ""
    )
    print(
        f"  {entry.rule.value:<5} {entry.order_before:>6} -> {entry.order_after:>6}"
        f"   ratio {float(entry.ratio):.6f}{extra}"
    )

print()
print("=" * 72)
print("Headline weak lower bounds from published strong seed orders")
print("=" * 72)
print("(The seeds themselves are search products far beyond desk scale;")
print(" given such a seed file, `schur construct` certifies the bound.)")
print()
print(f"{'seed order':>10} {'seed r':>7} {'rule':>6} {'weak order':>11} {'weak r':>7}")
for m, r, rule in [
    (160, 5, Rule.WEAK_4M2),
    (536, 6, Rule.WEAK_4M2),
    (536, 6, Rule.WEAK_13M8),
    (1680, 7, Rule.WEAK_13M8),
    (17694, 9, Rule.WEAK_4M2),
]:
    print(
        f"{m:>10} {r:>7} {rule.value:>6} {rule.order_after(m):>11} "
        f"{rule.subsets_after(r):>7}"
    )
