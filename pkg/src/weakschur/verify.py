"""Sum-freeness checks and whole-partition certification.

The fast path represents each subset as a membership bitmask.  All sums
a + b reachable from pairs inside the subset are accumulated by shifting
the mask by each element and OR-ing the results; any bit that lands back
inside the mask is a violation candidate, and candidates are then
expanded into explicit (a, b, c) triples.  Cost is O(k * n / wordsize)
per subset of size k, which certifies partitions of order ~10^5 in well
under a second.

brute_force_check is the deliberately dumb independent oracle: a literal
triple-nested loop with no bit tricks, usable on small subsets only.
"""

from __future__ import annotations

from typing import Sequence

from .core import Kind, Partition, VerificationReport, Violation, WeakPair, _bitmask

BRUTE_FORCE_LIMIT = 2000


def _iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _mask_violations(
    elems: Sequence[int], mask: int, kind: Kind, subset_id: int
) -> list[Violation]:
    """All forbidden triples inside one subset, sorted by (a, b)."""
    strong = kind is Kind.STRONG
    sums = 0
    if strong:
        for a in elems:
            sums |= mask << a
    else:
        # Drop the a + a diagonal up front: only distinct pairs count.
        for a in elems:
            sums |= (mask ^ (1 << a)) << a
    hits = sums & mask
    violations: list[Violation] = []
    for c in _iter_bits(hits):
        half = c // 2
        for a in elems:
            if a > half:
                break
            b = c - a
            if (mask >> b) & 1:
                if a == b and not strong:
                    continue
                violations.append(Violation(subset_id, a, b, c, a != b))
    violations.sort(key=lambda v: (v.a, v.b))
    return violations


def check_subset(
    subset: Sequence[int], universe_bound: int, kind: Kind, subset_id: int = 1
) -> list[Violation]:
    """Every triple a <= b with a + b = c and all three in the subset.

    Under Kind.WEAK only triples with a != b are reported; under
    Kind.STRONG the a == b triples are included as well.  An empty
    result means the subset is sum-free in the requested sense.
    """
    elems = sorted(subset)
    if not elems:
        raise ValueError("subset is empty")
    if elems[0] < 1 or elems[-1] > universe_bound:
        bad = elems[0] if elems[0] < 1 else elems[-1]
        raise ValueError(f"element {bad} outside [1, {universe_bound}]")
    mask = _bitmask(elems, universe_bound)
    return _mask_violations(elems, mask, kind, subset_id)


def verify_partition(p: Partition, kind: Kind | None = None) -> VerificationReport:
    """Certify a partition against a Kind (the partition's own by default).

    Collects every violation from every subset, not just the first, plus
    any coverage defects (elements of [1, n] missing from or duplicated
    across subsets).  The report is valid iff both lists are empty.
    """
    if kind is None:
        kind = p.kind
    violations: list[Violation] = []
    for j, (subset, mask) in enumerate(zip(p.subsets, p.masks), start=1):
        violations.extend(_mask_violations(subset, mask, kind, j))

    seen = 0
    dups = 0
    for mask in p.masks:
        dups |= seen & mask
        seen |= mask
    full = (1 << (p.n + 1)) - 2  # bits 1..n
    defects = sorted(set(_iter_bits(dups)) | set(_iter_bits(full & ~seen)))

    return VerificationReport(
        valid=not violations and not defects,
        kind_checked=kind,
        violations=tuple(violations),
        coverage_defects=tuple(defects),
    )


def enumerate_weak_pairs(p: Partition) -> list[WeakPair]:
    """All pairs (a, 2a) co-resident in one subset, sorted by (subset, a)."""
    pairs: list[WeakPair] = []
    for j, (subset, mask) in enumerate(zip(p.subsets, p.masks), start=1):
        for a in subset:
            double = a + a
            if double > p.n:
                break
            if (mask >> double) & 1:
                pairs.append(WeakPair(j, a))
    return pairs


def brute_force_check(subset: Sequence[int], kind: Kind) -> bool:
    """Independent oracle: True iff the subset is sum-free under ``kind``.

    Literal triple-nested loop over sorted elements; no membership
    structures, so it shares nothing with the fast path.  Guarded to
    subsets of at most BRUTE_FORCE_LIMIT elements.
    """
    elems = sorted(set(subset))
    if len(elems) > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"subset of size {len(elems)} exceeds brute-force guard ({BRUTE_FORCE_LIMIT})"
        )
    strong = kind is Kind.STRONG
    for k in range(len(elems)):
        c = elems[k]
        for i in range(k):
            a = elems[i]
            for j in range(i, k):
                if a + elems[j] == c and (strong or j != i):
                    return False
    return True
