"""Immutable domain model for partitions of the integer interval [1, n].

Everything else in the package (verification, construction, search,
file I/O) consumes the types defined here.  Partitions never mutate
after construction, so they are safe to share across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class PartitionError(ValueError):
    """A claimed partition of [1, n] is structurally malformed."""


class Kind(enum.Enum):
    """Sum-freeness discipline a partition claims.

    STRONG forbids a + b = c inside a subset even when a == b (the
    classical Schur condition).  WEAK forbids only triples whose three
    members are all distinct, so a pair (a, 2a) may share a subset.
    """

    STRONG = "strong"
    WEAK = "weak"

    @classmethod
    def from_token(cls, token: str) -> "Kind":
        try:
            return cls(token.lower())
        except ValueError:
            raise ValueError(f"unknown kind {token!r}; expected 'strong' or 'weak'") from None


class Rule(enum.Enum):
    """A single construction step, named by its order arithmetic.

    Each rule consumes a strong partition of [1, m] with r subsets and
    produces a larger partition; only STRONG_3M1 produces another strong
    partition, so it is the only rule that may be followed by further
    steps.
    """

    STRONG_3M1 = "3m1"
    WEAK_4M2 = "4m2"
    WEAK_13M8 = "13m8"

    @classmethod
    def from_token(cls, token: str) -> "Rule":
        for rule in cls:
            if rule.value == token:
                return rule
        options = ", ".join(r.value for r in cls)
        raise ValueError(f"unknown rule {token!r}; expected one of: {options}")

    @property
    def output_kind(self) -> Kind:
        return Kind.STRONG if self is Rule.STRONG_3M1 else Kind.WEAK

    def order_after(self, m: int) -> int:
        """Order of the output partition for a seed of order m."""
        if self is Rule.STRONG_3M1:
            return 3 * m + 1
        if self is Rule.WEAK_4M2:
            return 4 * m + 2
        return 13 * m + 8

    def subsets_after(self, r: int) -> int:
        """Subset count of the output partition for a seed with r subsets."""
        return r + 2 if self is Rule.WEAK_13M8 else r + 1


@dataclass(frozen=True)
class Violation:
    """An additive triple a + b = c found inside one subset.

    ``distinct`` is False exactly when a == b; such triples break the
    strong condition but are tolerated by the weak one.
    """

    subset: int  # 1-based index of the subset within its partition
    a: int
    b: int
    c: int
    distinct: bool


@dataclass(frozen=True)
class WeakPair:
    """A pair (a, 2a) whose two members share the cited subset."""

    subset: int
    a: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a partition against one Kind.

    ``valid`` is True exactly when both ``violations`` and
    ``coverage_defects`` are empty.  Violations are sorted by
    (subset, a, b); coverage defects list every integer of [1, n] that
    is missing from, or duplicated across, the subsets.
    """

    valid: bool
    kind_checked: Kind
    violations: tuple[Violation, ...]
    coverage_defects: tuple[int, ...]


@dataclass(frozen=True)
class ChainSchedule:
    """An ordered list of construction rules applied from a seed.

    Rules producing weak partitions are terminal: nothing may follow a
    WEAK_4M2 or WEAK_13M8 step, because every rule requires a strong
    input.
    """

    steps: tuple[Rule, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        for i, step in enumerate(self.steps[:-1]):
            if step.output_kind is Kind.WEAK:
                raise ValueError(
                    f"step {i + 1} ({step.value}) produces a weak partition; "
                    "no further step may follow it"
                )

    @classmethod
    def parse(cls, text: str) -> "ChainSchedule":
        """Build a schedule from a comma-separated rule list like '3m1,3m1,4m2'."""
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        if not tokens:
            raise ValueError("empty schedule")
        return cls(tuple(Rule.from_token(t) for t in tokens))


def _bitmask(elements: Iterable[int], bound: int) -> int:
    """Dense membership mask: bit x is set iff x is among ``elements``."""
    buf = bytearray(bound // 8 + 1)
    for x in elements:
        buf[x >> 3] |= 1 << (x & 7)
    return int.from_bytes(buf, "little")


@dataclass(frozen=True)
class Partition:
    """A partition of [1, n] into disjoint non-empty subsets.

    ``kind`` records which sum-freeness property the partition claims;
    it is a claim, not a verified fact.  Use :func:`make_partition` to
    build instances; it enforces the structural invariants (exact cover
    of [1, n], disjointness, no empty subset).

    Subsets are 1-based and order-significant: construction outputs
    place the index-union subsets first and the tail subsets last.
    """

    n: int
    subsets: tuple[tuple[int, ...], ...]
    kind: Kind

    @property
    def r(self) -> int:
        """Number of subsets."""
        return len(self.subsets)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Per-subset membership bitmasks for O(1) membership tests."""
        return tuple(_bitmask(s, self.n) for s in self.subsets)


def make_partition(n: int, subsets: Sequence[Sequence[int]], kind: Kind) -> Partition:
    """Validate and build a Partition of [1, n].

    Subsets are normalized to strictly ascending order.  Raises
    :class:`PartitionError` naming the offending element or subset when
    the input has an empty subset, an element outside [1, n], an element
    repeated within or across subsets, or an uncovered element.
    """
    if not isinstance(n, int) or n < 1:
        raise PartitionError(f"order must be a positive integer, got {n!r}")
    if not subsets:
        raise PartitionError("a partition needs at least one subset")
    owner = [0] * (n + 1)
    normalized: list[tuple[int, ...]] = []
    for j, subset in enumerate(subsets, start=1):
        elems = sorted(subset)
        if not elems:
            raise PartitionError(f"subset {j} is empty")
        prev = 0
        for x in elems:
            if not isinstance(x, int):
                raise PartitionError(f"subset {j} contains non-integer {x!r}")
            if x < 1 or x > n:
                raise PartitionError(f"element {x} of subset {j} lies outside [1, {n}]")
            if x == prev:
                raise PartitionError(f"element {x} appears twice in subset {j}")
            held = owner[x]
            if held:
                raise PartitionError(
                    f"element {x} appears in both subset {held} and subset {j}"
                )
            owner[x] = j
            prev = x
        normalized.append(tuple(elems))
    for x in range(1, n + 1):
        if not owner[x]:
            raise PartitionError(f"[1, {n}] is not fully covered: element {x} is missing")
    return Partition(n=n, subsets=tuple(normalized), kind=kind)
