"""Constructions that grow small strong partitions into larger ones.

Two rules turn a strong partition of [1, m] with r subsets into a weak
partition: one of order 4m+2 with r+1 subsets, one of order 13m+8 with
r+2 subsets.  Both follow the same plan: a translate family T_i indexed
by [1, m] is grouped into unions according to the seed's subsets, and
the leftover residues form one or two tail subsets extended
arithmetically.  A third rule is the classical strong extension to
order 3m+1, used to grow seeds before applying a weak rule.

Every constructor verifies its input (rejecting anything that is not a
valid strong partition) and re-verifies its own output, so an invalid
partition is never returned silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    ChainSchedule,
    Kind,
    Partition,
    Rule,
    VerificationReport,
    make_partition,
)
from .verify import verify_partition


class ConstructionError(ValueError):
    """A construction was fed an invalid seed, or emitted a bad output.

    When verification failed, ``report`` carries the offending
    VerificationReport.
    """

    def __init__(self, message: str, report: VerificationReport | None = None):
        super().__init__(message)
        self.report = report


class ChainError(RuntimeError):
    """A chain stage failed verification; ``stage`` is 0 for the seed."""

    def __init__(self, stage: int, report: VerificationReport | None, message: str):
        super().__init__(message)
        self.stage = stage
        self.report = report


def _require_strong_seed(q: Partition, op: str) -> None:
    if q.kind is not Kind.STRONG:
        raise ConstructionError(
            f"{op} requires a strong seed; got a partition of kind '{q.kind.value}'"
        )
    report = verify_partition(q, Kind.STRONG)
    if not report.valid:
        raise ConstructionError(
            f"{op}: seed of order {q.n} is not a valid strong partition "
            f"({len(report.violations)} violation(s))",
            report=report,
        )


def _check_output(p: Partition, kind: Kind, op: str) -> Partition:
    report = verify_partition(p, kind)
    if not report.valid:
        raise ConstructionError(
            f"{op}: constructed output of order {p.n} failed {kind.value} "
            "verification; this indicates an implementation fault",
            report=report,
        )
    return p


def extend_weak_4m2(q: Partition) -> Partition:
    """Weak partition of [1, 4m+2] with r+1 subsets from a strong q(r; m).

    Subset j of the output is the union of the translates
    T_i = {4i-1, 4i, 4i+1} over all i in seed subset j.  The tail
    subset {1, 2} + {4t+2 : 1 <= t <= m} comes last; it holds the
    output's only weak pair, (1, 2).
    """
    _require_strong_seed(q, "extend_weak_4m2")
    m = q.n
    unions = [
        [v for i in subset for v in (4 * i - 1, 4 * i, 4 * i + 1)]
        for subset in q.subsets
    ]
    tail = [1, 2] + [4 * t + 2 for t in range(1, m + 1)]
    out = make_partition(4 * m + 2, unions + [tail], Kind.WEAK)
    return _check_output(out, Kind.WEAK, "extend_weak_4m2")


def extend_weak_13m8(q: Partition) -> Partition:
    """Weak partition of [1, 13m+8] with r+2 subsets from a strong q(r; m).

    Subset j of the output is the union of the interval translates
    T_i = [13i-4, 13i+4] over all i in seed subset j.  Two tails follow,
    each extended with period 13 from the residues above 4 of its base
    block: {1, 2, 4} + {13t+8 : 0 <= t <= m}, then
    {3} + {13t+5, 13t+6, 13t+7 : 0 <= t <= m}.  The output carries
    exactly four weak pairs, (1,2), (2,4), (4,8) and (3,6), all inside
    the tails.
    """
    _require_strong_seed(q, "extend_weak_13m8")
    m = q.n
    unions = [
        [v for i in subset for v in range(13 * i - 4, 13 * i + 5)]
        for subset in q.subsets
    ]
    tail1 = [1, 2, 4] + [13 * t + 8 for t in range(m + 1)]
    tail2 = [3] + [v for t in range(m + 1) for v in (13 * t + 5, 13 * t + 6, 13 * t + 7)]
    out = make_partition(13 * m + 8, unions + [tail1, tail2], Kind.WEAK)
    return _check_output(out, Kind.WEAK, "extend_weak_13m8")


def extend_strong_3m1(q: Partition) -> Partition:
    """Strong partition of [1, 3m+1] with r+1 subsets from a strong q(r; m).

    The classical extension: subset j of the output is
    {3i-1 : i in Q_j} + {3i : i in Q_j}, and the tail
    {3t+1 : 0 <= t <= m} comes last.  Output verification is mandatory;
    a failure here is an implementation fault, never a silent emission.
    """
    _require_strong_seed(q, "extend_strong_3m1")
    m = q.n
    unions = [
        [v for i in subset for v in (3 * i - 1, 3 * i)]
        for subset in q.subsets
    ]
    tail = [3 * t + 1 for t in range(m + 1)]
    out = make_partition(3 * m + 1, unions + [tail], Kind.STRONG)
    return _check_output(out, Kind.STRONG, "extend_strong_3m1")


_APPLY = {
    Rule.STRONG_3M1: extend_strong_3m1,
    Rule.WEAK_4M2: extend_weak_4m2,
    Rule.WEAK_13M8: extend_weak_13m8,
}


@dataclass(frozen=True)
class ChainStage:
    """One applied rule: the partition it produced and its certificate."""

    rule: Rule
    partition: Partition
    report: VerificationReport


@dataclass(frozen=True)
class ChainResult:
    """All stages of a construction chain, seed included for reference."""

    seed: Partition
    stages: tuple[ChainStage, ...]
    final: Partition

    @property
    def orders(self) -> list[int]:
        """Order sequence, starting at the seed."""
        return [self.seed.n] + [s.partition.n for s in self.stages]


def run_chain(seed: Partition, schedule: ChainSchedule | Sequence[Rule]) -> ChainResult:
    """Apply a schedule of rules from a strong seed, verifying every stage.

    Aborts with :class:`ChainError` carrying the stage index and report
    if the seed or any intermediate output fails verification; a valid
    result therefore certifies every partition it contains.
    """
    if not isinstance(schedule, ChainSchedule):
        schedule = ChainSchedule(tuple(schedule))
    if seed.kind is not Kind.STRONG:
        raise ChainError(0, None, "chain seed must claim kind strong")
    seed_report = verify_partition(seed, Kind.STRONG)
    if not seed_report.valid:
        raise ChainError(0, seed_report, "chain seed failed strong verification")

    stages: list[ChainStage] = []
    current = seed
    for index, rule in enumerate(schedule.steps, start=1):
        try:
            nxt = _APPLY[rule](current)
        except ConstructionError as exc:
            raise ChainError(index, exc.report, f"stage {index} ({rule.value}): {exc}") from exc
        report = verify_partition(nxt, rule.output_kind)
        if not report.valid:
            raise ChainError(index, report, f"stage {index} ({rule.value}) failed verification")
        stages.append(ChainStage(rule, nxt, report))
        current = nxt
    return ChainResult(seed=seed, stages=tuple(stages), final=current)


@dataclass(frozen=True)
class RatioEntry:
    """Order growth of one chain stage.

    ``ratio`` is exact.  ``per_color`` is only set for the 13m+8 rule,
    which adds two subsets: it is the square root of the order ratio,
    the growth attributable to each added color.
    """

    rule: Rule
    order_before: int
    order_after: int
    ratio: Fraction
    per_color: float | None


def growth_ratios(chain: ChainResult) -> list[RatioEntry]:
    """Successive order ratios along a chain, seed order included."""
    if not chain.stages:
        raise ValueError("chain has no stages; ratios need at least one step")
    orders = chain.orders
    entries: list[RatioEntry] = []
    for i, stage in enumerate(chain.stages):
        ratio = Fraction(orders[i + 1], orders[i])
        per_color = math.sqrt(ratio) if stage.rule is Rule.WEAK_13M8 else None
        entries.append(RatioEntry(stage.rule, orders[i], orders[i + 1], ratio, per_color))
    return entries
