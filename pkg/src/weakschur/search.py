"""Exhaustive backtracking search for maximal strong/weak partitions.

Integers 1, 2, 3, ... are assigned depth-first to one of r subsets.
Each subset keeps a bitmask of members and a bitmask of forbidden
values: when x joins a subset, every sum x + y with y already present
(plus 2x in the strong case) becomes forbidden there, so feasibility of
a placement is a single bit test.  Symmetry is broken canonically:
integer 1 goes to subset 1 and a new subset may only be opened in index
order, so no two explored assignments are equal up to relabeling.

This module is the ground-truth oracle for small Schur-type numbers and
the seed generator for construction fuzzing.  With the default budget,
r <= 3 (both kinds) and r = 4 strong complete exhaustively; r = 4 weak
and anything at r >= 5 should be expected to return exhaustive=False,
so no maximality claim attaches to those results.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import Kind, Partition, make_partition
from .verify import verify_partition


class SearchBudgetExceeded(RuntimeError):
    """Enumeration ran out of budget before the tree was fully explored."""


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock bounds for a search.

    At least one bound must be finite unless ``unbounded_ok`` is set
    explicitly.
    """

    max_nodes: int | None = 10**9
    max_seconds: float | None = 300.0
    unbounded_ok: bool = False

    def __post_init__(self) -> None:
        if self.max_nodes is not None and self.max_nodes < 1:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")
        if self.max_nodes is None and self.max_seconds is None and not self.unbounded_ok:
            raise ValueError("budget is unbounded; pass unbounded_ok=True to allow that")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class SearchResult:
    """Best partition found for (r, kind).

    ``exhaustive`` is True iff the whole search tree was explored within
    budget, which certifies that best.n is maximal.
    ``witness_count_at_best_order`` counts the canonical complete
    colorings seen at the best order.
    """

    best: Partition
    exhaustive: bool
    nodes_visited: int
    witness_count_at_best_order: int


def _budget_limits(budget: SearchBudget) -> tuple[int, float | None]:
    node_limit = budget.max_nodes if budget.max_nodes is not None else 1 << 62
    deadline = None
    if budget.max_seconds is not None:
        deadline = time.monotonic() + budget.max_seconds
    return node_limit, deadline


def _partition_from(assign: list[int], n: int, kind: Kind) -> Partition:
    subsets: list[list[int]] = [[] for _ in range(max(assign) + 1)]
    for x, s in enumerate(assign, start=1):
        subsets[s].append(x)
    return make_partition(n, subsets, kind)


def search_max(r: int, kind: Kind, budget: SearchBudget = DEFAULT_BUDGET) -> SearchResult:
    """Largest n such that [1, n] splits into r subsets of the given kind.

    Returns the lexicographically smallest witness at the best order
    reached.  ``exhaustive`` is True only when backtracking completed
    within budget, certifying that no order best.n + 1 partition exists.
    """
    if r < 1:
        raise ValueError(f"need at least one subset, got r={r}")
    strong = kind is Kind.STRONG
    member = [0] * r
    forbid = [0] * r
    assign: list[int] = []
    nodes = 0
    best_n = 0
    best_assign: list[int] = []
    witnesses = 0
    aborted = False
    node_limit, deadline = _budget_limits(budget)
    monotonic = time.monotonic

    def walk(x: int, opened: int) -> None:
        nonlocal nodes, best_n, best_assign, witnesses, aborted
        depth = x - 1
        if depth > best_n:
            best_n = depth
            best_assign = assign.copy()
            witnesses = 1
        elif depth == best_n and depth > 0:
            witnesses += 1
        if opened == r:
            # Horizon prune: the first integer >= x forbidden in every
            # subset caps the reachable depth (forbidden masks only grow
            # along a branch).  Branches that cannot reach the current
            # best order cannot host a witness either, so cutting them
            # changes neither the result nor the witness count.
            blocked = forbid[0]
            for t in forbid:
                blocked &= t
            t = blocked >> x
            if t and x + (t & -t).bit_length() - 2 < best_n:
                return
        bit = 1 << x
        extra = bit << x if strong else 0
        tries = opened + 1 if opened < r else r
        s = 0
        while s < tries:
            f = forbid[s]
            if not (f >> x) & 1:
                if nodes >= node_limit or (
                    deadline is not None and not nodes & 1023 and monotonic() > deadline
                ):
                    aborted = True
                    return
                nodes += 1
                mem = member[s]
                forbid[s] = f | (mem << x) | extra
                member[s] = mem | bit
                assign.append(s)
                walk(x + 1, opened + 1 if s == opened else opened)
                assign.pop()
                member[s] = mem
                forbid[s] = f
                if aborted:
                    return
            s += 1

    walk(1, 0)
    best = _partition_from(best_assign, best_n, kind)
    report = verify_partition(best, kind)
    if not report.valid:
        raise RuntimeError("search emitted an invalid partition; pruning fault")
    return SearchResult(
        best=best,
        exhaustive=not aborted,
        nodes_visited=nodes,
        witness_count_at_best_order=witnesses,
    )


def enumerate_all_max(
    r: int, kind: Kind, order: int, budget: SearchBudget = DEFAULT_BUDGET
) -> list[Partition]:
    """All partitions of [1, order] into exactly r subsets of the kind.

    Results are canonical (symmetry-broken), so no two are equal up to
    subset relabeling.  Raises :class:`SearchBudgetExceeded` when the
    budget runs out, which is distinct from an empty result meaning
    none exist.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if r < 1:
        raise ValueError(f"need at least one subset, got r={r}")
    strong = kind is Kind.STRONG
    member = [0] * r
    forbid = [0] * r
    assign: list[int] = []
    nodes = 0
    aborted = False
    node_limit, deadline = _budget_limits(budget)
    monotonic = time.monotonic
    found: list[Partition] = []

    def walk(x: int, opened: int) -> None:
        nonlocal nodes, aborted
        if x > order:
            if opened == r:
                found.append(_partition_from(assign, order, kind))
            return
        if r - opened > order - x + 1:
            return  # not enough integers left to open the remaining subsets
        if opened == r:
            # Horizon prune: a branch cannot complete once some integer
            # of [x, order] is forbidden in every subset.
            blocked = forbid[0]
            for t in forbid:
                blocked &= t
            t = blocked >> x
            if t and x + (t & -t).bit_length() - 2 < order:
                return
        bit = 1 << x
        extra = bit << x if strong else 0
        tries = opened + 1 if opened < r else r
        s = 0
        while s < tries:
            f = forbid[s]
            if not (f >> x) & 1:
                if nodes >= node_limit or (
                    deadline is not None and not nodes & 1023 and monotonic() > deadline
                ):
                    aborted = True
                    return
                nodes += 1
                mem = member[s]
                forbid[s] = f | (mem << x) | extra
                member[s] = mem | bit
                assign.append(s)
                walk(x + 1, opened + 1 if s == opened else opened)
                assign.pop()
                member[s] = mem
                forbid[s] = f
                if aborted:
                    return
            s += 1

    walk(1, 0)
    if aborted:
        raise SearchBudgetExceeded(
            f"budget exhausted after {nodes} nodes while enumerating "
            f"(r={r}, kind={kind.value}, order={order})"
        )
    return found
