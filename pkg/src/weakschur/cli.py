"""Command-line surface: verify, construct, chain, search, pairs, stats.

Exit codes: 0 success (verify: partition valid), 1 domain failure
(verify: invalid partition; construct/chain: bad seed), 2 usage or
I/O or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .construct import (
    ChainError,
    ConstructionError,
    extend_strong_3m1,
    extend_weak_13m8,
    extend_weak_4m2,
    growth_ratios,
    run_chain,
)
from .core import ChainSchedule, Kind, Rule, VerificationReport
from .files import FormatError, format_partition, parse_partition
from .search import SearchBudget, search_max
from .verify import enumerate_weak_pairs, verify_partition


def _load(path: str):
    return parse_partition(Path(path).read_text(encoding="utf-8"))


def _report_lines(report: VerificationReport) -> list[str]:
    lines = []
    for v in report.violations:
        note = "" if v.distinct else "  (a = b)"
        lines.append(f"subset {v.subset}: {v.a} + {v.b} = {v.c}{note}")
    for x in report.coverage_defects:
        lines.append(f"coverage defect at {x}")
    return lines


def cmd_verify(args) -> int:
    p = _load(args.file)
    kind = Kind.from_token(args.kind) if args.kind else p.kind
    report = verify_partition(p, kind)
    if report.valid:
        print(f"VALID: {kind.value} partition of [1, {p.n}] into {p.r} subsets")
        return 0
    for line in _report_lines(report):
        print(line)
    print(
        f"INVALID under kind {kind.value}: {len(report.violations)} violation(s), "
        f"{len(report.coverage_defects)} coverage defect(s)"
    )
    return 1


_RULES = {
    Rule.STRONG_3M1: extend_strong_3m1,
    Rule.WEAK_4M2: extend_weak_4m2,
    Rule.WEAK_13M8: extend_weak_13m8,
}


def cmd_construct(args) -> int:
    rule = Rule.from_token(args.rule)
    seed = _load(args.seed)
    result = _RULES[rule](seed)
    text = format_partition(result)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(
            f"wrote {rule.output_kind.value} partition of [1, {result.n}] "
            f"into {result.r} subsets to {args.output}"
        )
    else:
        sys.stdout.write(text)
    return 0


def cmd_chain(args) -> int:
    seed = _load(args.seed)
    schedule = ChainSchedule.parse(args.schedule)
    chain = run_chain(seed, schedule)
    outdir = Path(args.output) if args.output else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "stage00_seed.txt").write_text(format_partition(seed), encoding="utf-8")
        for i, stage in enumerate(chain.stages, start=1):
            name = f"stage{i:02d}_{stage.rule.value}.txt"
            (outdir / name).write_text(format_partition(stage.partition), encoding="utf-8")
        print(f"wrote seed plus {len(chain.stages)} stage file(s) to {outdir}")
    else:
        for i, stage in enumerate(chain.stages, start=1):
            print(f"# stage {i}: rule {stage.rule.value}")
            sys.stdout.write(format_partition(stage.partition))
    print("stage  rule   order                ratio")
    for i, entry in enumerate(growth_ratios(chain), start=1):
        extra = f"  per-color {entry.per_color:.6f}" if entry.per_color is not None else ""
        print(
            f"{i:>5}  {entry.rule.value:<5} {entry.order_before} -> {entry.order_after}"
            f"  {float(entry.ratio):.6f}{extra}"
        )
    return 0


def cmd_search(args) -> int:
    kind = Kind.from_token(args.kind)
    budget = SearchBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)
    result = search_max(args.colors, kind, budget)
    print(f"# exhaustive: {str(result.exhaustive).lower()}")
    print(f"# nodes: {result.nodes_visited}")
    print(f"# witnesses at best order: {result.witness_count_at_best_order}")
    sys.stdout.write(format_partition(result.best))
    return 0


def cmd_pairs(args) -> int:
    p = _load(args.file)
    pairs = enumerate_weak_pairs(p)
    for pair in pairs:
        print(f"subset {pair.subset}: ({pair.a}, {2 * pair.a})")
    print(f"{len(pairs)} weak pair(s)")
    return 0


def cmd_stats(args) -> int:
    previous = None
    for path in args.files:
        p = _load(path)
        sizes = ",".join(str(len(s)) for s in p.subsets)
        print(f"{path}: kind={p.kind.value} r={p.r} n={p.n} subset-sizes={sizes}")
        if previous is not None:
            print(f"  order ratio vs previous: {p.n / previous:.6f}")
        previous = p.n
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schur",
        description="Construct, certify, and search weak/strong Schur partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check a partition file; exit 0 valid, 1 invalid")
    s.add_argument("file")
    s.add_argument("--kind", choices=["strong", "weak"], help="override the file's claimed kind")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", help="apply one construction rule to a strong seed file")
    s.add_argument("seed")
    s.add_argument("--rule", required=True, choices=[r.value for r in Rule])
    s.add_argument("-o", "--output", help="write the result here instead of stdout")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("chain", help="apply a comma-separated schedule of rules to a seed file")
    s.add_argument("seed")
    s.add_argument("--schedule", required=True, help="e.g. 3m1,3m1,4m2 (weak rules are terminal)")
    s.add_argument("-o", "--output", help="directory for per-stage certificate files")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("search", help="exhaustive backtracking search for the maximal order")
    s.add_argument("--colors", type=int, required=True, metavar="R")
    s.add_argument("--kind", required=True, choices=["strong", "weak"])
    s.add_argument("--max-nodes", type=int, default=10**9)
    s.add_argument("--max-seconds", type=float, default=300.0)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("pairs", help="list the weak pairs (a, 2a) of a partition file")
    s.add_argument("file")
    s.set_defaults(func=cmd_pairs)

    s = sub.add_parser("stats", help="orders, subset sizes, and ratios between files")
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ChainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            for line in _report_lines(exc.report):
                print(line, file=sys.stderr)
        return 1
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            for line in _report_lines(exc.report):
                print(line, file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
