#!/usr/bin/env python3
"""Certificates are diffable text files; parsing is deliberately lenient.

Emission is bit-exact (fixed header, ascending elements, LF endings) so
certificates can be compared byte-for-byte; ingestion also accepts
comments, blank lines, permuted subsets, and headerless files from
other tools.
"""

import tempfile
from pathlib import Path

from weakschur import (
    Kind,
    Rule,
    format_partition,
    make_partition,
    parse_partition,
    run_chain,
    verify_partition,
)
from weakschur.cli import main

workdir = Path(tempfile.mkdtemp(prefix="schur-demo-"))

print("=" * 64)
print("Round trip: construct, serialize, re-parse, verify")
print("=" * 64)

seed = make_partition(1, [[1]], Kind.STRONG)
chain = run_chain(seed, [Rule.STRONG_3M1, Rule.STRONG_3M1, Rule.WEAK_4M2])
cert = format_partition(chain.final)
print(cert, end="")

path = workdir / "weak_54_r4.txt"
path.write_text(cert, encoding="utf-8")
reread = parse_partition(path.read_text(encoding="utf-8"))
print(f"\nre-parsed equals original: {reread == chain.final}")
print(f"still verifies weak:       {verify_partition(reread, Kind.WEAK).valid}")

print()
print("=" * 64)
print("Headerless ingestion, subsets in arbitrary order")
print("=" * 64)

headerless = "# external certificate, no header\n3 4 5\n1 2 6\n"
p = parse_partition(headerless)
print(f"inferred: kind={p.kind.value} r={p.r} n={p.n}")
print(f"verifies weak: {verify_partition(p, Kind.WEAK).valid}")

print()
print("=" * 64)
print("The same operations through the CLI")
print("=" * 64)

seed_path = workdir / "seed.txt"
seed_path.write_text(format_partition(seed), encoding="utf-8")

for argv in [
    ["verify", str(path)],
    ["construct", "--rule", "13m8", str(seed_path), "-o", str(workdir / "weak_21_r3.txt")],
    ["pairs", str(workdir / "weak_21_r3.txt")],
    ["stats", str(seed_path), str(workdir / "weak_21_r3.txt"), str(path)],
]:
    print(f"\n$ schur {' '.join(argv)}")
    code = main(argv)
    print(f"(exit {code})")

print(f"\nscratch files under {workdir}")
