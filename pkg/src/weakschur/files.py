"""Plain-text certificate format and lenient ingestion.

The v1 format is bit-exact on emission:

    schur v1 <kind> <r> <n>
    <subset 1: ascending space-separated integers>
    ...
    <subset r>

with LF line endings and a trailing newline.  Parsing is forgiving:
comment lines starting with '#' and blank lines are ignored anywhere,
element order within a line is normalized, and a headerless file (one
subset per line, kind assumed weak, n inferred as the maximum element)
is accepted so externally published partitions ingest in arbitrary
subset order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Kind, Partition, PartitionError, make_partition

FORMAT_VERSION = 1

_TOKEN = re.compile(r"\S+")


class FormatError(ValueError):
    """Malformed certificate text, with line/column context when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class PartitionDocument:
    """Syntactic form of a certificate file, before domain validation."""

    format_version: int
    kind: Kind
    r: int
    n: int
    body: tuple[tuple[int, ...], ...]

    def to_partition(self) -> Partition:
        try:
            return make_partition(self.n, [list(s) for s in self.body], self.kind)
        except PartitionError as exc:  # all causes are pre-checked; belt and braces
            raise FormatError(str(exc)) from exc


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, raw))
    return rows


def _parse_int_token(token: str, lineno: int, column: int, what: str) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise FormatError(f"malformed integer {token!r} in {what}", lineno, column) from None


def _parse_subset_line(
    lineno: int, raw: str, seen_line: dict[int, int], upper: int | None
) -> list[int]:
    elems = []
    for match in _TOKEN.finditer(raw):
        column = match.start() + 1
        x = _parse_int_token(match.group(), lineno, column, "subset line")
        if x < 1:
            raise FormatError(f"element {x} is not a positive integer", lineno, column)
        if upper is not None and x > upper:
            raise FormatError(f"element {x} outside [1, {upper}]", lineno, column)
        if x in seen_line:
            raise FormatError(
                f"duplicate element {x} (first seen on line {seen_line[x]})", lineno, column
            )
        seen_line[x] = lineno
        elems.append(x)
    return elems


def read_document(text: str) -> PartitionDocument:
    """Scan certificate text into a PartitionDocument, v1 or headerless."""
    rows = _meaningful_lines(text)
    if not rows:
        raise FormatError("empty input: no subset lines found")

    first_lineno, first_raw = rows[0]
    tokens = list(_TOKEN.finditer(first_raw))
    if tokens and tokens[0].group() == "schur":
        if len(tokens) != 5:
            raise FormatError(
                "header must be 'schur v1 <kind> <r> <n>'", first_lineno, tokens[0].start() + 1
            )
        version_tok = tokens[1].group()
        if version_tok != f"v{FORMAT_VERSION}":
            raise FormatError(
                f"unsupported format version {version_tok!r}", first_lineno, tokens[1].start() + 1
            )
        try:
            kind = Kind.from_token(tokens[2].group())
        except ValueError as exc:
            raise FormatError(str(exc), first_lineno, tokens[2].start() + 1) from None
        r = _parse_int_token(tokens[3].group(), first_lineno, tokens[3].start() + 1, "header")
        n = _parse_int_token(tokens[4].group(), first_lineno, tokens[4].start() + 1, "header")
        if r < 1:
            raise FormatError(f"subset count must be positive, got {r}", first_lineno)
        if n < 1:
            raise FormatError(f"order must be positive, got {n}", first_lineno)
        body_rows = rows[1:]
        if len(body_rows) != r:
            where = body_rows[r][0] if len(body_rows) > r else first_lineno
            raise FormatError(
                f"header declares {r} subsets but body has {len(body_rows)} lines", where
            )
        seen: dict[int, int] = {}
        body = [_parse_subset_line(ln, raw, seen, n) for ln, raw in body_rows]
        _check_cover(seen, n)
        return PartitionDocument(FORMAT_VERSION, kind, r, n, tuple(map(tuple, body)))

    # Headerless fallback: one subset per line, kind assumed weak.
    seen = {}
    body = [_parse_subset_line(ln, raw, seen, None) for ln, raw in rows]
    for lineno, raw in rows:
        if not _TOKEN.search(raw):
            raise FormatError("empty subset line", lineno)
    n = max(seen)
    _check_cover(seen, n)
    return PartitionDocument(FORMAT_VERSION, Kind.WEAK, len(body), n, tuple(map(tuple, body)))


def _check_cover(seen: dict[int, int], n: int) -> None:
    if len(seen) == n:
        return
    for x in range(1, n + 1):
        if x not in seen:
            raise FormatError(f"gap in coverage: element {x} of [1, {n}] is missing")


def parse_partition(text: str) -> Partition:
    """Parse v1 or headerless certificate text into a Partition."""
    return read_document(text).to_partition()


def format_partition(p: Partition) -> str:
    """Emit the bit-exact v1 text for a partition.

    Subsets appear in stored order, elements ascending, single spaces,
    LF-terminated.  ``parse_partition(format_partition(p)) == p``.
    """
    lines = [f"schur v1 {p.kind.value} {p.r} {p.n}"]
    lines.extend(" ".join(map(str, subset)) for subset in p.subsets)
    return "\n".join(lines) + "\n"
