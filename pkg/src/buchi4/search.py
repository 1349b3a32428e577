"""Exhaustive bounded search, the record pipeline, and table comparison.

A strictly increasing positive quadruple on the surface is pinned down by
(x2, x3): the defining equations force x1^2 = 2 x2^2 - x3^2 + 2 and
x4^2 = 2 x3^2 - x2^2 + 2, so enumeration walks x3 over the window
(x2, isqrt(2 x2^2 + 1)] and keeps the pairs where both radicands are
perfect squares.  The default engine prunes the window by the residues a
square can take modulo 64 before doing any exact work; an alternative
engine decomposes 2(x2^2 + 1) into two squares by factoring instead.
Both produce identical sorted output.

Search results are classified, tested for extension on both sides, and
compared against the bundled table of 121 reference rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from math import isqrt
from typing import Iterable, List, Optional, Sequence, Tuple

from .arith import as_perfect_square
from .factorint import two_square_reps
from .families import Classification, classify, extends_left, extends_right, is_trivial
from .maps import on_surface

__all__ = [
    "SearchRecord",
    "TableComparison",
    "enumerate_sequences",
    "run_pipeline",
    "bundled_table",
    "compare_with_table",
    "records_csv",
    "records_json",
    "plot_data",
]

Seq = Tuple[int, int, int, int]

# residues mod 64 that squares occupy
_SQ64 = frozenset((i * i) % 64 for i in range(64))

# _ALLOWED64[K] = x3 residues r with (K - r^2) mod 64 a square residue,
# K being 2 x2^2 + 2 mod 64; only these x3 can give a square first radicand
_ALLOWED64 = tuple(
    tuple(r for r in range(64) if (k - r * r) % 64 in _SQ64) for k in range(64)
)


def _window_chunk(x2_lo: int, x2_hi: int) -> List[Seq]:
    out = []
    for x2 in range(x2_lo, x2_hi + 1):
        base = 2 * x2 * x2 + 2
        hi = isqrt(base - 1)
        lo = x2 + 1
        x2_sq = x2 * x2
        for r in _ALLOWED64[base % 64]:
            for x3 in range(lo + (r - lo) % 64, hi + 1, 64):
                x1 = as_perfect_square(base - x3 * x3)
                if x1 is None or x1 == 0 or x1 >= x2:
                    continue
                x4 = as_perfect_square(2 * x3 * x3 - x2_sq + 2)
                if x4 is None:
                    continue
                seq = (x1, x2, x3, x4)
                if not is_trivial(seq):
                    out.append(seq)
    return out


def _two_squares_chunk(x2_lo: int, x2_hi: int) -> List[Seq]:
    out = []
    for x2 in range(x2_lo, x2_hi + 1):
        x2_sq = x2 * x2
        for x1, x3 in two_square_reps(2 * x2_sq + 2):
            if not (0 < x1 < x2 < x3):
                continue
            x4 = as_perfect_square(2 * x3 * x3 - x2_sq + 2)
            if x4 is None:
                continue
            seq = (x1, x2, x3, x4)
            if not is_trivial(seq):
                out.append(seq)
    return out


_ENGINES = {"window": _window_chunk, "two-squares": _two_squares_chunk}


def enumerate_sequences(
    x2_max: int, workers: int = 1, engine: str = "window"
) -> List[Seq]:
    """All non-trivial strictly increasing positive quadruples with
    x2 <= x2_max, sorted by (x1, x2), duplicate-free."""
    if x2_max < 2:
        raise ValueError("bound must be at least 2")
    chunk = _ENGINES.get(engine)
    if chunk is None:
        raise ValueError(f"unknown engine {engine!r}")
    if workers <= 1:
        found = chunk(2, x2_max)
    else:
        from concurrent.futures import ThreadPoolExecutor

        span = x2_max - 1
        step = max(1, -(-span // workers))
        bounds = [
            (lo, min(lo + step - 1, x2_max))
            for lo in range(2, x2_max + 1, step)
        ]
        found = []
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(lambda b: chunk(*b), bounds):
                found.extend(part)
    return sorted(found)


@dataclass(frozen=True)
class SearchRecord:
    """One search result: the sequence, where it came from, and the
    nonnegative fifth values extending it on each side (None if none)."""

    seq: Seq
    classification: Classification
    extends_left: Optional[int]
    extends_right: Optional[int]

    def csv_row(self) -> str:
        left = "" if self.extends_left is None else str(self.extends_left)
        right = "" if self.extends_right is None else str(self.extends_right)
        return ",".join(
            [*map(str, self.seq), self.classification.serialize(), left, right]
        )

    def to_json(self) -> dict:
        return {
            "x1": self.seq[0],
            "x2": self.seq[1],
            "x3": self.seq[2],
            "x4": self.seq[3],
            "classification": self.classification.to_json(),
            "extends_left": self.extends_left,
            "extends_right": self.extends_right,
        }


def run_pipeline(
    x2_max: int, workers: int = 1, engine: str = "window"
) -> List[SearchRecord]:
    """Enumerate, classify, and extension-test everything up to the bound."""
    return [
        SearchRecord(
            seq=seq,
            classification=classify(seq),
            extends_left=extends_left(seq),
            extends_right=extends_right(seq),
        )
        for seq in enumerate_sequences(x2_max, workers=workers, engine=engine)
    ]


CSV_HEADER = "x1,x2,x3,x4,classification,extends_left,extends_right"


def records_csv(records: Iterable[SearchRecord]) -> Iterable[str]:
    yield CSV_HEADER
    for rec in records:
        yield rec.csv_row()


def records_json(records: Iterable[SearchRecord]) -> List[dict]:
    return [rec.to_json() for rec in records]


# -- the bundled reference table ---------------------------------------------


def bundled_table() -> List[Tuple[int, Seq]]:
    """The 121 bundled reference rows as (index, row) pairs, index from 1.

    The list is kept verbatim, including one duplicated row, so consumers
    that need set semantics must deduplicate (compare_with_table does).
    """
    text = resources.files("buchi4.assets").joinpath("sporadic_points.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        idx, *coords = line.split()
        row = tuple(int(c) for c in coords)
        if len(row) != 4 or not on_surface(row):
            raise ValueError(f"corrupt table row: {line!r}")
        rows.append((int(idx), row))
    if [i for i, _ in rows] != list(range(1, len(rows) + 1)):
        raise ValueError("table indices are not 1..N")
    return rows


def plot_data(records: Optional[Sequence[SearchRecord]] = None) -> List[Tuple[int, int]]:
    """(x1, row-index) pairs for plotting, from search records or, when
    none are given, from the bundled table."""
    if records is None:
        return [(row[0], idx) for idx, row in bundled_table()]
    return [(rec.seq[0], i) for i, rec in enumerate(records, start=1)]


@dataclass(frozen=True)
class TableComparison:
    """Set comparison of Sporadic search results against the bundled rows."""

    x2_bound: int
    matches: Tuple[Seq, ...]
    misses: Tuple[Seq, ...]
    extras: Tuple[Seq, ...]

    @property
    def ok(self) -> bool:
        return not self.misses and not self.extras

    def __str__(self):
        lines = [
            f"bound x2 <= {self.x2_bound}: "
            f"{len(self.matches)} matches, {len(self.misses)} misses, "
            f"{len(self.extras)} extras"
        ]
        for name, rows in (("miss", self.misses), ("extra", self.extras)):
            for row in rows:
                lines.append(f"  {name}: {row}")
        return "\n".join(lines)


def compare_with_table(
    records: Sequence[SearchRecord], x2_bound: int
) -> TableComparison:
    """Sporadic records with x2 <= x2_bound versus the deduplicated bundled
    rows under the same bound, as sets.  Equality is the reproduction check;
    misses and extras list the disagreements."""
    ours = {
        rec.seq
        for rec in records
        if rec.classification.kind == "sporadic" and rec.seq[1] <= x2_bound
    }
    reference = {row for _, row in bundled_table() if row[1] <= x2_bound}
    return TableComparison(
        x2_bound=x2_bound,
        matches=tuple(sorted(ours & reference)),
        misses=tuple(sorted(reference - ours)),
        extras=tuple(sorted(ours - reference)),
    )
