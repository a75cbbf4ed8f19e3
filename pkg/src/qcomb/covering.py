"""Strength-k covering arrays over binary input qubits, with seeding rows.

A suite of strength k covers every k-value schema: every choice of k input
positions and every assignment of bits to them appears in at least one row.
Generation is a deterministic in-parameter-order construction: exhaust the
first k columns, then for each further column extend every row horizontally
(picking the bit that covers the most still-missing schemas, ties toward 0)
and patch residual schemas with new rows whose don't-cares are filled with 0.

User-supplied seeding rows always appear, in order, as the leading rows of
the suite, and the coverage they provide is credited before generation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator

__all__ = [
    "ValueSchema",
    "TestSuite",
    "enumerate_schemas",
    "covers",
    "generate",
    "verify_coverage",
    "read_seed_rows",
    "suite_to_csv",
]


@dataclass(frozen=True)
class ValueSchema:
    """k fixed (position, bit) pairs; all other positions are don't-cares."""

    positions: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", tuple(self.positions))
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.positions) != len(self.values):
            raise ValueError("positions and values must have equal length")
        if any(b <= a for a, b in zip(self.positions, self.positions[1:])):
            raise ValueError("positions must be strictly increasing")
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("values must be bits")

    @property
    def strength(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class TestSuite:
    __test__ = False  # not a pytest class, despite the name

    strength: int
    width: int
    rows: tuple[str, ...]
    seeded_prefix: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))


def enumerate_schemas(width: int, k: int) -> Iterator[ValueSchema]:
    """All C(width,k) * 2**k schemas, in lexicographic (positions, values) order."""
    _check_strength(width, k)
    for positions in combinations(range(width), k):
        for values in product((0, 1), repeat=k):
            yield ValueSchema(positions, values)


def covers(row: str, schema: ValueSchema) -> bool:
    """True iff the row agrees with the schema at every fixed position."""
    if schema.positions and schema.positions[-1] >= len(row):
        raise ValueError(
            f"schema position {schema.positions[-1]} out of range for row of "
            f"length {len(row)}"
        )
    return all(row[p] == "01"[v] for p, v in zip(schema.positions, schema.values))


def generate(width: int, k: int, seeds: Iterable[str] = ()) -> TestSuite:
    """Deterministic strength-k suite over ``width`` binary positions.

    Every seed row appears verbatim at the head of the suite; rows are
    pairwise distinct and jointly cover every k-value schema.
    """
    _check_strength(width, k)
    seed_rows = _validated_seeds(width, seeds)

    # (positions, values) pairs already covered by the seed rows.
    seed_covered: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    for row in seed_rows:
        bits = tuple(int(ch) for ch in row)
        for positions in combinations(range(width), k):
            seed_covered.add((positions, tuple(bits[p] for p in positions)))

    # Partial rows; None marks a still-free position.
    rows: list[list[int | None]] = []
    first = tuple(range(k))
    for values in product((0, 1), repeat=k):
        if (first, values) not in seed_covered:
            rows.append(list(values) + [None] * (width - k))

    for col in range(k, width):
        pending: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
        subsets = list(combinations(range(col), k - 1))
        for rest in subsets:
            positions = rest + (col,)
            for values in product((0, 1), repeat=k):
                if (positions, values) not in seed_covered:
                    pending.add((positions, values))

        # Horizontal extension: greedy bit choice per row, ties toward 0.
        for row in rows:
            gains: list[set] = [set(), set()]
            for rest in subsets:
                held = tuple(row[p] for p in rest)
                if None in held:
                    continue
                positions = rest + (col,)
                for bit in (0, 1):
                    key = (positions, held + (bit,))
                    if key in pending:
                        gains[bit].add(key)
            bit = 1 if len(gains[1]) > len(gains[0]) else 0
            row[col] = bit
            pending -= gains[bit]

        # Vertical extension: merge each residual schema into a row with
        # free slots, or start a new row.
        for positions, values in sorted(pending):
            for row in rows:
                if all(row[p] in (None, v) for p, v in zip(positions, values)):
                    for p, v in zip(positions, values):
                        row[p] = v
                    break
            else:
                row = [None] * width
                for p, v in zip(positions, values):
                    row[p] = v
                rows.append(row)

    out: list[str] = list(seed_rows)
    seen = set(seed_rows)
    for row in rows:
        text = "".join("0" if bit is None else str(bit) for bit in row)
        if text not in seen:
            seen.add(text)
            out.append(text)
    return TestSuite(strength=k, width=width, rows=tuple(out), seeded_prefix=len(seed_rows))


def verify_coverage(suite: TestSuite, k: int) -> list[ValueSchema]:
    """Exhaustively check strength-k coverage; return every uncovered schema."""
    if k > suite.width:
        raise ValueError(f"strength {k} exceeds suite width {suite.width}")
    _check_strength(suite.width, k)
    missing: list[ValueSchema] = []
    rows = suite.rows
    for positions in combinations(range(suite.width), k):
        found = {
            tuple(row[p] for p in positions)
            for row in rows
        }
        if len(found) < (1 << k):
            for values in product("01", repeat=k):
                if values not in found:
                    missing.append(
                        ValueSchema(positions, tuple(int(v) for v in values))
                    )
    return missing


def read_seed_rows(text: str, width: int) -> list[str]:
    """Parse a seeding-rows file: one bitstring per line, '#' comments allowed."""
    rows: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if len(line) != width or any(ch not in "01" for ch in line):
            raise ValueError(
                f"seed line {lineno}: expected a bitstring of length {width}, "
                f"got {line!r}"
            )
        rows.append(line)
    return rows


def suite_to_csv(suite: TestSuite, qubit_indices: Iterable[int] | None = None) -> str:
    """Render a suite as CSV: header ``q<i>,...`` then one row per test."""
    indices = list(qubit_indices) if qubit_indices is not None else list(range(suite.width))
    if len(indices) != suite.width:
        raise ValueError(
            f"{len(indices)} column label(s) for width-{suite.width} suite"
        )
    lines = [",".join(f"q{i}" for i in indices)]
    for row in suite.rows:
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _check_strength(width: int, k: int) -> None:
    if width < 1:
        raise ValueError(f"width must be positive, got {width}")
    if not 1 <= k <= width:
        raise ValueError(f"strength must be in 1..{width}, got {k}")


def _validated_seeds(width: int, seeds: Iterable[str]) -> list[str]:
    rows = list(seeds)
    for row in rows:
        if len(row) != width or any(ch not in "01" for ch in row):
            raise ValueError(f"seed row {row!r} is not a bitstring of length {width}")
    if len(set(rows)) != len(rows):
        raise ValueError("seed rows must be distinct")
    return rows
