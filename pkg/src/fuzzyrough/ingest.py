"""Building a chain-valued similarity relation from a numeric table.

Recipe: min-max normalize each column, take 1 - |difference| per column,
aggregate columns with min, close under max-min composition, then floor
every entry to the target chain. Flooring commutes with min and fixes 1, so
the result stays reflexive, symmetric and min-transitive.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ONE, Chain
from .errors import EmptyTable, NonNumericColumn, ParseError
from .space import FuzzyRelation, Universe


@dataclass(frozen=True)
class IngestionConfig:
    columns: tuple[str, ...] | None = None  # None: every column except the id column
    id_column: str | None = None  # None: rows are named row1, row2, ...
    chain: Chain | None = None  # None: keep exact values


@dataclass(frozen=True)
class Table:
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]


def read_csv(text: str) -> Table:
    reader = csv.reader(io.StringIO(text))
    lines = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not lines:
        raise EmptyTable("the table has no header")
    header = tuple(h.strip() for h in lines[0])
    rows = tuple(tuple(c.strip() for c in row) for row in lines[1:])
    for i, row in enumerate(rows, start=2):
        if len(row) != len(header):
            raise ParseError(f"line {i}: {len(row)} cells for {len(header)} columns")
    return Table(header, rows)


def max_min_compose(a: FuzzyRelation, b: FuzzyRelation) -> FuzzyRelation:
    n = len(a.universe)
    m1, m2 = a.matrix, b.matrix
    return FuzzyRelation(
        a.universe,
        tuple(tuple(max(min(m1[i][k], m2[k][j]) for k in range(n)) for j in range(n)) for i in range(n)),
    )


def transitive_closure(rel: FuzzyRelation) -> FuzzyRelation:
    """Least min-transitive relation above ``rel`` (iterate R := R v R.R to a fixpoint)."""
    current = rel
    for _ in range(len(rel.universe) + 1):
        comp = max_min_compose(current, current)
        nxt = FuzzyRelation(
            rel.universe,
            tuple(tuple(max(x, y) for x, y in zip(r1, r2)) for r1, r2 in zip(current.matrix, comp.matrix)),
        )
        if nxt == current:
            return current
        current = nxt
    return current


def _number(cell: str, column: str) -> Fraction:
    try:
        return Fraction(cell)
    except (ValueError, ZeroDivisionError):
        raise NonNumericColumn(f"column {column!r} has non-numeric value {cell!r}") from None


def ingest_similarity(table: Table, config: IngestionConfig = IngestionConfig()) -> FuzzyRelation:
    if not table.rows:
        raise EmptyTable("the table has no data rows")
    header = table.header
    if config.id_column is not None:
        if config.id_column not in header:
            raise ParseError(f"no column named {config.id_column!r}")
        idx = header.index(config.id_column)
        names = tuple(row[idx] for row in table.rows)
    else:
        names = tuple(f"row{i + 1}" for i in range(len(table.rows)))
    universe = Universe(names)
    columns = config.columns
    if columns is None:
        columns = tuple(h for h in header if h != config.id_column)
    missing = [c for c in columns if c not in header]
    if missing:
        raise ParseError(f"unknown columns {missing}")
    n = len(names)
    theta = [[ONE] * n for _ in range(n)]
    for col in columns:
        j = header.index(col)
        values = [_number(row[j], col) for row in table.rows]
        lo, hi = min(values), max(values)
        span = hi - lo
        norm = [(v - lo) / span if span else Fraction(0) for v in values]
        for x in range(n):
            for y in range(n):
                theta[x][y] = min(theta[x][y], ONE - abs(norm[x] - norm[y]))
    rel = transitive_closure(FuzzyRelation(universe, tuple(map(tuple, theta))))
    if config.chain is not None:
        rel = quantize(rel, config.chain)
    return rel


def quantize(rel: FuzzyRelation, chain: Chain) -> FuzzyRelation:
    return FuzzyRelation(rel.universe, tuple(tuple(chain.floor(v) for v in row) for row in rel.matrix))
