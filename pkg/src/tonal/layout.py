"""In-extenso layout of the 260 days as on Borgia plates 1-8.

Four plate pairs, each a 5 x 13 grid.  Rows are numbered 1..5 from the
bottom and columns 1..13 in reading order (right to left on the plate).
Row 1 runs across all four pairs before row 2 starts, so one reading row
covers 52 days.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .calendar import DAYS, NUMERALS, DayName, ell
from .structure import Orientation

PAIRS = 4
ROWS = 5
COLUMNS = NUMERALS
ROW_SPAN = PAIRS * COLUMNS  # 52


@dataclass(frozen=True)
class LayoutCell:
    pair: int
    row: int
    column: int
    day: int  # residue; 0 is day 260
    name: DayName

    @property
    def displayed_day(self) -> int:
        return self.day or DAYS


@dataclass(frozen=True)
class PlatePair:
    pair_index: int
    grid: tuple[tuple[DayName, ...], ...]  # grid[row-1][column-1]

    @property
    def orientation(self) -> Orientation:
        return Orientation(self.pair_index - 1)

    def cells(self) -> list[LayoutCell]:
        return [
            cell_at(self.pair_index, row, col)
            for row in range(1, ROWS + 1)
            for col in range(1, COLUMNS + 1)
        ]


def displayed_day_at(pair: int, row: int, column: int) -> int:
    return ROW_SPAN * (row - 1) + COLUMNS * (pair - 1) + column


def cell_at(pair: int, row: int, column: int) -> LayoutCell:
    if not (1 <= pair <= PAIRS and 1 <= row <= ROWS and 1 <= column <= COLUMNS):
        raise ValueError(f"no cell at pair {pair}, row {row}, column {column}")
    x = displayed_day_at(pair, row, column) % DAYS
    return LayoutCell(pair, row, column, x, ell(x))


@lru_cache(maxsize=1)
def build_layout() -> tuple[PlatePair, ...]:
    return tuple(
        PlatePair(
            pair,
            tuple(
                tuple(ell(displayed_day_at(pair, row, col) % DAYS) for col in range(1, COLUMNS + 1))
                for row in range(1, ROWS + 1)
            ),
        )
        for pair in range(1, PAIRS + 1)
    )


def locate_day(x: int) -> LayoutCell:
    d = x % DAYS or DAYS
    row = (d - 1) // ROW_SPAN + 1
    rem = d - ROW_SPAN * (row - 1)
    pair = (rem - 1) // COLUMNS + 1
    column = rem - COLUMNS * (pair - 1)
    return LayoutCell(pair, row, column, x % DAYS, ell(x))


def first_column_signs(pair_index: int) -> frozenset[int]:
    if not 1 <= pair_index <= PAIRS:
        raise ValueError(f"pair index must be in 1..{PAIRS}, got {pair_index}")
    pair = build_layout()[pair_index - 1]
    return frozenset(row[0].r for row in pair.grid)
