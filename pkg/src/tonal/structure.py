"""Trecenas, veintenas and the four orientations."""
from __future__ import annotations

from enum import Enum

from .action import Translation, orbit, orbit_restrict
from .calendar import DAYS, NUMERALS, SIGN_COUNT, DayName, ell
from .modular import ConsistencyError

TRECENAS = SIGN_COUNT  # twenty 13-day periods
VEINTENAS = NUMERALS  # thirteen 20-day periods

TRECENA_STEP = Translation(0, 13)
VEINTENA_STEP = Translation(7, 0)
TETRAD_STEP = Translation(4, 4)
ORIENTED_TRECENA_STEP = Translation(0, 4)


class Orientation(Enum):
    EAST = 0
    NORTH = 1
    WEST = 2
    SOUTH = 3

    @property
    def label(self) -> str:
        return self.name.capitalize()

    def next(self) -> Orientation:
        return Orientation((self.value + 1) % 4)

    @classmethod
    def parse(cls, text: str) -> Orientation:
        return cls[text.strip().upper()]

    def __str__(self) -> str:
        return self.label


# Seeds of the phi(4,4) orbits for days, and of the phi(0,4) orbits for trecena starts.
DAY_SEEDS = {o: DayName(o.value + 1, o.value + 1) for o in Orientation}
TRECENA_SEEDS = {
    Orientation.EAST: DayName(1, 1),
    Orientation.NORTH: DayName(1, 14),
    Orientation.WEST: DayName(1, 7),
    Orientation.SOUTH: DayName(1, 0),
}


def _displayed(x: int) -> int:
    x %= DAYS
    return x if x else DAYS


def _check_index(i: int, hi: int, what: str) -> None:
    if not 1 <= i <= hi:
        raise ValueError(f"{what} index must be in 1..{hi}, got {i}")


def trecena_of(x: int) -> tuple[int, int]:
    """(trecena 1..20, position 1..13) of day-number residue ``x``."""
    d = _displayed(x)
    return (d - 1) // NUMERALS + 1, (d - 1) % NUMERALS + 1


def trecena_start_name(i: int) -> DayName:
    _check_index(i, TRECENAS, "trecena")
    return DayName(1, (1 + 13 * (i - 1)) % SIGN_COUNT)


def trecena_start_signs() -> list[int]:
    """Start signs of trecenas 1..20, read off the phi(0,13) orbit of (1,1)."""
    return orbit_restrict(orbit(TRECENA_STEP, DayName(1, 1)), "sign")


def veintena_of(x: int) -> tuple[int, int]:
    """(veintena 1..13, position 1..20) of day-number residue ``x``."""
    d = _displayed(x)
    return (d - 1) // SIGN_COUNT + 1, (d - 1) % SIGN_COUNT + 1


def veintena_start_numeral(i: int) -> int:
    _check_index(i, VEINTENAS, "veintena")
    return (1 + 7 * (i - 1)) % NUMERALS


def veintena_start_numerals() -> list[int]:
    return orbit_restrict(orbit(VEINTENA_STEP, DayName(1, 1)), "numeral")


def orientation_by_orbit(x: int) -> Orientation:
    """Orientation found by locating ``ell(x)`` in one of the four phi(4,4) orbits."""
    name = ell(x)
    for o, seed in DAY_SEEDS.items():
        if name in orbit(TETRAD_STEP, seed).elements:
            return o
    raise AssertionError(f"{name} lies in no tetrad orbit")


def orientation_of_day(x: int, *, verify: bool = False) -> Orientation:
    o = Orientation((_displayed(x) - 1) % 4)
    if verify and orientation_by_orbit(x) is not o:
        raise ConsistencyError(f"day {_displayed(x)}: closed form {o}, orbit {orientation_by_orbit(x)}")
    return o


def oriented_trecena_orbit(o: Orientation) -> list[int]:
    """Signs of the phi(0,4) orbit for ``o``, in iteration order."""
    return orbit_restrict(orbit(ORIENTED_TRECENA_STEP, TRECENA_SEEDS[o]), "sign")


def oriented_trecena_signs(o: Orientation) -> frozenset[int]:
    return frozenset(oriented_trecena_orbit(o))


def orientation_of_trecena(i: int, *, verify: bool = False) -> Orientation:
    _check_index(i, TRECENAS, "trecena")
    o = Orientation((i - 1) % 4)
    if verify:
        sign = trecena_start_name(i).r
        by_set = [p for p in Orientation if sign in oriented_trecena_signs(p)]
        if by_set != [o]:
            raise ConsistencyError(f"trecena {i}: closed form {o}, sign sets {by_set}")
    return o
