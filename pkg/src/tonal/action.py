"""Translations of Z13 x Z20, the induced action on day numbers, and orbits."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Literal

from .calendar import DAYS, NUMERALS, SIGN_COUNT, DayName, ell, iota
from .modular import ConsistencyError


@dataclass(frozen=True, order=True)
class Translation:
    a: int
    b: int

    def __post_init__(self):
        if not (0 <= self.a < NUMERALS and 0 <= self.b < SIGN_COUNT):
            raise ValueError(f"({self.a}, {self.b}) is not in Z13 x Z20")

    @classmethod
    def of(cls, a: int, b: int) -> Translation:
        return cls(a % NUMERALS, b % SIGN_COUNT)

    def __add__(self, other: Translation) -> Translation:
        return Translation.of(self.a + other.a, self.b + other.b)

    def as_name(self) -> DayName:
        return DayName(self.a, self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


IDENTITY = Translation(0, 0)
ALL_TRANSLATIONS = tuple(Translation(a, b) for a in range(NUMERALS) for b in range(SIGN_COUNT))


def apply(t: Translation, n: DayName) -> DayName:
    return DayName((t.a + n.q) % NUMERALS, (t.b + n.r) % SIGN_COUNT)


def shift_amount(t: Translation) -> int:
    """The constant ``s`` with ``act_on_daynumber(t, x) == (x + s) % 260``."""
    return iota(t.as_name())


def act_on_daynumber(t: Translation, x: int, *, verify: bool = False) -> int:
    """``iota(apply(t, ell(x)))``.

    ``verify=True`` recomputes the image as ``13k + (a+q)`` with
    ``k = 17((b+r) - (a+q)) mod 20`` and compares it with ``x + shift_amount(t)``.
    """
    y = iota(apply(t, ell(x)))
    if verify:
        name = ell(x)
        aq, br = t.a + name.q, t.b + name.r
        k = (17 * (br - aq)) % SIGN_COUNT
        via_substitution = (NUMERALS * k + aq) % DAYS
        via_shift = (x + shift_amount(t)) % DAYS
        if not y == via_substitution == via_shift:
            raise ConsistencyError(
                f"T{t}({x}): composition {y}, substitution {via_substitution}, shift {via_shift}"
            )
    return y


def solve_translation(source: DayName, target: DayName) -> Translation:
    """The unique translation carrying ``source`` to ``target``."""
    return Translation.of(target.q - source.q, target.r - source.r)


def element_order(c: int, m: int) -> int:
    """Additive order of ``c`` in Z_m."""
    return m // gcd(m, c)


def translation_order(t: Translation) -> int:
    return lcm(element_order(t.a, NUMERALS), element_order(t.b, SIGN_COUNT))


@dataclass(frozen=True)
class Orbit:
    seed: DayName
    translation: Translation
    elements: tuple[DayName, ...]

    def __post_init__(self):
        if not self.elements or self.elements[0] != self.seed:
            raise ValueError("orbit must start at its seed")
        if apply(self.translation, self.elements[-1]) != self.seed:
            raise ValueError("orbit does not close back onto its seed")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, n: int) -> DayName:
        return self.elements[n]


def orbit(t: Translation, seed: DayName) -> Orbit:
    """Iterate ``t`` from ``seed`` until the seed recurs."""
    elements = [seed]
    current = apply(t, seed)
    while current != seed:
        elements.append(current)
        current = apply(t, current)
    return Orbit(seed, t, tuple(elements))


def orbit_restrict(o: Orbit, coordinate: Literal["numeral", "sign"]) -> list[int]:
    """Project an orbit onto one coordinate, keeping order and repeats."""
    if coordinate == "numeral":
        return [n.q for n in o.elements]
    if coordinate == "sign":
        return [n.r for n in o.elements]
    raise ValueError(f"coordinate must be 'numeral' or 'sign', got {coordinate!r}")
