"""Day numbers, day names and the two mutually inverse maps between them.

Day numbers are residues modulo 260 held as plain ``int``; residue 0 is the
day displayed as 260.  Day names are pairs ``(q, r)`` with ``q`` the numeral
modulo 13 (0 displayed as 13) and ``r`` the sign modulo 20 (0 is Flower).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .modular import ConsistencyError, CrtSystem

NUMERALS = 13
SIGN_COUNT = 20
DAYS = NUMERALS * SIGN_COUNT

TONAL_CRT = CrtSystem.from_moduli(NUMERALS, SIGN_COUNT)

# 20*y1 and 13*y2 reduced mod 260; 221 = 260 - 39
NUMERAL_COEFF = (SIGN_COUNT * TONAL_CRT.inv_m2_mod_m1) % DAYS
SIGN_COEFF = (NUMERALS * TONAL_CRT.inv_m1_mod_m2) % DAYS - DAYS
assert (NUMERAL_COEFF, SIGN_COEFF) == (40, -39)


class ParseError(ValueError):
    """Malformed day name or day number; ``token`` holds the offending text."""

    def __init__(self, message: str, token: str):
        super().__init__(message)
        self.token = token


ENGLISH_SIGNS = (
    "Flower", "Crocodile", "Wind", "House", "Lizard",
    "Serpent", "Death", "Deer", "Rabbit", "Water",
    "Dog", "Monkey", "Grass", "Reed", "Jaguar",
    "Eagle", "Vulture", "Movement", "Flint", "Rain",
)

NAHUATL_SIGNS = (
    "Xochitl", "Cipactli", "Ehecatl", "Calli", "Cuetzpalin",
    "Coatl", "Miquiztli", "Mazatl", "Tochtli", "Atl",
    "Itzcuintli", "Ozomatli", "Malinalli", "Acatl", "Ocelotl",
    "Cuauhtli", "Cozcacuauhtli", "Ollin", "Tecpatl", "Quiahuitl",
)

# Fixed by worked examples in the source text; Table 1 itself is an image.
SIGN_ANCHORS = {"Flower": 0, "Crocodile": 1, "Deer": 7, "Reed": 13, "Jaguar": 14, "Movement": 17}


@dataclass(frozen=True)
class SignTable:
    """Index -> sign name, with case-insensitive lookup over names and aliases.

    Construction only checks the length so that a damaged table can still be
    built and fed to the verification suites; :meth:`validate` checks the rest.
    """

    names: tuple[str, ...] = ENGLISH_SIGNS
    aliases: tuple[str, ...] = NAHUATL_SIGNS
    _lookup: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.names) != SIGN_COUNT:
            raise ValueError(f"sign table needs {SIGN_COUNT} entries, got {len(self.names)}")
        if self.aliases and len(self.aliases) != SIGN_COUNT:
            raise ValueError(f"alias table needs {SIGN_COUNT} entries, got {len(self.aliases)}")
        lookup = {}
        for table in (self.names, self.aliases):
            for i, name in enumerate(table):
                lookup.setdefault(name.casefold(), i)
        object.__setattr__(self, "_lookup", lookup)

    def __getitem__(self, index: int) -> str:
        return self.names[index]

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._lookup[name.strip().casefold()]
        except KeyError:
            raise ParseError(f"unknown sign name {name!r}", name) from None

    def validate(self) -> None:
        folded = [n.casefold() for n in self.names]
        if len(set(folded)) != SIGN_COUNT:
            raise ValueError("sign names are not distinct")
        for name, i in SIGN_ANCHORS.items():
            if self.names[i] != name:
                raise ValueError(f"sign {i} should be {name}, found {self.names[i]}")


SIGNS = SignTable()


@dataclass(frozen=True, order=True)
class DayName:
    """A day name ``(q, r)``: numeral residue mod 13, sign residue mod 20."""

    q: int
    r: int

    def __post_init__(self):
        if not (0 <= self.q < NUMERALS and 0 <= self.r < SIGN_COUNT):
            raise ValueError(f"({self.q}, {self.r}) is not in Z13 x Z20")

    @classmethod
    def of(cls, q: int, r: int) -> DayName:
        return cls(q % NUMERALS, r % SIGN_COUNT)

    def __iter__(self):
        yield self.q
        yield self.r

    def __str__(self) -> str:
        return f"({self.q},{self.r})"


ALL_NAMES = tuple(DayName(q, r) for q in range(NUMERALS) for r in range(SIGN_COUNT))


def day_number(n: int) -> int:
    """Reduce any integer to a day-number residue (260 -> 0)."""
    return n % DAYS


def ell(x: int) -> DayName:
    """Day number -> day name."""
    return DayName(x % NUMERALS, x % SIGN_COUNT)


def iota_substitution(name: DayName) -> int:
    """``13k + q`` with ``k = 17(r - q) mod 20``."""
    k = (TONAL_CRT.inv_m1_mod_m2 * (name.r - name.q)) % SIGN_COUNT
    return NUMERALS * k + name.q


def iota(name: DayName, *, verify: bool = False) -> int:
    """Day name -> day number, ``40q - 39r mod 260``."""
    x = (40 * name.q - 39 * name.r) % DAYS
    if verify:
        y = iota_substitution(name)
        if x != y:
            raise ConsistencyError(f"closed form {x} != substitution {y} for {name}")
    return x


def add_names(n1: DayName, n2: DayName) -> DayName:
    return DayName((n1.q + n2.q) % NUMERALS, (n1.r + n2.r) % SIGN_COUNT)


def neg_name(n: DayName) -> DayName:
    return DayName(-n.q % NUMERALS, -n.r % SIGN_COUNT)


def display_numeral(q: int) -> int:
    return q if q else NUMERALS


def display_name(name: DayName, signs: SignTable = SIGNS) -> str:
    """``(2, 17)`` -> ``"2-Movement"``; numeral residue 0 renders as 13."""
    return f"{display_numeral(name.q)}-{signs[name.r]}"


def display_daynumber(x: int) -> str:
    x %= DAYS
    return str(x if x else DAYS)


_NAME_RE = re.compile(r"^\s*(?P<num>[+-]?\d+)\s*-\s*(?P<sign>.+?)\s*$")


def parse_name(text: str, signs: SignTable = SIGNS) -> DayName:
    """Parse ``"<1..13>-<sign>"`` where sign is a name, alias or index 0..19."""
    m = _NAME_RE.match(text)
    if not m:
        raise ParseError(f"expected <numeral>-<sign>, got {text!r}", text)
    num_tok, sign_tok = m["num"], m["sign"]
    numeral = int(num_tok)
    if not 1 <= numeral <= NUMERALS:
        raise ParseError(f"numeral {num_tok!r} is outside 1..13", num_tok)
    if sign_tok.isdigit():
        r = int(sign_tok)
        if r >= SIGN_COUNT:
            raise ParseError(f"sign index {sign_tok!r} is outside 0..19", sign_tok)
    else:
        r = signs.index(sign_tok)
    return DayName(numeral % NUMERALS, r)


def parse_daynumber(text: str) -> int:
    """Parse a displayed day number 1..260 into its residue."""
    tok = text.strip()
    if not tok.isdigit() or not 1 <= int(tok) <= DAYS:
        raise ParseError(f"day number {text!r} is outside 1..260", text)
    return int(tok) % DAYS
