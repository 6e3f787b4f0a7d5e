"""Exact residue arithmetic: reduction, modular inverses and a two-modulus CRT."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class ModulusError(ValueError):
    """Raised for a nonpositive modulus."""


class NoInverseError(ArithmeticError):
    """Raised when an element has no inverse modulo m."""


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True, order=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ModulusError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not reduced modulo {self.modulus}")

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def reduce(n: int, m: int) -> Residue:
    """Canonical representative of ``n`` modulo ``m`` in ``[0, m)``."""
    if m < 1:
        raise ModulusError(f"modulus must be positive, got {m}")
    return Residue(n % m, m)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(a, b) = s*a + t*b``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` via the extended Euclidean algorithm.

    >>> mod_inverse(13, 20)
    17
    >>> mod_inverse(20, 13)
    2
    """
    if m < 1:
        raise ModulusError(f"modulus must be positive, got {m}")
    g, s, _ = extended_gcd(a % m, m)
    if g != 1:
        raise NoInverseError(f"{a} has no inverse modulo {m} (gcd {g})")
    return s % m


@dataclass(frozen=True)
class CrtSystem:
    """A pair of coprime moduli together with their cross inverses.

    ``inv_m2_mod_m1`` and ``inv_m1_mod_m2`` are the two coefficients of the
    explicit CRT formula; for (13, 20) they are 2 and 17.
    """

    m1: int
    m2: int
    inv_m1_mod_m2: int
    inv_m2_mod_m1: int

    def __post_init__(self):
        if self.m1 < 1 or self.m2 < 1:
            raise ModulusError(f"moduli must be positive, got {self.m1}, {self.m2}")
        if gcd(self.m1, self.m2) != 1:
            raise NoInverseError(f"moduli {self.m1} and {self.m2} are not coprime")
        if (self.m1 * self.inv_m1_mod_m2) % self.m2 != 1 % self.m2:
            raise ValueError(f"{self.inv_m1_mod_m2} is not 1/{self.m1} mod {self.m2}")
        if (self.m2 * self.inv_m2_mod_m1) % self.m1 != 1 % self.m1:
            raise ValueError(f"{self.inv_m2_mod_m1} is not 1/{self.m2} mod {self.m1}")

    @classmethod
    def from_moduli(cls, m1: int, m2: int) -> CrtSystem:
        if m1 < 1 or m2 < 1:
            raise ModulusError(f"moduli must be positive, got {m1}, {m2}")
        return cls(m1, m2, mod_inverse(m1, m2), mod_inverse(m2, m1))

    @property
    def modulus(self) -> int:
        return self.m1 * self.m2


def _as_int(r: Residue | int, m: int) -> int:
    if isinstance(r, Residue):
        if r.modulus != m:
            raise ValueError(f"residue is modulo {r.modulus}, expected {m}")
        return r.value
    return r % m


def crt_closed_form(sys: CrtSystem, r1: int, r2: int) -> int:
    """``x = r1*m2*y1 + r2*m1*y2 (mod m1*m2)``."""
    return (r1 * sys.m2 * sys.inv_m2_mod_m1 + r2 * sys.m1 * sys.inv_m1_mod_m2) % sys.modulus


def crt_substitution(sys: CrtSystem, r1: int, r2: int) -> int:
    """Write ``x = m1*k + r1`` and solve ``m1*k = r2 - r1 (mod m2)`` for ``k``."""
    k = (sys.inv_m1_mod_m2 * (r2 - r1)) % sys.m2
    return sys.m1 * k + r1


def crt_solve(sys: CrtSystem, r1: Residue | int, r2: Residue | int, *, verify: bool = False) -> Residue:
    """Unique ``x`` modulo ``m1*m2`` with ``x = r1 (mod m1)`` and ``x = r2 (mod m2)``.

    With ``verify=True`` the substitution derivation is computed as well and
    any disagreement raises :class:`ConsistencyError`.
    """
    a = _as_int(r1, sys.m1)
    b = _as_int(r2, sys.m2)
    x = crt_closed_form(sys, a, b)
    if verify:
        y = crt_substitution(sys, a, b)
        if x != y:
            raise ConsistencyError(f"CRT closed form {x} != substitution {y} for ({a}, {b})")
    return Residue(x, sys.modulus)
