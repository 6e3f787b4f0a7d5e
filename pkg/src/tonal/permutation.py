"""Finite permutations of ``{0, ..., n-1}``.

Composition follows function notation: ``compose(p, q)(i) == p(q(i))``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Literal

from .action import ALL_TRANSLATIONS, Translation, act_on_daynumber, orbit, orbit_restrict
from .calendar import DAYS, SIGN_COUNT, DayName


class PermutationError(ValueError):
    pass


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise PermutationError(f"{images} is not a bijection on 0..{n - 1}")
        self.images = images

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        # images already known to be a bijection (built from valid permutations)
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        return power(self, k)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)}, degree={self.degree})"


def from_orbit_map(n: int, pairs: Iterable[tuple[int, int]]) -> Permutation:
    """Build a permutation of degree ``n`` from explicit ``(point, image)`` pairs."""
    images: dict[int, int] = {}
    for point, image in pairs:
        if not 0 <= point < n:
            raise PermutationError(f"point {point} outside 0..{n - 1}")
        if not 0 <= image < n:
            raise PermutationError(f"image {image} outside 0..{n - 1}")
        if point in images:
            raise PermutationError(f"duplicate point {point}")
        images[point] = image
    missing = sorted(set(range(n)) - images.keys())
    if missing:
        raise PermutationError(f"missing points {missing}")
    seen: dict[int, int] = {}
    for point in range(n):
        image = images[point]
        if image in seen:
            raise PermutationError(f"image {image} hit by both {seen[image]} and {point}")
        seen[image] = point
    return Permutation(images[i] for i in range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation._trusted(tuple(map(p.images.__getitem__, q.images)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, v in enumerate(p.images):
        inv[v] = i
    return Permutation._trusted(tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    """``p**k`` by repeated squaring; negative ``k`` powers the inverse."""
    if k < 0:
        p, k = inverse(p), -k
    result = Permutation.identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[tuple[int, ...], ...]
    fixed_points: frozenset[int]

    @property
    def cycle_type(self) -> list[int]:
        return sorted((len(c) for c in self.cycles), reverse=True)

    def transpositions(self) -> int:
        return sum(len(c) - 1 for c in self.cycles)

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles) or "id"


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    """Disjoint cycles, each starting at its minimum, ordered by that minimum."""
    seen = [False] * p.degree
    cycles = []
    fixed = set()
    for start in range(p.degree):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        j = p.images[start]
        while j != start:
            cycle.append(j)
            seen[j] = True
            j = p.images[j]
        if len(cycle) == 1:
            fixed.add(start)
        else:
            cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles), frozenset(fixed))


def from_cycles(n: int, cycles: Iterable[Iterable[int]]) -> Permutation:
    images = list(range(n))
    touched = set()
    for cycle in cycles:
        cycle = list(cycle)
        for i, point in enumerate(cycle):
            if point in touched:
                raise PermutationError(f"point {point} appears in two cycles")
            touched.add(point)
            images[point] = cycle[(i + 1) % len(cycle)]
    return Permutation(images)


def format_cycles(p: Permutation) -> str:
    """Cycle notation ``"(a,b,c)(d,e)"``, fixed points omitted, ``"id"`` for identity."""
    return str(cycle_decomposition(p))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    text = text.strip()
    if text == "id":
        return Permutation.identity(n)
    if _CYCLE_RE.sub("", text).strip():
        raise PermutationError(f"malformed cycle notation {text!r}")
    cycles = [[int(tok) for tok in body.split(",")] for body in _CYCLE_RE.findall(text)]
    return from_cycles(n, cycles)


def order(p: Permutation) -> int:
    return lcm(1, *(len(c) for c in cycle_decomposition(p).cycles))


def sign(p: Permutation) -> int:
    return -1 if cycle_decomposition(p).transpositions() % 2 else 1


def parity(p: Permutation) -> Literal["even", "odd"]:
    return "even" if sign(p) == 1 else "odd"


@dataclass(frozen=True)
class CyclicSubgroup:
    generator: Permutation
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def generate_cyclic(g: Permutation) -> CyclicSubgroup:
    """All distinct powers ``id, g, g^2, ...`` in exponent order."""
    identity = Permutation.identity(g.degree)
    elements = [identity]
    current = g
    while current != identity:
        elements.append(current)
        current = compose(g, current)
    return CyclicSubgroup(g, tuple(elements))


def is_isomorphic_to_zn(s: CyclicSubgroup, n: int) -> tuple[bool, dict[int, Permutation] | None]:
    """Check ``k mod n -> g^k`` is an isomorphism ``Z_n -> s``.

    Returns the verdict and, when it holds, the witness map.  The
    homomorphism property is checked for all ``n*n`` exponent pairs.
    """
    if s.order != n:
        return False, None
    witness = {k: s.elements[k] for k in range(n)}
    if len(set(witness.values())) != n:
        return False, None
    for a in range(n):
        for b in range(n):
            if witness[(a + b) % n] != compose(witness[a], witness[b]):
                return False, None
    return True, witness


def square_rotations() -> CyclicSubgroup:
    """Rotations of a square as permutations of its corners 0..3 (counterclockwise)."""
    return generate_cyclic(Permutation([1, 2, 3, 0]))


def cayley_image(t: Translation) -> Permutation:
    """The permutation ``x -> act_on_daynumber(t, x)`` of ``{0, ..., 259}``."""
    return Permutation(act_on_daynumber(t, x) for x in range(DAYS))


def cayley_images() -> dict[Translation, Permutation]:
    return {t: cayley_image(t) for t in ALL_TRANSLATIONS}


# Trecena labels 1..19 followed by 0 standing for the twentieth.
TRECENA_LABELS = tuple(list(range(1, SIGN_COUNT)) + [0])


def sigma() -> Permutation:
    """Trecena label -> start sign, read off the phi(0,13) orbit of (1,1)."""
    starts = orbit_restrict(orbit(Translation(0, 13), DayName(1, 1)), "sign")
    return from_orbit_map(SIGN_COUNT, zip(TRECENA_LABELS, starts))


def two_line(p: Permutation, labels: Iterable[int] | None = None) -> tuple[list[int], list[int]]:
    top = list(labels) if labels is not None else list(range(p.degree))
    return top, [p(i) for i in top]
