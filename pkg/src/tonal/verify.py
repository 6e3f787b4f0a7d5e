"""Exhaustive self-verification suites behind ``tonal verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import action, calendar, layout, permutation, structure
from .action import ALL_TRANSLATIONS, IDENTITY, Translation
from .calendar import ALL_NAMES, DAYS, SIGN_COUNT, SIGNS, DayName, SignTable
from .modular import CrtSystem, crt_solve, mod_inverse
from .structure import Orientation

TRECENA_START_SIGNS = [1, 14, 7, 0, 13, 6, 19, 12, 5, 18, 11, 4, 17, 10, 3, 16, 9, 2, 15, 8]
SIGMA_CYCLES = "(0,8,12,4)(2,14,10,18)(3,7,19,15)(5,13,17,9)"
# The source prints 20 for the point written 0 in these two.
SIGMA_SQUARED = "(2,10)(14,18)(3,19)(7,15)(4,8)(0,12)(5,17)(13,9)"
SIGMA_CUBED = "(2,18,10,14)(3,15,19,7)(4,12,8,0)(5,9,17,13)"
ORIENTED_SETS = {
    Orientation.EAST: {1, 5, 9, 13, 17},
    Orientation.NORTH: {14, 18, 2, 6, 10},
    Orientation.WEST: {7, 11, 15, 19, 3},
    Orientation.SOUTH: {0, 4, 8, 12, 16},
}
PAPER_SHIFTS = {(7, 0): 20, (1, 0): 40, (8, 0): 60, (6, 0): 240, (0, 13): 13, (4, 4): 4}


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: int = 0
    first_failure: str | None = None

    def check(self, ok: bool, detail: str | Callable[[], str] = "") -> None:
        self.checks += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = detail() if callable(detail) else detail

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{self.name}: {self.checks} checks, {self.failures} failures [{status}]"
        if self.first_failure:
            text += f"  first failure: {self.first_failure}"
        return text


def suite_sign_table(signs: SignTable) -> SuiteResult:
    s = SuiteResult("sign-table")
    s.check(len(signs) == SIGN_COUNT, f"{len(signs)} entries")
    s.check(len({n.casefold() for n in signs.names}) == SIGN_COUNT, "duplicate sign names")
    for name, i in calendar.SIGN_ANCHORS.items():
        s.check(signs[i] == name, f"sign {i} is {signs[i]}, expected {name}")
    return s


def suite_crt() -> SuiteResult:
    s = SuiteResult("crt")
    sys = CrtSystem.from_moduli(13, 20)
    s.check((sys.inv_m2_mod_m1, sys.inv_m1_mod_m2) == (2, 17), "y1, y2 != 2, 17")
    brute = {}
    for x in range(260):
        brute[(x % 13, x % 20)] = x
    for x in range(260):
        got = crt_solve(sys, x % 13, x % 20, verify=True).value
        s.check(got == x, f"round trip {x} -> {got}")
    for r1 in range(13):
        for r2 in range(20):
            got = crt_solve(sys, r1, r2).value
            s.check(got == brute[(r1, r2)], f"crt({r1},{r2}) = {got}")
    return s


def suite_mod_inverse() -> SuiteResult:
    s = SuiteResult("mod-inverse")
    for m in (13, 20):
        for a in range(1, m):
            trial = [y for y in range(m) if (a * y) % m == 1]
            if trial:
                s.check(mod_inverse(a, m) == trial[0], f"1/{a} mod {m}")
    return s


def suite_bijection(signs: SignTable) -> SuiteResult:
    s = SuiteResult("bijection")
    for x in range(DAYS):
        s.check(calendar.iota(calendar.ell(x)) == x, f"iota(ell({x}))")
    for n in ALL_NAMES:
        s.check(calendar.ell(calendar.iota(n)) == n, f"ell(iota({n}))")
    for n in ALL_NAMES:
        text = calendar.display_name(n, signs)
        try:
            back = calendar.parse_name(text, signs)
        except ValueError as exc:
            back = exc
        s.check(back == n, lambda: f"parse(display({n})) = {back!r} via {text!r}")
    return s


def suite_homomorphism() -> SuiteResult:
    s = SuiteResult("homomorphism")
    names = [calendar.ell(x) for x in range(DAYS)]
    for x1 in range(DAYS):
        for x2 in range(DAYS):
            s.check(
                names[(x1 + x2) % DAYS] == calendar.add_names(names[x1], names[x2]),
                lambda: f"ell({x1}+{x2})",
            )
    return s


def suite_generator() -> SuiteResult:
    s = SuiteResult("generator")
    one = DayName(1, 1)
    current, seen = DayName(0, 0), []
    while True:
        seen.append(current)
        current = calendar.add_names(current, one)
        if current == DayName(0, 0):
            break
    s.check(len(seen) == DAYS and len(set(seen)) == DAYS, f"(1,1) generates {len(set(seen))}")
    return s


def suite_closed_form() -> SuiteResult:
    s = SuiteResult("closed-form-substitution")
    for n in ALL_NAMES:
        lhs = (40 * n.q - 39 * n.r) % DAYS
        rhs = calendar.iota_substitution(n) % DAYS
        s.check(lhs == rhs, f"{n}: {lhs} vs {rhs}")
    return s


def suite_action_axioms() -> SuiteResult:
    s = SuiteResult("action-axioms")
    for x in range(DAYS):
        s.check(action.act_on_daynumber(IDENTITY, x) == x, f"identity moves {x}")
    rng = random.Random(260)
    for _ in range(2000):
        t1, t2 = rng.choice(ALL_TRANSLATIONS), rng.choice(ALL_TRANSLATIONS)
        x = rng.randrange(DAYS)
        lhs = action.act_on_daynumber(t1, action.act_on_daynumber(t2, x))
        s.check(lhs == action.act_on_daynumber(t1 + t2, x), f"T{t1}T{t2}({x})")
    return s


def suite_shift_theorem() -> SuiteResult:
    s = SuiteResult("shift-theorem")
    for t in ALL_TRANSLATIONS:
        shift = action.shift_amount(t)
        for x in range(DAYS):
            s.check(action.act_on_daynumber(t, x) == (x + shift) % DAYS, lambda: f"T{t}({x})")
    return s


def suite_paper_shifts() -> SuiteResult:
    s = SuiteResult("named-shifts")
    for (a, b), expected in PAPER_SHIFTS.items():
        got = action.shift_amount(Translation(a, b))
        s.check(got == expected, f"shift({a},{b}) = {got}")
    return s


def suite_induced_permutation() -> SuiteResult:
    s = SuiteResult("induced-permutation")
    for t in ALL_TRANSLATIONS:
        images = {action.act_on_daynumber(t, x, verify=True) for x in range(DAYS)}
        s.check(images == set(range(DAYS)), f"T{t} not a bijection")
    return s


def suite_orbits() -> SuiteResult:
    s = SuiteResult("orbits")
    for t in ALL_TRANSLATIONS:
        o = action.orbit(t, DayName(1, 1))
        s.check(len(o) == action.translation_order(t), f"|orbit{t}| = {len(o)}")
        s.check(len(set(o.elements)) == len(o), f"orbit{t} repeats")
    for t in (Translation(0, 13), Translation(7, 0), Translation(4, 4), Translation(0, 4)):
        covered = []
        remaining = set(ALL_NAMES)
        while remaining:
            o = action.orbit(t, min(remaining))
            covered.extend(o.elements)
            remaining -= set(o.elements)
        s.check(sorted(covered) == sorted(ALL_NAMES), f"orbits of {t} do not partition")
    return s


def suite_solve_translation() -> SuiteResult:
    s = SuiteResult("solve-translation")
    for u in ALL_NAMES:
        for v in ALL_NAMES:
            s.check(action.apply(action.solve_translation(u, v), u) == v, lambda: f"{u} -> {v}")
    return s


def suite_trecenas() -> SuiteResult:
    s = SuiteResult("trecenas")
    s.check(structure.trecena_start_signs() == TRECENA_START_SIGNS, "start-sign sequence")
    for i in range(1, 21):
        name = structure.trecena_start_name(i)
        s.check(name == DayName(1, TRECENA_START_SIGNS[i - 1]), f"start of trecena {i}")
    for d in range(1, DAYS + 1):
        x = d % DAYS
        idx, pos = structure.trecena_of(x)
        start = structure.trecena_start_name(idx)
        s.check(calendar.iota(start) == (d - (pos - 1)) % DAYS, f"day {d} start")
        if pos == 1:
            s.check(start.r == calendar.ell(x).r, f"day {d} starts trecena {idx}")
    return s


def suite_veintenas() -> SuiteResult:
    s = SuiteResult("veintenas")
    oracle = [d % 13 for d in range(1, 242, 20)]
    s.check(structure.veintena_start_numerals() == oracle, "orbit numerals vs days 1,21,..,241")
    for i in range(1, 14):
        s.check(structure.veintena_start_numeral(i) == oracle[i - 1], f"veintena {i}")
    for d in range(1, DAYS + 1):
        idx, pos = structure.veintena_of(d % DAYS)
        s.check(20 * (idx - 1) + pos == d, f"veintena_of({d})")
    return s


def suite_orientation() -> SuiteResult:
    s = SuiteResult("orientation")
    membership = {}
    for o, seed in structure.DAY_SEEDS.items():
        for n in action.orbit(structure.TETRAD_STEP, seed).elements:
            membership[n] = o
    s.check(len(membership) == DAYS, "tetrad orbits do not cover every name")
    counts = {o: 0 for o in Orientation}
    for d in range(1, DAYS + 1):
        o = structure.orientation_of_day(d % DAYS)
        counts[o] += 1
        s.check(membership[calendar.ell(d % DAYS)] is o, f"day {d}")
    s.check(all(c == 65 for c in counts.values()), f"class sizes {counts}")
    tetrad = action.orbit(structure.TETRAD_STEP, DayName(1, 1))
    signs = action.orbit_restrict(tetrad, "sign")
    s.check(len(tetrad) == 65, f"|tetrad orbit| = {len(tetrad)}")
    s.check(all(signs[n] == signs[n % 5] for n in range(len(signs))), "sign period 5")
    s.check(len(set(signs[:5])) == 5, "sign period shorter than 5")
    return s


def suite_oriented_trecenas() -> SuiteResult:
    s = SuiteResult("oriented-trecenas")
    sets = {o: structure.oriented_trecena_signs(o) for o in Orientation}
    for o in Orientation:
        s.check(set(sets[o]) == ORIENTED_SETS[o], f"{o}: {sorted(sets[o])}")
    union = set().union(*sets.values())
    s.check(union == set(range(20)) and sum(map(len, sets.values())) == 20, "not a partition")
    for i in range(1, 21):
        try:
            structure.orientation_of_trecena(i, verify=True)
            ok = True
        except AssertionError:
            ok = False
        s.check(ok, f"trecena {i}")
    return s


def suite_sigma() -> SuiteResult:
    s = SuiteResult("sigma")
    sig = permutation.sigma()
    top, bottom = permutation.two_line(sig, permutation.TRECENA_LABELS)
    s.check(bottom == TRECENA_START_SIGNS, "two-line bottom row")
    dec = permutation.cycle_decomposition(sig)
    s.check(str(dec) == SIGMA_CYCLES, f"cycles {dec}")
    s.check(dec.fixed_points == {1, 6, 11, 16}, f"fixed {sorted(dec.fixed_points)}")
    s.check(permutation.order(sig) == 4, "order")
    s.check(permutation.parity(sig) == "even" and dec.transpositions() == 12, "parity")
    s.check(sig ** 2 == permutation.parse_cycles(SIGMA_SQUARED, 20), "sigma^2")
    s.check(sig ** 3 == permutation.parse_cycles(SIGMA_CUBED, 20), "sigma^3")
    s.check(sig ** 3 == permutation.inverse(sig), "sigma^3 != sigma^-1")
    s.check(permutation.inverse(sig) ** 2 == sig ** 2, "(sigma^-1)^2")
    group = permutation.generate_cyclic(sig)
    ok, witness = permutation.is_isomorphic_to_zn(group, 4)
    s.check(ok and group.order == 4, "<sigma> !~ Z4")
    rot = permutation.square_rotations()
    if witness:
        to_rot = {witness[k]: rot.elements[k] for k in range(4)}
        for g in group.elements:
            for h in group.elements:
                s.check(to_rot[g * h] == to_rot[g] * to_rot[h], "rotation correspondence")
    return s


def suite_sigma_orientation() -> SuiteResult:
    """Each oriented-trecena sign set is one 4-cycle of sigma plus one fixed point."""
    s = SuiteResult("sigma-orientation")
    sig = permutation.sigma()
    dec = permutation.cycle_decomposition(sig)
    for o in Orientation:
        signs = structure.oriented_trecena_signs(o)
        s.check({sig(r) for r in signs} == signs, f"{o} not sigma-invariant")
        cycles = [set(c) for c in dec.cycles if set(c) <= signs]
        fixed = signs & dec.fixed_points
        s.check(len(cycles) == 1 and len(fixed) == 1, f"{o}: cycles {cycles}, fixed {fixed}")
    return s


def suite_permutation_order() -> SuiteResult:
    s = SuiteResult("permutation-order")
    rng = random.Random(20)
    corpus = [permutation.sigma() ** k for k in range(4)]
    for n in (1, 2, 5, 8, 13, 20):
        for _ in range(25):
            images = list(range(n))
            rng.shuffle(images)
            corpus.append(permutation.Permutation(images))
    for p in corpus:
        k, current = 1, p
        while not current.is_identity():
            current, k = current * p, k + 1
        s.check(permutation.order(p) == k, f"order({permutation.format_cycles(p)})")
        s.check(permutation.from_cycles(p.degree, permutation.cycle_decomposition(p).cycles) == p,
                "cycle reconstitution")
    return s


def suite_cayley() -> SuiteResult:
    s = SuiteResult("cayley")
    images = permutation.cayley_images()
    s.check(len(set(images.values())) == len(ALL_TRANSLATIONS), "embedding not injective")
    s.check(images[IDENTITY].is_identity(), "identity")
    s.check(permutation.order(images[Translation(1, 1)]) == DAYS, "(1,1) is not a 260-cycle")
    for t1 in ALL_TRANSLATIONS:
        lookup = images[t1].images.__getitem__
        for t2 in ALL_TRANSLATIONS:
            composed = tuple(map(lookup, images[t2].images))
            s.check(composed == images[t1 + t2].images, lambda: f"cayley {t1}+{t2}")
    return s


def suite_layout() -> SuiteResult:
    s = SuiteResult("layout")
    pairs = layout.build_layout()
    cells = [c for p in pairs for c in p.cells()]
    s.check(len({c.day for c in cells}) == DAYS, "cells not distinct")
    s.check(len({c.name for c in cells}) == DAYS, "names not distinct")
    for c in cells:
        s.check(layout.locate_day(c.day) == c, f"locate_day({c.displayed_day})")
        s.check(pairs[c.pair - 1].grid[c.row - 1][c.column - 1] == c.name, f"grid at {c}")
        starts = structure.trecena_of(c.day)[1] == 1
        s.check(starts == (c.column == 1), f"column 1 vs trecena start at {c.displayed_day}")
        trecena = structure.trecena_of(c.day)[0]
        s.check(structure.orientation_of_trecena(trecena) is pairs[c.pair - 1].orientation,
                f"pair {c.pair} holds trecena {trecena}")
    for p in pairs:
        s.check(layout.first_column_signs(p.pair_index) == ORIENTED_SETS[p.orientation],
                f"first column of pair {p.pair_index}")
    return s


SUITES: dict[str, Callable[[SignTable], SuiteResult]] = {
    "sign-table": suite_sign_table,
    "crt": lambda signs: suite_crt(),
    "mod-inverse": lambda signs: suite_mod_inverse(),
    "bijection": suite_bijection,
    "homomorphism": lambda signs: suite_homomorphism(),
    "generator": lambda signs: suite_generator(),
    "closed-form-substitution": lambda signs: suite_closed_form(),
    "action-axioms": lambda signs: suite_action_axioms(),
    "shift-theorem": lambda signs: suite_shift_theorem(),
    "named-shifts": lambda signs: suite_paper_shifts(),
    "induced-permutation": lambda signs: suite_induced_permutation(),
    "orbits": lambda signs: suite_orbits(),
    "solve-translation": lambda signs: suite_solve_translation(),
    "trecenas": lambda signs: suite_trecenas(),
    "veintenas": lambda signs: suite_veintenas(),
    "orientation": lambda signs: suite_orientation(),
    "oriented-trecenas": lambda signs: suite_oriented_trecenas(),
    "sigma": lambda signs: suite_sigma(),
    "sigma-orientation": lambda signs: suite_sigma_orientation(),
    "permutation-order": lambda signs: suite_permutation_order(),
    "cayley": lambda signs: suite_cayley(),
    "layout": lambda signs: suite_layout(),
}


def run_all(signs: SignTable = SIGNS, only: Iterable[str] | None = None) -> list[SuiteResult]:
    """Run the suites in a fixed order; ``only`` restricts to the named ones."""
    names = list(SUITES) if only is None else list(only)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suites: {', '.join(unknown)}")
    return [SUITES[n](signs) for n in SUITES if n in names]
