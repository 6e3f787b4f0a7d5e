"""Deterministic text / JSON / CSV renderings of the calendar tables."""
from __future__ import annotations

import csv
import io
import json

from . import layout, permutation, structure
from .action import orbit
from .calendar import (
    ALL_NAMES,
    SIGNS,
    DayName,
    display_daynumber,
    display_name,
    display_numeral,
    ell,
    iota,
)
from .structure import Orientation

FORMATS = ("text", "json", "csv")
TABLES = ("trecenas", "veintenas", "orientations", "sigma", "layout")


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _text(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def _tabular(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return _json([dict(zip(header, row)) for row in rows])
    if fmt == "csv":
        return _csv(header, rows)
    return _text(header, rows)


def trecena_rows() -> tuple[list[str], list[list]]:
    header = ["trecena", "start_day", "start_name", "sign_index", "sign_name", "orientation"]
    rows = []
    for i in range(1, structure.TRECENAS + 1):
        name = structure.trecena_start_name(i)
        rows.append([
            i,
            int(display_daynumber(iota(name))),
            display_name(name),
            name.r,
            SIGNS[name.r],
            structure.orientation_of_trecena(i).label,
        ])
    return header, rows


def veintena_rows() -> tuple[list[str], list[list]]:
    header = ["veintena", "start_day", "start_name", "numeral"]
    rows = []
    for i in range(1, structure.VEINTENAS + 1):
        q = structure.veintena_start_numeral(i)
        name = DayName(q, 1)
        rows.append([i, int(display_daynumber(iota(name))), display_name(name), display_numeral(q)])
    return header, rows


def orientation_rows() -> tuple[list[str], list[list]]:
    header = ["orientation", "day_seed", "days", "first_days", "trecena_seed", "trecena_signs", "trecenas"]
    rows = []
    for o in Orientation:
        days = orbit(structure.TETRAD_STEP, structure.DAY_SEEDS[o])
        first = sorted(int(display_daynumber(iota(n))) for n in days.elements)[:5]
        trecenas = [i for i in range(1, 21) if structure.orientation_of_trecena(i) is o]
        rows.append([
            o.label,
            display_name(structure.DAY_SEEDS[o]),
            len(days),
            " ".join(map(str, first)),
            display_name(structure.TRECENA_SEEDS[o]),
            " ".join(map(str, structure.oriented_trecena_orbit(o))),
            " ".join(map(str, trecenas)),
        ])
    return header, rows


def sigma_report() -> dict:
    sig = permutation.sigma()
    top, bottom = permutation.two_line(sig, permutation.TRECENA_LABELS)
    dec = permutation.cycle_decomposition(sig)
    group = permutation.generate_cyclic(sig)
    iso, _ = permutation.is_isomorphic_to_zn(group, group.order)
    return {
        "two_line": {"top": top, "bottom": bottom},
        "cycles": str(dec),
        "fixed_points": sorted(dec.fixed_points),
        "order": permutation.order(sig),
        "parity": permutation.parity(sig),
        "transpositions": dec.transpositions(),
        "powers": [permutation.format_cycles(g) for g in group.elements],
        "inverse": permutation.format_cycles(permutation.inverse(sig)),
        "subgroup_order": group.order,
        "isomorphic_to_z4": iso and group.order == 4,
    }


def render_sigma(fmt: str) -> str:
    rep = sigma_report()
    if fmt == "json":
        return _json(rep)
    if fmt == "csv":
        dec_of = {}
        for c in permutation.cycle_decomposition(permutation.sigma()).cycles:
            for point in c:
                dec_of[point] = "(" + ",".join(map(str, c)) + ")"
        rows = [
            [t, b, dec_of.get(t, "fixed")]
            for t, b in zip(rep["two_line"]["top"], rep["two_line"]["bottom"])
        ]
        return _csv(["trecena_label", "start_sign", "cycle"], rows)
    width = max(len(str(v)) for v in rep["two_line"]["top"] + rep["two_line"]["bottom"])

    def fmt_row(row):
        return " ".join(str(v).rjust(width) for v in row)

    lines = [
        "sigma (trecena label -> start sign)",
        "  " + fmt_row(rep["two_line"]["top"]),
        "  " + fmt_row(rep["two_line"]["bottom"]),
        f"cycles: {rep['cycles']}",
        f"fixed points: {' '.join(map(str, rep['fixed_points']))}",
        f"order: {rep['order']}",
        f"parity: {rep['parity']} ({rep['transpositions']} transpositions)",
        f"inverse: {rep['inverse']}",
    ]
    lines += [f"sigma^{k}: {p}" for k, p in enumerate(rep["powers"])]
    lines.append(f"<sigma> has order {rep['subgroup_order']}; isomorphic to Z4: {str(rep['isomorphic_to_z4']).lower()}")
    return "\n".join(lines) + "\n"


def _cell_json(name: DayName, day: int) -> dict:
    return {
        "day": day,
        "numeral_display": display_numeral(name.q),
        "sign_index": name.r,
        "sign_name": SIGNS[name.r],
    }


def render_layout(fmt: str, *, mirror: bool = False) -> str:
    pairs = layout.build_layout()
    if fmt == "json":
        return _json([
            [[_cell_json(c.name, c.displayed_day) for c in p.cells()[r * 13:(r + 1) * 13]] for r in range(5)]
            for p in pairs
        ])
    if fmt == "csv":
        rows = [
            [c.pair, c.row, c.column, c.displayed_day, display_numeral(c.name.q), c.name.r]
            for p in pairs
            for c in p.cells()
        ]
        return _csv(["pair", "row", "col", "day", "numeral", "sign"], rows)
    # mirror: facsimile orientation, top row first and columns right to left
    width = max(len(display_name(n)) for n in ALL_NAMES)
    out = []
    for p in pairs:
        out.append(f"pair {p.pair_index} ({p.orientation.label})")
        rows = list(enumerate(p.grid, start=1))
        if mirror:
            rows.reverse()
        for r, names in rows:
            cells = [display_name(n).ljust(width) for n in names]
            if mirror:
                cells.reverse()
            out.append(f"  row {r}: " + " ".join(cells).rstrip())
    return "\n".join(out) + "\n"


def render_table(which: str, fmt: str = "text", *, mirror: bool = False) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    if which == "trecenas":
        return _tabular(*trecena_rows(), fmt)
    if which == "veintenas":
        return _tabular(*veintena_rows(), fmt)
    if which == "orientations":
        return _tabular(*orientation_rows(), fmt)
    if which == "sigma":
        return render_sigma(fmt)
    if which == "layout":
        return render_layout(fmt, mirror=mirror)
    raise ValueError(f"unknown table {which!r}; choose from {', '.join(TABLES)}")


def convert_record(x: int) -> dict:
    """Every representation of day-number residue ``x``."""
    name = ell(x)
    trecena, t_pos = structure.trecena_of(x)
    veintena, v_pos = structure.veintena_of(x)
    cell = layout.locate_day(x)
    return {
        "day": int(display_daynumber(x)),
        "numeral": display_numeral(name.q),
        "sign_index": name.r,
        "sign_name": SIGNS[name.r],
        "name": display_name(name),
        "residues": [name.q, name.r],
        "trecena": {"index": trecena, "position": t_pos},
        "veintena": {"index": veintena, "position": v_pos},
        "orientation": structure.orientation_of_day(x).label,
        "pair": cell.pair,
        "row": cell.row,
        "col": cell.column,
    }


def render_convert(x: int, fmt: str = "text") -> str:
    rec = convert_record(x)
    if fmt == "json":
        return _json(rec)
    q, r = rec["residues"]
    return "\n".join([
        f"day {rec['day']}",
        f"name {rec['name']} ({q},{r})",
        f"trecena {rec['trecena']['index']} position {rec['trecena']['position']}",
        f"veintena {rec['veintena']['index']} position {rec['veintena']['position']}",
        f"orientation {rec['orientation']}",
        f"layout pair {rec['pair']} row {rec['row']} col {rec['col']}",
    ]) + "\n"


__all__ = ["FORMATS", "TABLES", "render_table", "render_convert", "convert_record", "sigma_report"]
