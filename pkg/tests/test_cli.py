import json
import subprocess
import sys
from pathlib import Path

import pytest

from tonal.cli import main
from tonal.tables import FORMATS, TABLES, render_table

GOLDEN = Path(__file__).parent / "golden"
EXT = {"text": "txt", "json": "json", "csv": "csv"}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_convert_day_number(capsys):
    code, out, _ = run(capsys, "convert", "197")
    assert code == 0
    assert "2-Movement" in out
    assert "trecena 16 position 2" in out
    assert "orientation East" in out


@pytest.mark.parametrize("name, day", [("4-Deer", 147), ("13-Flower", 260), ("1-Crocodile", 1)])
def test_convert_name(capsys, name, day):
    code, out, _ = run(capsys, "convert", name)
    assert code == 0
    assert f"day {day}\n" in out


def test_convert_json_fields(capsys):
    _, out, _ = run(capsys, "convert", "147", "--format", "json")
    rec = json.loads(out)
    assert rec["day"] == 147 and rec["name"] == "4-Deer"
    assert (rec["pair"], rec["row"], rec["col"]) == (4, 3, 4)
    assert rec["orientation"] == "West"
    assert {"numeral", "sign_index", "sign_name", "trecena", "veintena"} <= rec.keys()


def test_convert_round_trips_between_representations(capsys):
    for d in range(1, 261):
        _, out, _ = run(capsys, "convert", str(d), "--format", "json")
        rec = json.loads(out)
        _, back, _ = run(capsys, "convert", rec["name"], "--format", "json")
        assert json.loads(back) == rec


@pytest.mark.parametrize("arg, token", [("261", "261"), ("0", "0"), ("14-Deer", "14"), ("3-Unicorn", "Unicorn")])
def test_convert_usage_errors(capsys, arg, token):
    code, out, err = run(capsys, "convert", arg)
    assert code == 1
    assert token in err and out == ""


def test_table_trecenas_row_five(capsys):
    code, out, _ = run(capsys, "table", "trecenas")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 21
    assert "1-Reed" in lines[5] and lines[5].startswith("5 ")


def test_table_sigma_text(capsys):
    _, out, _ = run(capsys, "table", "sigma")
    assert "(2,14,10,18)" in out
    assert "order: 4" in out and "parity: even" in out
    assert "fixed points: 1 6 11 16" in out
    assert "sigma^3: " in out


def test_table_layout_json_shape(capsys):
    _, out, _ = run(capsys, "table", "layout", "--format", "json")
    pairs = json.loads(out)
    assert len(pairs) == 4
    assert all(len(p) == 5 and all(len(row) == 13 for row in p) for p in pairs)
    assert pairs[0][0][0] == {"day": 1, "numeral_display": 1, "sign_index": 1, "sign_name": "Crocodile"}
    assert pairs[3][4][12]["day"] == 260 and pairs[3][4][12]["numeral_display"] == 13


def test_table_layout_csv(capsys):
    _, out, _ = run(capsys, "table", "layout", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "pair,row,col,day,numeral,sign"
    assert len(lines) == 261


def test_table_layout_mirror(capsys):
    _, out, _ = run(capsys, "table", "layout", "--mirror")
    first_pair = out.splitlines()[1:6]
    assert first_pair[0].startswith("  row 5: 13-Crocodile")
    assert first_pair[-1].rstrip().endswith("1-Crocodile")


@pytest.mark.parametrize("argv", [["table", "tetrads"], ["table", "sigma", "--format", "xml"]])
def test_table_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert "valid" in err


@pytest.mark.parametrize("table", TABLES)
@pytest.mark.parametrize("fmt", FORMATS)
def test_tables_match_golden(table, fmt):
    expected = (GOLDEN / f"{table}.{EXT[fmt]}").read_text(encoding="utf-8")
    assert render_table(table, fmt) == expected


def test_orbit_sign_restriction(capsys):
    code, out, _ = run(capsys, "orbit", "--a", "0", "--b", "13", "--seed", "1-Crocodile", "--restrict", "sign")
    assert code == 0
    assert "1,14,7,0,13,6,19,12,5,18,11,4,17,10,3,16,9,2,15,8" in out
    assert "length 20" in out and "shift 13 days" in out


def test_orbit_numeral_restriction(capsys):
    _, out, _ = run(capsys, "orbit", "--a", "7", "--b", "0", "--seed", "1-Crocodile", "--restrict", "numeral")
    assert out.splitlines()[1].startswith("1,8,2,9,")
    assert "length 13" in out


def test_orbit_identity(capsys):
    _, out, _ = run(capsys, "orbit", "--a", "0", "--b", "0", "--seed", "5-Serpent", "--format", "json")
    rec = json.loads(out)
    assert rec["elements"] == ["5-Serpent"] and rec["length"] == 1 and rec["shift"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["orbit", "--a", "13", "--b", "0", "--seed", "1-1"],
        ["orbit", "--a", "0", "--b", "0", "--seed", "nope"],
        ["orbit", "--a", "0", "--b", "0"],
        ["bogus"],
    ],
)
def test_orbit_and_parser_errors_exit_one(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 1


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "tonal", "convert", "4-Deer"], capture_output=True, text=True, check=True
    )
    assert "day 147" in result.stdout
