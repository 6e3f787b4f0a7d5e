"""Write every table in every format to a directory (default: tests/golden)."""
import argparse
from pathlib import Path

from tonal.tables import FORMATS, TABLES, render_table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?", default=Path(__file__).parents[1] / "tests" / "golden", type=Path)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    ext = {"text": "txt", "json": "json", "csv": "csv"}
    for table in TABLES:
        for fmt in FORMATS:
            path = args.outdir / f"{table}.{ext[fmt]}"
            path.write_text(render_table(table, fmt), encoding="utf-8")
            print(path)


if __name__ == "__main__":
    main()
