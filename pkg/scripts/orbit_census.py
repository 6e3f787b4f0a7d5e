"""Census of the 260 translations: day shift, orbit length, orbits per translation.

    python scripts/orbit_census.py [--csv]
"""
import argparse
import csv
import sys
from collections import Counter

from tonal.action import ALL_TRANSLATIONS, orbit, shift_amount
from tonal.calendar import DayName


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--csv", action="store_true", help="one row per translation instead of a summary")
    args = parser.parse_args()

    rows = []
    for t in ALL_TRANSLATIONS:
        length = len(orbit(t, DayName(1, 1)))
        rows.append((t.a, t.b, shift_amount(t), length, 260 // length))

    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["a", "b", "shift", "orbit_length", "orbits"])
        writer.writerows(rows)
        return

    by_length = Counter(r[3] for r in rows)
    print("orbit length  translations  orbits each")
    for length in sorted(by_length):
        print(f"{length:12d}  {by_length[length]:12d}  {260 // length:11d}")
    generators = [(a, b) for a, b, _, length, _ in rows if length == 260]
    print(f"{len(generators)} translations generate the whole count")


if __name__ == "__main__":
    main()
