#!/usr/bin/env python3
"""Export Fubini, Bernoulli and p-Bernoulli tables as CSV files.

Usage:
    python scripts/export_tables.py [--out-dir tables] [--n-max 20] [--p-max 8]
"""

import argparse
import csv
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fubini.bernoulli_numbers import bernoulli, p_bernoulli
from fubini.exact import format_rational
from fubini.polynomials import fubini_number, fubini_poly


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("tables"))
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--p-max", type=int, default=8)
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)

    with open(args.out_dir / "fubini.csv", "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n", "fubini_number", "polynomial_coefficients"])
        for n in range(args.n_max + 1):
            writer.writerow(
                [n, fubini_number(n), " ".join(fubini_poly(n).to_strings())]
            )

    with open(args.out_dir / "bernoulli.csv", "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n", "value"])
        for n in range(args.n_max + 1):
            writer.writerow([n, format_rational(bernoulli(n))])

    with open(args.out_dir / "p_bernoulli.csv", "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n", "p", "value"])
        for n in range(args.n_max + 1):
            for p in range(args.p_max + 1):
                writer.writerow([n, p, format_rational(p_bernoulli(n, p))])

    print(f"wrote 3 tables to {args.out_dir}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
