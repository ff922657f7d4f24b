"""CLI: plots <figure_kind> --csv <paths...> --out <file>."""

import argparse
import sys

from .render import FIGURE_KINDS, FigureJob, SchemaError, render


def main(argv=None):
    parser = argparse.ArgumentParser(prog="plots", description=__doc__)
    parser.add_argument("figure_kind", choices=FIGURE_KINDS)
    parser.add_argument("--csv", nargs="+", required=True, help="input CSV files")
    parser.add_argument("--out", required=True, help="output image file")
    args = parser.parse_args(argv)
    try:
        job = FigureJob(csv_paths=args.csv, figure_kind=args.figure_kind, output_path=args.out)
        render(job)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
