"""Command-line wrapper: render one figure from exported CSVs."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .figures import FIGURE_KINDS, render_figure
from .schema import SchemaError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfvlc-figures",
        description="Render result figures from simulator CSV exports.",
    )
    parser.add_argument("kind", choices=FIGURE_KINDS)
    parser.add_argument("inputs", nargs="+", help="exported CSV file(s)")
    parser.add_argument("--out", required=True, help="output image path")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        render_figure(args.kind, args.inputs, args.out)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
