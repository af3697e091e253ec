"""``strata-atlas`` command line.

    strata-atlas gsp --g 2 --level 0,1 ekor --format md
    strata-atlas gsp --g 2 selfcheck
    strata-atlas schema

Exit codes: 0 success, 1 selfcheck mismatch, 2 usage error, 3 length cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapExceededError
from .report import ARTIFACTS, FORMATS, ReportRequest, json_schema, render
from .siegel import SiegelLevel

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strata-atlas", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gsp = sub.add_parser("gsp", help="strata of GSp(2g) with Siegel cocharacter")
    gsp.add_argument("--g", type=int, required=True, help="genus")
    gsp.add_argument("--level", default=None,
                     help="comma-separated subset of 0..g (default: Iwahori)")
    gsp.add_argument("artifact", choices=ARTIFACTS)
    gsp.add_argument("--format", choices=FORMATS, default="md")
    gsp.add_argument("--notation", choices=("word", "window"), default="word")
    gsp.add_argument("--order", choices=("bruhat", "ksigma"), default="ksigma",
                     help="order drawn by hasse-ekor")

    sub.add_parser("schema", help="print the JSON schema of --format json output")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "schema":
        sys.stdout.write(json.dumps(json_schema(), indent=2, sort_keys=True) + "\n")
        return 0

    try:
        if args.g < 1:
            raise ValueError("--g must be at least 1")
        text = args.level if args.level is not None else ",".join(map(str, range(args.g + 1)))
        level = SiegelLevel.parse(text, args.g)
        req = ReportRequest(args.g, level, args.artifact, args.format, args.notation, args.order)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"strata-atlas: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        out, code = render(req)
    except CapExceededError as exc:
        print(f"strata-atlas: length cap exceeded: {exc}", file=sys.stderr)
        print("raise it with STRATA_ATLAS_CAP", file=sys.stderr)
        return EXIT_CAP
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
