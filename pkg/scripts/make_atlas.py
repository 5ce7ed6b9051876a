#!/usr/bin/env python3
"""Write the genus atlas CSV for every catalog (ring, ideal) pair.

Delegates to the `zdgenus atlas` subcommand so the file is byte
identical to what the CLI produces.
"""

import argparse
import sys

from zdgenus.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--output", default="atlas.csv")
    parser.add_argument("--max-order", type=int, default=64)
    parser.add_argument("--budget", type=int, default=10**8)
    args = parser.parse_args()
    return cli_main([
        "atlas",
        "--output", args.output,
        "--max-order", str(args.max_order),
        "--budget", str(args.budget),
        "--timing",
    ])


if __name__ == "__main__":
    sys.exit(main())
