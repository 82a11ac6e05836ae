"""Recompute every worked example and print one line per check.

    python scripts/reproduce_examples.py [NAME ...]
"""

from __future__ import annotations

import argparse
import sys

from convcode import suite


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("names", nargs="*", help=f"subset of: {', '.join(suite.EXAMPLES)}")
    args = p.parse_args(argv)
    try:
        checks = suite.run(args.names or None)
    except KeyError as exc:
        p.error(str(exc))
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
