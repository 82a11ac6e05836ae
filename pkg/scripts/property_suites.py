"""Run the randomized and exhaustive structural property suites.

    python scripts/property_suites.py [SUITE ...]
"""

from __future__ import annotations

import argparse
import sys
import time

from convcode import properties


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("suites", nargs="*", help=f"default: all of {', '.join(properties.SUITES)}")
    args = p.parse_args(argv)
    unknown = [s for s in args.suites if s not in properties.SUITES]
    if unknown:
        p.error(f"unknown suite(s): {', '.join(unknown)}")
    failed = 0
    for name in args.suites or properties.SUITES:
        t = time.perf_counter()
        results = properties.run_all([name])
        for r in results:
            print(r.line())
            failed += not r.passed
        print(f"    ({name}, {time.perf_counter() - t:.1f}s)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
