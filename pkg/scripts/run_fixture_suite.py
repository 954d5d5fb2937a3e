#!/usr/bin/env python3
"""Recompute every bundled worked example and compare against its frozen
expected values.  Exit status is nonzero if anything drifts."""

import argparse
import sys

from hopfchrom.cli import load_fixtures, run_fixture


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--name", help="run a single fixture")
    args = ap.parse_args(argv)
    failed = 0
    for fx in load_fixtures(args.name):
        ok, diffs, _ = run_fixture(fx)
        print("%s %s (%s)" % ("PASS" if ok else "FAIL", fx["name"],
                              fx["expected_from"]))
        if fx.get("notes"):
            print("     note: %s" % fx["notes"])
        for d in diffs:
            print("     %s" % d)
        failed += not ok
    print("%d fixtures, %d failed" % (len(load_fixtures(args.name)), failed))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
