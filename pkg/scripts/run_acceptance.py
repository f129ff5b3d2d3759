"""Run the acceptance suite and print one PASS/FAIL line per criterion.

    python3 scripts/run_acceptance.py [-k EXPR]
"""
import argparse
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-k", dest="expr", help="pytest -k expression selecting criteria")
    args = parser.parse_args()
    argv = [str(ROOT / "tests" / "test_acceptance.py"), "-q", "-p", "no:cacheprovider", f"--rootdir={ROOT}"]
    if args.expr:
        argv += ["-k", args.expr]
    return pytest.main(argv)


if __name__ == "__main__":
    sys.exit(main())
