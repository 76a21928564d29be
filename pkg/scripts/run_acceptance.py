"""Run the acceptance suite and print one PASS/FAIL line per criterion."""

import argparse
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-k", dest="select", default=None, help="pytest -k expression")
    a = ap.parse_args(argv)
    args = [str(ROOT / "tests" / "test_acceptance.py"), "-q", "-p", "no:cacheprovider"]
    if a.select:
        args += ["-k", a.select]
    return pytest.main(args)


if __name__ == "__main__":
    sys.exit(main())
