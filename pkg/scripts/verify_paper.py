#!/usr/bin/env python3
"""Replay every bundled claim and print the reconciliation report.

Equivalent to `homsuper verify-paper`; kept as a script so the report is one
command away from a fresh checkout:

    python3 scripts/verify_paper.py [--json] [--out PATH]
"""

import sys

from homsuper.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-paper", *sys.argv[1:]]))
