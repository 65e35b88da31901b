#!/usr/bin/env python3
"""Run the built-in verification corpus and write reports under ./reports."""
import sys
from pathlib import Path

from fihomlab.cli import main

if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "reports"
    Path(out).mkdir(parents=True, exist_ok=True)
    sys.exit(main(["suite", "--out", out]))
