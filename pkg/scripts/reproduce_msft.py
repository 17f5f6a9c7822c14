#!/usr/bin/env python3
"""Ingest the MSFT fixture, write the reproduction bundle, compare averages.

    python3 scripts/reproduce_msft.py --out-dir runs/msft
"""

import argparse
import sys
from pathlib import Path

from daytrade.cli import main as cli

ROOT = Path(__file__).resolve().parent.parent
FIXTURE = ROOT / "tests" / "data" / "msft_2003-07-18_2006-07-18.csv"

# averages printed for MSFT 2003-07-18..2006-07-18, percent
REPORTED = {"n": 756, "s_av": 0.706059344, "q_av": 1.57655549}


def main() -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--out-dir", type=Path, default=ROOT / "runs" / "msft")
    p.add_argument("--csv", type=Path, default=FIXTURE)
    args = p.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    store = args.out_dir / "msft.store"
    rc = cli(["ingest", "--csv", str(args.csv), "--symbol", "MSFT", "--out", str(store)])
    if rc:
        return rc
    rc = cli(["report", "--store", str(store), "--out-dir", str(args.out_dir)])
    if rc:
        return rc

    summary = dict(
        line.split("=", 1) for line in (args.out_dir / "summary.txt").read_text().splitlines()
    )
    print(f"{'quantity':<6} {'reported':>14} {'reproduced':>14} {'diff':>12}")
    for key, ref in REPORTED.items():
        got = float(summary[key])
        print(f"{key:<6} {ref:>14.9f} {got:>14.9f} {got - ref:>+12.9f}")
    print(f"bundle written to {args.out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
