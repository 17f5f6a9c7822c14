#!/usr/bin/env python3
"""Rebuild tests/data/msft_2003-07-18_2006-07-18.csv.

Source is the unadjusted MSFT daily table bundled with the
``bokeh_sampledata`` package (``pip install bokeh_sampledata``). The
adjusted-close column is dropped; prices are copied as printed.
"""

import argparse
import csv
from importlib import resources
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DEFAULT_OUT = ROOT / "tests" / "data" / "msft_2003-07-18_2006-07-18.csv"


def main() -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--start", default="2003-07-18")
    p.add_argument("--end", default="2006-07-18")
    p.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = p.parse_args()

    src = resources.files("bokeh_sampledata") / "_data" / "MSFT.csv"
    with src.open(newline="") as f:
        rows = [r for r in csv.DictReader(f) if args.start <= r["Date"] <= args.end]
    with open(args.out, "w", newline="") as f:
        f.write("date,open,high,low,close,volume\n")
        for r in rows:
            f.write(f"{r['Date']},{r['Open']},{r['High']},{r['Low']},{r['Close']},{r['Volume']}\n")
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
