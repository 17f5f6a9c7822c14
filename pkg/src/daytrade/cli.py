"""Command-line entry point.

Exit codes: 0 success, 1 domain or validation error, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import datetime as dt
import sys
from pathlib import Path

from . import __version__
from .backtest import CostModel, Strategy, check_pdt, run_backtest
from .errors import DayTradeError
from .projection import DEFAULT_HORIZON, alpha_sweep, break_even_alpha, project_value
from .quotes import QuoteSeries, atomic_write, load_store, read_csv, save_store, slice_by_date
from .report import (
    DEFAULT_LEVERAGED_MARGINS,
    SPREAD_SOURCES,
    backtest_daily_csv,
    backtest_items,
    build_bundle,
    fmt_num,
    fmt_value,
    kv_document,
    pdt_items,
    pdt_windows_csv,
    spread_series_csv,
    stats_items,
    sweep_csv,
    write_bundle,
)
from .spreads import spread_stats

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _date(text: str) -> dt.date:
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an ISO date: {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("expected at least one number")
    return values


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        atomic_write(out, text)


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("quote source (one of)")
    g.add_argument("--store", help="quote store written by `ingest`")
    g.add_argument("--csv", help="canonical OHLC CSV file")
    g.add_argument("--symbol", default="UNKNOWN", help="ticker for --csv input")
    g.add_argument("--decimal-comma", action="store_true", help="--csv uses ';' fields and ',' decimals")
    p.add_argument("--start", type=_date, help="first date to include")
    p.add_argument("--end", type=_date, help="last date to include")


def _load_source(args) -> QuoteSeries:
    if bool(args.store) == bool(args.csv):
        raise UsageError("give exactly one of --store or --csv")
    if args.store:
        series = load_store(args.store)
    else:
        series = read_csv(args.csv, args.symbol, decimal_comma=args.decimal_comma)
    if args.start or args.end:
        start = args.start or dt.date.min
        end = args.end or dt.date.max
        series = slice_by_date(series, start, end)
    return series


def cmd_ingest(args) -> None:
    series = _load_source(args)
    save_store(series, args.out)
    _emit(
        kv_document(
            [
                ("symbol", series.symbol),
                ("n", len(series)),
                ("first_date", series.first_date),
                ("last_date", series.last_date),
                ("store", args.out),
            ]
        ),
        None,
    )


def cmd_stats(args) -> None:
    series = _load_source(args)
    stats, ss = spread_stats(series)
    if args.series_out:
        atomic_write(args.series_out, spread_series_csv(ss))
    _emit(kv_document(stats_items(series, stats)), args.out)


def cmd_project(args) -> None:
    value = project_value(args.spread, args.alpha, args.horizon, args.margin)
    items = [
        ("spread", fmt_num(args.spread)),
        ("alpha", args.alpha),
        ("horizon", args.horizon),
        ("margin", fmt_num(args.margin)),
        ("value", fmt_value(value)),
    ]
    if args.spread > 0:
        items.append(("break_even_alpha", break_even_alpha(args.spread, args.horizon, args.margin)))
    _emit(kv_document(items), args.out)


def cmd_sweep(args) -> None:
    rows = alpha_sweep(args.spread, args.horizon, args.margins, args.step)
    _emit(sweep_csv(rows), args.out)


def cmd_backtest(args) -> None:
    series = _load_source(args)
    costs = CostModel(args.commission, args.margin)
    result = run_backtest(series, args.strategy, costs, args.equity)
    if args.daily_out:
        atomic_write(args.daily_out, backtest_daily_csv(result))
    _emit(kv_document(backtest_items(series.symbol, result)), args.out)


def _read_rows(path: str, columns: tuple[str, ...]):
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None or tuple(h.strip().lower() for h in header[: len(columns)]) != columns:
            raise DayTradeError(f"{path}: header must begin with {','.join(columns)}")
        for row in reader:
            if not row or not any(c.strip() for c in row):
                continue
            try:
                yield (dt.date.fromisoformat(row[0].strip()), *row[1 : len(columns)])
            except (ValueError, IndexError):
                raise DayTradeError(f"{path}: line {reader.line_num}: bad row {row!r}") from None


def _int(path: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise DayTradeError(f"{path}: expected an integer count, got {text!r}") from None


def cmd_pdt_check(args) -> None:
    trades = [
        (d, _int(args.trades, a), _int(args.trades, b))
        for d, a, b in _read_rows(args.trades, ("date", "day_trades", "other_trades"))
    ]
    equity = []
    if args.equity:
        for d, e in _read_rows(args.equity, ("date", "equity")):
            try:
                equity.append((d, float(e)))
            except ValueError:
                raise DayTradeError(f"{args.equity}: bad equity value {e!r}") from None
    report = check_pdt(trades, equity)
    if args.windows_out:
        atomic_write(args.windows_out, pdt_windows_csv(report))
    _emit(kv_document(pdt_items(report)), args.out)


def cmd_report(args) -> None:
    series = load_store(args.store)
    bundle = build_bundle(series, args.horizon, args.margins, args.spread_source)
    write_bundle(bundle, args.out_dir)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="daytrade",
        description="Single-stock day-trading analytics: spreads, projections, backtests, PDT checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("ingest", help="validate a CSV and write a quote store")
    _add_source(p)
    p.add_argument("--out", required=True, help="store path to write")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("stats", help="spread averages (s_av, q_av) of a series")
    _add_source(p)
    p.add_argument("--out", help="write the key=value document here instead of stdout")
    p.add_argument("--series-out", help="also write per-day date,s_i,q_i CSV")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("project", help="compounded return after alpha winning days")
    p.add_argument("--spread", type=float, required=True, help="average daily spread, percent")
    p.add_argument("--alpha", type=int, required=True, help="number of winning days")
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    p.add_argument("--margin", type=float, default=100.0, help="percent; 100 = unleveraged")
    p.add_argument("--out")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("sweep", help="projection for every alpha and margin, as CSV")
    p.add_argument("--spread", type=float, required=True)
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    p.add_argument("--margins", type=_float_list, default=[100.0], help="comma-separated, e.g. 100,200")
    p.add_argument("--step", type=float, default=1.0, help="alpha step; below 1 adds interpolated rows")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("backtest", help="simulate one round trip per day")
    _add_source(p)
    p.add_argument("--strategy", choices=[s.value for s in Strategy], required=True)
    p.add_argument("--commission", type=float, default=0.0, help="flat fee per execution")
    p.add_argument("--margin", type=float, default=100.0)
    p.add_argument("--equity", type=float, default=30_000.0, help="starting equity")
    p.add_argument("--daily-out", help="write date,return_pct,equity CSV")
    p.add_argument("--out")
    p.set_defaults(func=cmd_backtest)

    p = sub.add_parser("pdt-check", help="pattern-day-trader check of a trade log")
    p.add_argument("--trades", required=True, help="CSV date,day_trades,other_trades")
    p.add_argument("--equity", help="CSV date,equity")
    p.add_argument("--windows-out", help="write per-window counts CSV")
    p.add_argument("--out")
    p.set_defaults(func=cmd_pdt_check)

    p = sub.add_parser("report", help="write the reproduction bundle for a store")
    p.add_argument("--store", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    p.add_argument(
        "--margins",
        type=_float_list,
        default=list(DEFAULT_LEVERAGED_MARGINS),
        help="margins for the leveraged sweep (default 200,300,400)",
    )
    p.add_argument("--spread-source", choices=SPREAD_SOURCES, default="oc")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"daytrade: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DayTradeError, ValueError) as e:
        print(f"daytrade: error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as e:
        print(f"daytrade: error: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
