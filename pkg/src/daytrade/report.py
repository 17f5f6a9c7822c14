"""Deterministic text renderings of results, and the reproduction bundle.

Everything here returns strings; nothing touches the filesystem except
:func:`write_bundle`. Averages are printed with 9 decimals and projection
values with 6, so identical inputs always give identical bytes.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .backtest import BacktestResult, PdtReport
from .projection import DEFAULT_HORIZON, SweepRow, alpha_sweep, break_even_alpha
from .quotes import QuoteSeries, atomic_write
from .spreads import SpreadSeries, SpreadStats, spread_stats

AVG_DP = 9
VALUE_DP = 6

DEFAULT_LEVERAGED_MARGINS = (200.0, 300.0, 400.0)


def fmt_avg(x: float) -> str:
    return f"{x:.{AVG_DP}f}"


def fmt_value(x: float) -> str:
    return f"{x:.{VALUE_DP}f}"


def fmt_num(x: float) -> str:
    """Integers without a trailing ``.0``, other numbers in shortest form."""
    if float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def kv_document(items: Mapping[str, object] | Iterable[tuple[str, object]]) -> str:
    if isinstance(items, Mapping):
        items = items.items()
    lines = []
    for key, value in items:
        if value is None:
            value = "none"
        elif isinstance(value, bool):
            value = "true" if value else "false"
        lines.append(f"{key}={value}")
    return "\n".join(lines) + "\n"


def stats_items(series: QuoteSeries, stats: SpreadStats) -> list[tuple[str, object]]:
    return [
        ("symbol", series.symbol),
        ("first_date", series.first_date),
        ("last_date", series.last_date),
        ("n", stats.n),
        ("s_av", fmt_avg(stats.s_av)),
        ("q_av", fmt_avg(stats.q_av)),
        ("s_min", fmt_avg(stats.s_min)),
        ("s_median", fmt_avg(stats.s_median)),
        ("s_max", fmt_avg(stats.s_max)),
        ("q_min", fmt_avg(stats.q_min)),
        ("q_median", fmt_avg(stats.q_median)),
        ("q_max", fmt_avg(stats.q_max)),
    ]


def spread_series_csv(ss: SpreadSeries, columns: Sequence[str] = ("s_i", "q_i")) -> str:
    source = {"s_i": ss.oc_spread, "q_i": ss.range_spread}
    lines = [",".join(("date", *columns))]
    for i, d in enumerate(ss.dates):
        lines.append(",".join([d.isoformat(), *(fmt_avg(source[c][i]) for c in columns)]))
    return "\n".join(lines) + "\n"


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    interpolated = any(r.interpolated for r in rows)
    header = "alpha,margin,value" + (",interpolated" if interpolated else "")
    lines = [header]
    for r in rows:
        cells = [fmt_num(r.alpha), fmt_num(r.margin), fmt_value(r.value)]
        if interpolated:
            cells.append("true" if r.interpolated else "false")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def pdt_items(pdt: PdtReport) -> list[tuple[str, object]]:
    window = pdt.first_trigger_window
    return [
        ("pattern_day_trader", pdt.is_pattern_day_trader),
        ("first_trigger_window", f"{window[0]}..{window[1]}" if window else None),
        ("windows", len(pdt.day_trade_counts)),
        ("max_day_trades_in_window", max((w.day_trades for w in pdt.day_trade_counts), default=0)),
        ("min_equity_ok", pdt.min_equity_ok),
    ]


def pdt_windows_csv(pdt: PdtReport) -> str:
    lines = ["start,end,day_trades,total_trades,flagged"]
    for w in pdt.day_trade_counts:
        lines.append(f"{w.start},{w.end},{w.day_trades},{w.total_trades},{str(w.flagged).lower()}")
    return "\n".join(lines) + "\n"


def backtest_items(symbol: str, result: BacktestResult) -> list[tuple[str, object]]:
    mean_r = sum(result.daily_returns) / len(result.daily_returns)
    return [
        ("symbol", symbol),
        ("strategy", result.strategy.value),
        ("margin", fmt_num(result.costs.margin)),
        ("commission_per_trade", fmt_num(result.costs.commission_per_trade)),
        ("starting_equity", fmt_value(result.starting_equity)),
        ("days", len(result.dates)),
        ("first_date", result.dates[0]),
        ("last_date", result.dates[-1]),
        ("mean_daily_return_pct", fmt_avg(mean_r)),
        ("terminal_equity", fmt_value(result.equity_curve[-1])),
        ("terminal_value_pct", fmt_value(result.terminal_value_pct)),
        ("total_commissions", fmt_value(result.total_commissions)),
        ("ruin", result.ruin_date),
        *pdt_items(result.pdt),
    ]


def backtest_daily_csv(result: BacktestResult) -> str:
    lines = ["date,return_pct,equity"]
    for d, r, e in zip(result.dates, result.daily_returns, result.equity_curve):
        lines.append(f"{d},{fmt_avg(r)},{fmt_value(e)}")
    return "\n".join(lines) + "\n"


SPREAD_SOURCES = ("oc", "range")


def build_bundle(
    series: QuoteSeries,
    horizon: int = DEFAULT_HORIZON,
    leveraged_margins: Sequence[float] = DEFAULT_LEVERAGED_MARGINS,
    spread_source: str = "oc",
) -> dict[str, str]:
    """File name to contents for the full reproduction bundle.

    The per-day series back the open/close and low/high spread plots; the two
    sweeps back the unleveraged and leveraged return curves, fed with the
    average selected by ``spread_source``.
    """
    if spread_source not in SPREAD_SOURCES:
        raise ValueError(f"spread source must be one of {SPREAD_SOURCES}, got {spread_source!r}")
    stats, ss = spread_stats(series)
    spread = stats.s_av if spread_source == "oc" else stats.q_av
    unlev = alpha_sweep(spread, horizon, [100.0])
    lev = alpha_sweep(spread, horizon, leveraged_margins)

    summary = stats_items(series, stats)
    summary += [
        ("horizon", horizon),
        ("sweep_spread_source", spread_source),
        ("sweep_spread", fmt_avg(spread)),
        ("leveraged_margins", ",".join(fmt_num(m) for m in leveraged_margins)),
    ]
    for name, avg in (("oc", stats.s_av), ("range", stats.q_av)):
        be = break_even_alpha(avg, horizon, 100.0) if avg > 0 else 0
        summary.append((f"break_even_alpha_{name}", be))
    for m in leveraged_margins:
        be = break_even_alpha(spread, horizon, m) if spread > 0 else 0
        summary.append((f"break_even_alpha_{spread_source}_m{fmt_num(m)}", be))
    summary.append(("unleveraged_terminal_value", fmt_value(unlev[-1].value)))

    return {
        "oc_spread_series.csv": spread_series_csv(ss, ("s_i",)),
        "range_spread_series.csv": spread_series_csv(ss, ("q_i",)),
        "sweep_unleveraged.csv": sweep_csv(unlev),
        "sweep_leveraged.csv": sweep_csv(lev),
        "summary.txt": kv_document(summary),
    }


def write_bundle(bundle: Mapping[str, str], out_dir: str | os.PathLike) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in sorted(bundle):
        atomic_write(out / name, bundle[name])
        paths.append(out / name)
    return paths
