"""Daily round-trip backtests and pattern-day-trader checks.

Every traded day is one round trip (open and close a position the same
day) sized to full equity times the margin multiple. Commissions are a flat
fee per execution, two executions per round trip, deducted after the day's
return is applied.
"""

from __future__ import annotations

import datetime as dt
import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .quotes import DailyQuote, QuoteSeries
from .spreads import oc_spread, range_spread

PDT_WINDOW_DAYS = 5
PDT_MIN_DAY_TRADES = 4
PDT_MIN_SHARE_PCT = 6
PDT_MIN_EQUITY = 25_000


class Strategy(str, enum.Enum):
    OPEN_CLOSE_LONG = "open-close-long"
    OPEN_CLOSE_SHORT = "open-close-short"
    # hindsight strategies: upper bounds, not tradable
    OPEN_CLOSE_ORACLE = "open-close-oracle"
    RANGE_ORACLE = "range-oracle"

    def __str__(self) -> str:
        return self.value


def strategy_return(strategy: Strategy | str, quote: DailyQuote) -> float:
    """Unleveraged signed return of one round trip, in percent."""
    strategy = Strategy(strategy)
    if strategy is Strategy.OPEN_CLOSE_LONG:
        return float(quote.close - quote.open) / float(quote.open) * 100
    if strategy is Strategy.OPEN_CLOSE_SHORT:
        return float(quote.open - quote.close) / float(quote.open) * 100
    if strategy is Strategy.OPEN_CLOSE_ORACLE:
        return oc_spread(quote)
    return range_spread(quote)


@dataclass(frozen=True)
class CostModel:
    commission_per_trade: float = 0.0
    margin: float = 100.0

    def __post_init__(self):
        if not self.commission_per_trade >= 0:
            raise ValueError(f"commission must be >= 0, got {self.commission_per_trade}")
        if not self.margin >= 100:
            raise ValueError(f"margin must be >= 100, got {self.margin}")

    @property
    def leverage(self) -> float:
        return self.margin / 100


@dataclass(frozen=True)
class WindowCount:
    start: dt.date
    end: dt.date
    day_trades: int
    total_trades: int

    @property
    def flagged(self) -> bool:
        return is_pattern(self.day_trades, self.total_trades - self.day_trades)


@dataclass(frozen=True)
class PdtReport:
    is_pattern_day_trader: bool
    first_trigger_window: tuple[dt.date, dt.date] | None
    day_trade_counts: tuple[WindowCount, ...]
    min_equity_ok: bool


def is_pattern(day_trades: int, other_trades: int) -> bool:
    """Pattern-day-trader test for one window.

    Four or more round trips, and round trips make up more than six percent
    of all trades in the window (round trips counted once each).
    """
    total = day_trades + other_trades
    return day_trades >= PDT_MIN_DAY_TRADES and 100 * day_trades > PDT_MIN_SHARE_PCT * total


def check_pdt(
    trade_log: Iterable[tuple[dt.date, int, int]],
    equity_checkpoints: Iterable[tuple[dt.date, float]] = (),
) -> PdtReport:
    """Slide a five-trading-day window over ``(date, day_trades, other_trades)`` rows.

    Trading days are the distinct dates present in the log, so idle days must
    appear as zero rows to count toward a window. Rows sharing a date are
    summed. A log with fewer than five distinct dates is one window.
    """
    days: list[list] = []
    for d, day_trades, other in trade_log:
        if day_trades < 0 or other < 0:
            raise ValueError(f"{d}: trade counts must be >= 0")
        if days and d < days[-1][0]:
            raise ValueError(f"trade log dates must be non-decreasing: {d} after {days[-1][0]}")
        if days and d == days[-1][0]:
            days[-1][1] += day_trades
            days[-1][2] += other
        else:
            days.append([d, day_trades, other])

    windows = []
    width = min(PDT_WINDOW_DAYS, len(days))
    if days:
        dt_sum = sum(r[1] for r in days[:width])
        all_sum = sum(r[1] + r[2] for r in days[:width])
        windows.append(WindowCount(days[0][0], days[width - 1][0], dt_sum, all_sum))
        for i in range(width, len(days)):
            old, new = days[i - width], days[i]
            dt_sum += new[1] - old[1]
            all_sum += new[1] + new[2] - old[1] - old[2]
            windows.append(WindowCount(days[i - width + 1][0], new[0], dt_sum, all_sum))

    first = next((w for w in windows if w.flagged), None)
    return PdtReport(
        is_pattern_day_trader=first is not None,
        first_trigger_window=(first.start, first.end) if first else None,
        day_trade_counts=tuple(windows),
        min_equity_ok=all(eq >= PDT_MIN_EQUITY for _, eq in equity_checkpoints),
    )


@dataclass(frozen=True)
class BacktestResult:
    strategy: Strategy
    costs: CostModel
    starting_equity: float
    dates: tuple[dt.date, ...]
    daily_returns: tuple[float, ...]
    equity_curve: tuple[float, ...]
    total_commissions: float
    terminal_value_pct: float
    pdt: PdtReport
    ruin_date: dt.date | None = field(default=None)

    @property
    def ruined(self) -> bool:
        return self.ruin_date is not None


def run_backtest(
    series: QuoteSeries | Sequence[DailyQuote],
    strategy: Strategy | str,
    costs: CostModel = CostModel(),
    starting_equity: float = 30_000.0,
) -> BacktestResult:
    if len(series) == 0:
        raise ValueError("cannot backtest an empty series")
    if not starting_equity > 0:
        raise ValueError(f"starting equity must be > 0, got {starting_equity}")
    strategy = Strategy(strategy)
    k = costs.leverage
    fee = 2 * costs.commission_per_trade

    equity = float(starting_equity)
    dates, returns, curve = [], [], []
    commissions = 0.0
    ruin_date = None
    for q in series:
        r = k * strategy_return(strategy, q)
        equity = equity * (1 + r / 100) - fee
        commissions += fee
        dates.append(q.date)
        returns.append(r)
        curve.append(equity)
        if equity <= 0:
            ruin_date = q.date
            break

    pdt = check_pdt(((d, 1, 0) for d in dates), zip(dates, curve))
    return BacktestResult(
        strategy=strategy,
        costs=costs,
        starting_equity=float(starting_equity),
        dates=tuple(dates),
        daily_returns=tuple(returns),
        equity_curve=tuple(curve),
        total_commissions=commissions,
        terminal_value_pct=curve[-1] / starting_equity * 100,
        pdt=pdt,
        ruin_date=ruin_date,
    )
