"""Analytics for day trading a single stock from daily OHLC quotes."""

from .backtest import (
    BacktestResult,
    CostModel,
    PdtReport,
    Strategy,
    check_pdt,
    run_backtest,
    strategy_return,
)
from .errors import DayTradeError, ParseError, RuinError, StoreFormatError, ValidationError
from .projection import (
    ProjectionParams,
    ProjectionResult,
    alpha_sweep,
    break_even_alpha,
    project,
    project_value,
)
from .quotes import DailyQuote, QuoteSeries, load_store, parse_csv, read_csv, save_store, slice_by_date
from .spreads import SpreadSeries, SpreadStats, oc_spread, range_spread, spread_stats

__version__ = "0.1.0"
