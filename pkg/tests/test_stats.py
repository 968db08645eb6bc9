"""
Tests for the stylized-fact statistics: series extraction, acf, histograms,
moments and tail fits.
"""

import numpy as np
import pytest

from netlob.contracts import NetworkKind, SimConfig, StatsOptions
from netlob.core import Side, Trade
from netlob.errors import (
    ConstantSeriesError,
    EmptyInputError,
    NonFinitePriceError,
    NonPositivePointError,
    NonPositivePriceError,
    NonPositiveValueError,
    TooFewEventsError,
    TooFewTradesError,
    TooFewValuesError,
)
from netlob.kernel import Action, EventLogRecord, LogMeta, run
from netlob.kernel.eventlog import EventLogBuilder
from netlob.stats import (
    AcfResult,
    FitMode,
    SampledSeries,
    abs_return_acf,
    autocorrelation,
    average_acf,
    compute_diagnostics,
    excess_kurtosis,
    fano_factor,
    gaussian_density,
    gaussian_moment_fit,
    histogram,
    inter_event_times,
    log_bin_edges,
    log_binned_histogram,
    log_returns,
    loglog_linear_fit,
    pool_histograms,
    return_acf,
    sample_midprice,
    semilog_linear_fit,
    trade_sign_acf,
    trade_signs,
    waiting_tail_ratio,
    window_counts,
)


def make_log(events=(), trades=(), horizon=40.0, burn_in=0.0):
    """events: (time, mid_after or None); trades: (time, aggressor side)."""
    builder = EventLogBuilder()
    for seq, (time, mid) in enumerate(events):
        builder.append(
            EventLogRecord(
                time=time,
                seq=seq,
                agent=0,
                action=Action.LIMIT_PLACED,
                side=Side.BID,
                price=10000,
                volume=1,
                trades_triggered=0,
                mid_after=mid,
                cascade_id=seq,
                cascade_depth=0,
            )
        )
    builder.append_trades(
        [Trade(time, 10000, 1, side, i, 0, 1) for i, (time, side) in enumerate(trades)]
    )
    meta = LogMeta(
        seed=0,
        n_agents=1,
        network="none",
        q=0.0,
        tick_size=0.01,
        p_ref=100.0,
        horizon=horizon,
        burn_in=burn_in,
    )
    return builder.build(meta)


def clustered_returns(n=10_000, block=50, seed=0):
    """Gaussian returns whose volatility alternates between 1 and 5 every block."""
    rng = np.random.default_rng(seed)
    vol = np.where((np.arange(n) // block) % 2 == 0, 1.0, 5.0)
    return rng.normal(0.0, 1.0, n) * vol


class TestSampleMidprice:
    def setup_method(self):
        self.log = make_log([(5.0, 100.0), (15.0, 101.0), (33.0, None)])

    def test_carries_last_mid_forward(self):
        series = sample_midprice(self.log, delta=10.0, burn_in=0.0, horizon=40.0)
        assert series.values.tolist() == [100.0, 100.0, 101.0, 101.0, 101.0]
        assert series.times().tolist() == [0.0, 10.0, 20.0, 30.0, 40.0]

    def test_single_interval(self):
        series = sample_midprice(self.log, delta=40.0, burn_in=0.0, horizon=40.0)
        assert len(series) == 2

    def test_reference_price_before_first_quote(self):
        log = make_log([(5.0, None)])
        series = sample_midprice(log, delta=10.0, burn_in=0.0, horizon=20.0)
        assert series.values.tolist() == [100.0, 100.0, 100.0]

    def test_empty_log(self):
        with pytest.raises(EmptyInputError):
            sample_midprice(make_log(), 10.0, 0.0, 40.0)

    def test_rejects_non_positive_delta(self):
        with pytest.raises(ValueError):
            sample_midprice(self.log, 0.0, 0.0, 40.0)


class TestLogReturns:
    def test_differences_of_logs(self):
        series = SampledSeries(delta=10.0, t0=0.0, values=np.array([100.0, 100.0, 101.0]))
        returns = log_returns(series)
        assert returns.values == pytest.approx([0.0, np.log(1.01)])
        assert returns.t0 == 10.0

    def test_needs_two_prices(self):
        with pytest.raises(TooFewValuesError):
            log_returns(SampledSeries(10.0, 0.0, np.array([100.0])))

    def test_rejects_non_positive_prices(self):
        with pytest.raises(NonPositivePriceError):
            log_returns(SampledSeries(10.0, 0.0, np.array([100.0, 0.0])))

    @pytest.mark.parametrize("bad", [np.nan, np.inf])
    def test_rejects_non_finite_prices(self, bad):
        with pytest.raises(NonFinitePriceError):
            log_returns(SampledSeries(10.0, 0.0, np.array([100.0, bad, 101.0])))


class TestAutocorrelation:
    def test_alternating_series(self):
        acf = autocorrelation([1, -1, 1, -1], max_lag=1)
        assert acf.values[0] == 1.0
        assert acf.values[1] == pytest.approx(-0.75)

    def test_constant_series(self):
        with pytest.raises(ConstantSeriesError):
            autocorrelation([2.0] * 10, 3)

    def test_too_short(self):
        with pytest.raises(TooFewValuesError):
            autocorrelation([1.0, 2.0, 3.0], 3)

    def test_mean_over(self):
        acf = AcfResult(lags=np.arange(4), values=np.array([1.0, 0.5, 0.3, 0.1]))
        assert acf.mean_over(1, 2) == pytest.approx(0.4)
        assert acf.max_lag == 3

    def test_average(self):
        a = AcfResult(np.arange(3), np.array([1.0, 0.2, 0.0]))
        b = AcfResult(np.arange(3), np.array([1.0, 0.4, 0.2]))
        assert average_acf([a, b]).values == pytest.approx([1.0, 0.3, 0.1])
        with pytest.raises(ValueError):
            average_acf([a, AcfResult(np.arange(2), np.array([1.0, 0.1]))])
        with pytest.raises(ValueError):
            average_acf([])


class TestReturnAcf:
    def test_constant_magnitude(self):
        returns = SampledSeries(10.0, 0.0, np.array([0.01, -0.01] * 20))
        with pytest.raises(ConstantSeriesError):
            abs_return_acf(returns, 5)

    def test_volatility_clustering(self):
        values = clustered_returns()
        acf = abs_return_acf(SampledSeries(10.0, 0.0, values), 10)
        assert acf.values[1] > 0.1
        assert abs(return_acf(SampledSeries(10.0, 0.0, values), 10).values[1]) < 0.05

    def test_sign_shuffle_leaves_abs_acf(self):
        values = clustered_returns()
        flips = np.random.default_rng(1).choice([-1.0, 1.0], size=len(values))
        a = abs_return_acf(SampledSeries(10.0, 0.0, values), 10)
        b = abs_return_acf(SampledSeries(10.0, 0.0, values * flips), 10)
        np.testing.assert_allclose(a.values, b.values)


class TestTradeSigns:
    def test_signs_follow_aggressor(self):
        log = make_log([(1.0, None)], trades=[(1.0, Side.BID), (2.0, Side.ASK), (3.0, Side.BID)])
        assert trade_signs(log).signs.tolist() == [1, -1, 1]
        assert trade_signs(log, burn_in=2.0).signs.tolist() == [-1, 1]

    def test_all_buys(self):
        log = make_log([(1.0, None)], trades=[(float(t), Side.BID) for t in range(30)])
        with pytest.raises(ConstantSeriesError):
            trade_sign_acf(log, 5)

    def test_too_few_trades(self):
        log = make_log([(1.0, None)], trades=[(1.0, Side.BID), (2.0, Side.ASK)])
        with pytest.raises(TooFewTradesError):
            trade_sign_acf(log, 5)

    def test_iid_signs_stay_in_the_noise_band(self):
        rng = np.random.default_rng(4)
        n = 10_000
        sides = [Side.BID if u < 0.5 else Side.ASK for u in rng.random(n)]
        log = make_log([(1.0, None)], trades=[(float(t), s) for t, s in enumerate(sides)])
        acf = trade_sign_acf(log, 20)
        assert np.all(np.abs(acf.values[1:]) < 4 / np.sqrt(n))


class TestInterEventTimes:
    def test_gaps(self):
        log = make_log([(10.0, None), (12.0, None), (15.0, None)])
        assert inter_event_times(log).tolist() == [2.0, 3.0]

    def test_simultaneous_events_are_kept(self):
        log = make_log([(10.0, None), (10.0, None), (12.0, None)])
        assert inter_event_times(log).tolist() == [0.0, 2.0]

    def test_burn_in(self):
        log = make_log([(1.0, None), (10.0, None), (12.0, None), (15.0, None)])
        assert inter_event_times(log, burn_in=5.0).tolist() == [2.0, 3.0]

    def test_too_few(self):
        with pytest.raises(TooFewEventsError):
            inter_event_times(make_log([(1.0, None)]))


class TestHistogram:
    def test_counts(self):
        hist = histogram([1, 2, 3], [0, 2, 4])
        assert hist.counts.tolist() == [1, 2]
        assert hist.total == 3

    def test_under_and_overflow(self):
        hist = histogram([-1.0, 1.0, 4.0], [0, 2, 4])
        assert (hist.underflow, hist.overflow) == (1, 1)
        assert hist.counts.tolist() == [1, 0]

    def test_density_integrates_to_inside_share(self):
        values = np.random.default_rng(2).normal(size=5000)
        hist = histogram(values, np.linspace(-2, 2, 41))
        inside = np.count_nonzero((values >= -2) & (values < 2)) / len(values)
        assert float((hist.density() * hist.widths).sum()) == pytest.approx(inside)

    def test_rejects_bad_input(self):
        with pytest.raises(EmptyInputError):
            histogram([], [0, 1])
        with pytest.raises(ValueError):
            histogram([1.0], [1, 1])

    def test_pool(self):
        edges = [0.0, 1.0, 2.0]
        pooled = pool_histograms([histogram([0.5], edges), histogram([0.5, 1.5, 3.0], edges)])
        assert pooled.counts.tolist() == [2, 1]
        assert pooled.overflow == 1
        with pytest.raises(ValueError):
            pool_histograms([histogram([0.5], edges), histogram([0.5], [0.0, 2.0])])


class TestLogBins:
    def test_edges_cover_the_range(self):
        edges = log_bin_edges(3.0, 250.0, 10)
        assert edges[0] <= 3.0
        assert edges[-1] > 250.0
        np.testing.assert_allclose(edges[1:] / edges[:-1], 10 ** 0.1)

    def test_histogram_counts_every_value(self):
        values = np.random.default_rng(5).exponential(100.0, 1000)
        hist = log_binned_histogram(values, 10)
        assert hist.log_bins
        assert int(hist.counts.sum()) == 1000
        assert hist.underflow == hist.overflow == 0
        assert np.all(hist.centers > hist.edges[:-1])

    def test_rejects_zero(self):
        with pytest.raises(NonPositiveValueError):
            log_binned_histogram([0.0, 1.0], 10)


class TestMoments:
    def test_symmetric_two_point(self):
        assert excess_kurtosis([1.0, -1.0] * 50) == pytest.approx(-2.0)

    def test_normal_draws(self):
        values = np.random.default_rng(0).normal(size=1_000_000)
        assert abs(excess_kurtosis(values)) < 0.02

    def test_constant_sample(self):
        with pytest.raises(ConstantSeriesError):
            excess_kurtosis([1.0] * 10)

    def test_gaussian_moment_fit(self):
        mean, std = gaussian_moment_fit([1.0, 2.0, 3.0, 4.0])
        assert mean == 2.5
        assert std == pytest.approx(np.sqrt(1.25))
        assert gaussian_density(np.array([mean]), mean, std)[0] == pytest.approx(
            1 / (std * np.sqrt(2 * np.pi))
        )

    def test_waiting_tail_ratio_of_exponential(self):
        draws = np.random.default_rng(3).exponential(50.0, 1_000_000)
        assert waiting_tail_ratio(draws, multiple=5.0) == pytest.approx(1.0, rel=0.05)


class TestActivityBursts:
    def test_window_counts(self):
        counts = window_counts([0.5, 1.0, 1.5, 3.2, 9.9, 10.0], 2.0, 0.0, 9.0)
        assert counts.tolist() == [3, 1, 0, 0]

    def test_window_longer_than_the_span(self):
        assert len(window_counts([1.0, 2.0], 10.0, 0.0, 5.0)) == 0

    def test_rejects_non_positive_window(self):
        with pytest.raises(NonPositiveValueError):
            window_counts([1.0], 0.0, 0.0, 5.0)

    def test_poisson_stream_has_unit_fano_factor(self):
        times = np.cumsum(np.random.default_rng(4).exponential(2.0, 200_000))
        counts = window_counts(times, 200.0, 0.0, float(times[-1]))
        assert fano_factor(counts) == pytest.approx(1.0, abs=0.1)

    def test_bursts_raise_the_fano_factor(self):
        rng = np.random.default_rng(5)
        centres = np.cumsum(rng.exponential(500.0, 400))
        times = np.sort(np.concatenate([c + rng.exponential(20.0, 30) for c in centres]))
        counts = window_counts(times, 200.0, 0.0, float(centres[-1]))
        assert fano_factor(counts) > 10

    def test_degenerate_counts(self):
        with pytest.raises(TooFewValuesError):
            fano_factor([4])
        with pytest.raises(EmptyInputError):
            fano_factor([0, 0, 0])


class TestFits:
    def test_exact_power_law(self):
        x = np.arange(1, 51, dtype=float)
        fit = loglog_linear_fit((x, 3.0 * x**-0.5), (1, 50))
        assert fit.slope == pytest.approx(-0.5, abs=1e-10)
        assert fit.intercept == pytest.approx(np.log(3.0))
        assert (fit.mode, fit.n_points) == (FitMode.LOGLOG, 50)

    def test_perturbed_power_law(self):
        x = np.arange(1, 101, dtype=float)
        noise = np.exp(np.random.default_rng(7).normal(0.0, 0.05, len(x)))
        fit = loglog_linear_fit((x, x**-1.2 * noise), (1, 100))
        assert fit.slope == pytest.approx(-1.2, abs=0.05)

    def test_acf_input_uses_lags(self):
        lags = np.arange(11, dtype=float)
        acf = AcfResult(lags=lags, values=np.concatenate([[1.0], 0.5 * lags[1:] ** -0.3]))
        fit = loglog_linear_fit(acf, (1, 10))
        assert fit.slope == pytest.approx(-0.3)
        assert fit.n_points == 10

    def test_negative_point_in_range(self):
        x = np.arange(1, 6, dtype=float)
        with pytest.raises(NonPositivePointError):
            loglog_linear_fit((x, np.array([1.0, 0.5, -0.1, 0.2, 0.1])), (1, 5))

    def test_too_few_points(self):
        with pytest.raises(TooFewValuesError):
            loglog_linear_fit((np.array([1.0, 2.0]), np.array([1.0, 0.5])), (1, 1))

    def test_semilog(self):
        x = np.linspace(0, 20, 21)
        fit = semilog_linear_fit((x, 2.0 * np.exp(-0.3 * x)), (0, 20))
        assert fit.slope == pytest.approx(-0.3)
        assert fit.mode is FitMode.SEMILOG_Y


class TestDiagnostics:
    def setup_method(self):
        config = SimConfig(
            n_agents=30,
            network=NetworkKind.ER,
            n_edges=60,
            q=0.1,
            horizon=200_000.0,
            burn_in=20_000.0,
            seed=11,
        )
        self.log = run(config)
        self.options = StatsOptions(
            acf_max_lag=20, sign_max_lag=20, sign_fit_hi=10, abs_fit_hi=10
        )

    def test_shapes(self):
        diag = compute_diagnostics(self.log, self.options)
        assert len(diag.returns) == 18_000
        assert diag.abs_return_acf.max_lag == 20
        assert diag.sign_acf.values[0] == 1.0
        assert np.all(diag.waiting_times >= 0)
        assert diag.n_events == len(self.log.after(20_000.0).events)
        assert diag.seed == 11

    def test_pure_function_of_the_log(self):
        a = compute_diagnostics(self.log, self.options)
        b = compute_diagnostics(self.log, self.options)
        np.testing.assert_array_equal(a.returns, b.returns)
        np.testing.assert_array_equal(a.sign_acf.values, b.sign_acf.values)
        np.testing.assert_array_equal(a.cascade_sizes, b.cascade_sizes)

    def test_burn_in_override(self):
        diag = compute_diagnostics(self.log, self.options, burn_in=100_000.0)
        assert len(diag.returns) == 10_000

    def test_activity_counts_cover_the_kept_span(self):
        diag = compute_diagnostics(self.log, self.options)
        events = self.log.events
        kept = events[(events["time"] >= 20_000.0) & (events["time"] < 200_000.0)]
        assert len(diag.activity_counts) == 18
        assert int(diag.activity_counts.sum()) == len(kept)

    def test_cascades_are_kept_whole_by_source_time(self):
        diag = compute_diagnostics(self.log, self.options)
        events = self.log.events
        roots = events[(events["cascade_depth"].fillna(-1) == 0) & (events["time"] >= 20_000.0)]
        followups = self.log.followups()
        counted = followups[followups["cascade_id"].isin(roots["seq"])]
        assert len(diag.cascade_sizes) == len(roots)
        assert int(diag.cascade_sizes.sum()) == len(counted)


class TestCascadeSizes:
    def setup_method(self):
        builder = EventLogBuilder()
        # (time, seq, action, cascade_id, depth)
        rows = [
            (5.0, 0, Action.LIMIT_PLACED, 0, 0),
            (8.0, 1, Action.CANCELLED, None, None),
            (12.0, 2, Action.FOLLOWUP_LIMIT, 0, 1),
            (15.0, 3, Action.FOLLOWUP_MARKET, 0, 2),
            (20.0, 4, Action.MARKET_PLACED, 4, 0),
            (25.0, 5, Action.FOLLOWUP_MARKET, 4, 1),
            (30.0, 6, Action.LIMIT_PLACED, 6, 0),
        ]
        for time, seq, action, cascade, depth in rows:
            builder.append(
                EventLogRecord(
                    time=time,
                    seq=seq,
                    agent=seq,
                    action=action,
                    side=None if action is Action.CANCELLED else Side.ASK,
                    price=None,
                    volume=0 if action is Action.CANCELLED else 1,
                    trades_triggered=0,
                    mid_after=None,
                    cascade_id=cascade,
                    cascade_depth=depth,
                )
            )
        meta = LogMeta(
            seed=0,
            n_agents=7,
            network="er",
            q=0.5,
            tick_size=0.01,
            p_ref=100.0,
            horizon=40.0,
            burn_in=10.0,
        )
        self.log = builder.build(meta)

    def test_every_cascade(self):
        sizes = self.log.cascade_sizes()
        assert {int(k): int(v) for k, v in sizes.items()} == {0: 2, 4: 1, 6: 0}

    def test_source_before_cutoff_drops_the_whole_cascade(self):
        sizes = self.log.cascade_sizes(since=10.0)
        assert {int(k): int(v) for k, v in sizes.items()} == {4: 1, 6: 0}

    def test_followups_after_the_cutoff_still_count(self):
        sizes = self.log.cascade_sizes(since=20.0)
        assert int(sizes.loc[4]) == 1
