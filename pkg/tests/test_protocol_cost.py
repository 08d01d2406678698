"""
Bandwidth overhead, AP load and the verification benchmark.
"""
import pytest

from conftest import rec
from src.hashprobe import ap_load, bandwidth_overhead, bandwidth_overhead_from_records, bench
from src.utils.error_handler import UsageError


# ---- bandwidth ----

def test_full_digest_overhead():
    report = bandwidth_overhead(147, 11.4, 32)
    assert report.new_avg_pkt_len_with_ssid == pytest.approx(167.6)
    assert report.pct_increase == pytest.approx(14.01, abs=0.005)
    assert report.to_dict()["pct_increase"] == 14.01


def test_truncated_digest_overhead():
    report = bandwidth_overhead(147, 11.4, 16)
    assert report.new_avg_pkt_len_with_ssid == pytest.approx(151.6)
    assert report.pct_increase == pytest.approx(3.2, abs=0.1)


def test_equal_lengths_cost_nothing():
    assert bandwidth_overhead(100, 32, 32).pct_increase == 0.0


def test_overhead_scales():
    base = bandwidth_overhead(147, 11.4, 32).pct_increase
    assert bandwidth_overhead(294, 22.8, 64).pct_increase == pytest.approx(base)


@pytest.mark.parametrize("args", [(0, 10, 32), (-5, 10, 32), (147, 10, 0)])
def test_invalid_averages(args):
    with pytest.raises(UsageError):
        bandwidth_overhead(*args)


def test_overhead_from_capture():
    mac = "02:00:00:00:00:01"
    records = [rec(i, mac, "x" * n, seq=i, length=147) for i, n in enumerate((10, 11, 12, 12, 12))]
    records.append(rec(9, mac, "", seq=9, length=100))
    report = bandwidth_overhead_from_records(records, 32)
    assert report.avg_ssid_len == pytest.approx(11.4)
    assert report.avg_pkt_len_with_ssid == pytest.approx(147.0)
    assert report.avg_pkt_len_all == pytest.approx((147 * 5 + 100) / 6)
    assert report.pct_increase == pytest.approx(14.01, abs=0.005)


def test_capture_without_directed_probes():
    with pytest.raises(UsageError):
        bandwidth_overhead_from_records([rec(0, "02:00:00:00:00:01", "")])


def test_ap_load():
    assert ap_load() == pytest.approx(5.336)
    assert ap_load(100, 0.5) == 50.0
    with pytest.raises(ValueError):
        ap_load(10, 1.5)


# ---- bench ----

def test_small_bench_agrees():
    report = bench(n_ops=2000, runs=1, seed=1)
    assert report.verdict_agreement
    assert report.n_ops == 2000
    assert report.required_ops_per_sec == pytest.approx(5.336)
    assert report.mean_time_hashed > 0
    assert set(report.to_dict()) >= {"n_ops", "mean_time_hashed", "mean_time_baseline", "overhead_pct"}


@pytest.mark.parametrize("kwargs", [{"n_ops": 0}, {"n_ops": 10, "ssid_len": 33}, {"n_ops": 10, "runs": 0}])
def test_bench_rejects_bad_arguments(kwargs):
    with pytest.raises(UsageError):
        bench(**kwargs)


@pytest.mark.slow
def test_million_ops_outpace_ap_load():
    report = bench(n_ops=1_000_000, runs=1)
    assert report.verdict_agreement
    assert report.throughput_margin >= 1000
