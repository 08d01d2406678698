"""
AP-side verification benchmark: hash-then-compare vs. plain SSID compare.
Timings are hardware-dependent; only verdict agreement is a hard requirement.
"""
import time
from dataclasses import asdict, dataclass
from typing import List, Tuple

import numpy as np

from src.capture.models import MacAddress
from src.hashprobe.overhead import ap_load
from src.hashprobe.scheme import ap_verify, legacy_match, make_hashed_probe
from src.utils.error_handler import UsageError
from src.utils.logger import get_logger

log = get_logger("hashprobe")

STABLE_FIELDS = ("n_ops", "runs", "verdict_agreement", "required_ops_per_sec")


@dataclass(frozen=True)
class BenchReport:
    n_ops: int
    mean_time_hashed: float  # µs per op
    mean_time_baseline: float  # µs per op
    overhead_pct: float
    verdict_agreement: bool
    runs: int = 3
    hash_ops_per_sec: float = 0.0
    required_ops_per_sec: float = 0.0
    throughput_margin: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)

    def summary_dict(self) -> dict:
        """Fields that depend only on the inputs; same arguments give the same values."""
        return {k: getattr(self, k) for k in STABLE_FIELDS}

    def timings_dict(self) -> dict:
        return {k: v for k, v in self.to_dict().items() if k not in STABLE_FIELDS}


def _workload(n_ops: int, ssid_len: int, match_fraction: float, seed: int) -> List[Tuple]:
    """(mac, seq, probe_ssid, ap_ssid, digest) tuples; `match_fraction` of them name the AP's SSID."""
    rng = np.random.default_rng(seed)
    macs = rng.integers(0, 256, size=(n_ops, 6), dtype=np.uint8)
    macs[:, 0] = (macs[:, 0] & 0xFC) | 0x02
    seqs = rng.integers(0, 4096, size=n_ops)
    ssids = rng.integers(0x21, 0x7F, size=(n_ops, ssid_len), dtype=np.uint8)
    matches = rng.random(n_ops) < match_fraction

    work = []
    for i in range(n_ops):
        mac = MacAddress(macs[i].tobytes())
        seq = int(seqs[i])
        probe_ssid = ssids[i].tobytes()
        ap_ssid = probe_ssid if matches[i] else probe_ssid[:-1] + bytes([probe_ssid[-1] ^ 0x01])
        digest = make_hashed_probe(mac, seq, probe_ssid).digest
        work.append((mac, seq, probe_ssid, ap_ssid, digest))
    return work


def bench(n_ops: int = 1_000_000, ssid_len: int = 11, match_fraction: float = 0.5, seed: int = 0,
          runs: int = 3) -> BenchReport:
    if n_ops <= 0:
        raise UsageError("bench needs n_ops >= 1")
    if not 1 <= ssid_len <= 32:
        raise UsageError("ssid_len must be between 1 and 32")
    if runs < 1:
        raise UsageError("runs must be >= 1")

    work = _workload(n_ops, ssid_len, match_fraction, seed)
    hashed_times, baseline_times = [], []
    agreement = True
    for run in range(runs):
        start = time.process_time()
        baseline = [legacy_match(probe_ssid, ap_ssid) for _, _, probe_ssid, ap_ssid, _ in work]
        baseline_times.append(time.process_time() - start)

        start = time.process_time()
        hashed = [ap_verify(mac, seq, digest, ap_ssid) for mac, seq, _, ap_ssid, digest in work]
        hashed_times.append(time.process_time() - start)

        agreement = agreement and hashed == baseline
        log.debug(f"run {run + 1}/{runs}: hashed {hashed_times[-1]:.3f}s, baseline {baseline_times[-1]:.3f}s")

    hashed_s = float(np.mean(hashed_times))
    baseline_s = float(np.mean(baseline_times))
    ops_per_sec = n_ops / max(hashed_s, 1e-9)
    required = ap_load()
    report = BenchReport(
        n_ops=n_ops,
        mean_time_hashed=hashed_s / n_ops * 1e6,
        mean_time_baseline=baseline_s / n_ops * 1e6,
        overhead_pct=100.0 * (hashed_s - baseline_s) / max(baseline_s, 1e-9),
        verdict_agreement=agreement,
        runs=runs,
        hash_ops_per_sec=ops_per_sec,
        required_ops_per_sec=required,
        throughput_margin=ops_per_sec / required,
    )
    if not agreement:
        log.error("Hashed and plain verdicts disagree")
    log.info(f"bench: {report.mean_time_hashed:.2f}µs hashed vs {report.mean_time_baseline:.2f}µs plain "
             f"({report.overhead_pct:.1f}% overhead)")
    return report
