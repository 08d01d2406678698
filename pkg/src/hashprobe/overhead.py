"""
Bandwidth and AP-side cost of carrying a digest instead of the SSID.
Exact arithmetic on averages; frame lengths exclude the radiotap header.
"""
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np

from src.capture.models import ProbeRecord
from src.utils.error_handler import UsageError

DEFAULT_PROBES_PER_S = 23.0
DEFAULT_SSID_SHARE = 0.232


@dataclass(frozen=True)
class OverheadReport:
    avg_pkt_len_all: float
    avg_pkt_len_with_ssid: float
    avg_ssid_len: float
    hash_len: int
    new_avg_pkt_len_with_ssid: float
    pct_increase: float

    def to_dict(self) -> dict:
        data = asdict(self)
        for key in ("avg_pkt_len_all", "avg_pkt_len_with_ssid", "avg_ssid_len", "new_avg_pkt_len_with_ssid"):
            data[key] = round(data[key], 2)
        data["pct_increase"] = round(data["pct_increase"], 2)
        return data


def bandwidth_overhead(avg_pkt_with_ssid: float, avg_ssid_len: float, hash_len: int = 32,
                       avg_pkt_len_all: float = None) -> OverheadReport:
    """
    new_avg = avg_with_ssid + (hash_len - avg_ssid_len)
    pct     = 100 * (new_avg - avg_with_ssid) / avg_with_ssid
    """
    if avg_pkt_with_ssid <= 0:
        raise UsageError("average packet length must be positive")
    if hash_len <= 0:
        raise UsageError("hash length must be positive")
    new_avg = avg_pkt_with_ssid + (hash_len - avg_ssid_len)
    pct = 100.0 * (new_avg - avg_pkt_with_ssid) / avg_pkt_with_ssid
    return OverheadReport(
        avg_pkt_len_all=avg_pkt_with_ssid if avg_pkt_len_all is None else avg_pkt_len_all,
        avg_pkt_len_with_ssid=avg_pkt_with_ssid,
        avg_ssid_len=avg_ssid_len,
        hash_len=hash_len,
        new_avg_pkt_len_with_ssid=new_avg,
        pct_increase=pct,
    )


def bandwidth_overhead_from_records(records: Iterable[ProbeRecord], hash_len: int = 32) -> OverheadReport:
    """Same report with the averages measured from a capture (SSID averages over directed probes only)."""
    records = list(records)
    directed = [r for r in records if r.has_ssid]
    if not directed:
        raise UsageError("capture has no probe requests with an SSID")
    all_lens = np.array([r.frame_len for r in records], dtype=float)
    pkt_lens = np.array([r.frame_len for r in directed], dtype=float)
    ssid_lens = np.array([len(r.ssid) for r in directed], dtype=float)
    return bandwidth_overhead(
        float(pkt_lens.mean()),
        float(ssid_lens.mean()),
        hash_len,
        avg_pkt_len_all=float(all_lens.mean()),
    )


def ap_load(probes_per_s: float = DEFAULT_PROBES_PER_S, ssid_share: float = DEFAULT_SSID_SHARE) -> float:
    """Hash verifications per second an AP must sustain: one per directed probe it hears."""
    if probes_per_s < 0 or not 0 <= ssid_share <= 1:
        raise ValueError("probes_per_s must be >= 0 and ssid_share in [0, 1]")
    return probes_per_s * ssid_share
