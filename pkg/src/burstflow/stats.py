"""
Fleet-level statistics over a capture using Pandas.
Deterministic math only; rendering happens in src/report.
"""
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Dict, List

import numpy as np
import pandas as pd

from src.burstflow.bursts import Burst
from src.burstflow.clusters import Cluster
from src.capture.models import BAND_5, BAND_24, ProbeRecord

HISTOGRAM_BUCKETS = ("1", "2", "3", "4", "5", "6", "7", "8", ">8")


@dataclass
class FleetStats:
    total_probes: int = 0
    probes_with_ssid_pct: float = 0.0
    band_24_count: int = 0
    band_24_ssid_pct: float = 0.0
    band_24_share_pct: float = 0.0
    band_5_count: int = 0
    band_5_ssid_pct: float = 0.0
    band_5_share_pct: float = 0.0
    ssids_per_cluster_histogram: Dict[str, float] = field(
        default_factory=lambda: {b: 0.0 for b in HISTOGRAM_BUCKETS}
    )
    avg_probes_per_mac: float = 0.0
    avg_probes_per_mac_ssid_only: float = 0.0
    avg_ssids_per_burst: float = 0.0
    unique_mac_count: int = 0
    burst_count: int = 0
    cluster_count: int = 0
    wildcard_only_burst_count: int = 0
    ambiguous_cluster_count: int = 0
    randomizing_device_count: int = 0
    single_mac_device_count: int = 0
    leaking_device_count: int = 0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        """One row; the histogram column holds its JSON object."""
        row = self.to_dict()
        row["ssids_per_cluster_histogram"] = json.dumps(row["ssids_per_cluster_histogram"])
        buf = io.StringIO()
        pd.DataFrame([row]).to_csv(buf, index=False)
        return buf.getvalue()


def _pct(part, whole) -> float:
    return float(part) / whole * 100 if whole else 0.0


def records_frame(records: List[ProbeRecord]) -> pd.DataFrame:
    return pd.DataFrame({
        "mac": [str(r.mac) for r in records],
        "has_ssid": [r.has_ssid for r in records],
        "band": [r.band for r in records],
    })


def ssids_per_cluster_histogram(clusters: List[Cluster]) -> Dict[str, float]:
    """Share (%) of clusters per PNL size, sizes above 8 pooled into '>8'."""
    sizes = np.array([len(c.pnl) for c in clusters], dtype=int)
    if sizes.size == 0:
        return {b: 0.0 for b in HISTOGRAM_BUCKETS}
    counts = np.bincount(np.minimum(sizes, 9), minlength=10)[1:]
    return {b: _pct(n, sizes.size) for b, n in zip(HISTOGRAM_BUCKETS, counts)}


def fleet_stats(records: List[ProbeRecord], bursts: List[Burst], clusters: List[Cluster]) -> FleetStats:
    stats = FleetStats()
    if records:
        df = records_frame(records)
        stats.total_probes = len(df)
        stats.probes_with_ssid_pct = _pct(df["has_ssid"].sum(), len(df))
        stats.unique_mac_count = int(df["mac"].nunique())

        for band, prefix in ((BAND_24, "band_24"), (BAND_5, "band_5")):
            part = df[df["band"] == band]
            setattr(stats, f"{prefix}_count", int(len(part)))
            setattr(stats, f"{prefix}_ssid_pct", _pct(part["has_ssid"].sum(), len(part)))
            setattr(stats, f"{prefix}_share_pct", _pct(len(part), len(df)))

        stats.avg_probes_per_mac = float(df.groupby("mac").size().mean())
        ssid_rows = df[df["has_ssid"]]
        if not ssid_rows.empty:
            stats.avg_probes_per_mac_ssid_only = float(ssid_rows.groupby("mac").size().mean())

    stats.burst_count = len(bursts)
    stats.wildcard_only_burst_count = sum(1 for b in bursts if not b.pnl)
    if bursts:
        stats.avg_ssids_per_burst = float(np.mean([len(b.pnl) for b in bursts]))

    stats.cluster_count = len(clusters)
    stats.ssids_per_cluster_histogram = ssids_per_cluster_histogram(clusters)
    stats.ambiguous_cluster_count = sum(1 for c in clusters if c.ambiguous)
    stats.randomizing_device_count = sum(1 for c in clusters if c.is_randomizing)
    stats.single_mac_device_count = sum(1 for c in clusters if c.is_single_mac)
    stats.leaking_device_count = sum(1 for c in clusters if c.is_leaking)
    return stats
