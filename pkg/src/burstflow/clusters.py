"""
Clusters: bursts with exactly the same PNL, used as a stand-in for one device.
Partial PNL overlap never merges clusters.
"""
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from src.burstflow.bursts import DEFAULT_WINDOW_S, Burst, Pnl, group_bursts
from src.capture.models import MacAddress, ProbeRecord, mac_is_local


@dataclass(frozen=True)
class Cluster:
    pnl: Pnl
    bursts: Tuple[Burst, ...]

    @property
    def key(self):
        return self.pnl.key

    @property
    def macs(self) -> List[MacAddress]:
        return sorted({b.mac for b in self.bursts})

    @property
    def records(self) -> List[ProbeRecord]:
        return [r for b in self.bursts for r in b.records]

    @property
    def ambiguous(self) -> bool:
        # one SSID may well be shared by unrelated devices
        return len(self.pnl) == 1

    @property
    def is_single_mac(self) -> bool:
        return len(self.macs) == 1

    @property
    def is_leaking(self) -> bool:
        """Mixes globally and locally administered MACs."""
        macs = self.macs
        return any(mac_is_local(m) for m in macs) and any(not mac_is_local(m) for m in macs)

    @property
    def is_randomizing(self) -> bool:
        local = [m for m in self.macs if mac_is_local(m)]
        return not self.is_leaking and len(local) >= 2


def cluster_by_pnl(bursts: Iterable[Burst]) -> List[Cluster]:
    """
    Exact-set-equality clustering of bursts with a non-empty PNL, ordered by
    PNL key. Wildcard-only bursts are left out; see wildcard_only().
    """
    groups = {}
    for burst in bursts:
        pnl = burst.pnl
        if not pnl:
            continue
        groups.setdefault(pnl.key, (pnl, []))[1].append(burst)
    clusters = []
    for key in sorted(groups):
        pnl, members = groups[key]
        members.sort(key=lambda b: (b.start_time, b.mac.octets))
        clusters.append(Cluster(pnl=pnl, bursts=tuple(members)))
    return clusters


def wildcard_only(bursts: Iterable[Burst]) -> List[Burst]:
    return [b for b in bursts if not b.pnl]


def subtract(
    records_a: List[ProbeRecord],
    records_b: List[ProbeRecord],
    window_s: float = DEFAULT_WINDOW_S,
) -> List[ProbeRecord]:
    """
    Day-intersection cleaning: drop from A every probe belonging to a burst
    whose PNL also appears in B (stationary devices seen on both days).
    Wildcard-only bursts carry no PNL and are kept.
    """
    seen_in_b = {b.pnl.key for b in group_bursts(records_b, window_s) if b.pnl}
    kept = []
    for burst in group_bursts(records_a, window_s):
        pnl = burst.pnl
        if pnl and pnl.key in seen_in_b:
            continue
        kept.extend(burst.records)
    kept.sort(key=lambda r: r.timestamp)
    return kept
