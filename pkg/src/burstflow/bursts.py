"""
Bursts: probe requests from one MAC chained by gaps of at most `window_s`.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from src.capture.models import MacAddress, ProbeRecord, Ssid

DEFAULT_WINDOW_S = 4.0


@dataclass(frozen=True)
class Pnl:
    ssids: FrozenSet[Ssid] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "ssids", frozenset(s for s in self.ssids if not s.is_wildcard))

    @classmethod
    def of(cls, names: Iterable) -> "Pnl":
        return cls(frozenset(n if isinstance(n, Ssid) else Ssid.from_text(n) for n in names))

    @property
    def key(self) -> Tuple[bytes, ...]:
        """Stable sort/identity key."""
        return tuple(sorted(s.raw for s in self.ssids))

    @property
    def texts(self) -> List[str]:
        return [Ssid(raw).text for raw in self.key]

    def __len__(self) -> int:
        return len(self.ssids)

    def __bool__(self) -> bool:
        return bool(self.ssids)


@dataclass(frozen=True)
class Burst:
    mac: MacAddress
    records: Tuple[ProbeRecord, ...]

    @property
    def start_time(self) -> float:
        return self.records[0].timestamp

    @property
    def end_time(self) -> float:
        return self.records[-1].timestamp

    @property
    def pnl(self) -> Pnl:
        return pnl_of(self)

    def __len__(self) -> int:
        return len(self.records)


def pnl_of(burst: Burst) -> Pnl:
    return Pnl(frozenset(r.ssid for r in burst.records))


def group_bursts(records: Iterable[ProbeRecord], window_s: float = DEFAULT_WINDOW_S) -> List[Burst]:
    """
    Partition records into bursts. Two same-MAC records share a burst iff
    every consecutive gap between them is <= window_s.
    Output is ordered by (start_time, mac).
    """
    if window_s <= 0:
        raise ValueError("window_s must be > 0")
    open_bursts = {}
    closed = []
    for rec in sorted(records, key=lambda r: r.timestamp):
        current = open_bursts.get(rec.mac)
        if current is not None and rec.timestamp - current[-1].timestamp <= window_s:
            current.append(rec)
            continue
        if current is not None:
            closed.append(current)
        open_bursts[rec.mac] = [rec]
    closed.extend(open_bursts.values())

    bursts = [Burst(mac=chain[0].mac, records=tuple(chain)) for chain in closed]
    bursts.sort(key=lambda b: (b.start_time, b.mac.octets))
    return bursts
