"""
Geolocation results. Coordinates are only ever held truncated to two
decimals (roughly a 1 km cell); raw API coordinates never leave client.py.
"""
from dataclasses import dataclass
from decimal import ROUND_DOWN, Decimal
from typing import Iterable, List, Tuple

UNRESOLVABLE = "Unresolvable"
NOT_FOUND = "NotFound"
UNIQUE = "Unique"
MULTIPLE = "Multiple"
STATUSES = (UNIQUE, MULTIPLE, NOT_FOUND, UNRESOLVABLE)

_CELL = Decimal("0.01")


def truncate2(value) -> Decimal:
    """Drop everything after the second decimal (toward zero, no rounding)."""
    d = Decimal(str(value)).quantize(_CELL, rounding=ROUND_DOWN)
    return d if d != 0 else Decimal("0.00")


def is_queryable(ssid: str) -> bool:
    """
    Exact-SSID queries accept printable ASCII only; '%' is a wildcard in the
    API's query grammar, so it can't be searched for literally.
    """
    if not ssid or len(ssid.encode("utf-8")) > 32:
        return False
    return all(0x20 <= ord(ch) <= 0x7E for ch in ssid) and "%" not in ssid


@dataclass(frozen=True)
class GeoResult:
    ssid: str
    status: str
    locations: Tuple[Tuple[Decimal, Decimal], ...] = ()
    raw_hit_count: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"Unknown status {self.status}")
        for lat, lon in self.locations:
            if lat != truncate2(lat) or lon != truncate2(lon):
                raise ValueError("locations must be truncated to 2 decimals")
        n = len(set(self.locations))
        if self.status == UNIQUE and n != 1:
            raise ValueError("Unique needs exactly one location")
        if self.status == MULTIPLE and n < 2:
            raise ValueError("Multiple needs two or more locations")
        if self.status in (NOT_FOUND, UNRESOLVABLE) and n:
            raise ValueError(f"{self.status} carries no locations")

    def to_dict(self) -> dict:
        return {
            "ssid": self.ssid,
            "status": self.status,
            "locations": [{"lat": f"{lat:.2f}", "lon": f"{lon:.2f}"} for lat, lon in self.locations],
            "raw_hit_count": self.raw_hit_count,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "GeoResult":
        return cls(
            ssid=obj["ssid"],
            status=obj["status"],
            locations=tuple((Decimal(p["lat"]), Decimal(p["lon"])) for p in obj.get("locations", [])),
            raw_hit_count=int(obj.get("raw_hit_count", 0)),
        )


def classify_hits(ssid: str, hits: Iterable[Tuple[float, float]]) -> GeoResult:
    """Truncate, dedupe and classify raw (lat, lon) hits."""
    hits = list(hits)
    cells = sorted({(truncate2(lat), truncate2(lon)) for lat, lon in hits})
    if not cells:
        status = NOT_FOUND
    elif len(cells) == 1:
        status = UNIQUE
    else:
        status = MULTIPLE
    return GeoResult(ssid=ssid, status=status, locations=tuple(cells), raw_hit_count=len(hits))


@dataclass
class GeoSummary:
    unique: int = 0
    multiple: int = 0
    not_found: int = 0
    unresolvable: int = 0
    total: int = 0
    errors: int = 0

    def pct(self, count: int) -> float:
        return count / self.total * 100 if self.total else 0.0

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "unique": self.unique,
            "multiple": self.multiple,
            "not_found": self.not_found,
            "unresolvable": self.unresolvable,
            "errors": self.errors,
            "unique_pct": round(self.pct(self.unique), 2),
            "multiple_pct": round(self.pct(self.multiple), 2),
            "not_found_pct": round(self.pct(self.not_found), 2),
            "unresolvable_pct": round(self.pct(self.unresolvable), 2),
        }


def summarize(results: List[GeoResult]) -> GeoSummary:
    counts = {s: 0 for s in STATUSES}
    for r in results:
        counts[r.status] += 1
    return GeoSummary(
        unique=counts[UNIQUE],
        multiple=counts[MULTIPLE],
        not_found=counts[NOT_FOUND],
        unresolvable=counts[UNRESOLVABLE],
        total=len(results),
    )


def evaluate_subset(results: List[GeoResult], ssids: Iterable[str]) -> dict:
    """Summary restricted to `ssids` (e.g. password or typo candidates) plus the resolved share."""
    wanted = set(ssids)
    subset = [r for r in results if r.ssid in wanted]
    summary = summarize(subset)
    resolved = summary.unique + summary.multiple
    out = summary.to_dict()
    out["resolved_pct"] = round(summary.pct(resolved), 2)
    return out
