"""
Mistyped SSIDs: members of one PNL within a normalised edit distance of each
other, grouped by single linkage.
"""
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Tuple

from src.ssidlens.distance import normalized_edit_distance

DEFAULT_THRESHOLD = 0.3
_TRAILING_DIGITS = re.compile(r"\d{2,}$")


@dataclass(frozen=True)
class TypoGroup:
    members: Tuple[str, ...]
    witness_pairs: Tuple[Tuple[str, str, float], ...]

    def to_dict(self) -> dict:
        return {
            "members": list(self.members),
            "witness_pairs": [{"a": a, "b": b, "distance": round(d, 6)} for a, b, d in self.witness_pairs],
        }


def is_model_number_pair(a: str, b: str) -> bool:
    """
    True for names that differ only in digits and both end in a digit run,
    e.g. "Fritz!Box 7490" / "Fritz!Box 7590": distinct products, not typos.
    """
    la, lb = a.lower(), b.lower()
    if len(la) != len(lb) or la == lb:
        return False
    if not (_TRAILING_DIGITS.search(la) and _TRAILING_DIGITS.search(lb)):
        return False
    return all(x.isdigit() and y.isdigit() for x, y in zip(la, lb) if x != y)


def find_typo_groups(pnl: Iterable, threshold: float = DEFAULT_THRESHOLD) -> List[TypoGroup]:
    """
    Group SSIDs of one PNL whose pairwise normalised distance is <= threshold
    (transitively closed). Only groups of two or more are returned, ordered
    by their first member. threshold <= 0 disables grouping.
    """
    if threshold >= 1:
        raise ValueError("threshold must be < 1")
    names = sorted({s for s in _texts(pnl) if s})
    if threshold <= 0 or len(names) < 2:
        return []

    parent = list(range(len(names)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    witnesses = []
    for i, j in combinations(range(len(names)), 2):
        d = normalized_edit_distance(names[i], names[j])
        if d > threshold or is_model_number_pair(names[i], names[j]):
            continue
        witnesses.append((i, j, d))
        parent[find(j)] = find(i)

    groups = {}
    for i in range(len(names)):
        groups.setdefault(find(i), []).append(i)
    result = []
    for root, idx in groups.items():
        if len(idx) < 2:
            continue
        members = set(idx)
        pairs = tuple((names[i], names[j], d) for i, j, d in witnesses if i in members)
        result.append(TypoGroup(members=tuple(names[i] for i in idx), witness_pairs=pairs))
    result.sort(key=lambda g: g.members[0])
    return result


def _texts(pnl) -> List[str]:
    ssids = getattr(pnl, "ssids", pnl)
    return [s.text if hasattr(s, "text") else str(s) for s in ssids]


def typo_summary(clusters, groups_by_cluster) -> dict:
    """
    Shares of typo-group members among distinct SSIDs and among SSID-bearing
    probes, plus the number of distinct bursts carrying a typo member.
    `groups_by_cluster` is parallel to `clusters`.
    """
    all_ssids = set()
    typo_ssids = set()
    ssid_probes = typo_probes = 0
    typo_bursts = 0
    for cluster, groups in zip(clusters, groups_by_cluster):
        members = {m for g in groups for m in g.members}
        all_ssids.update(cluster.pnl.texts)
        typo_ssids.update(members)
        for burst in cluster.bursts:
            hit = False
            for rec in burst.records:
                if rec.ssid.is_wildcard:
                    continue
                ssid_probes += 1
                if rec.ssid.text in members:
                    typo_probes += 1
                    hit = True
            typo_bursts += hit
    return {
        "typo_ssid_count": len(typo_ssids),
        "distinct_ssid_count": len(all_ssids),
        "typo_ssid_pct": len(typo_ssids) / len(all_ssids) * 100 if all_ssids else 0.0,
        "typo_probe_pct": typo_probes / ssid_probes * 100 if ssid_probes else 0.0,
        "typo_burst_count": typo_bursts,
    }
