"""
Per-SSID verdicts combining password, identifier and typo findings.
"""
import json
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from src.ssidlens.identifiers import detect_identifiers
from src.ssidlens.passwords import DIGIT_GROUP_VARIANT, PROBABLE_PASSWORD, classify_password
from src.ssidlens.typos import DEFAULT_THRESHOLD, TypoGroup, find_typo_groups

TYPO_GROUP_MEMBER = "TypoGroupMember"


@dataclass(frozen=True)
class SsidVerdict:
    ssid: str
    flags: FrozenSet[str] = frozenset()
    typo_group_id: Optional[int] = None

    def __post_init__(self):
        if DIGIT_GROUP_VARIANT in self.flags and PROBABLE_PASSWORD not in self.flags:
            raise ValueError("DigitGroupVariant requires ProbablePassword")
        if TYPO_GROUP_MEMBER in self.flags and self.typo_group_id is None:
            raise ValueError("TypoGroupMember requires a typo_group_id")

    @property
    def benign(self) -> bool:
        return not self.flags

    def to_dict(self) -> dict:
        return {"ssid": self.ssid, "flags": sorted(self.flags), "typo_group_id": self.typo_group_id}


def classify_ssids(
    clusters: Iterable,
    names: Optional[Iterable[str]] = None,
    threshold: float = DEFAULT_THRESHOLD,
) -> Tuple[List[SsidVerdict], List[TypoGroup], List[List[TypoGroup]]]:
    """
    One verdict per distinct non-wildcard SSID across all clusters.
    Typo groups are found per cluster PNL and numbered globally in cluster
    order; an SSID in several groups keeps the first id.
    Returns (verdicts sorted by SSID, numbered groups, groups per cluster).
    """
    clusters = list(clusters)
    groups_by_cluster = [find_typo_groups(c.pnl, threshold) for c in clusters]

    numbered = []
    group_of = {}
    for groups in groups_by_cluster:
        for g in groups:
            gid = len(numbered)
            numbered.append(g)
            for m in g.members:
                group_of.setdefault(m, gid)

    verdicts = []
    for text in sorted({t for c in clusters for t in c.pnl.texts}):
        flags = set(classify_password(text)) | set(detect_identifiers(text, names))
        gid = group_of.get(text)
        if gid is not None:
            flags.add(TYPO_GROUP_MEMBER)
        verdicts.append(SsidVerdict(ssid=text, flags=frozenset(flags), typo_group_id=gid))
    return verdicts, numbered, groups_by_cluster


def verdicts_to_jsonl(verdicts: Iterable[SsidVerdict]) -> str:
    return "".join(json.dumps(v.to_dict(), ensure_ascii=False) + "\n" for v in verdicts)
