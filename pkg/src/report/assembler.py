"""
Combines all analysis outputs into the final report object.
"""
from typing import List, Optional

from src.burstflow.clusters import Cluster
from src.burstflow.stats import FleetStats
from src.capture.models import CaptureMeta
from src.report.redact import mac_text
from src.ssidlens.typos import TypoGroup
from src.ssidlens.verdicts import SsidVerdict


def cluster_category(cluster: Cluster) -> str:
    if cluster.is_leaking:
        return "leaking"
    if cluster.is_randomizing:
        return "randomizing"
    if cluster.is_single_mac:
        return "single_mac"
    return "other"


def _cluster_rows(clusters: List[Cluster], redact: bool) -> List[dict]:
    rows = []
    for i, c in enumerate(clusters):
        rows.append({
            "id": i,
            "pnl": sorted(c.pnl.texts),
            "macs": [mac_text(m, redact) for m in c.macs],
            "burst_count": len(c.bursts),
            "probe_count": len(c.records),
            "category": cluster_category(c),
            "ambiguous": c.ambiguous,
        })
    return rows


def assemble_report(
    stats: FleetStats,
    verdicts: List[SsidVerdict],
    typo_groups: List[TypoGroup],
    typo_summary: dict,
    password_cooccurrence: dict,
    password_share_pct: float,
    clusters: List[Cluster],
    meta: Optional[CaptureMeta] = None,
    parameters: Optional[dict] = None,
    redact: bool = True,
) -> dict:
    """Build the final report dict. No wall-clock fields, so equal inputs give equal reports."""
    return {
        "capture": meta.to_dict() if meta else None,
        "parameters": {**(parameters or {}), "redact": redact},
        "fleet_stats": stats.to_dict(),
        "verdicts": [v.to_dict() for v in verdicts],
        "typo_groups": [{"id": i, **g.to_dict()} for i, g in enumerate(typo_groups)],
        "typo_summary": typo_summary,
        "password_cooccurrence": password_cooccurrence,
        "password_share_pct": password_share_pct,
        "clusters": _cluster_rows(clusters, redact),
    }
