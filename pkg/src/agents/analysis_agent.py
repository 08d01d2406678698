"""
LangGraph 4-node analysis pipeline.
Burst Grouping -> PNL Clustering -> SSID Classification -> Report Assembly
"""
from typing import List, Optional, TypedDict

from langgraph.graph import END, StateGraph

from src.burstflow.bursts import DEFAULT_WINDOW_S, Burst, group_bursts
from src.burstflow.clusters import Cluster, cluster_by_pnl
from src.burstflow.stats import FleetStats, fleet_stats
from src.capture.models import CaptureMeta, ProbeRecord
from src.report.assembler import assemble_report
from src.ssidlens.passwords import password_cooccurrence, password_share
from src.ssidlens.typos import DEFAULT_THRESHOLD, TypoGroup, typo_summary
from src.ssidlens.verdicts import SsidVerdict, classify_ssids
from src.utils.logger import get_logger

log = get_logger("agent")


# ---- Pipeline State ----
class AnalysisState(TypedDict):
    records: List[ProbeRecord]
    meta: Optional[CaptureMeta]
    bursts: List[Burst]
    clusters: List[Cluster]
    stats: Optional[FleetStats]
    verdicts: List[SsidVerdict]
    typo_groups: List[TypoGroup]
    groups_by_cluster: List[List[TypoGroup]]
    final_report: dict


class AnalysisAgent:
    def __init__(self, window_s: float = DEFAULT_WINDOW_S, typo_threshold: float = DEFAULT_THRESHOLD,
                 names=None, redact: bool = True, parameters: dict = None):
        self.window_s = window_s
        self.typo_threshold = typo_threshold
        self.names = names
        self.redact = redact
        self.parameters = {"window_s": window_s, "typo_threshold": typo_threshold, **(parameters or {})}
        self.graph = self._build_graph()
        self.last_state: dict = {}

    def _build_graph(self):
        """Build the 4-node LangGraph workflow."""
        graph = StateGraph(AnalysisState)

        graph.add_node("group_bursts", self.group_bursts_node)
        graph.add_node("cluster", self.cluster_node)
        graph.add_node("classify_ssids", self.classify_ssids_node)
        graph.add_node("assemble_report", self.assemble_report_node)

        graph.set_entry_point("group_bursts")

        # Classification only runs when some cluster carries an SSID
        graph.add_edge("group_bursts", "cluster")
        graph.add_conditional_edges(
            "cluster",
            self._cluster_router,
            {"classify": "classify_ssids", "skip": "assemble_report"},
        )
        graph.add_edge("classify_ssids", "assemble_report")
        graph.add_edge("assemble_report", END)

        return graph.compile()

    # ---- Node 1: Burst Grouping ----
    def group_bursts_node(self, state: AnalysisState) -> dict:
        bursts = group_bursts(state["records"], self.window_s)
        log.debug(f"{len(state['records'])} records -> {len(bursts)} bursts")
        return {"bursts": bursts}

    # ---- Node 2: PNL Clustering + fleet statistics ----
    def cluster_node(self, state: AnalysisState) -> dict:
        clusters = cluster_by_pnl(state["bursts"])
        stats = fleet_stats(state["records"], state["bursts"], clusters)
        log.debug(f"{len(clusters)} clusters")
        return {"clusters": clusters, "stats": stats}

    # ---- Router ----
    def _cluster_router(self, state: AnalysisState) -> str:
        return "classify" if state.get("clusters") else "skip"

    # ---- Node 3: SSID Classification ----
    def classify_ssids_node(self, state: AnalysisState) -> dict:
        verdicts, groups, by_cluster = classify_ssids(state["clusters"], self.names, self.typo_threshold)
        flagged = sum(1 for v in verdicts if not v.benign)
        log.info(f"Classified {len(verdicts)} SSIDs ({flagged} flagged, {len(groups)} typo groups)")
        return {"verdicts": verdicts, "typo_groups": groups, "groups_by_cluster": by_cluster}

    # ---- Node 4: Report Assembler ----
    def assemble_report_node(self, state: AnalysisState) -> dict:
        clusters = state.get("clusters", [])
        by_cluster = state.get("groups_by_cluster") or [[] for _ in clusters]
        report = assemble_report(
            stats=state["stats"],
            verdicts=state.get("verdicts", []),
            typo_groups=state.get("typo_groups", []),
            typo_summary=typo_summary(clusters, by_cluster),
            password_cooccurrence=password_cooccurrence(clusters),
            password_share_pct=password_share(state["records"]),
            clusters=clusters,
            meta=state.get("meta"),
            parameters=self.parameters,
            redact=self.redact,
        )
        return {"final_report": report}

    # ---- Public API ----
    def run(self, records: List[ProbeRecord], meta: Optional[CaptureMeta] = None) -> dict:
        """Run a capture through the full pipeline and return the report dict."""
        initial_state = {
            "records": list(records),
            "meta": meta,
            "bursts": [],
            "clusters": [],
            "stats": None,
            "verdicts": [],
            "typo_groups": [],
            "groups_by_cluster": [],
            "final_report": {},
        }
        result = self.graph.invoke(initial_state)
        self.last_state = result
        return result["final_report"]
