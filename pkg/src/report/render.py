"""
Report rendering: json, csv (pandas, one section per table) and a plain text summary.
All numbers come from the report dict; the text renderer only adds words around them.
"""
import io
import json

import pandas as pd

from src.utils.config import OUTPUT_FORMATS
from src.utils.error_handler import UsageError


def render(report: dict, fmt: str = "json") -> str:
    if fmt not in OUTPUT_FORMATS:
        raise UsageError(f"Unknown output format {fmt!r} (choose from {', '.join(OUTPUT_FORMATS)})")
    if fmt == "json":
        return render_json(report)
    if fmt == "csv":
        return render_csv(report)
    return render_text(report)


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _cell(value):
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    return value


def render_csv(report: dict) -> str:
    """
    Each list-of-dicts becomes a table and each dict a one-row table, under a
    '# <key>' header line. Top-level scalars go into a leading 'summary' row.
    """
    buf = io.StringIO()
    scalars = {k: v for k, v in report.items() if not isinstance(v, (list, dict)) and v is not None}
    sections = [("summary", [scalars])] if scalars else []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            sections.append((key, [value]))
        elif isinstance(value, list) and all(isinstance(v, dict) for v in value):
            sections.append((key, value))

    for key, rows in sections:
        buf.write(f"# {key}\n")
        if rows:
            frame = pd.DataFrame([{k: _cell(v) for k, v in row.items()} for row in rows])
            frame = frame[sorted(frame.columns)]
            frame.to_csv(buf, index=False, lineterminator="\n")
        buf.write("\n")
    return buf.getvalue()


def render_text(report: dict) -> str:
    if "fleet_stats" in report:
        return _analysis_text(report)
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {_cell(v)}" for k, v in sorted(value.items()))
        elif isinstance(value, list):
            lines.append(f"{key}: {len(value)} item(s)")
            lines.extend(f"  {_cell(v)}" for v in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _analysis_text(report: dict) -> str:
    s = report["fleet_stats"]
    typos = report["typo_summary"]
    pw = report["password_cooccurrence"]
    flagged = [v for v in report["verdicts"] if v["flags"]]
    lines = [
        f"Probe requests: {s['total_probes']} from {s['unique_mac_count']} MAC address(es)",
        f"With SSID: {s['probes_with_ssid_pct']:.2f}% "
        f"(2.4 GHz {s['band_24_ssid_pct']:.2f}%, 5 GHz {s['band_5_ssid_pct']:.2f}%)",
        f"Bursts: {s['burst_count']} ({s['wildcard_only_burst_count']} wildcard-only), "
        f"clusters: {s['cluster_count']} ({s['ambiguous_cluster_count']} ambiguous)",
        f"Devices: {s['randomizing_device_count']} randomizing, {s['single_mac_device_count']} single-MAC, "
        f"{s['leaking_device_count']} leaking a global MAC",
        f"Average SSIDs per burst: {s['avg_ssids_per_burst']:.2f}",
        f"Distinct SSIDs: {len(report['verdicts'])}, flagged: {len(flagged)}",
        f"Typo groups: {len(report['typo_groups'])} "
        f"({typos['typo_ssid_pct']:.2f}% of SSIDs, {typos['typo_probe_pct']:.2f}% of SSID probes)",
        f"Probable passwords: {report['password_share_pct']:.2f}% of SSID probes, "
        f"{pw['sole_entry_pct']:.2f}% sole PNL entry",
    ]
    if flagged:
        lines.append("")
        lines.append("Flagged SSIDs:")
        lines.extend(f"  {v['ssid']!r}: {', '.join(v['flags'])}" for v in flagged)
    return "\n".join(lines) + "\n"
