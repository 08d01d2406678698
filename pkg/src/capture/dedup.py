"""
Drop frames heard twice, e.g. by two antennas on the same channel.
"""
from typing import List, Tuple

from src.capture.models import ProbeRecord

DEFAULT_TOLERANCE_S = 0.001


def deduplicate(records: List[ProbeRecord], tolerance_s: float = DEFAULT_TOLERANCE_S) -> Tuple[List[ProbeRecord], int]:
    """
    Remove records that repeat (mac, seq, ssid) within tolerance_s of a kept one.
    Returns (kept records in timestamp order, number removed).
    """
    kept = []
    last_seen = {}
    removed = 0
    for rec in sorted(records, key=lambda r: r.timestamp):
        key = (rec.mac, rec.seq, rec.ssid)
        prev = last_seen.get(key)
        if prev is not None and rec.timestamp - prev <= tolerance_s:
            removed += 1
            continue
        last_seen[key] = rec.timestamp
        kept.append(rec)
    return kept, removed
