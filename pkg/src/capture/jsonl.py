"""
Portable JSONL form of probe records, one object per line:
  {"t": 0.0, "mac": "02:00:00:00:00:01", "seq": 12, "ssid": "", "ch": 1, "len": 120}
Non-UTF-8 SSIDs are carried as "ssid_b64" instead of "ssid". "rssi" is optional.
"""
import base64
import io
import json
import os
from typing import Iterable, List, TextIO, Tuple, Union

from src.capture.models import CaptureMeta, MacAddress, ProbeRecord, Ssid
from src.utils.logger import get_logger

log = get_logger("capture")

REQUIRED_KEYS = ("t", "mac", "seq", "ch", "len")


def record_to_dict(rec: ProbeRecord) -> dict:
    obj = {"t": rec.timestamp, "mac": str(rec.mac), "seq": rec.seq}
    if rec.ssid.is_utf8:
        obj["ssid"] = rec.ssid.raw.decode("utf-8")
    else:
        obj["ssid_b64"] = base64.b64encode(rec.ssid.raw).decode("ascii")
    obj["ch"] = rec.channel
    if rec.rssi is not None:
        obj["rssi"] = rec.rssi
    obj["len"] = rec.frame_len
    return obj


def record_from_dict(obj: dict) -> ProbeRecord:
    """Build a record from one decoded line. Raises ValueError on schema or invariant violations."""
    if not isinstance(obj, dict):
        raise ValueError("line is not a JSON object")
    missing = [k for k in REQUIRED_KEYS if k not in obj]
    if missing:
        raise ValueError(f"missing keys: {', '.join(missing)}")
    if "ssid_b64" in obj:
        raw = base64.b64decode(obj["ssid_b64"], validate=True)
    elif "ssid" in obj and isinstance(obj["ssid"], str):
        raw = obj["ssid"].encode("utf-8")
    else:
        raise ValueError("missing ssid / ssid_b64")
    for key in ("seq", "ch", "len"):
        if isinstance(obj[key], bool) or not isinstance(obj[key], int):
            raise ValueError(f"{key} must be an integer")
    rssi = obj.get("rssi")
    if rssi is not None and (isinstance(rssi, bool) or not isinstance(rssi, int)):
        raise ValueError("rssi must be an integer")
    if isinstance(obj["t"], bool) or not isinstance(obj["t"], (int, float)):
        raise ValueError("t must be a number")
    return ProbeRecord(
        timestamp=float(obj["t"]),
        mac=MacAddress.parse(str(obj["mac"])),
        seq=obj["seq"],
        ssid=Ssid(raw),
        channel=obj["ch"],
        frame_len=obj["len"],
        rssi=rssi,
    )


def write_jsonl(records: Iterable[ProbeRecord], stream: TextIO = None) -> str:
    """Serialize records; writes to stream if given and returns the text either way."""
    lines = [json.dumps(record_to_dict(r), ensure_ascii=False, separators=(",", ":")) for r in records]
    text = "".join(line + "\n" for line in lines)
    if stream is not None:
        stream.write(text)
    return text


def parse_jsonl(source: Union[str, os.PathLike, TextIO]) -> Tuple[List[ProbeRecord], CaptureMeta]:
    """
    Parse JSONL records. Bad lines (broken JSON, schema errors, invariant
    violations such as seq 5000) are skipped and counted.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as f:
            return _parse_lines(f, str(source))
    if isinstance(source, (bytes, bytearray)):
        return _parse_lines(io.BytesIO(source), "<bytes>")
    return _parse_lines(source, getattr(source, "name", "<stream>"))


def _parse_lines(stream: Iterable[Union[str, bytes]], name: str):
    records = []
    errors = []
    examined = 0
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        examined += 1
        try:
            if isinstance(line, bytes):
                line = line.decode("utf-8")
            records.append(record_from_dict(json.loads(line)))
        except (ValueError, TypeError, KeyError) as e:
            errors.append(f"line {lineno}: {e}")
    if errors:
        log.warning(f"{name}: skipped {len(errors)} bad line(s) of {examined}")
    meta = CaptureMeta(
        source=name,
        record_count=len(records),
        parse_error_count=len(errors),
        frames_examined=examined,
        errors=tuple(errors),
    )
    return records, meta
