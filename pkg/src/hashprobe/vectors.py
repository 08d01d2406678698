"""
Golden hash vectors: a JSON list of {mac, seq, ssid, digest_hex, trunc_len}.
"""
import json
from typing import List

import numpy as np

from src.capture.models import MacAddress
from src.hashprobe.scheme import make_hashed_probe
from src.utils.error_handler import UsageError
from src.utils.logger import get_logger

log = get_logger("hashprobe")

REQUIRED_KEYS = ("mac", "seq", "ssid", "digest_hex", "trunc_len")


def load_vectors(path: str) -> List[dict]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            vectors = json.load(f)
    except FileNotFoundError:
        raise UsageError(f"Vector file not found: {path}")
    except ValueError as e:
        raise UsageError(f"Vector file {path} is not valid JSON: {e}")
    if not isinstance(vectors, list):
        raise UsageError(f"Vector file {path} must hold a JSON list")
    for i, v in enumerate(vectors):
        missing = [k for k in REQUIRED_KEYS if k not in v]
        if missing:
            raise UsageError(f"Vector {i} is missing {', '.join(missing)}")
    return vectors


def _digest_hex(vector: dict) -> str:
    mac = MacAddress.parse(vector["mac"])
    return make_hashed_probe(mac, int(vector["seq"]), vector["ssid"], int(vector["trunc_len"])).digest.hex()


def check_vectors(vectors: List[dict]) -> List[dict]:
    """Recompute every vector. Returns the mismatches (empty list means all good)."""
    failures = []
    for v in vectors:
        actual = _digest_hex(v)
        if actual != v["digest_hex"].lower():
            failures.append({**v, "actual_hex": actual})
            log.warning(f"Vector mismatch for mac={v['mac']} seq={v['seq']}")
    return failures


def generate_vectors(count: int = 8, seed: int = 0) -> List[dict]:
    """Random vectors at both truncation lengths, for regenerating the golden file."""
    rng = np.random.default_rng(seed)
    alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_ !"
    vectors = []
    for i in range(count):
        octets = rng.integers(0, 256, size=6, dtype=np.uint8)
        octets[0] = (octets[0] & 0xFC) | 0x02
        ssid_len = int(rng.integers(1, 33))
        ssid = "".join(alphabet[j] for j in rng.integers(0, len(alphabet), size=ssid_len))
        v = {
            "mac": str(MacAddress(octets.tobytes())),
            "seq": int(rng.integers(0, 4096)),
            "ssid": ssid,
            "trunc_len": 32 if i % 2 == 0 else 16,
        }
        v["digest_hex"] = _digest_hex(v)
        vectors.append(v)
    return vectors
