"""
Salted SSID hashing for directed probe requests.

The client sends SHA-256(MAC || SN || SSID) instead of the SSID; the AP
recomputes it with its own SSID and compares. Preimage layout:
    6 MAC octets | 2 octets big-endian SN (upper 4 bits zero) | raw SSID octets
"""
import hashlib
import hmac
from dataclasses import dataclass

from src.capture.models import MacAddress, Ssid, check_seq

TRUNC_LENGTHS = (16, 32)


@dataclass(frozen=True)
class HashedProbe:
    mac: MacAddress
    seq: int
    digest: bytes
    trunc_len: int = 32

    def __post_init__(self):
        check_seq(self.seq)
        if self.trunc_len not in TRUNC_LENGTHS:
            raise ValueError(f"trunc_len must be one of {TRUNC_LENGTHS}")
        if len(self.digest) != self.trunc_len:
            raise ValueError(f"digest is {len(self.digest)} octets, expected {self.trunc_len}")


def _ssid_bytes(ssid) -> bytes:
    if isinstance(ssid, Ssid):
        return ssid.raw
    if isinstance(ssid, str):
        return ssid.encode("utf-8")
    return bytes(ssid)


def preimage(mac: MacAddress, seq: int, ssid) -> bytes:
    check_seq(seq)
    return mac.octets + seq.to_bytes(2, "big") + _ssid_bytes(ssid)


def make_hashed_probe(mac: MacAddress, seq: int, ssid, trunc_len: int = 32) -> HashedProbe:
    raw = _ssid_bytes(ssid)
    if not raw:
        raise ValueError("wildcard probes are not hashed")
    if trunc_len not in TRUNC_LENGTHS:
        raise ValueError(f"trunc_len must be one of {TRUNC_LENGTHS}")
    digest = hashlib.sha256(preimage(mac, seq, raw)).digest()[:trunc_len]
    return HashedProbe(mac=mac, seq=seq, digest=digest, trunc_len=trunc_len)


def ap_verify(mac: MacAddress, seq: int, digest: bytes, ap_ssid) -> bool:
    """True iff `digest` was made for `ap_ssid` with this (mac, seq) salt. Constant-time compare."""
    if len(digest) not in TRUNC_LENGTHS or not _ssid_bytes(ap_ssid):
        return False
    expected = make_hashed_probe(mac, seq, ap_ssid, len(digest)).digest
    return hmac.compare_digest(expected, digest)


def legacy_match(probe_ssid, ap_ssid) -> bool:
    """Today's plain SSID comparison."""
    return _ssid_bytes(probe_ssid) == _ssid_bytes(ap_ssid)
