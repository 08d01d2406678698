from src.capture.models import (
    BAND_5,
    BAND_24,
    CaptureMeta,
    MacAddress,
    ProbeRecord,
    Ssid,
    band_of,
    channel_from_frequency,
    mac_is_local,
    mac_is_multicast,
    oui,
)
from src.capture.dedup import deduplicate
from src.capture.jsonl import parse_jsonl, write_jsonl
from src.capture.pcap_reader import parse_pcap
from src.capture.synth import DeviceSpec, SynthProfile, synth_capture


def load_capture(path: str):
    """Parse a capture file, picking the reader by its first bytes."""
    with open(path, "rb") as f:
        head = f.read(4)
    if head.lstrip()[:1] in (b"{", b""):
        return parse_jsonl(path)
    return parse_pcap(path)
