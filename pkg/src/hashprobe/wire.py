"""
Simulated over-the-air format for hashed probes.

The digest rides in the SSID element of an otherwise ordinary probe request.
A vendor-specific element (ID 221) marks the frame as hashed, so a legacy AP
that doesn't know the marker just sees an unknown SSID.
"""
from typing import Iterable, Optional

from scapy.layers.dot11 import Dot11, Dot11Elt, Dot11FCS, Dot11ProbeReq, RadioTap
from scapy.packet import NoPayload
from scapy.utils import wrpcap

from src.capture.models import MacAddress, frequency_from_channel
from src.hashprobe.scheme import TRUNC_LENGTHS, HashedProbe
from src.utils.logger import get_logger

log = get_logger("hashprobe")

SSID_ELEMENT_ID = 0
RATES_ELEMENT_ID = 1
VENDOR_ELEMENT_ID = 221
MARKER_OUI = bytes.fromhex("0a5053")  # locally administered CID
MARKER_TYPE = 0x01
FLAG_HASHED = 0x01
BROADCAST = "ff:ff:ff:ff:ff:ff"
BASIC_RATES = b"\x02\x04\x0b\x16"


def build_hashed_frame(probe: HashedProbe, channel: int = 6, timestamp: float = 0.0, rssi: int = -60):
    freq = frequency_from_channel(channel)
    pkt = (
        RadioTap(
            present="Channel+dBm_AntSignal",
            ChannelFrequency=freq,
            ChannelFlags="2GHz+CCK" if freq < 5000 else "5GHz+OFDM",
            dBm_AntSignal=rssi,
        )
        / Dot11(type=0, subtype=4, addr1=BROADCAST, addr2=str(probe.mac), addr3=BROADCAST, SC=probe.seq << 4)
        / Dot11ProbeReq()
        / Dot11Elt(ID=SSID_ELEMENT_ID, info=probe.digest)
        / Dot11Elt(ID=RATES_ELEMENT_ID, info=BASIC_RATES)
        / Dot11Elt(ID=VENDOR_ELEMENT_ID, info=MARKER_OUI + bytes([MARKER_TYPE, FLAG_HASHED]))
    )
    pkt.time = timestamp
    return pkt


def _elements(dot11):
    layer = dot11.payload
    while layer is not None and not isinstance(layer, NoPayload):
        if isinstance(layer, Dot11Elt):
            yield layer
        layer = layer.payload


def _vendor_body(elt) -> bytes:
    # dissected frames give Dot11EltVendorSpecific, which splits the OUI off `info`
    oui = getattr(elt, "oui", None)
    info = bytes(elt.info or b"")
    return info if oui is None else oui.to_bytes(3, "big") + info


def parse_hashed_frame(pkt) -> Optional[HashedProbe]:
    """HashedProbe carried by `pkt`, or None for a legacy (unmarked) probe request."""
    dot11 = pkt.getlayer(Dot11)
    if dot11 is None:
        dot11 = pkt.getlayer(Dot11FCS)
    if dot11 is None or dot11.type != 0 or dot11.subtype != 4:
        return None

    digest = None
    hashed = False
    for elt in _elements(dot11):
        if elt.ID == SSID_ELEMENT_ID and digest is None:
            digest = bytes(elt.info or b"")
        elif elt.ID == VENDOR_ELEMENT_ID:
            body = _vendor_body(elt)
            if body[:4] == MARKER_OUI + bytes([MARKER_TYPE]):
                hashed = len(body) > 4 and bool(body[4] & FLAG_HASHED)
    if not hashed or digest is None or len(digest) not in TRUNC_LENGTHS:
        return None
    return HashedProbe(
        mac=MacAddress.parse(dot11.addr2),
        seq=(dot11.SC >> 4) & 0x0FFF,
        digest=digest,
        trunc_len=len(digest),
    )


def write_hashed_pcap(path: str, frames: Iterable) -> int:
    frames = list(frames)
    wrpcap(path, frames, linktype=127)
    log.info(f"Wrote {len(frames)} simulated hashed probe(s) to {path}")
    return len(frames)
