"""
Byte-level pcap / pcapng builder for test fixtures.
Frames follow the radiotap + 802.11 layouts directly so the parser is
checked against the wire format, not against scapy's own builder.
"""
import struct

LINKTYPE_RADIOTAP = 127
BROADCAST = b"\xff" * 6
RATES_IE = b"\x01\x04\x02\x04\x0b\x16"

# radiotap: Channel (bit 3) + dBm_AntSignal (bit 5)
_RT_PRESENT = (1 << 3) | (1 << 5)
RADIOTAP_LEN = 13


def mac_bytes(text: str) -> bytes:
    return bytes(int(p, 16) for p in text.split(":"))


def radiotap(freq: int = 2412, rssi: int = -50) -> bytes:
    return struct.pack("<BBHI", 0, 0, RADIOTAP_LEN, _RT_PRESENT) + struct.pack("<HHb", freq, 0x00A0, rssi)


def radiotap_no_channel() -> bytes:
    # dBm_AntSignal only
    return struct.pack("<BBHI", 0, 0, 9, 1 << 5) + struct.pack("<b", -50)


def ssid_ie(ssid: bytes) -> bytes:
    return bytes([0, len(ssid)]) + ssid


def probe_request(mac: str, seq: int, ssid: bytes, extra: bytes = RATES_IE) -> bytes:
    header = b"\x40\x00" + b"\x00\x00" + BROADCAST + mac_bytes(mac) + BROADCAST + struct.pack("<H", seq << 4)
    return header + ssid_ie(ssid) + extra


def beacon(bssid: str, seq: int, ssid: bytes) -> bytes:
    header = b"\x80\x00" + b"\x00\x00" + BROADCAST + mac_bytes(bssid) + mac_bytes(bssid) + struct.pack("<H", seq << 4)
    fixed = b"\x00" * 8 + struct.pack("<HH", 100, 0x0401)
    return header + fixed + ssid_ie(ssid) + RATES_IE


def rt_probe(mac: str, seq: int, ssid: bytes, freq: int = 2412, rssi: int = -50) -> bytes:
    return radiotap(freq, rssi) + probe_request(mac, seq, ssid)


def pcap_header(linktype: int = LINKTYPE_RADIOTAP, snaplen: int = 65535) -> bytes:
    return struct.pack("<IHHiIII", 0xA1B2C3D4, 2, 4, 0, 0, snaplen, linktype)


def pcap_record(ts: float, data: bytes, orig_len: int = None) -> bytes:
    sec = int(ts)
    usec = int(round((ts - sec) * 1_000_000))
    return struct.pack("<IIII", sec, usec, len(data), len(data) if orig_len is None else orig_len) + data


def pcap_bytes(frames, linktype: int = LINKTYPE_RADIOTAP) -> bytes:
    """frames: iterable of (ts, data) or (ts, data, orig_len)."""
    out = pcap_header(linktype)
    for frame in frames:
        out += pcap_record(*frame)
    return out


def _pad4(data: bytes) -> bytes:
    return data + b"\x00" * (-len(data) % 4)


def pcapng_bytes(frames, linktype: int = LINKTYPE_RADIOTAP) -> bytes:
    """Minimal pcapng: one section, one interface, enhanced packet blocks (µs timestamps)."""
    shb_body = struct.pack("<IHHq", 0x1A2B3C4D, 1, 0, -1)
    out = struct.pack("<II", 0x0A0D0D0A, 12 + len(shb_body)) + shb_body + struct.pack("<I", 12 + len(shb_body))
    idb_body = struct.pack("<HHI", linktype, 0, 65535)
    out += struct.pack("<II", 1, 12 + len(idb_body)) + idb_body + struct.pack("<I", 12 + len(idb_body))
    for ts, data in frames:
        micros = int(round(ts * 1_000_000))
        body = struct.pack("<IIIII", 0, micros >> 32, micros & 0xFFFFFFFF, len(data), len(data)) + _pad4(data)
        out += struct.pack("<II", 6, 12 + len(body)) + body + struct.pack("<I", 12 + len(body))
    return out


GOLDEN_SSIDS = (b"", b"testnet", b"PW:1234567812345678")


def golden_3frames() -> bytes:
    """Three probe requests from one device: wildcard, 'testnet', 'PW:1234567812345678'."""
    mac = "da:a1:19:00:00:01"
    return pcap_bytes([
        (1000.0, rt_probe(mac, 100, GOLDEN_SSIDS[0], 2412, -41)),
        (1000.01, rt_probe(mac, 101, GOLDEN_SSIDS[1], 2437, -42)),
        (1000.02, rt_probe(mac, 102, GOLDEN_SSIDS[2], 5180, -43)),
    ])
