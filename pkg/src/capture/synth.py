"""
Deterministic synthetic probe request captures with known ground truth.

Randomizing devices draw a fresh locally administered MAC and a random
starting sequence number for every burst; legacy devices keep one globally
administered MAC and a running sequence counter.
"""
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.capture.models import MAX_SEQ, MacAddress, ProbeRecord, Ssid

HEADER_LEN = 24
# supported rates, extended rates, HT capabilities, extended capabilities
BASE_IE_LEN = 10 + 6 + 28 + 10
SSID_IE_OVERHEAD = 2

DEFAULT_VOCABULARY = (
    "home", "FRITZ!Box 7490", "FRITZ!Box 7590", "Telekom", "eduroam", "WLAN-Office",
    "Vodafone Hotspot", "my network", "Cafe Central", "Hotel Guest", "UPC1234567",
    "AndroidAP", "iPhone von Anna", "Linksys", "TP-Link_2.4GHz", "Gastnetz",
)
LEGACY_OUIS = (b"\x00\x1b\x63", b"\x28\x6e\xd4", b"\xbc\x5f\xf4", b"\x00\x1a\x11")


@dataclass(frozen=True)
class DeviceSpec:
    pnl: Tuple[str, ...] = ()
    randomizing: bool = False


@dataclass(frozen=True)
class SynthProfile:
    devices: Tuple[DeviceSpec, ...] = ()
    bursts_per_device: int = 3
    burst_interval_s: float = 30.0
    probe_gap_s: float = 0.02
    channels: Tuple[int, ...] = (1, 6, 11)
    wildcard_per_channel: int = 1
    typo_rate: float = 0.0
    password_rate: float = 0.0
    target_ssid_share: Optional[float] = None
    wildcard_burst_size: int = 4
    start_spread_s: float = 60.0

    @classmethod
    def random(
        cls,
        device_count: int,
        randomizing_fraction: float = 0.5,
        seed: int = 0,
        vocabulary: Sequence[str] = DEFAULT_VOCABULARY,
        max_pnl: int = 4,
        **kwargs,
    ) -> "SynthProfile":
        """A fleet whose PNLs are drawn from `vocabulary` (seeded, deterministic)."""
        rng = np.random.default_rng(seed)
        devices = []
        for _ in range(device_count):
            size = int(rng.integers(0, max_pnl + 1))
            picks = rng.choice(len(vocabulary), size=min(size, len(vocabulary)), replace=False)
            devices.append(DeviceSpec(
                pnl=tuple(vocabulary[i] for i in sorted(picks)),
                randomizing=bool(rng.random() < randomizing_fraction),
            ))
        return cls(devices=tuple(devices), **kwargs)


def synth_capture(profile: SynthProfile, seed: int) -> List[ProbeRecord]:
    """Generate records for `profile`. Pure function of (profile, seed)."""
    rng = np.random.default_rng(seed)
    records = []
    for device in profile.devices:
        device = _inject(device, profile, rng)
        start = float(rng.uniform(0.0, profile.start_spread_s))
        records.extend(_device_records(device, profile, start, rng))

    if profile.target_ssid_share:
        records.extend(_wildcard_padding(records, profile, rng))

    records.sort(key=lambda r: (r.timestamp, str(r.mac), r.seq))
    return records


def _inject(device: DeviceSpec, profile: SynthProfile, rng) -> DeviceSpec:
    """Add mistyped variants / initial-router-password strings to a PNL."""
    pnl = list(device.pnl)
    if pnl and profile.typo_rate and rng.random() < profile.typo_rate:
        pnl.append(_mistype(pnl[int(rng.integers(len(pnl)))], rng))
    if profile.password_rate and rng.random() < profile.password_rate:
        digits = "".join(str(int(d)) for d in rng.integers(0, 10, size=16))
        pnl.append(digits)
        if rng.random() < 0.5:
            pnl.append(" ".join(digits[i:i + 4] for i in range(0, 16, 4)))
    return replace(device, pnl=tuple(dict.fromkeys(pnl)))


def _mistype(ssid: str, rng) -> str:
    kind = int(rng.integers(3))
    if len(ssid) < 3 or kind == 0:
        return ssid.upper() if ssid != ssid.upper() else ssid + "_"
    i = int(rng.integers(1, len(ssid) - 1))
    if kind == 1:
        return ssid[:i] + ssid[i + 1:]
    return ssid[:i] + ssid[i + 1] + ssid[i] + ssid[i + 2:]


def _random_local_mac(rng) -> MacAddress:
    octets = bytearray(int(b) for b in rng.integers(0, 256, size=6))
    octets[0] = (octets[0] & 0xFC) | 0x02
    return MacAddress(bytes(octets))


def _global_mac(rng) -> MacAddress:
    oui = LEGACY_OUIS[int(rng.integers(len(LEGACY_OUIS)))]
    tail = bytes(int(b) for b in rng.integers(0, 256, size=3))
    return MacAddress(oui + tail)


def _device_records(device: DeviceSpec, profile: SynthProfile, start: float, rng) -> List[ProbeRecord]:
    records = []
    fixed_mac = None if device.randomizing else _global_mac(rng)
    seq = int(rng.integers(0, MAX_SEQ + 1))
    for burst in range(profile.bursts_per_device):
        if device.randomizing:
            mac = _random_local_mac(rng)
            seq = int(rng.integers(0, MAX_SEQ + 1))
        else:
            mac = fixed_mac
        t = start + burst * profile.burst_interval_s
        ssids = [""] * profile.wildcard_per_channel + list(device.pnl)
        for channel in profile.channels:
            for name in ssids:
                raw = name.encode("utf-8")
                records.append(ProbeRecord(
                    timestamp=round(t, 6),
                    mac=mac,
                    seq=seq,
                    ssid=Ssid(raw),
                    channel=channel,
                    frame_len=HEADER_LEN + BASE_IE_LEN + SSID_IE_OVERHEAD + len(raw),
                    rssi=int(rng.integers(-90, -39)),
                ))
                seq = (seq + 1) % (MAX_SEQ + 1)
                t += profile.probe_gap_s
    return records


def _wildcard_padding(records: List[ProbeRecord], profile: SynthProfile, rng) -> List[ProbeRecord]:
    """Wildcard-only bursts from randomizing devices until the SSID share hits the target."""
    with_ssid = sum(1 for r in records if r.has_ssid)
    needed = int(round(with_ssid / profile.target_ssid_share)) - len(records)
    padding = []
    horizon = profile.start_spread_s + profile.bursts_per_device * profile.burst_interval_s
    while needed > 0:
        size = min(profile.wildcard_burst_size, needed)
        mac = _random_local_mac(rng)
        seq = int(rng.integers(0, MAX_SEQ + 1))
        t = float(rng.uniform(0.0, horizon))
        for i in range(size):
            channel = profile.channels[i % len(profile.channels)]
            padding.append(ProbeRecord(
                timestamp=round(t + i * profile.probe_gap_s, 6),
                mac=mac,
                seq=(seq + i) % (MAX_SEQ + 1),
                ssid=Ssid(b""),
                channel=channel,
                frame_len=HEADER_LEN + BASE_IE_LEN + SSID_IE_OVERHEAD,
                rssi=int(rng.integers(-90, -39)),
            ))
        needed -= size
    return padding
