"""
Probe request data model: MAC, sequence number, SSID, record, capture meta.
All values are frozen so parsed captures can be shared freely.
"""
from dataclasses import dataclass, field
from typing import Optional

MAX_SSID_LEN = 32
MAX_SEQ = 4095
MIN_MGMT_FRAME_LEN = 24  # FC + duration + 3 addresses + sequence control

BAND_24 = "2.4GHz"
BAND_5 = "5GHz"


@dataclass(frozen=True, order=True)
class MacAddress:
    octets: bytes

    def __post_init__(self):
        if not isinstance(self.octets, (bytes, bytearray)) or len(self.octets) != 6:
            raise ValueError(f"MAC address needs exactly 6 octets, got {self.octets!r}")
        object.__setattr__(self, "octets", bytes(self.octets))

    @classmethod
    def parse(cls, text: str) -> "MacAddress":
        parts = text.strip().replace("-", ":").split(":")
        if len(parts) != 6 or any(len(p) != 2 for p in parts):
            raise ValueError(f"Not a colon-hex MAC address: {text!r}")
        try:
            return cls(bytes(int(p, 16) for p in parts))
        except ValueError:
            raise ValueError(f"Not a colon-hex MAC address: {text!r}")

    @property
    def is_local(self) -> bool:
        return bool(self.octets[0] & 0x02)

    @property
    def is_multicast(self) -> bool:
        return bool(self.octets[0] & 0x01)

    @property
    def oui(self) -> bytes:
        return self.octets[:3]

    def __str__(self) -> str:
        return ":".join(f"{b:02x}" for b in self.octets)


def mac_is_local(mac: MacAddress) -> bool:
    return mac.is_local


def mac_is_multicast(mac: MacAddress) -> bool:
    return mac.is_multicast


def oui(mac: MacAddress) -> bytes:
    return mac.oui


def check_seq(value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value <= MAX_SEQ:
        raise ValueError(f"Sequence number must fit in 12 bits, got {value!r}")
    return value


@dataclass(frozen=True, order=True)
class Ssid:
    """Raw SSID octets. `text` is a lossy UTF-8 view for display and string rules."""
    raw: bytes = b""

    def __post_init__(self):
        object.__setattr__(self, "raw", bytes(self.raw))
        if len(self.raw) > MAX_SSID_LEN:
            raise ValueError(f"SSID longer than {MAX_SSID_LEN} octets ({len(self.raw)})")

    @classmethod
    def from_text(cls, text: str) -> "Ssid":
        return cls(text.encode("utf-8"))

    @property
    def is_wildcard(self) -> bool:
        return len(self.raw) == 0

    @property
    def text(self) -> str:
        return self.raw.decode("utf-8", errors="replace")

    @property
    def is_utf8(self) -> bool:
        try:
            self.raw.decode("utf-8")
            return True
        except UnicodeDecodeError:
            return False

    def __len__(self) -> int:
        return len(self.raw)

    def __str__(self) -> str:
        return self.text


def band_of(channel: int) -> str:
    return BAND_24 if 1 <= channel <= 14 else BAND_5


def channel_from_frequency(mhz: int) -> Optional[int]:
    """802.11 channel number for a centre frequency; None if outside 2.4/5 GHz."""
    if mhz == 2484:
        return 14
    if 2412 <= mhz <= 2472:
        return (mhz - 2407) // 5
    if 5000 <= mhz <= 5925:
        return (mhz - 5000) // 5
    return None


def frequency_from_channel(channel: int) -> int:
    if channel == 14:
        return 2484
    if 1 <= channel <= 13:
        return 2407 + 5 * channel
    return 5000 + 5 * channel


@dataclass(frozen=True)
class ProbeRecord:
    timestamp: float
    mac: MacAddress
    seq: int
    ssid: Ssid
    channel: int
    frame_len: int
    rssi: Optional[int] = None

    def __post_init__(self):
        check_seq(self.seq)
        if not isinstance(self.channel, int) or self.channel < 1:
            raise ValueError(f"Invalid channel {self.channel!r}")
        if self.frame_len < MIN_MGMT_FRAME_LEN:
            raise ValueError(f"Frame length {self.frame_len} below management frame minimum")

    @property
    def band(self) -> str:
        return band_of(self.channel)

    @property
    def has_ssid(self) -> bool:
        return not self.ssid.is_wildcard


@dataclass(frozen=True)
class CaptureMeta:
    source: str
    record_count: int = 0
    parse_error_count: int = 0
    ignored_count: int = 0
    duplicate_count: int = 0
    frames_examined: int = 0
    errors: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "record_count": self.record_count,
            "parse_error_count": self.parse_error_count,
            "ignored_count": self.ignored_count,
            "duplicate_count": self.duplicate_count,
            "frames_examined": self.frames_examined,
        }
