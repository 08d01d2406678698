import os
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.capture.models import MacAddress, ProbeRecord, Ssid  # noqa: E402

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")
GEO_MOCK_DIR = os.path.join(FIXTURES, "geo_mock")


def rec(t, mac, ssid="", seq=0, ch=1, length=120, rssi=None) -> ProbeRecord:
    """Short-hand record builder for hand-written scenarios."""
    return ProbeRecord(
        timestamp=float(t),
        mac=MacAddress.parse(mac),
        seq=seq,
        ssid=Ssid(ssid if isinstance(ssid, bytes) else ssid.encode("utf-8")),
        channel=ch,
        frame_len=length,
        rssi=rssi,
    )


@pytest.fixture
def geo_mock_dir():
    return GEO_MOCK_DIR
