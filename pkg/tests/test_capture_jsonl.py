"""
JSONL schema, round trips, and record-level invariants.
"""
import io

import pytest

from conftest import rec
from src.capture import parse_jsonl, synth_capture, write_jsonl
from src.capture.jsonl import record_to_dict
from src.capture.models import (
    BAND_24,
    MacAddress,
    ProbeRecord,
    Ssid,
    channel_from_frequency,
    frequency_from_channel,
    mac_is_local,
    mac_is_multicast,
    oui,
)
from src.capture.synth import SynthProfile

SCHEMA_EXAMPLE = '{"t":0.0,"mac":"02:00:00:00:00:01","seq":12,"ssid":"","ch":1,"len":120}\n'


def test_schema_example_is_a_wildcard_record():
    records, meta = parse_jsonl(io.StringIO(SCHEMA_EXAMPLE))
    assert len(records) == 1
    r = records[0]
    assert r.ssid.is_wildcard
    assert r.band == BAND_24
    assert r.seq == 12
    assert meta.parse_error_count == 0


def test_write_uses_schema_key_order():
    assert write_jsonl([rec(0.0, "02:00:00:00:00:01", "", seq=12, ch=1, length=120)]) == SCHEMA_EXAMPLE


@pytest.mark.parametrize("line", [
    '{"t":0.0,"mac":"02:00:00:00:00:01","seq":9999,"ssid":"x","ch":1,"len":120}',
    '{"t":0.0,"mac":"02:00:00:00:00:01","seq":1,"ssid":"x","ch":1}',
    '{"t":0.0,"mac":"not-a-mac","seq":1,"ssid":"x","ch":1,"len":120}',
    '{"t":0.0,"mac":"02:00:00:00:00:01","seq":1,"ssid":"' + "x" * 33 + '","ch":1,"len":120}',
    '{"t":0.0,"mac":"02:00:00:00:00:01","seq":1,"ssid":"x","ch":1,"len":10}',
    '{"t":0.0,"mac":"02:00:00:00:00:01","seq":"1","ssid":"x","ch":1,"len":120}',
    '{"t":0.0,"mac":"02:00:00:00:00:01","seq":1,"ch":1,"len":120}',
    '{broken json',
    '[1, 2, 3]',
])
def test_bad_lines_are_skipped_and_counted(line):
    text = SCHEMA_EXAMPLE + line + "\n" + SCHEMA_EXAMPLE
    records, meta = parse_jsonl(io.StringIO(text))
    assert len(records) == 2
    assert meta.parse_error_count == 1
    assert meta.frames_examined == 3


def test_invalid_utf8_line_is_skipped_and_counted(tmp_path):
    good = SCHEMA_EXAMPLE.encode("utf-8")
    bad = b'{"t":1.0,"mac":"02:00:00:00:00:01","seq":13,"ssid":"\xff\xfe","ch":1,"len":120}\n'
    path = tmp_path / "mixed.jsonl"
    path.write_bytes(good + bad + good)

    records, meta = parse_jsonl(str(path))
    assert len(records) == 2
    assert meta.parse_error_count == 1
    assert meta.errors[0].startswith("line 2:")

    from_bytes, _ = parse_jsonl(good + bad + good)
    assert from_bytes == records


def test_non_utf8_ssid_uses_base64():
    r = rec(1.5, "02:00:00:00:00:02", b"\xff\xfe\x00net", seq=3, ch=6, rssi=-70)
    obj = record_to_dict(r)
    assert "ssid" not in obj
    assert obj["ssid_b64"] == "//4AbmV0"
    back, _ = parse_jsonl(io.StringIO(write_jsonl([r])))
    assert back == [r]


def test_round_trip_of_synthetic_records_is_byte_identical():
    profile = SynthProfile.random(120, randomizing_fraction=0.5, seed=3, password_rate=0.2, typo_rate=0.3)
    records = synth_capture(profile, seed=3)
    assert len(records) >= 1000
    text = write_jsonl(records)
    back, meta = parse_jsonl(io.StringIO(text))
    assert back == records
    assert write_jsonl(back) == text
    assert meta.parse_error_count == 0


def test_write_to_stream_returns_same_text():
    buf = io.StringIO()
    text = write_jsonl([rec(0.0, "02:00:00:00:00:01")], buf)
    assert buf.getvalue() == text


# ---- model invariants ----

@pytest.mark.parametrize("mac,local,multicast", [
    ("02:23:45:ab:cd:ef", True, False),
    ("01:23:45:ab:cd:ef", False, True),
    ("00:00:00:00:00:00", False, False),
    ("03:00:00:00:00:00", True, True),
])
def test_mac_bits(mac, local, multicast):
    m = MacAddress.parse(mac)
    assert m.is_local is local
    assert m.is_multicast is multicast
    assert m.oui == bytes.fromhex(mac.replace(":", ""))[:3]
    assert mac_is_local(m) is local
    assert mac_is_multicast(m) is multicast
    assert oui(m) == m.oui
    assert str(m) == mac


@pytest.mark.parametrize("bad", ["02:00:00:00:00", "zz:00:00:00:00:00", "0200:00:00:00:00", ""])
def test_mac_parse_rejects(bad):
    with pytest.raises(ValueError):
        MacAddress.parse(bad)


def test_ssid_and_seq_bounds():
    with pytest.raises(ValueError):
        Ssid(b"x" * 33)
    with pytest.raises(ValueError):
        rec(0, "02:00:00:00:00:01", seq=4096)
    assert len(Ssid(b"x" * 32)) == 32


def test_frame_len_minimum():
    with pytest.raises(ValueError):
        ProbeRecord(0.0, MacAddress.parse("02:00:00:00:00:01"), 0, Ssid(), 1, 23)


@pytest.mark.parametrize("mhz,channel", [(2412, 1), (2437, 6), (2472, 13), (2484, 14), (5180, 36), (5825, 165)])
def test_channel_frequency_mapping(mhz, channel):
    assert channel_from_frequency(mhz) == channel
    assert frequency_from_channel(channel) == mhz


def test_unknown_frequency():
    assert channel_from_frequency(900) is None
