"""
Reads probe requests out of pcap / pcapng captures with a radiotap link layer.
Malformed frames are skipped and counted; only an unreadable header is fatal.
"""
import io
import os
from typing import BinaryIO, List, Tuple, Union

from scapy.error import Scapy_Exception
from scapy.layers.dot11 import Dot11, Dot11Elt, Dot11FCS, RadioTap
from scapy.packet import NoPayload
from scapy.utils import PcapReader

from src.capture.dedup import deduplicate
from src.capture.models import (
    MAX_SSID_LEN,
    MIN_MGMT_FRAME_LEN,
    CaptureMeta,
    MacAddress,
    ProbeRecord,
    Ssid,
    channel_from_frequency,
)
from src.utils.error_handler import CaptureFormatError
from src.utils.logger import get_logger

log = get_logger("capture")

LINKTYPE_RADIOTAP = 127
MGMT_TYPE = 0
PROBE_REQ_SUBTYPE = 4
SSID_ELEMENT_ID = 0

# per-frame outcomes
_RECORD, _IGNORED, _MALFORMED = "record", "ignored", "malformed"


class _Malformed(Exception):
    pass


def parse_pcap(source: Union[str, os.PathLike, bytes, BinaryIO]) -> Tuple[List[ProbeRecord], CaptureMeta]:
    """
    Parse every probe request in a pcap/pcapng capture.
    Returns (records sorted by capture-relative timestamp, CaptureMeta).
    Raises CaptureFormatError if the file header can't be read or the
    link layer is not radiotap.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as f:
            return _parse_stream(f, str(source))
    if isinstance(source, (bytes, bytearray)):
        return _parse_stream(io.BytesIO(bytes(source)), "<bytes>")
    return _parse_stream(source, getattr(source, "name", "<stream>"))


def _parse_stream(stream: BinaryIO, name: str):
    try:
        reader = PcapReader(stream)
    except (Scapy_Exception, EOFError, ValueError, OSError) as e:
        raise CaptureFormatError(f"{name}: unreadable capture header ({e})") from e

    linktype = getattr(reader, "linktype", None)
    if linktype is not None and linktype != LINKTYPE_RADIOTAP:
        raise CaptureFormatError(
            f"{name}: link type {linktype} is not radiotap ({LINKTYPE_RADIOTAP})"
        )

    records = []
    errors = []
    examined = ignored = 0
    t0 = None
    size = _stream_size(stream)

    while True:
        pos = _tell(stream)
        try:
            pkt = reader.read_packet()
        except EOFError:
            if size is not None and pos is not None and pos < size:
                examined += 1
                errors.append(f"frame {examined}: truncated record header ({size - pos} trailing bytes)")
            break
        except Exception as e:
            # broken record header: nothing after it can be trusted
            examined += 1
            errors.append(f"frame {examined}: unreadable record header ({e})")
            break
        if pkt is None:
            break
        examined += 1
        if t0 is None:
            t0 = float(pkt.time)
        try:
            outcome, rec = _frame_to_record(pkt, t0)
        except _Malformed as e:
            errors.append(f"frame {examined}: {e}")
            continue
        except Exception as e:
            errors.append(f"frame {examined}: dissection failed ({e})")
            continue
        if outcome == _IGNORED:
            ignored += 1
        else:
            records.append(rec)

    records, dupes = deduplicate(records)
    meta = CaptureMeta(
        source=name,
        record_count=len(records),
        parse_error_count=len(errors),
        ignored_count=ignored,
        duplicate_count=dupes,
        frames_examined=examined,
        errors=tuple(errors),
    )
    if errors:
        log.warning(f"{name}: skipped {len(errors)} malformed frame(s) of {examined}")
    log.info(f"{name}: {len(records)} probe requests ({ignored} other frames, {dupes} duplicates)")
    return records, meta


def _tell(stream):
    try:
        return stream.tell()
    except (AttributeError, OSError, ValueError):
        return None


def _stream_size(stream):
    pos = _tell(stream)
    if pos is None:
        return None
    try:
        end = stream.seek(0, io.SEEK_END)
        stream.seek(pos)
    except (AttributeError, OSError, ValueError):
        return None
    return end


def _frame_to_record(pkt, t0: float):
    if not isinstance(pkt, RadioTap):
        raise _Malformed("not a radiotap frame")

    original = getattr(pkt, "original", None) or b""
    wirelen = getattr(pkt, "wirelen", None)
    if wirelen and len(original) < wirelen:
        raise _Malformed(f"truncated ({len(original)} of {wirelen} bytes)")

    dot11 = pkt.getlayer(Dot11)
    if dot11 is None:
        dot11 = pkt.getlayer(Dot11FCS)
    if dot11 is None:
        raise _Malformed("no 802.11 header after radiotap")
    if dot11.type != MGMT_TYPE or dot11.subtype != PROBE_REQ_SUBTYPE:
        return _IGNORED, None

    frame_len = len(original) - (pkt.len or 0)
    if frame_len < MIN_MGMT_FRAME_LEN or dot11.addr2 is None or dot11.SC is None:
        raise _Malformed("management header too short")

    ssid = _ssid_element(dot11)

    freq = getattr(pkt, "ChannelFrequency", None)
    channel = channel_from_frequency(freq) if freq else None
    if channel is None:
        raise _Malformed("no usable radiotap channel field")

    rssi = getattr(pkt, "dBm_AntSignal", None)
    try:
        rec = ProbeRecord(
            timestamp=round(float(pkt.time) - t0, 6),
            mac=MacAddress.parse(dot11.addr2),
            seq=(dot11.SC >> 4) & 0x0FFF,
            ssid=ssid,
            channel=channel,
            frame_len=frame_len,
            rssi=int(rssi) if rssi is not None else None,
        )
    except ValueError as e:
        raise _Malformed(str(e))
    return _RECORD, rec


def _ssid_element(dot11) -> Ssid:
    layer = dot11.payload
    while layer is not None and not isinstance(layer, NoPayload):
        if isinstance(layer, Dot11Elt) and layer.ID == SSID_ELEMENT_ID:
            info = bytes(layer.info or b"")
            if layer.len is not None and len(info) != layer.len:
                raise _Malformed("SSID element truncated")
            if len(info) > MAX_SSID_LEN:
                raise _Malformed(f"SSID element of {len(info)} octets")
            return Ssid(info)
        layer = layer.payload
    raise _Malformed("probe request without SSID element")
