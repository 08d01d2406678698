"""
Redaction applied before anything leaves the process.
"""
from src.capture.models import MacAddress, oui

REDACTED_TAIL = "xx:xx:xx"


def redact_mac(mac) -> str:
    """Keep the OUI, hide the NIC-specific half: 'da:a1:19:xx:xx:xx'."""
    if not isinstance(mac, MacAddress):
        mac = MacAddress.parse(str(mac))
    return ":".join(f"{b:02x}" for b in oui(mac)) + ":" + REDACTED_TAIL


def mac_text(mac, redact: bool = True) -> str:
    return redact_mac(mac) if redact else str(mac)
