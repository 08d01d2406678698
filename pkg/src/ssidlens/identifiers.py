"""
Identifying strings in SSIDs: e-mail addresses and dictionary names.
"""
import os
import re
from typing import FrozenSet, Iterable, Optional

from src.utils.logger import get_logger

log = get_logger("ssidlens")

EMAIL = "Email"
DICTIONARY_NAME = "DictionaryName"

# conservative subset of RFC 5322: dot-atom local part, dotted domain, alphabetic TLD
_EMAIL = re.compile(
    r"(?<![\w.+-])[A-Za-z0-9!#$%&'*+/=?^_`{|}~-]+(?:\.[A-Za-z0-9!#$%&'*+/=?^_`{|}~-]+)*"
    r"@(?:[A-Za-z0-9](?:[A-Za-z0-9-]*[A-Za-z0-9])?\.)+[A-Za-z]{2,}(?![\w-])"
)
_TOKEN_SPLIT = re.compile(r"[ _\-]+")


def load_name_dictionary(path: Optional[str]) -> Optional[FrozenSet[str]]:
    """
    One lowercase name per line (UTF-8). A missing file disables name
    detection with a warning instead of failing.
    """
    if not path:
        return None
    if not os.path.exists(path):
        log.warning(f"Name dictionary {path} not found; DictionaryName detection disabled")
        return None
    with open(path, "r", encoding="utf-8") as f:
        names = frozenset(line.strip().lower() for line in f if line.strip() and not line.startswith("#"))
    log.info(f"Loaded {len(names)} names from {path}")
    return names


def detect_identifiers(ssid: str, names: Optional[Iterable[str]] = None) -> FrozenSet[str]:
    flags = set()
    if _EMAIL.search(ssid):
        flags.add(EMAIL)
    if names:
        tokens = {t.lower() for t in _TOKEN_SPLIT.split(ssid) if t}
        if tokens.intersection(names):
            flags.add(DICTIONARY_NAME)
    return frozenset(flags)
