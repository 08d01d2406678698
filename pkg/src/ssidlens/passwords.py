"""
Password-in-SSID heuristics.

- 16+ consecutive digits: initial router passwords (FritzBox, Telekom ...).
- the same printed in groups of four separated by space, '.' or ','.
- keyword substrings: pass, pw, kennwort, wpa (also catches "PW:", "WPA:" prefixes).
  Substring matching over-triggers (e.g. "wpa" inside longer words); reports mark it heuristic.
"""
import re
from typing import FrozenSet, List

PROBABLE_PASSWORD = "ProbablePassword"
DIGIT_GROUP_VARIANT = "DigitGroupVariant"
KEYWORD_PASSWORD = "KeywordPassword"

MIN_DIGITS = 16
KEYWORDS = ("pass", "pw", "kennwort", "wpa")

_RAW_DIGITS = re.compile(r"\d{%d,}" % MIN_DIGITS)
# groups of exactly four digits, last group may be shorter, no stray digit groups on either side
_GROUPED_DIGITS = re.compile(
    r"(?<!\d)(?<!\d[ .,])\d{4}(?:[ .,]\d{4})*(?:[ .,]\d{1,3})?(?!\d)(?![ .,]\d)"
)
_SEPARATORS = re.compile(r"[ .,]")


def classify_password(ssid: str) -> FrozenSet[str]:
    flags = set()
    if _RAW_DIGITS.search(ssid):
        flags.add(PROBABLE_PASSWORD)
    for match in _GROUPED_DIGITS.finditer(ssid):
        run = match.group(0)
        if _SEPARATORS.search(run) and len(_SEPARATORS.sub("", run)) >= MIN_DIGITS:
            flags.update((PROBABLE_PASSWORD, DIGIT_GROUP_VARIANT))
            break
    lowered = ssid.lower()
    if any(k in lowered for k in KEYWORDS):
        flags.add(KEYWORD_PASSWORD)
    return frozenset(flags)


def is_password_candidate(flags) -> bool:
    return PROBABLE_PASSWORD in flags or KEYWORD_PASSWORD in flags


def password_cooccurrence(clusters) -> dict:
    """
    For every cluster holding a ProbablePassword SSID, whether that SSID is
    the PNL's only entry. The aggregate share is taken over password entries.
    """
    rows = []
    entries = sole = 0
    for cluster in clusters:
        names = cluster.pnl.texts
        passwords = [n for n in names if PROBABLE_PASSWORD in classify_password(n)]
        if not passwords:
            continue
        is_sole = len(names) == 1
        entries += len(passwords)
        sole += len(passwords) if is_sole else 0
        rows.append({
            "pnl_size": len(names),
            "password_ssids": passwords,
            "sole_entry": is_sole,
        })
    return {
        "clusters": rows,
        "password_cluster_count": len(rows),
        "password_entry_count": entries,
        "sole_entry_count": sole,
        "sole_entry_pct": sole / entries * 100 if entries else 0.0,
    }


def password_share(records: List) -> float:
    """Percentage of SSID-bearing probes whose SSID is a ProbablePassword."""
    with_ssid = [r for r in records if not r.ssid.is_wildcard]
    if not with_ssid:
        return 0.0
    cache = {}
    hits = 0
    for r in with_ssid:
        if r.ssid not in cache:
            cache[r.ssid] = PROBABLE_PASSWORD in classify_password(r.ssid.text)
        hits += cache[r.ssid]
    return hits / len(with_ssid) * 100
