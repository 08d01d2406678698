"""
Batch lookups with caching and an error manifest.
"""
from typing import Iterable, Optional

from src.geoprobe.cache import GeoCache
from src.geoprobe.client import GeoClient
from src.utils.error_handler import GeoLookupError
from src.utils.logger import get_logger

log = get_logger("geoprobe")


def batch_lookup(ssids: Iterable[str], client: GeoClient, cache: Optional[GeoCache] = None) -> dict:
    """
    Look up each distinct SSID once (input order kept). Cached results are
    reused; failures go to the "errors" manifest and are not cached, so a
    later run retries them.
    Returns {"results": [GeoResult, ...], "errors": [{"ssid", "error", "retryable"}, ...]}.
    """
    results = []
    errors = []
    for ssid in dict.fromkeys(ssids):
        cached = cache.get(ssid) if cache else None
        if cached is not None:
            results.append(cached)
            continue
        try:
            result = client.lookup(ssid)
        except GeoLookupError as e:
            errors.append({"ssid": ssid, "error": str(e), "retryable": e.retryable})
            continue
        if cache:
            cache.put(result)
        results.append(result)

    if cache:
        log.info(f"Cache: {cache.hits} hits, {cache.misses} misses")
    if errors:
        log.warning(f"{len(errors)} lookup(s) failed; see error manifest")
    return {"results": results, "errors": errors}
