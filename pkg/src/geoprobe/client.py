"""
WiGLE-compatible network search client.
Online: GET {base}/api/v2/network/search?ssid=<exact> with the token from GEO_API_TOKEN.
Offline: MockTransport replays canned responses from a directory.
"""
import json
import math
import os
import time
from typing import Callable, Optional

import requests

from src.geoprobe.models import UNRESOLVABLE, GeoResult, classify_hits, is_queryable
from src.utils.config import GeoSettings
from src.utils.error_handler import GeoLookupError, RateLimitError, retry
from src.utils.logger import get_logger

log = get_logger("geoprobe")

SEARCH_PATH = "/api/v2/network/search"


class HttpTransport:
    def __init__(self, settings: GeoSettings, session: requests.Session = None):
        self.settings = settings
        self.token = settings.require_token()
        self.session = session or requests.Session()

    def search(self, ssid: str) -> dict:
        url = f"{self.settings.base_url}{SEARCH_PATH}"
        headers = {"Authorization": f"Basic {self.token}", "Accept": "application/json"}
        try:
            resp = self.session.get(url, params={"ssid": ssid}, headers=headers, timeout=self.settings.timeout_s)
        except requests.ConnectionError:
            raise GeoLookupError(f"Cannot connect to geolocation API at {self.settings.base_url}")
        except requests.Timeout:
            raise GeoLookupError(f"Geolocation API timed out after {self.settings.timeout_s}s")
        return _decode(resp.status_code, resp.headers, resp.text)


class MockTransport:
    """
    Replays `<dir>/responses.json`: {"<ssid>": <API payload> | {"http_status": 429}}.
    SSIDs absent from the file answer with zero results.
    """

    def __init__(self, directory: str):
        path = os.path.join(directory, "responses.json")
        if not os.path.exists(path):
            raise GeoLookupError(f"Mock directory {directory} has no responses.json", retryable=False)
        with open(path, "r", encoding="utf-8") as f:
            self.responses = json.load(f)
        self.calls = []

    def search(self, ssid: str) -> dict:
        self.calls.append(ssid)
        canned = self.responses.get(ssid, {"success": True, "totalResults": 0, "results": []})
        status = canned.get("http_status", 200)
        return _decode(status, canned.get("headers", {}), json.dumps(canned))


def _decode(status: int, headers, text: str) -> dict:
    if status == 429:
        retry_after = headers.get("Retry-After") if headers else None
        raise RateLimitError("Geolocation API rate limit hit", float(retry_after) if retry_after else None)
    if status in (401, 403):
        raise GeoLookupError(f"Geolocation API rejected the credential (HTTP {status})", retryable=False, status=status)
    if status >= 400:
        raise GeoLookupError(f"Geolocation API error (HTTP {status})", status=status)
    try:
        payload = json.loads(text)
    except ValueError:
        raise GeoLookupError("Geolocation API returned invalid JSON")
    if not isinstance(payload, dict):
        raise GeoLookupError("Geolocation API returned a malformed payload", retryable=False)
    if payload.get("success") is False:
        message = str(payload.get("message", ""))
        if "too many" in message.lower():
            raise RateLimitError(f"Geolocation API: {message}")
        raise GeoLookupError(f"Geolocation API: {message or 'request failed'}")
    return payload


class GeoClient:
    def __init__(self, transport, settings: GeoSettings = None, sleep: Callable[[float], None] = time.sleep,
                 clock: Callable[[], float] = time.monotonic):
        self.transport = transport
        self.settings = settings or GeoSettings.from_env()
        self.sleep = sleep
        self.clock = clock
        self._last_request: Optional[float] = None
        self.request_count = 0

    @classmethod
    def from_settings(cls, settings: GeoSettings, mock_dir: str = None) -> "GeoClient":
        transport = MockTransport(mock_dir) if mock_dir else HttpTransport(settings)
        return cls(transport, settings)

    def _throttled_search(self, ssid: str) -> dict:
        interval = 1.0 / self.settings.rate_limit_per_s
        if self._last_request is not None:
            wait = interval - (self.clock() - self._last_request)
            if wait > 0:
                self.sleep(wait)
        self._last_request = self.clock()
        self.request_count += 1
        return self.transport.search(ssid)

    def lookup(self, ssid: str) -> GeoResult:
        """Resolve one SSID. Raises GeoLookupError on HTTP/auth failure (never NotFound)."""
        if not is_queryable(ssid):
            log.info(f"SSID of length {len(ssid)} not expressible in the query grammar; Unresolvable")
            return GeoResult(ssid=ssid, status=UNRESOLVABLE)
        payload = retry(
            lambda: self._throttled_search(ssid),
            attempts=max(1, self.settings.max_retries),
            backoff_s=self.settings.backoff_s,
            retry_on=(RateLimitError,),
            sleep=self.sleep,
        )
        hits = []
        for item in payload.get("results") or []:
            if not isinstance(item, dict):
                raise GeoLookupError("Geolocation API returned a malformed result", retryable=False)
            lat, lon = item.get("trilat"), item.get("trilong")
            if lat is None or lon is None:
                continue
            hits.append((_coordinate(lat, 90.0), _coordinate(lon, 180.0)))
        return classify_hits(ssid, hits)


def _coordinate(value, bound: float) -> float:
    try:
        c = float(value)
    except (TypeError, ValueError):
        c = math.nan
    if not math.isfinite(c) or abs(c) > bound:
        raise GeoLookupError("Geolocation API returned an invalid coordinate", retryable=False)
    return c
