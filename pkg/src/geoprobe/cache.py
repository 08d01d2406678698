"""
On-disk lookup cache: one JSON file per SSID under the cache directory,
named by the SHA-256 of the SSID. Only truncated results are stored.
"""
import hashlib
import json
import os
import tempfile
import threading
from typing import Optional

from src.geoprobe.models import GeoResult


def cache_key(ssid: str) -> str:
    return hashlib.sha256(ssid.encode("utf-8", errors="surrogatepass")).hexdigest()


class GeoCache:
    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)
        self._write_lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def _path(self, ssid: str) -> str:
        return os.path.join(self.directory, f"{cache_key(ssid)}.json")

    def get(self, ssid: str) -> Optional[GeoResult]:
        path = self._path(ssid)
        try:
            with open(path, "r", encoding="utf-8") as f:
                result = GeoResult.from_dict(json.load(f))
        except FileNotFoundError:
            self.misses += 1
            return None
        except (ValueError, KeyError):
            # corrupt entry: treat as a miss, it gets rewritten
            self.misses += 1
            return None
        self.hits += 1
        return result

    def put(self, result: GeoResult) -> None:
        data = json.dumps(result.to_dict(), sort_keys=True, ensure_ascii=False)
        with self._write_lock:
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                f.write(data)
            os.replace(tmp, self._path(result.ssid))
