"""
Settings from .env / environment. CLI flags override these.
"""
import os
from dataclasses import dataclass, field
from typing import List, Optional

from dotenv import load_dotenv

from src.utils.error_handler import ConfigError, UsageError

load_dotenv()

DEFAULT_GEO_BASE_URL = "https://api.wigle.net"
DEFAULT_CACHE_DIR = ".probescope-cache"
OUTPUT_FORMATS = ("json", "csv", "text")
SUBCOMMANDS = ("ingest", "analyze", "geo", "protocol", "synth")


def _float_env(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}")


@dataclass
class GeoSettings:
    base_url: str = DEFAULT_GEO_BASE_URL
    token: Optional[str] = None
    rate_limit_per_s: float = 1.0
    max_retries: int = 3
    backoff_s: float = 2.0
    timeout_s: float = 30.0
    cache_dir: str = DEFAULT_CACHE_DIR

    @classmethod
    def from_env(cls) -> "GeoSettings":
        return cls(
            base_url=os.getenv("GEO_API_BASE_URL", DEFAULT_GEO_BASE_URL).rstrip("/"),
            token=os.getenv("GEO_API_TOKEN") or None,
            rate_limit_per_s=_float_env("GEO_RATE_LIMIT", 1.0),
            max_retries=int(_float_env("GEO_MAX_RETRIES", 3)),
            backoff_s=_float_env("GEO_BACKOFF_S", 2.0),
            timeout_s=_float_env("GEO_TIMEOUT_S", 30.0),
            cache_dir=os.getenv("PROBESCOPE_CACHE_DIR", DEFAULT_CACHE_DIR),
        )

    def require_token(self) -> str:
        if not self.token:
            raise ConfigError("GEO_API_TOKEN not set (export it or put it in .env)")
        return self.token


@dataclass
class RunConfig:
    subcommand: str
    inputs: List[str] = field(default_factory=list)
    output: Optional[str] = None
    fmt: str = "json"
    window_s: float = 4.0
    typo_threshold: float = 0.3
    names_dict: Optional[str] = None
    geo: GeoSettings = field(default_factory=GeoSettings.from_env)
    seed: int = 0
    redact: bool = True

    def validate(self) -> "RunConfig":
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"Unknown subcommand: {self.subcommand}")
        if self.fmt not in OUTPUT_FORMATS:
            raise UsageError(f"--format must be one of {', '.join(OUTPUT_FORMATS)}")
        if not self.window_s > 0:
            raise UsageError("--window must be > 0 seconds")
        # 0 disables typo grouping; 1 would group everything
        if not 0 <= self.typo_threshold < 1:
            raise UsageError("--typo-threshold must be in [0, 1)")
        if self.geo.rate_limit_per_s <= 0:
            raise UsageError("geo rate limit must be > 0 requests/s")
        return self
