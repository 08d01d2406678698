"""
Exceptions and retry logic.
Library code raises these; only the CLI turns them into exit codes.
"""
import time

from src.utils.logger import get_logger

log = get_logger("errors")

EXIT_OK = 0
EXIT_FORMAT = 2
EXIT_CONFIG = 3
EXIT_USAGE = 64


class ProbeScopeError(Exception):
    exit_code = 1


class CaptureFormatError(ProbeScopeError):
    """Capture file header unreadable or wrong link layer."""
    exit_code = EXIT_FORMAT


class ConfigError(ProbeScopeError):
    """Missing credential or invalid setting."""
    exit_code = EXIT_CONFIG


class UsageError(ProbeScopeError):
    exit_code = EXIT_USAGE


class GeoLookupError(ProbeScopeError):
    """HTTP or auth failure talking to the geolocation API. Never means NotFound."""

    def __init__(self, message: str, retryable: bool = True, status: int = None):
        super().__init__(message)
        self.retryable = retryable
        self.status = status


class RateLimitError(GeoLookupError):
    def __init__(self, message: str, retry_after: float = None):
        super().__init__(message, retryable=True, status=429)
        self.retry_after = retry_after


def retry(fn, attempts: int = 3, backoff_s: float = 2.0, retry_on=(RateLimitError,), sleep=time.sleep):
    """
    Call fn() up to `attempts` times, sleeping backoff_s * attempt between tries.
    A RateLimitError with retry_after overrides the computed wait.
    """
    if attempts < 1:
        raise ValueError("attempts must be >= 1")
    for attempt in range(1, attempts + 1):
        try:
            return fn()
        except retry_on as e:
            if attempt == attempts:
                raise
            wait = getattr(e, "retry_after", None) or backoff_s * attempt
            log.warning(f"Attempt {attempt}/{attempts} failed ({e}); retrying in {wait:.1f}s")
            sleep(wait)
