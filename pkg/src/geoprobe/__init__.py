from src.geoprobe.batch import batch_lookup
from src.geoprobe.cache import GeoCache, cache_key
from src.geoprobe.client import GeoClient, HttpTransport, MockTransport
from src.geoprobe.models import (
    MULTIPLE,
    NOT_FOUND,
    UNIQUE,
    UNRESOLVABLE,
    GeoResult,
    GeoSummary,
    classify_hits,
    evaluate_subset,
    is_queryable,
    summarize,
    truncate2,
)
