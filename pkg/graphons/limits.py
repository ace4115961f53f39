"""
Size guards for the exact (and therefore brute-force) computations.

All limits come from ``settings.WL_LIMITS`` so deployments can tune them
through environment variables.
"""
import logging
from django.conf import settings

from .exceptions import SizeLimitExceeded

logger = logging.getLogger(__name__)


def get_limit(name: str) -> int:
    return settings.WL_LIMITS[name]


def check_limit(name: str, value: int, what: str = '') -> None:
    """Raise SizeLimitExceeded when ``value`` is above the configured limit"""
    limit = get_limit(name)
    if value > limit:
        logger.warning(f"Size guard {name} tripped: {what or name} = {value} > {limit}")
        raise SizeLimitExceeded(
            f"{what or name} is {value}, above the configured limit {limit} ({name})",
            limit=name,
            value=value,
        )
