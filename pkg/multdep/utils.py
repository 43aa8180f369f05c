"""Utility functions for the multiplicative dependence toolkit."""

import logging
import sys
from typing import Iterable, List, Sequence

from .errors import DomainError


def setup_logging(level=logging.INFO):
    """Setup logging configuration."""
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)


def parse_int_list(text: str) -> List[int]:
    """Parse a comma separated list of integers such as '0,1,2'."""
    values = []
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        values.append(int(part))
    return values


def partition_range(start: int, stop: int, parts: int) -> List[range]:
    """
    Split [start, stop) into at most `parts` disjoint strided ranges.

    Piece i holds start + i, start + i + parts, ... so small and large
    values are spread evenly over the workers.

    Args:
        start: First value
        stop: One past the last value
        parts: Desired number of pieces

    Returns:
        List of non-empty ranges whose union is [start, stop)
    """
    total = max(0, stop - start)
    if total == 0:
        return []
    parts = max(1, min(parts, total))
    return [range(start + idx, stop, parts) for idx in range(parts)]


def format_tuple(values: Sequence[int]) -> str:
    """Format a tuple of integers as '(a, b, c)'."""
    return '(' + ', '.join(str(v) for v in values) + ')'


def require_at_least(values: Iterable[int], minimum: int, what: str) -> None:
    """Raise DomainError unless every value is an integer >= minimum."""
    for value in values:
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"{what} must be integers, got {value!r}")
        if value < minimum:
            raise DomainError(f"{what} must be at least {minimum}, got {value}")
