"""
Utilities.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from seaweed_index.lib.constants import INT64_MAX

T = TypeVar("T")
R = TypeVar("R")


class CountOverflowError(OverflowError):
    """
    Raised when a count leaves the signed 64-bit range.
    """

    pass


def checked_count(value: int) -> int:
    """
    Guard a count against leaving the signed 64-bit range.

    Args:
        value: The count.

    Returns:
        The count, unchanged.

    Raises:
        CountOverflowError: If the count does not fit in a signed 64-bit integer.
    """
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise CountOverflowError(f"Count {value} does not fit in 64 bits")
    return value


def ordered_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> List[R]:
    """
    Map a function over items, optionally across worker processes. Results keep the order of the items.

    Args:
        fn: A picklable, module-level function.
        items: The inputs.
        jobs: Number of worker processes. 1 runs in-process.

    Returns:
        The results, in input order.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(fn, items))
