"""
Population slicing and process fan-out for exhaustive checkers
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, List, Sequence, TypeVar

from services.perm_core import Permutation, is_even, permutations_starting_with
from utils.exceptions import DomainError
from utils.structured_logging import get_structured_logger

logger = get_structured_logger(__name__)

T = TypeVar("T")

GROUPS = ("s", "a", "q")


def partition_by_first_letter(degree: int) -> List[int]:
    """Slice keys for S_degree; concatenating slices in key order is lexicographic"""
    return list(range(1, degree + 1))


def iter_slice(group: str, degree: int, first: int) -> Iterator[Permutation]:
    """Elements of the group's population whose first letter is ``first``"""
    if group not in GROUPS:
        raise DomainError(f"Unknown group {group!r}", {"group": group})
    for perm in permutations_starting_with(degree, first):
        if group == "a" and not is_even(perm):
            continue
        yield perm


def iter_population(group: str, degree: int) -> Iterator[Permutation]:
    for first in partition_by_first_letter(degree):
        yield from iter_slice(group, degree, first)


class EnumerationPool:
    """Maps a picklable slice function over slice keys.

    Results come back in key order whatever the worker count, so merges
    are deterministic.
    """

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise DomainError(f"workers must be positive, got {workers}", {"workers": workers})
        self.workers = workers

    def map_slices(self, fn: Callable[[int], T], slices: Sequence[int]) -> List[T]:
        if self.workers == 1 or len(slices) <= 1:
            return [fn(key) for key in slices]

        width = min(self.workers, len(slices))
        logger.debug("Fanning out slices", slices=len(slices), workers=width)
        with ProcessPoolExecutor(max_workers=width) as executor:
            return list(executor.map(fn, slices))
