"""
Dashed patterns, the family Pat(q) and the avoidance class Avoid_q.

A dashed pattern is a sequence of blocks; letters inside a block must sit at
adjacent positions, consecutive blocks may be separated by any gap. Pat(q)
holds the q! patterns pi_1-...-pi_q-(q+2),(q+1) for pi in S_q.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from services.perm_core import Permutation, all_permutations, standardize
from utils.config import get_config
from utils.exceptions import DomainError, PermutationFormatError, ResourceCapError
from utils.structured_logging import get_structured_logger

logger = get_structured_logger(__name__)


@dataclass(frozen=True)
class DashedPattern:
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        letters = [x for block in blocks for x in block]
        if not blocks or any(not block for block in blocks):
            raise PermutationFormatError("Dashed pattern blocks must be nonempty")
        if sorted(letters) != list(range(1, len(letters) + 1)):
            raise PermutationFormatError(
                "Dashed pattern letters must form a permutation of 1..k",
                {"letters": letters},
            )

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(x for block in self.blocks for x in block)

    @property
    def size(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "(" + "-".join(",".join(map(str, block)) for block in self.blocks) + ")"


def parse_pattern(text: str) -> DashedPattern:
    """Parse the printed form, e.g. ``(1-2-4,3)``"""
    body = text.strip().strip("()")
    try:
        blocks = tuple(
            tuple(int(x) for x in chunk.split(",")) for chunk in body.split("-")
        )
    except ValueError:
        raise PermutationFormatError(f"Malformed dashed pattern {text!r}", {"text": text})
    return DashedPattern(blocks)


def pat(q: int) -> List[DashedPattern]:
    """Pat(q) in lexicographic order of the leading letters"""
    if q < 1:
        raise DomainError(f"q must be positive, got {q}", {"q": q})
    tail = ((q + 2, q + 1),)
    return [
        DashedPattern(tuple((x,) for x in head) + tail)
        for head in itertools.permutations(range(1, q + 1))
    ]


def find_occurrence(p: DashedPattern, w: Permutation) -> Optional[Tuple[int, ...]]:
    """1-based positions of the first occurrence of p in w, or None"""
    m = w.n
    if p.size > m:
        return None
    images = w.images
    blocks = p.blocks
    targets = [standardize(p.letters[: sum(len(b) for b in blocks[: i + 1])])
               for i in range(len(blocks))]

    def place(index: int, start: int, positions: List[int]) -> Optional[Tuple[int, ...]]:
        if index == len(blocks):
            return tuple(positions)
        width = len(blocks[index])
        remaining = sum(len(b) for b in blocks[index + 1:])
        for first in range(start, m - width - remaining + 2):
            chosen = positions + list(range(first, first + width))
            if standardize(images[x - 1] for x in chosen) != targets[index]:
                continue
            found = place(index + 1, first + width, chosen)
            if found is not None:
                return found
        return None

    return place(0, 1, [])


def occurs(p: DashedPattern, w: Permutation) -> bool:
    return find_occurrence(p, w) is not None


def find_pat_q_occurrence(
    q: int, w: Permutation
) -> Optional[Tuple[DashedPattern, Tuple[int, ...]]]:
    for pattern in pat(q):
        positions = find_occurrence(pattern, w)
        if positions is not None:
            return pattern, positions
    return None


def avoids_pat_q(q: int, w: Permutation) -> bool:
    """No adjacent descent w(j) > w(j+1) has q letters left of j below w(j+1)"""
    if q < 1:
        raise DomainError(f"q must be positive, got {q}", {"q": q})
    images = w.images
    for j in range(1, w.n):
        low = images[j]
        if images[j - 1] > low:
            smaller = sum(1 for x in images[: j - 1] if x < low)
            if smaller >= q:
                return False
    return True


def avoids_pat_q_by_matcher(q: int, w: Permutation) -> bool:
    return find_pat_q_occurrence(q, w) is None


def iter_avoiders(q: int, m: int) -> Iterator[Permutation]:
    for w in all_permutations(m):
        if avoids_pat_q(q, w):
            yield w


def enumerate_avoiders(q: int, m: int, cap: Optional[int] = None) -> List[Permutation]:
    """Avoid_q(m) in lexicographic order"""
    if q < 1 or m < 1:
        raise DomainError(f"q and degree must be positive, got q={q}, degree={m}",
                          {"q": q, "degree": m})
    limit = get_config().avoider_degree_cap if cap is None else cap
    if m > limit:
        raise ResourceCapError(
            f"Degree {m} exceeds the avoider enumeration cap {limit}",
            {"degree": m, "cap": limit},
        )
    avoiders = list(iter_avoiders(q, m))
    logger.debug("Avoiders enumerated", q=q, degree=m, count=len(avoiders))
    return avoiders


def pattern_family(q: int) -> Sequence[str]:
    """Printed forms of Pat(q)"""
    return [str(p) for p in pat(q)]
