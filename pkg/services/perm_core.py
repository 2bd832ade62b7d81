"""
One-line-notation permutations: composition, inverse, reverse, complement,
parity, parsing and formatting.

Composition follows ``compose(a, b)(i) = a(b(i))``, so right-multiplying a
permutation by the adjacent transposition s_i swaps the entries at one-line
positions i and i+1. All positions and values are 1-indexed.
"""

import itertools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence, Tuple

from utils.exceptions import PermutationFormatError, require_same_degree


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n} stored as its one-line images"""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise PermutationFormatError("Permutation must have degree at least 1")
        seen = [False] * (n + 1)
        for value in images:
            if not isinstance(value, int) or isinstance(value, bool):
                raise PermutationFormatError(
                    f"Permutation entry {value!r} is not an integer", {"value": repr(value)}
                )
            if value < 1 or value > n:
                raise PermutationFormatError(
                    f"Value {value} out of range 1..{n}", {"value": value, "degree": n}
                )
            if seen[value]:
                raise PermutationFormatError(
                    f"Duplicate value {value}", {"value": value, "degree": n}
                )
            seen[value] = True

    @classmethod
    def trusted(cls, images: Sequence[int]) -> "Permutation":
        """Build without validation; callers guarantee a bijection."""
        perm = object.__new__(cls)
        object.__setattr__(perm, "images", tuple(images))
        return perm

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __str__(self) -> str:
        return format_permutation(self)


def identity(n: int) -> Permutation:
    return Permutation.trusted(range(1, n + 1))


def longest(n: int) -> Permutation:
    """rho = [n, n-1, ..., 1]"""
    return Permutation.trusted(range(n, 0, -1))


def adjacent_transposition(i: int, n: int) -> Permutation:
    """s_i in S_n as a one-line permutation"""
    if not 1 <= i <= n - 1:
        raise PermutationFormatError(
            f"s_{i} is not a generator of S_{n}", {"index": i, "degree": n}
        )
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation.trusted(images)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a*b)(i) = a(b(i))"""
    require_same_degree(a.n, b.n, "compose")
    ai = a.images
    return Permutation.trusted([ai[x - 1] for x in b.images])


def inverse(a: Permutation) -> Permutation:
    result = [0] * a.n
    for position, value in enumerate(a.images, start=1):
        result[value - 1] = position
    return Permutation.trusted(result)


def rev(a: Permutation) -> Permutation:
    return Permutation.trusted(a.images[::-1])


def com(a: Permutation) -> Permutation:
    top = a.n + 1
    return Permutation.trusted([top - x for x in a.images])


def inversion_count(a: Permutation) -> int:
    images = a.images
    n = len(images)
    return sum(1 for i in range(n) for j in range(i + 1, n) if images[i] > images[j])


def parity(a: Permutation) -> Parity:
    # Cycle decomposition: sign is (-1)^(n - #cycles).
    seen = [False] * (a.n + 1)
    cycles = 0
    for start in range(1, a.n + 1):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = a.images[x - 1]
    return Parity.EVEN if (a.n - cycles) % 2 == 0 else Parity.ODD


def is_even(a: Permutation) -> bool:
    return parity(a) is Parity.EVEN


_TOKEN = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse whitespace- or comma-separated integers, optionally bracketed"""
    stripped = text.strip()
    if stripped[:1] in "[(" and stripped[-1:] in "])":
        stripped = stripped[1:-1]
    tokens = [t for t in _TOKEN.split(stripped) if t]
    if not tokens:
        raise PermutationFormatError("Empty permutation text", {"text": text})
    values = []
    for token in tokens:
        if not token.isdigit():
            raise PermutationFormatError(
                f"Malformed token {token!r}", {"token": token, "text": text}
            )
        values.append(int(token))
    return Permutation(tuple(values))


def format_permutation(a: Permutation, style: str = "brackets") -> str:
    """Render a permutation; styles: brackets, plain, compact"""
    if style == "brackets":
        return "[" + ",".join(str(x) for x in a.images) + "]"
    if style == "plain":
        return " ".join(str(x) for x in a.images)
    if style == "compact":
        # Word form as printed in tableaux; only unambiguous below 10.
        if a.n >= 10:
            return " ".join(str(x) for x in a.images)
        return "".join(str(x) for x in a.images)
    raise PermutationFormatError(f"Unknown format style {style!r}", {"style": style})


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order"""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation.trusted(images)


def all_even_permutations(n: int) -> Iterator[Permutation]:
    """All of A_n in lexicographic one-line order"""
    for perm in all_permutations(n):
        if is_even(perm):
            yield perm


def permutations_starting_with(n: int, first: int) -> Iterator[Permutation]:
    """Lexicographic slice of S_n whose first letter is ``first``"""
    rest = [x for x in range(1, n + 1) if x != first]
    for tail in itertools.permutations(rest):
        yield Permutation.trusted((first,) + tail)


def standardize(values: Iterable[int]) -> Tuple[int, ...]:
    """Replace distinct values by their ranks 1..k keeping relative order"""
    values = tuple(values)
    order = sorted(values)
    rank = {v: i for i, v in enumerate(order, start=1)}
    return tuple(rank[v] for v in values)
