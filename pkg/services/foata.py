"""
Foata's second fundamental transformation on injective words.

gamma(x, r) splits r into compartments that each end in a letter on the same
side of x as the last letter of r, then rotates every compartment right by
one. phi applies gamma letter by letter; rtl_phi is rev * phi * rev, computed
from the right.
"""

from typing import Callable, List, Sequence, Tuple

from services.perm_core import Permutation, rev
from utils.exceptions import DomainError

Word = Tuple[int, ...]


def _as_word(letters: Sequence[int], operation: str) -> Word:
    word = tuple(letters)
    if not word:
        raise DomainError(f"{operation}: empty word", {"operation": operation})
    if len(set(word)) != len(word):
        raise DomainError(f"{operation}: letters must be distinct",
                          {"operation": operation, "word": list(word)})
    return word


def _side(x: int, pivot: int) -> Callable[[int], bool]:
    if pivot <= x:
        return lambda letter: letter <= x
    return lambda letter: letter > x


def _cut_after(word: Word, marks: Callable[[int], bool]) -> List[List[int]]:
    blocks: List[List[int]] = []
    current: List[int] = []
    for letter in word:
        current.append(letter)
        if marks(letter):
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    return blocks


def _cut_before(word: Word, marks: Callable[[int], bool]) -> List[List[int]]:
    blocks: List[List[int]] = []
    for letter in word:
        if marks(letter) or not blocks:
            blocks.append([letter])
        else:
            blocks[-1].append(letter)
    return blocks


def _rotate_right(blocks: List[List[int]]) -> Word:
    return tuple(x for block in blocks for x in [block[-1]] + block[:-1])


def _rotate_left(blocks: List[List[int]]) -> Word:
    return tuple(x for block in blocks for x in block[1:] + [block[0]])


def gamma(x: int, r: Sequence[int]) -> Word:
    word = _as_word(r, "gamma")
    if x in word:
        raise DomainError(f"gamma: letter {x} already occurs in the word",
                          {"letter": x, "word": list(word)})
    return _rotate_right(_cut_after(word, _side(x, word[-1])))


def gamma_inverse(x: int, c: Sequence[int]) -> Word:
    word = _as_word(c, "gamma_inverse")
    if x in word:
        raise DomainError(f"gamma_inverse: letter {x} already occurs in the word",
                          {"letter": x, "word": list(word)})
    return _rotate_left(_cut_before(word, _side(x, word[0])))


def phi_trace(r: Sequence[int]) -> List[Word]:
    """Rows r'_1, ..., r'_m with r'_i = phi(x_1 ... x_i)"""
    word = _as_word(r, "phi")
    rows = [word[:1]]
    for x in word[1:]:
        rows.append(gamma(x, rows[-1]) + (x,))
    return rows


def phi(r: Sequence[int]) -> Word:
    return phi_trace(r)[-1]


def phi_recursive(r: Sequence[int]) -> Word:
    """phi(r x) = gamma_x(phi(r)) x, evaluated straight from the recursion"""
    word = _as_word(r, "phi")
    if len(word) == 1:
        return word
    return gamma(word[-1], phi_recursive(word[:-1])) + (word[-1],)


def phi_inverse(r: Sequence[int]) -> Word:
    word = _as_word(r, "phi_inverse")
    peeled: List[int] = []
    while len(word) > 1:
        x = word[-1]
        peeled.append(x)
        word = gamma_inverse(x, word[:-1])
    peeled.append(word[0])
    return tuple(reversed(peeled))


def rtl_phi_trace(w: Permutation) -> List[Word]:
    """Rows w'_1, ..., w'_m built from the right: w'_1 = x_m, w'_m = rtl_phi(w)"""
    word = _as_word(w.images, "rtl_phi")
    rows = [word[-1:]]
    for y in reversed(word[:-1]):
        current = rows[-1]
        rows.append((y,) + _rotate_left(_cut_before(current, _side(y, current[0]))))
    return rows


def rtl_phi(w: Permutation) -> Permutation:
    return Permutation.trusted(rtl_phi_trace(w)[-1])


def rtl_phi_by_reversal(w: Permutation) -> Permutation:
    """rev(phi(rev(w)))"""
    return rev(Permutation.trusted(phi(rev(w).images)))


def rtl_phi_inverse(w: Permutation) -> Permutation:
    return rev(Permutation.trusted(phi_inverse(rev(w).images)))


def phi_permutation(w: Permutation) -> Permutation:
    return Permutation.trusted(phi(w.images))


def phi_inverse_permutation(w: Permutation) -> Permutation:
    return Permutation.trusted(phi_inverse(w.images))
