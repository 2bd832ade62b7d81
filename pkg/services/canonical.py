"""
Canonical presentations of S_n and A_{n+1}.

Every w in S_n factors uniquely as w_1 w_2 ... w_{n-1} with w_j drawn from
R^S_j = {1, s_j, s_j s_{j-1}, ..., s_j ... s_1}; every even v of degree n+1
factors uniquely as v_1 ... v_{n-1} with v_j in
R^A_j = {1, a_j, a_j a_{j-1}, ..., a_j ... a_2, a_j ... a_2 a_1, a_j ... a_2 a_1^-1}
where a_i = s_1 s_{i+1}. Factors are stored for every j, Identity included.
"""

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from services.perm_core import Permutation, is_even
from utils.exceptions import (
    DomainError,
    InvariantViolation,
    ParityError,
    WordFormatError,
)


class FactorKind(str, Enum):
    IDENTITY = "identity"
    RUN = "run"
    TAIL = "tail"


@dataclass(frozen=True)
class Generator:
    """One letter of a generator word: s_k, a_k, a_k^-1 or the identity e"""

    family: str
    index: int = 0
    power: int = 1

    def __str__(self) -> str:
        if self.family == "e":
            return "e"
        suffix = "^-1" if self.power == -1 else ""
        return f"{self.family}_{self.index}{suffix}"


E = Generator("e")


def s(k: int) -> Generator:
    return Generator("s", k)


def a(k: int, power: int = 1) -> Generator:
    return Generator("a", k, power)


@dataclass(frozen=True)
class SFactor:
    """w_j = s_j s_{j-1} ... s_ell, or Identity when ell is None"""

    j: int
    ell: Optional[int] = None

    def __post_init__(self) -> None:
        if self.j < 1 or (self.ell is not None and not 1 <= self.ell <= self.j):
            raise InvariantViolation(f"Invalid S-factor j={self.j} ell={self.ell}")

    @property
    def kind(self) -> FactorKind:
        return FactorKind.IDENTITY if self.ell is None else FactorKind.RUN

    @property
    def length(self) -> int:
        return 0 if self.ell is None else self.j - self.ell + 1

    def is_full_run(self) -> bool:
        """Whether the factor is s_j ... s_1"""
        return self.ell == 1

    def word(self) -> Tuple[Generator, ...]:
        if self.ell is None:
            return ()
        return tuple(s(k) for k in range(self.j, self.ell - 1, -1))

    def __str__(self) -> str:
        return "(1)" if self.ell is None else "(" + " ".join(map(str, self.word())) + ")"


@dataclass(frozen=True)
class AFactor:
    """v_j in R^A_j: Identity, Run(ell) = a_j ... a_ell, or Tail(sign) = a_j ... a_2 a_1^sign"""

    j: int
    kind: FactorKind = FactorKind.IDENTITY
    ell: Optional[int] = None
    sign: Optional[int] = None

    def __post_init__(self) -> None:
        ok = self.j >= 1
        if self.kind is FactorKind.IDENTITY:
            ok = ok and self.ell is None and self.sign is None
        elif self.kind is FactorKind.RUN:
            ok = ok and self.ell is not None and 2 <= self.ell <= self.j and self.sign is None
        else:
            ok = ok and self.ell is None and self.sign in (1, -1)
        if not ok:
            raise InvariantViolation(
                f"Invalid A-factor j={self.j} kind={self.kind.value} "
                f"ell={self.ell} sign={self.sign}"
            )

    @property
    def length(self) -> int:
        if self.kind is FactorKind.IDENTITY:
            return 0
        if self.kind is FactorKind.RUN:
            return self.j - self.ell + 1
        return self.j

    def word(self) -> Tuple[Generator, ...]:
        if self.kind is FactorKind.IDENTITY:
            return ()
        if self.kind is FactorKind.RUN:
            return tuple(a(k) for k in range(self.j, self.ell - 1, -1))
        return tuple(a(k) for k in range(self.j, 1, -1)) + (a(1, self.sign),)

    def __str__(self) -> str:
        if self.kind is FactorKind.IDENTITY:
            return "(1)"
        return "(" + " ".join(map(str, self.word())) + ")"


@dataclass(frozen=True)
class SCanonical:
    """Canonical presentation of an element of S_n"""

    n: int
    factors: Tuple[SFactor, ...]

    @property
    def length(self) -> int:
        return sum(f.length for f in self.factors)

    def factor(self, j: int) -> SFactor:
        return self.factors[j - 1]

    def word(self) -> Tuple[Generator, ...]:
        return tuple(g for f in self.factors for g in f.word())

    def __str__(self) -> str:
        shown = [str(f) for f in self.factors if f.kind is not FactorKind.IDENTITY]
        return "".join(shown) or "e"


@dataclass(frozen=True)
class ACanonical:
    """Canonical presentation of an element of A_{n+1}"""

    n: int
    factors: Tuple[AFactor, ...]

    @property
    def degree(self) -> int:
        return self.n + 1

    @property
    def length(self) -> int:
        return sum(f.length for f in self.factors)

    def factor(self, j: int) -> AFactor:
        return self.factors[j - 1]

    def word(self) -> Tuple[Generator, ...]:
        return tuple(g for f in self.factors for g in f.word())

    def __str__(self) -> str:
        shown = [str(f) for f in self.factors if f.kind is not FactorKind.IDENTITY]
        return "".join(shown) or "e"


def enumerate_r_s(j: int) -> List[SFactor]:
    """R^S_j in the order 1, s_j, s_j s_{j-1}, ..., s_j ... s_1"""
    if j < 1:
        raise DomainError(f"Factor index must be positive, got {j}", {"j": j})
    return [SFactor(j)] + [SFactor(j, ell) for ell in range(j, 0, -1)]


def enumerate_r_a(j: int) -> List[AFactor]:
    """R^A_j in the order 1, a_j, ..., a_j ... a_2, then the two tails"""
    if j < 1:
        raise DomainError(f"Factor index must be positive, got {j}", {"j": j})
    runs = [AFactor(j, FactorKind.RUN, ell=ell) for ell in range(j, 1, -1)]
    tails = [AFactor(j, FactorKind.TAIL, sign=1), AFactor(j, FactorKind.TAIL, sign=-1)]
    return [AFactor(j)] + runs + tails


def _s_letters(gen: Generator) -> Tuple[int, ...]:
    """Indices of the Coxeter letters a generator expands to, left to right"""
    if gen.family == "e":
        return ()
    if gen.family == "s":
        return (gen.index,)
    if gen.power == 1:
        return (1, gen.index + 1)
    return (gen.index + 1, 1)


def _apply_letters(images: List[int], letters: Sequence[int]) -> None:
    # Right multiplication by s_k swaps one-line positions k and k+1.
    for k in letters:
        images[k - 1], images[k] = images[k], images[k - 1]


def _check_degree(gen: Generator, degree: int) -> None:
    top = max(_s_letters(gen), default=0)
    if top >= degree:
        raise WordFormatError(
            f"Generator {gen} needs degree at least {top + 1}, got {degree}",
            {"generator": str(gen), "degree": degree},
        )


def word_to_perm(word: Sequence[Generator], degree: int) -> Permutation:
    """Compose a generator word left to right starting from the identity"""
    if degree < 1:
        raise DomainError(f"Degree must be positive, got {degree}", {"degree": degree})
    images = list(range(1, degree + 1))
    for gen in word:
        _check_degree(gen, degree)
        _apply_letters(images, _s_letters(gen))
    return Permutation.trusted(images)


_WORD_TOKEN = re.compile(r"^(?:(e)|([sa])_?(\d+)(\^-1)?)$")


def parse_word(text: str) -> Tuple[Generator, ...]:
    """Parse tokens s<k>, a<k>, a<k>^-1 or e; parentheses are ignored"""
    cleaned = text.replace("(", " ").replace(")", " ").replace(",", " ")
    tokens = cleaned.split()
    if not tokens:
        raise WordFormatError("Empty generator word", {"text": text})
    word = []
    for token in tokens:
        match = _WORD_TOKEN.match(token)
        if match is None:
            raise WordFormatError(f"Bad generator token {token!r}", {"token": token})
        if match.group(1):
            word.append(E)
            continue
        family, index, inv = match.group(2), int(match.group(3)), match.group(4)
        if index < 1:
            raise WordFormatError(f"Generator index must be positive: {token!r}", {"token": token})
        if inv and family == "s":
            raise WordFormatError(f"s_k is an involution, write {family}{index}", {"token": token})
        word.append(Generator(family, index, -1 if inv else 1))
    return tuple(word)


def s_canonical(w: Permutation) -> SCanonical:
    """S-procedure: pull each largest remaining value to its place on the right"""
    n = w.n
    remaining = list(w.images)
    factors: List[SFactor] = []
    for j in range(n - 1, 0, -1):
        position = remaining.index(j + 1) + 1
        factors.append(SFactor(j) if position == j + 1 else SFactor(j, position))
        remaining.pop(position - 1)
    factors.reverse()
    return SCanonical(n, tuple(factors))


def expand_s(p: SCanonical) -> Permutation:
    images = list(range(1, p.n + 1))
    for factor in p.factors:
        if factor.ell is not None:
            _apply_letters(images, range(factor.j, factor.ell - 1, -1))
    return Permutation.trusted(images)


def expand_a(p: ACanonical) -> Permutation:
    images = list(range(1, p.degree + 1))
    for factor in p.factors:
        for gen in factor.word():
            _apply_letters(images, _s_letters(gen))
    return Permutation.trusted(images)


@lru_cache(maxsize=None)
def _peel_table(j: int) -> Dict[int, Tuple[AFactor, Tuple[int, ...]]]:
    """For each u in R^A_j, key u^{-1}(j+2) -> (u, one-line of u^{-1} on 1..j+2)"""
    table: Dict[int, Tuple[AFactor, Tuple[int, ...]]] = {}
    for candidate in enumerate_r_a(j):
        prefix = tuple(AFactor(k) for k in range(1, j))
        u = expand_a(ACanonical(j + 1, prefix + (candidate,)))
        u_inv = [0] * (j + 2)
        for position, value in enumerate(u.images, start=1):
            u_inv[value - 1] = position
        key = u_inv[j + 1]
        if key in table:
            raise InvariantViolation(f"R^A_{j} candidates collide on point {j + 2}")
        table[key] = (candidate, tuple(u_inv))
    return table


def a_canonical(v: Permutation) -> ACanonical:
    """Peel the factors v_{n-1}, ..., v_1 off the right end of v"""
    if not is_even(v):
        raise ParityError("A-canonical presentation requires an even permutation",
                          {"permutation": list(v.images)})
    degree = v.n
    if degree < 2:
        raise DomainError("A-canonical presentation needs degree at least 2", {"degree": degree})
    n = degree - 1
    current = list(v.images)
    factors: List[AFactor] = []
    for j in range(n - 1, 0, -1):
        position = current.index(j + 2) + 1
        candidate, u_inv = _peel_table(j)[position]
        # current <- current * u^{-1}; u^{-1} fixes every point above j+2
        prefix = [current[x - 1] for x in u_inv]
        current[: j + 2] = prefix
        factors.append(candidate)
    if current[:2] != [1, 2]:
        raise InvariantViolation("A-canonical peel left a nontrivial remainder",
                                 {"remainder": current})
    factors.reverse()
    return ACanonical(n, tuple(factors))


def _t_tokens(x: int) -> List[Tuple[int, int]]:
    # s_x s_1 as Mitsuhashi letters
    if x >= 3:
        return [(x - 1, 1)]
    if x == 2:
        return [(1, -1)]
    return []


def _u_tokens(y: int) -> List[Tuple[int, int]]:
    # s_1 s_y as Mitsuhashi letters
    return [(y - 1, 1)] if y >= 2 else []


def a_procedure(v: Permutation) -> ACanonical:
    """Literal rewriting: pair the S-word, insert s_1 s_1 in each pair, regroup.

    Kept as a cross-check for a_canonical.
    """
    if not is_even(v):
        raise ParityError("A-procedure requires an even permutation",
                          {"permutation": list(v.images)})
    n = v.n - 1
    letters = [g.index for g in s_canonical(v).word()]
    if len(letters) % 2:
        raise InvariantViolation("Even permutation produced an odd-length S-word")

    tokens: List[Tuple[int, int]] = []
    for x, y in zip(letters[0::2], letters[1::2]):
        tokens.extend(_t_tokens(x))
        tokens.extend(_u_tokens(y))

    groups: List[List] = []  # [j, last, closed, sign]
    for k, sign in tokens:
        if groups and not groups[-1][2] and groups[-1][1] == 2 and k == 1:
            groups[-1][1] = 1
            groups[-1][2] = True
            groups[-1][3] = sign
            continue
        if groups and not groups[-1][2] and sign == 1 and k == groups[-1][1] - 1:
            groups[-1][1] = k
            continue
        if groups and k <= groups[-1][0]:
            raise InvariantViolation("A-procedure regrouping is not canonical",
                                     {"tokens": tokens})
        if k == 1:
            groups.append([1, 1, True, sign])
        elif sign == -1:
            raise InvariantViolation("A-procedure produced a_k^-1 with k > 1")
        else:
            groups.append([k, k, False, None])

    by_index: Dict[int, AFactor] = {}
    for j, last, closed, sign in groups:
        if closed:
            by_index[j] = AFactor(j, FactorKind.TAIL, sign=sign)
        else:
            by_index[j] = AFactor(j, FactorKind.RUN, ell=last)
    factors = tuple(by_index.get(j, AFactor(j)) for j in range(1, n))
    return ACanonical(n, factors)


def a_length(v: Permutation) -> int:
    """ell_A: generator count of the A-canonical presentation"""
    return a_canonical(v).length

