"""
Permutation statistics on S_n, A_{n+1} and the q-analogues on S_{n+q-1}
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List

from services.canonical import (
    a,
    a_canonical,
    s_canonical,
    word_to_perm,
)
from services.perm_core import Permutation, compose, inversion_count, is_even
from utils.exceptions import DomainError, InvariantViolation, ParityError


@dataclass(frozen=True)
class SStatRecord:
    des: FrozenSet[int]
    maj: int
    rmaj: int
    ell: int
    del_set: FrozenSet[int]
    del_count: int
    ltrm: FrozenSet[int]


@dataclass(frozen=True)
class AStatRecord:
    des: FrozenSet[int]
    maj: int
    rmaj: int
    ell: int
    del_set: FrozenSet[int]
    del_count: int
    ltram: FrozenSet[int]


@dataclass(frozen=True)
class QStatRecord:
    q: int
    m: int
    ell_q: int
    del_q_set: FrozenSet[int]
    des_q: FrozenSet[int]
    rmaj_q: int
    ltrm_q: FrozenSet[int]


def _smaller_left_counts(w: Permutation) -> List[int]:
    """counts[j-1] = #{i < j : w(i) < w(j)}"""
    images = w.images
    return [sum(1 for x in images[:j] if x < images[j]) for j in range(len(images))]


# Symmetric group

def s_des(w: Permutation) -> FrozenSet[int]:
    images = w.images
    return frozenset(i for i in range(1, w.n) if images[i - 1] > images[i])


def maj_s(w: Permutation) -> int:
    return sum(s_des(w))


def rmaj_s(w: Permutation) -> int:
    return sum(w.n - i for i in s_des(w))


def ell_s(w: Permutation) -> int:
    return inversion_count(w)


def s_del(w: Permutation) -> FrozenSet[int]:
    """Positions of left-to-right minima, the first excluded"""
    result = set()
    low = w.images[0]
    for position, value in enumerate(w.images[1:], start=2):
        if value < low:
            result.add(position)
            low = value
    return frozenset(result)


def del_s(w: Permutation) -> int:
    return len(s_del(w))


def ltrm(w: Permutation) -> FrozenSet[int]:
    """Letters of the left-to-right minima"""
    return frozenset(w(j) for j in s_del(w) | {1})


def rtlm(w: Permutation) -> FrozenSet[int]:
    """Letters of the right-to-left minima"""
    result = set()
    low = w.n + 1
    for value in reversed(w.images):
        if value < low:
            result.add(value)
            low = value
    return frozenset(result)


def s_stats(w: Permutation) -> SStatRecord:
    des = s_des(w)
    ell = inversion_count(w)
    if ell != s_canonical(w).length:
        raise InvariantViolation("Inversion count disagrees with canonical length",
                                 {"permutation": list(w.images)})
    del_set = s_del(w)
    return SStatRecord(
        des=des,
        maj=sum(des),
        rmaj=sum(w.n - i for i in des),
        ell=ell,
        del_set=del_set,
        del_count=len(del_set),
        ltrm=frozenset(w(j) for j in del_set | {1}),
    )


# Alternating group

def _require_even(v: Permutation, operation: str) -> None:
    if v.n < 3:
        raise DomainError(f"{operation} needs degree at least 3, got {v.n}",
                          {"operation": operation, "degree": v.n})
    if not is_even(v):
        raise ParityError(f"{operation} requires an even permutation",
                          {"operation": operation, "permutation": list(v.images)})


def ell_a(v: Permutation) -> int:
    return a_canonical(v).length


def a_des(v: Permutation) -> FrozenSet[int]:
    """{1 <= i <= n-1 : ell_A(v) >= ell_A(v a_i)}, compared literally"""
    _require_even(v, "a_des")
    degree = v.n
    length = ell_a(v)
    result = set()
    for i in range(1, degree - 1):
        moved = compose(v, word_to_perm((a(i),), degree))
        if length >= ell_a(moved):
            result.add(i)
    return frozenset(result)


def rmaj_a(v: Permutation) -> int:
    n = v.n - 1
    return sum(n - i for i in a_des(v))


def a_del(v: Permutation) -> FrozenSet[int]:
    """{2 < j <= n+1 : at most one i < j with v(i) < v(j)}"""
    return q_del(2, v)


def del_a(v: Permutation) -> int:
    return len(a_del(v))


def ltram(v: Permutation) -> FrozenSet[int]:
    return frozenset(v(j) for j in a_del(v) | {1, 2})


def a_stats(v: Permutation) -> AStatRecord:
    _require_even(v, "a_stats")
    n = v.n - 1
    des = a_des(v)
    del_set = a_del(v)
    return AStatRecord(
        des=des,
        maj=sum(des),
        rmaj=sum(n - i for i in des),
        ell=ell_a(v),
        del_set=del_set,
        del_count=len(del_set),
        ltram=frozenset(v(j) for j in del_set | {1, 2}),
    )


# q-analogues

def _require_q(q: int, m: int) -> None:
    if q < 1 or m < q:
        raise DomainError(f"q must satisfy 1 <= q <= degree, got q={q}, degree={m}",
                          {"q": q, "degree": m})


def ell_q(q: int, v: Permutation) -> int:
    """Generators s_k with k >= q in the S-canonical presentation"""
    _require_q(q, v.n)
    total = 0
    for factor in s_canonical(v).factors:
        if factor.ell is not None and factor.j >= q:
            total += factor.j - max(factor.ell, q) + 1
    return total


def q_del(q: int, v: Permutation) -> FrozenSet[int]:
    """{q < j <= m : #{i < j : v(i) < v(j)} <= q-1}"""
    _require_q(q, v.n)
    counts = _smaller_left_counts(v)
    return frozenset(j for j in range(q + 1, v.n + 1) if counts[j - 1] <= q - 1)


def ltrm_q(q: int, v: Permutation) -> FrozenSet[int]:
    positions = q_del(q, v) | set(range(1, q + 1))
    return frozenset(v(j) for j in positions)


def q_des(q: int, v: Permutation) -> FrozenSet[int]:
    """{q <= i <= m-1 : i is a descent or i+1 is in Del_q}"""
    dels = q_del(q, v)
    descents = s_des(v)
    return frozenset(i for i in range(q, v.n) if i in descents or i + 1 in dels)


def rmaj_q(q: int, v: Permutation) -> int:
    return sum(v.n - i for i in q_des(q, v))


def q_stats(q: int, v: Permutation) -> QStatRecord:
    _require_q(q, v.n)
    dels = q_del(q, v)
    des = q_des(q, v)
    return QStatRecord(
        q=q,
        m=v.n,
        ell_q=ell_q(q, v),
        del_q_set=dels,
        des_q=des,
        rmaj_q=sum(v.n - i for i in des),
        ltrm_q=frozenset(v(j) for j in dels | set(range(1, q + 1))),
    )


def shift(values: Iterable[int], offset: int) -> FrozenSet[int]:
    """Translate a set of positions by ``offset``"""
    return frozenset(x + offset for x in values)
