"""
Exact distribution polynomials and the named statistics/filters behind them
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from services.patterns import avoids_pat_q
from services.perm_core import Permutation, inverse
from services import stats
from tasks.enumeration_pool import EnumerationPool, iter_slice, partition_by_first_letter
from utils.exceptions import DomainError

Statistic = Callable[[Permutation], int]
Predicate = Callable[[Permutation], bool]


@dataclass(frozen=True)
class DistributionPoly:
    """Integer polynomial sum_v coeffs[v] t^v; zero coefficients are dropped"""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {int(k): int(v) for k, v in sorted(self.coeffs.items()) if v}
        if any(k < 0 or v < 0 for k, v in cleaned.items()):
            raise DomainError("Distribution coefficients and exponents must be nonnegative")
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "DistributionPoly":
        return cls(Counter(values))

    def __add__(self, other: "DistributionPoly") -> "DistributionPoly":
        merged = Counter(self.coeffs)
        merged.update(other.coeffs)
        return DistributionPoly(merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistributionPoly):
            return NotImplemented
        return dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    @property
    def total(self) -> int:
        return sum(self.coeffs.values())

    def is_empty(self) -> bool:
        return not self.coeffs

    def as_list(self) -> list:
        """Dense coefficient list indexed by exponent"""
        if not self.coeffs:
            return []
        dense = [0] * (max(self.coeffs) + 1)
        for k, v in self.coeffs.items():
            dense[k] = v
        return dense

    def to_json(self) -> Dict[str, int]:
        return {str(k): v for k, v in self.coeffs.items()}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, v in self.coeffs.items():
            if k == 0:
                terms.append(str(v))
            else:
                power = "t" if k == 1 else f"t^{k}"
                terms.append(power if v == 1 else f"{v}*{power}")
        return " + ".join(terms)


def distribution(
    population: Iterable[Permutation],
    stat: Statistic,
    filter: Optional[Predicate] = None,
) -> DistributionPoly:
    return DistributionPoly.from_values(
        stat(w) for w in population if filter is None or filter(w)
    )


# Named statistics, resolved by (group, name) so slice jobs stay picklable.

def _s_del(w: Permutation, q: int) -> int:
    return stats.del_s(w)


def _a_del(w: Permutation, q: int) -> int:
    return stats.del_a(w)


def _q_del(w: Permutation, q: int) -> int:
    return len(stats.q_del(q, w))


STATISTICS: Dict[Tuple[str, str], Callable[[Permutation, int], int]] = {
    ("s", "ell"): lambda w, q: stats.ell_s(w),
    ("s", "maj"): lambda w, q: stats.maj_s(w),
    ("s", "rmaj"): lambda w, q: stats.rmaj_s(w),
    ("s", "del"): _s_del,
    ("a", "ell"): lambda w, q: stats.ell_a(w),
    ("a", "maj"): lambda w, q: sum(stats.a_des(w)),
    ("a", "rmaj"): lambda w, q: stats.rmaj_a(w),
    ("a", "del"): _a_del,
    ("q", "ell"): lambda w, q: stats.ell_q(q, w),
    ("q", "rmaj"): lambda w, q: stats.rmaj_q(q, w),
    ("q", "del"): _q_del,
}

FILTERS: Dict[str, Callable[[Permutation, int], bool]] = {
    "none": lambda w, q: True,
    "avoids": lambda w, q: avoids_pat_q(q, w),
    "inverse-avoids": lambda w, q: avoids_pat_q(q, inverse(w)),
}


def resolve_statistic(group: str, name: str) -> Callable[[Permutation, int], int]:
    try:
        return STATISTICS[(group, name)]
    except KeyError:
        known = sorted(n for g, n in STATISTICS if g == group)
        raise DomainError(
            f"Unknown statistic {name!r} for group {group!r}",
            {"group": group, "statistic": name, "known": known},
        )


def resolve_filter(name: str) -> Callable[[Permutation, int], bool]:
    try:
        return FILTERS[name]
    except KeyError:
        raise DomainError(f"Unknown filter {name!r}", {"filter": name, "known": sorted(FILTERS)})


def inverse_sets(group: str, w: Permutation, q: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Descent and delent sets of w^-1 in the group's own flavour"""
    w_inv = inverse(w)
    if group == "s":
        return stats.s_des(w_inv), stats.s_del(w_inv)
    if group == "a":
        return stats.a_des(w_inv), stats.a_del(w_inv)
    return stats.q_des(q, w_inv), stats.q_del(q, w_inv)


@dataclass(frozen=True)
class SetFilter:
    """
    Keeps elements by the descent and delent sets of their inverse.

    Alternating tables match sets contained in the given ones, as in the
    alternating equidistribution sweep; S and q tables match them exactly.
    An unset side is not constrained.
    """

    des: Optional[FrozenSet[int]] = None
    dels: Optional[FrozenSet[int]] = None
    within: bool = False

    @classmethod
    def for_group(
        cls, group: str, des: Optional[Iterable[int]] = None, dels: Optional[Iterable[int]] = None
    ) -> "SetFilter":
        return cls(
            des=None if des is None else frozenset(des),
            dels=None if dels is None else frozenset(dels),
            within=group == "a",
        )

    @property
    def active(self) -> bool:
        return self.des is not None or self.dels is not None

    @property
    def mode(self) -> str:
        return "within" if self.within else "equal"

    def _match(self, observed: FrozenSet[int], wanted: Optional[FrozenSet[int]]) -> bool:
        if wanted is None:
            return True
        return observed <= wanted if self.within else observed == wanted

    def accepts(self, group: str, w: Permutation, q: int) -> bool:
        if not self.active:
            return True
        des, dels = inverse_sets(group, w, q)
        return self._match(des, self.des) and self._match(dels, self.dels)


def distribution_slice(
    group: str, degree: int, stat_name: str, filter_name: str, q: int, sets: SetFilter, first: int
) -> Dict[int, int]:
    stat = resolve_statistic(group, stat_name)
    keep = resolve_filter(filter_name)
    counts: Counter = Counter()
    for w in iter_slice(group, degree, first):
        if keep(w, q) and sets.accepts(group, w, q):
            counts[stat(w, q)] += 1
    return dict(counts)


def distribution_table(
    group: str,
    degree: int,
    stat_name: str,
    filter_name: str = "none",
    q: int = 1,
    workers: int = 1,
    sets: Optional[SetFilter] = None,
) -> DistributionPoly:
    """Distribution of a named statistic over a whole group, fanned out by first letter"""
    resolve_statistic(group, stat_name)
    resolve_filter(filter_name)
    if group == "a" and degree < 3:
        raise DomainError("Alternating tables need degree at least 3", {"degree": degree})
    if group == "q" and not 1 <= q <= degree:
        raise DomainError(f"q must satisfy 1 <= q <= degree, got q={q}", {"q": q, "degree": degree})
    job = partial(distribution_slice, group, degree, stat_name, filter_name, q, sets or SetFilter())
    parts = EnumerationPool(workers).map_slices(job, partition_by_first_letter(degree))
    total = DistributionPoly()
    for part in parts:
        total = total + DistributionPoly(part)
    return total
