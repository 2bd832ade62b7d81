"""
Exhaustive verification of the equidistribution theorems, lemma suites and
oracle equivalences.

Every checker enumerates its population in lexicographic order, fans the
first-letter slices out over EnumerationPool and merges the slices in key
order, so reports are identical for any worker count.
"""

import itertools
import math
import time
from collections import Counter as Tally, defaultdict
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from services import stats
from services.bijections import psi
from services.canonical import (
    ACanonical,
    SCanonical,
    a_canonical,
    enumerate_r_a,
    enumerate_r_s,
    expand_a,
    expand_s,
    s_canonical,
)
from services.covering import f
from services.patterns import avoids_pat_q
from services.perm_core import Permutation, all_permutations, inverse, is_even
from services.verification.distribution import DistributionPoly, distribution_table
from services.verification.registry import (
    get_property,
    property_registry,
    resolve_image_map,
)
from schemas.reports import Counterexample, ReportStatus, VerifyReport
from tasks.enumeration_pool import EnumerationPool, iter_slice, partition_by_first_letter
from utils.config import get_config
from utils.error_codes import error_code_for
from utils.exceptions import DomainError, PermStatsError, ResourceCapError
from utils.metrics_collector import get_metrics_collector
from utils.structured_logging import get_structured_logger

logger = get_structured_logger(__name__)

Images = Tuple[int, ...]


def _mask(values: Iterable[int]) -> int:
    result = 0
    for x in values:
        result |= 1 << x
    return result


def _unmask(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _subsets(ground: Sequence[int]) -> Iterable[FrozenSet[int]]:
    for size in range(len(ground) + 1):
        for combo in itertools.combinations(ground, size):
            yield frozenset(combo)


def require_cap(degree: int, slow: bool) -> None:
    cap = get_config().resolve_degree_cap(slow)
    if degree > cap:
        hint = "" if slow else " (pass slow=True to raise it)"
        raise ResourceCapError(
            f"Degree {degree} exceeds the enumeration cap {cap}{hint}",
            {"degree": degree, "cap": cap, "slow": slow},
        )


def resolve_workers(workers: Optional[int]) -> int:
    return get_config().workers if workers is None else workers


class _Run:
    """Times one checker and turns its outcome into a logged report"""

    def __init__(self, theorem: str, params: Dict[str, Any]):
        self.theorem = theorem
        self.params = params
        self.started = time.perf_counter()
        logger.info("Verification started", theorem=theorem, params=params)

    def finish(
        self,
        population: int,
        counterexample: Optional[Counterexample] = None,
        notes: Sequence[str] = (),
    ) -> VerifyReport:
        elapsed_ms = (time.perf_counter() - self.started) * 1000.0
        status = ReportStatus.FAIL if counterexample is not None else ReportStatus.PASS
        report = VerifyReport(
            theorem=self.theorem,
            params=self.params,
            status=status,
            counterexample=counterexample,
            population=population,
            elapsed_ms=round(elapsed_ms, 3),
            notes=list(notes),
        )
        log = logger.info if report.passed else logger.warning
        log("Verification finished", theorem=self.theorem, status=status.value,
            population=population, elapsed_ms=report.elapsed_ms)
        get_metrics_collector().record_verification(self.theorem, status.value, elapsed_ms / 1000.0)
        return report


# Element-wise scans

@dataclass
class SliceScan:
    population: int = 0
    failures: Dict[str, Tuple[Images, Dict[str, Any]]] = field(default_factory=dict)
    images: Dict[str, List[Tuple[Images, Images]]] = field(default_factory=dict)


def scan_slice(
    names: Tuple[str, ...],
    group: str,
    degree: int,
    q: int,
    image_maps: Tuple[str, ...],
    first: int,
) -> SliceScan:
    """Check every named property on one slice, keeping the first failure of each"""
    props = [get_property(name) for name in names]
    maps = {name: resolve_image_map(name) for name in image_maps}
    scan = SliceScan(images={name: [] for name in image_maps})
    for w in iter_slice(group, degree, first):
        scan.population += 1
        for prop in props:
            if prop.name in scan.failures:
                continue
            try:
                observed = prop.check(w, q)
            except PermStatsError as exc:
                observed = {"error": exc.message, "code": error_code_for(exc).value}
            if observed is not None:
                scan.failures[prop.name] = (w.images, observed)
        for name, image_map in maps.items():
            scan.images[name].append((w.images, image_map(w, q).images))
    return scan


def _scan(
    names: Sequence[str],
    group: str,
    degree: int,
    q: int,
    image_maps: Sequence[str],
    workers: int,
) -> SliceScan:
    job = partial(scan_slice, tuple(names), group, degree, q, tuple(image_maps))
    parts = EnumerationPool(workers).map_slices(job, partition_by_first_letter(degree))
    merged = SliceScan(images={name: [] for name in image_maps})
    for part in parts:
        merged.population += part.population
        for name, failure in part.failures.items():
            merged.failures.setdefault(name, failure)
        for name, pairs in part.images.items():
            merged.images[name].extend(pairs)
    get_metrics_collector().record_enumeration(group, degree, merged.population)
    return merged


def _bijection_failure(
    image_map: str, group: str, degree: int, q: int, pairs: List[Tuple[Images, Images]]
) -> Optional[Counterexample]:
    seen: Dict[Images, Images] = {}
    for preimage, image in pairs:
        if group == "a" and not is_even(Permutation.trusted(image)):
            return Counterexample(
                permutation=list(preimage), degree=degree, q=q,
                observed={"image_map": image_map, "image": list(image), "reason": "odd image"},
            )
        if image in seen:
            return Counterexample(
                permutation=list(preimage), degree=degree, q=q,
                observed={"image_map": image_map, "image": list(image),
                          "other_preimage": list(seen[image])},
            )
        seen[image] = preimage
    return None


Plan = List[Tuple[str, int, int]]


def _plan(n_cap: int, q_cap: int, groups: Sequence[str]) -> Plan:
    plan: Plan = []
    if "s" in groups:
        plan += [("s", d, 1) for d in range(1, n_cap + 1)]
    if "a" in groups:
        plan += [("a", d, 1) for d in range(3, n_cap + 1)]
    if "q" in groups:
        plan += [("q", m, q) for m in range(1, n_cap + 1) for q in range(1, min(q_cap, m) + 1)]
    return plan


def _run_property_suite(
    prefix: str,
    names: Sequence[str],
    plan: Plan,
    workers: int,
    image_maps: Sequence[str] = (),
    params: Optional[Dict[str, Any]] = None,
) -> List[VerifyReport]:
    """One report per property, plus one per image map bijectivity check"""
    params = params or {}
    runs = {name: _Run(f"{prefix}:{name}", params) for name in names}
    bijection_runs = {m: _Run(f"{prefix}:{m.replace('_', '-')}-bijection", params) for m in image_maps}
    population: Dict[str, int] = defaultdict(int)
    failures: Dict[str, Counterexample] = {}

    for group, degree, q in plan:
        group_names = [n for n in names if get_property(n).group == group
                       and degree >= get_property(n).min_degree]
        if not group_names and not image_maps:
            continue
        scan = _scan(group_names, group, degree, q, image_maps, workers)
        for name in group_names:
            population[name] += scan.population
            if name in scan.failures and name not in failures:
                images, observed = scan.failures[name]
                failures[name] = Counterexample(
                    permutation=list(images), property=name, degree=degree, q=q, observed=observed
                )
        for image_map, pairs in scan.images.items():
            key = f"bijection:{image_map}"
            population[key] += scan.population
            if key not in failures:
                failure = _bijection_failure(image_map, group, degree, q, pairs)
                if failure is not None:
                    failures[key] = failure

    reports = [runs[name].finish(population[name], failures.get(name)) for name in names]
    reports += [
        run.finish(population[f"bijection:{m}"], failures.get(f"bijection:{m}"))
        for m, run in bijection_runs.items()
    ]
    return reports


def check_property(
    name: str, degree: int, q: int = 1, slow: bool = False, workers: Optional[int] = None
) -> VerifyReport:
    """Run one registered property over one population"""
    prop = get_property(name)
    require_cap(degree, slow)
    if degree < prop.min_degree:
        raise DomainError(f"{name} needs degree at least {prop.min_degree}",
                          {"property": name, "degree": degree})
    plan = [(prop.group, degree, q)]
    return _run_property_suite("property", [prop.name], plan, resolve_workers(workers),
                               params={"degree": degree, "q": q})[0]


def check_foata(n: int, slow: bool = False, workers: Optional[int] = None) -> List[VerifyReport]:
    """phi and rtl_phi suite over S_1 .. S_n, bijectivity included"""
    require_cap(n, slow)
    names = [p.name for p in property_registry.suite("foata")]
    return _run_property_suite("foata", names, _plan(n, 1, ["s"]), resolve_workers(workers),
                               image_maps=("phi", "rtl_phi"), params={"n": n})


def check_lemma_suite(
    n_cap: int, q_cap: int = 3, slow: bool = False, workers: Optional[int] = None
) -> List[VerifyReport]:
    """Every lemma and proposition, exhaustive for degrees up to n_cap"""
    require_cap(n_cap, slow)
    names = [p.name for p in property_registry.suite("lemmas")]
    return _run_property_suite("lemma", names, _plan(n_cap, q_cap, ["s", "a", "q"]),
                               resolve_workers(workers), params={"n_cap": n_cap, "q_cap": q_cap})


def check_oracles(
    n: int, q_cap: int = 3, slow: bool = False, workers: Optional[int] = None
) -> List[VerifyReport]:
    """Cross-checks of each fast path against its oracle, plus factor-tuple bijections"""
    require_cap(n, slow)
    names = [p.name for p in property_registry.suite("oracles")]
    reports = _run_property_suite("oracle", names, _plan(n, q_cap, ["s", "a", "q"]),
                                  resolve_workers(workers), params={"n": n, "q_cap": q_cap})
    reports.append(check_factor_tuples("s", n))
    if n >= 3:
        reports.append(check_factor_tuples("a", n))
    return reports


def _factor_tuple_failure(group: str, degree: int) -> Tuple[int, Optional[Counterexample]]:
    seen: Dict[Images, str] = {}
    count = 0
    if group == "s":
        sets = [enumerate_r_s(j) for j in range(1, degree)]
        expected = math.factorial(degree)
    else:
        sets = [enumerate_r_a(j) for j in range(1, degree - 1)]
        expected = math.factorial(degree) // 2
    for factors in itertools.product(*sets):
        count += 1
        if group == "s":
            presentation = SCanonical(degree, tuple(factors))
            perm = expand_s(presentation)
            back = s_canonical(perm)
        else:
            presentation = ACanonical(degree - 1, tuple(factors))
            perm = expand_a(presentation)
            back = a_canonical(perm) if is_even(perm) else None
        if back != presentation or perm.images in seen:
            return count, Counterexample(
                permutation=list(perm.images), degree=degree,
                observed={"group": group, "presentation": str(presentation),
                          "other": seen.get(perm.images, str(back))},
            )
        seen[perm.images] = str(presentation)
    if count != expected:
        return count, Counterexample(degree=degree,
                                     observed={"group": group, "tuples": count, "expected": expected})
    return count, None


def check_factor_tuples(group: str, max_degree: int) -> VerifyReport:
    """Factor tuples map bijectively onto S_n (or A_n) for every degree up to max_degree"""
    run = _Run(f"oracle:{group}-factor-tuples", {"max_degree": max_degree})
    population = 0
    start = 1 if group == "s" else 3
    for degree in range(start, max_degree + 1):
        count, failure = _factor_tuple_failure(group, degree)
        population += count
        if failure is not None:
            return run.finish(population, failure)
    return run.finish(population)


def check_psi_theorem(n: int, slow: bool = False, workers: Optional[int] = None) -> VerifyReport:
    """All parts of the psi theorem on A_{n+1}, element-wise plus bijectivity"""
    degree = n + 1
    if degree < 3:
        raise DomainError("psi theorem needs n >= 2", {"n": n})
    require_cap(degree, slow)
    run = _Run("psi", {"n": n})
    scan = _scan(["psi-theorem"], "a", degree, 1, ["psi"], resolve_workers(workers))
    failure = _element_failure(scan, "psi-theorem", degree, 1)
    if failure is None:
        failure = _bijection_failure("psi", "a", degree, 1, scan.images["psi"])
    return run.finish(scan.population, failure)


def check_psi_q_theorem(
    n: int, q: int, slow: bool = False, workers: Optional[int] = None
) -> VerifyReport:
    """All parts of the psi_q theorem on S_{n+q-1}, element-wise plus bijectivity"""
    if n < 1 or q < 1:
        raise DomainError("psi_q theorem needs n >= 1 and q >= 1", {"n": n, "q": q})
    degree = n + q - 1
    require_cap(degree, slow)
    run = _Run("psi-q", {"n": n, "q": q})
    scan = _scan(["psi-q-theorem"], "q", degree, q, ["psi_q"], resolve_workers(workers))
    failure = _element_failure(scan, "psi-q-theorem", degree, q)
    if failure is None:
        failure = _bijection_failure("psi_q", "q", degree, q, scan.images["psi_q"])
    return run.finish(scan.population, failure)


def _element_failure(scan: SliceScan, name: str, degree: int, q: int) -> Optional[Counterexample]:
    if name not in scan.failures:
        return None
    images, observed = scan.failures[name]
    return Counterexample(permutation=list(images), property=name, degree=degree, q=q,
                          observed=observed)


def check_macmahon(n: int, slow: bool = False, workers: Optional[int] = None) -> VerifyReport:
    """maj_S and ell_S are equidistributed on S_n"""
    require_cap(n, slow)
    run = _Run("macmahon", {"n": n})
    maj = distribution_table("s", n, "maj", workers=resolve_workers(workers))
    ell = distribution_table("s", n, "ell", workers=resolve_workers(workers))
    failure = None
    if maj != ell:
        failure = Counterexample(degree=n, observed={"maj": maj.to_json(), "ell": ell.to_json()})
    return run.finish(maj.total, failure)


# Theorem a_eq

AEqRecord = Tuple[Images, int, int, int, int, int, int, int]


def a_eq_slice(degree: int, first: int) -> List[AEqRecord]:
    """(v, Des_A(v^-1), Del_A(v^-1), rmaj_A(v), ell_A(v), same three for psi(v)) per element"""
    records = []
    for v in iter_slice("a", degree, first):
        image = psi(v)
        v_inv, image_inv = inverse(v), inverse(image)
        records.append((
            v.images,
            _mask(stats.a_des(v_inv)),
            _mask(stats.a_del(v_inv)),
            stats.rmaj_a(v),
            stats.ell_a(v),
            _mask(stats.a_des(image_inv)),
            _mask(stats.a_del(image_inv)),
            stats.ell_a(image),
        ))
    return records


def _a_eq_records(n: int, workers: int) -> List[AEqRecord]:
    degree = n + 1
    job = partial(a_eq_slice, degree)
    records: List[AEqRecord] = []
    for part in EnumerationPool(workers).map_slices(job, partition_by_first_letter(degree)):
        records.extend(part)
    get_metrics_collector().record_enumeration("a", degree, len(records))
    return records


def _a_eq_route_failure(records: List[AEqRecord], degree: int) -> Optional[Counterexample]:
    """psi keeps each element inside every filter and carries rmaj_A to ell_A"""
    for images, des, dels, rmaj, _, psi_des, psi_dels, psi_ell in records:
        if des != psi_des or dels != psi_dels or rmaj != psi_ell:
            return Counterexample(
                permutation=list(images), property="psi-theorem", degree=degree, q=1,
                observed={"des_a_inv": _unmask(des), "des_a_psi_inv": _unmask(psi_des),
                          "del_a_inv": _unmask(dels), "del_a_psi_inv": _unmask(psi_dels),
                          "rmaj_a": rmaj, "ell_a_psi": psi_ell},
            )
    return None


def _a_eq_poly_failure(
    records: List[AEqRecord], d1: FrozenSet[int], d2: FrozenSet[int], degree: int
) -> Optional[Counterexample]:
    m1, m2 = _mask(d1), _mask(d2)
    chosen = [r for r in records if r[1] & ~m1 == 0 and r[2] & ~m2 == 0]
    rmaj = DistributionPoly.from_values(r[3] for r in chosen)
    ell = DistributionPoly.from_values(r[4] for r in chosen)
    if rmaj == ell:
        return None
    return Counterexample(degree=degree, observed={
        "d1": sorted(d1), "d2": sorted(d2), "rmaj_a": rmaj.to_json(), "ell_a": ell.to_json()})


def check_a_eq(
    n: int,
    d1: Iterable[int],
    d2: Iterable[int],
    slow: bool = False,
    workers: Optional[int] = None,
) -> VerifyReport:
    """rmaj_A and ell_A agree over {v : Des_A(v^-1) in D1, Del_A(v^-1) in D2}"""
    if n < 2:
        raise DomainError("Theorem a_eq needs n >= 2", {"n": n})
    degree = n + 1
    require_cap(degree, slow)
    d1, d2 = frozenset(d1), frozenset(d2)
    run = _Run("a-eq", {"n": n, "d1": sorted(d1), "d2": sorted(d2)})
    records = _a_eq_records(n, resolve_workers(workers))
    failure = _a_eq_route_failure(records, degree) or _a_eq_poly_failure(records, d1, d2, degree)
    m1, m2 = _mask(d1), _mask(d2)
    population = sum(1 for r in records if r[1] & ~m1 == 0 and r[2] & ~m2 == 0)
    return run.finish(population, failure)


A_EQ_REGIMES = ("literal", "extended")


def check_a_eq_all(
    n: int, regime: str = "literal", slow: bool = False, workers: Optional[int] = None
) -> VerifyReport:
    """Theorem a_eq for every D1 in {1..n-1} and every D2 in the regime's ground set"""
    if regime not in A_EQ_REGIMES:
        raise DomainError(f"Unknown a_eq regime {regime!r}", {"regime": regime})
    if n < 2:
        raise DomainError("Theorem a_eq needs n >= 2", {"n": n})
    degree = n + 1
    require_cap(degree, slow)
    d1_ground = list(range(1, n))
    d2_ground = list(range(1, n)) if regime == "literal" else list(range(1, n + 2))
    run = _Run("a-eq-all", {"n": n, "regime": regime})
    records = _a_eq_records(n, resolve_workers(workers))
    notes = [f"{2 ** len(d1_ground) * 2 ** len(d2_ground)} subset pairs"]
    if regime == "literal":
        notes.append(f"D2 drawn from 1..{n - 1}; Del_A takes values in 3..{n + 1}")

    failure = _a_eq_route_failure(records, degree)
    if failure is None:
        for d1 in _subsets(d1_ground):
            for d2 in _subsets(d2_ground):
                failure = _a_eq_poly_failure(records, d1, d2, degree)
                if failure is not None:
                    break
            if failure is not None:
                break
    return run.finish(len(records), failure, notes)


# Theorems qst1 and qst2

QRecord = Tuple[Images, int, int, int, int, bool]


def q_record_slice(degree: int, q: int, first: int) -> List[QRecord]:
    """(pi, Des_q(pi^-1), Del_q(pi^-1), ell_q(pi), rmaj_q(pi), pi^-1 avoids Pat(q))"""
    records = []
    for w in iter_slice("q", degree, first):
        w_inv = inverse(w)
        records.append((
            w.images,
            _mask(stats.q_des(q, w_inv)),
            _mask(stats.q_del(q, w_inv)),
            stats.ell_q(q, w),
            stats.rmaj_q(q, w),
            avoids_pat_q(q, w_inv),
        ))
    return records


def _q_records(n: int, q: int, slow: bool, workers: int) -> List[QRecord]:
    if n < 1 or q < 1:
        raise DomainError("q theorems need n >= 1 and q >= 1", {"n": n, "q": q})
    degree = n + q - 1
    require_cap(degree, slow)
    job = partial(q_record_slice, degree, q)
    records: List[QRecord] = []
    for part in EnumerationPool(workers).map_slices(job, partition_by_first_letter(degree)):
        records.extend(part)
    get_metrics_collector().record_enumeration("q", degree, len(records))
    return records


def _q_polys(records: Iterable[QRecord]) -> Tuple[DistributionPoly, DistributionPoly]:
    chosen = list(records)
    return (DistributionPoly.from_values(r[3] for r in chosen),
            DistributionPoly.from_values(r[4] for r in chosen))


def _q_failure(
    records: List[QRecord], degree: int, q: int, labels: Dict[str, Any]
) -> Tuple[int, Optional[Counterexample]]:
    ell, rmaj = _q_polys(records)
    if ell == rmaj:
        return len(records), None
    observed = dict(labels, ell_q=ell.to_json(), rmaj_q=rmaj.to_json())
    return len(records), Counterexample(degree=degree, q=q, observed=observed)


def check_qst1(
    n: int, q: int, b1: Iterable[int], b2: Iterable[int],
    slow: bool = False, workers: Optional[int] = None,
) -> VerifyReport:
    """ell_q and rmaj_q agree over {pi : Des_q(pi^-1) = B1, Del_q(pi^-1) = B2}"""
    b1, b2 = frozenset(b1), frozenset(b2)
    run = _Run("qst1", {"n": n, "q": q, "b1": sorted(b1), "b2": sorted(b2)})
    records = _q_records(n, q, slow, resolve_workers(workers))
    m1, m2 = _mask(b1), _mask(b2)
    chosen = [r for r in records if r[1] == m1 and r[2] == m2]
    population, failure = _q_failure(chosen, n + q - 1, q, {"b1": sorted(b1), "b2": sorted(b2)})
    return run.finish(population, failure)


def check_qst1_all(n: int, q: int, slow: bool = False, workers: Optional[int] = None) -> VerifyReport:
    """Theorem qst1 for every B1, B2 in {q..n+q-1}"""
    run = _Run("qst1-all", {"n": n, "q": q})
    records = _q_records(n, q, slow, resolve_workers(workers))
    # Pairs absent from the grouping have empty populations on both sides.
    groups: Dict[Tuple[int, int], List[QRecord]] = defaultdict(list)
    for r in records:
        groups[(r[1], r[2])].append(r)
    failure = None
    for (m1, m2) in sorted(groups):
        _, failure = _q_failure(groups[(m1, m2)], n + q - 1, q,
                                {"b1": _unmask(m1), "b2": _unmask(m2)})
        if failure is not None:
            break
    notes = [f"{4 ** n} subset pairs, {len(groups)} nonempty"]
    return run.finish(len(records), failure, notes)


def check_qst2(
    n: int, q: int, b: Iterable[int], slow: bool = False, workers: Optional[int] = None
) -> VerifyReport:
    """ell_q and rmaj_q agree over {pi : pi^-1 avoids Pat(q), Des_q(pi^-1) = B}"""
    b = frozenset(b)
    run = _Run("qst2", {"n": n, "q": q, "b": sorted(b)})
    records = _q_records(n, q, slow, resolve_workers(workers))
    mask = _mask(b)
    chosen = [r for r in records if r[5] and r[1] == mask]
    population, failure = _q_failure(chosen, n + q - 1, q, {"b": sorted(b)})
    return run.finish(population, failure)


def check_qst2_all(n: int, q: int, slow: bool = False, workers: Optional[int] = None) -> VerifyReport:
    """Theorem qst2 for every B in {q..n+q-2}"""
    run = _Run("qst2-all", {"n": n, "q": q})
    records = _q_records(n, q, slow, resolve_workers(workers))
    groups: Dict[int, List[QRecord]] = defaultdict(list)
    for r in records:
        if r[5]:
            groups[r[1]].append(r)
    failure = None
    for mask in sorted(groups):
        _, failure = _q_failure(groups[mask], n + q - 1, q, {"b": _unmask(mask)})
        if failure is not None:
            break
    population = sum(len(g) for g in groups.values())
    notes = [f"{2 ** max(n - 1, 0)} subsets, {len(groups)} nonempty"]
    return run.finish(population, failure, notes)


# Replay

def _replay_image_map(ce: Counterexample) -> bool:
    image_map = resolve_image_map(ce.observed["image_map"])
    q = ce.q or 1
    first = Permutation(tuple(ce.permutation))
    image = image_map(first, q)
    if "other_preimage" in ce.observed:
        other = Permutation(tuple(ce.observed["other_preimage"]))
        return other != first and image_map(other, q) == image
    return not is_even(image)


_RERUNS: Dict[str, Callable[[Dict[str, Any], Dict[str, Any]], VerifyReport]] = {
    "a-eq": lambda p, o: check_a_eq(p["n"], o.get("d1", p.get("d1", ())), o.get("d2", p.get("d2", ())),
                                    slow=True, workers=1),
    "a-eq-all": lambda p, o: check_a_eq(p["n"], o["d1"], o["d2"], slow=True, workers=1),
    "qst1": lambda p, o: check_qst1(p["n"], p["q"], o["b1"], o["b2"], slow=True, workers=1),
    "qst1-all": lambda p, o: check_qst1(p["n"], p["q"], o["b1"], o["b2"], slow=True, workers=1),
    "qst2": lambda p, o: check_qst2(p["n"], p["q"], o["b"], slow=True, workers=1),
    "qst2-all": lambda p, o: check_qst2(p["n"], p["q"], o["b"], slow=True, workers=1),
    "macmahon": lambda p, o: check_macmahon(p["n"], slow=True, workers=1),
}


def replay(report: VerifyReport) -> bool:
    """Re-check a failing report's counterexample in isolation; True if it still fails"""
    if report.passed or report.counterexample is None:
        return False
    ce = report.counterexample
    if ce.property and ce.permutation is not None:
        w = Permutation(tuple(ce.permutation))
        try:
            return get_property(ce.property).check(w, ce.q or 1) is not None
        except PermStatsError:
            return True
    if "image_map" in ce.observed and ce.permutation is not None:
        return _replay_image_map(ce)
    if report.theorem.endswith("-factor-tuples"):
        _, failure = _factor_tuple_failure(ce.observed["group"], ce.degree)
        return failure is not None
    rerun = _RERUNS.get(report.theorem)
    if rerun is None:
        raise DomainError(f"No replay for theorem {report.theorem!r}", {"theorem": report.theorem})
    return not rerun(report.params, ce.observed).passed


def f_image_slice(degree: int, first: int) -> List[Images]:
    return [f(v).images for v in iter_slice("a", degree, first)]


def check_f_fibers(n: int, slow: bool = False, workers: Optional[int] = None) -> VerifyReport:
    """f : A_{n+1} -> S_n is onto, with |f^-1(w)| = 2^del_S(w)"""
    if n < 2:
        raise DomainError("f fibers need n >= 2", {"n": n})
    degree = n + 1
    require_cap(degree, slow)
    run = _Run("f-fibers", {"n": n})
    job = partial(f_image_slice, degree)
    fibers: Tally = Tally()
    for part in EnumerationPool(resolve_workers(workers)).map_slices(job, partition_by_first_letter(degree)):
        fibers.update(part)
    population = sum(fibers.values())
    get_metrics_collector().record_enumeration("a", degree, population)
    for w in all_permutations(n):
        expected = 2 ** stats.del_s(w)
        if fibers[w.images] != expected:
            return run.finish(population, Counterexample(
                permutation=list(w.images), degree=n,
                observed={"fiber_size": fibers[w.images], "expected": expected}))
    return run.finish(population)
