"""
Registry of element-wise properties and image maps used by the checkers
"""

from typing import Any, Callable, Dict, Iterable, List, Optional

from services.bijections import psi, psi_inverse, psi_q, psi_q_inverse
from services.canonical import (
    FactorKind,
    a_canonical,
    a_procedure,
    expand_a,
    expand_s,
    s_canonical,
)
from services.covering import CoverContext, f, f_q, f_q_by_word, g, g_q
from services.foata import (
    gamma,
    gamma_inverse,
    phi,
    phi_inverse,
    phi_permutation,
    phi_recursive,
    rtl_phi,
    rtl_phi_by_reversal,
    rtl_phi_inverse,
)
from services.patterns import avoids_pat_q, avoids_pat_q_by_matcher
from services.perm_core import (
    Permutation,
    adjacent_transposition,
    com,
    compose,
    inverse,
    inversion_count,
    rev,
)
from services import stats
from services.verification.base import BaseProperty, Observed, PropertySpec
from utils.exceptions import DomainError


def _plain(value: Any) -> Any:
    if isinstance(value, Permutation):
        return list(value.images)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, tuple):
        return [_plain(x) for x in value]
    return value


def _expect(left_label: str, left: Any, right_label: str, right: Any) -> Observed:
    if left == right:
        return None
    return {left_label: _plain(left), right_label: _plain(right)}


def _first(*checks: Callable[[], Observed]) -> Observed:
    for check in checks:
        observed = check()
        if observed is not None:
            return observed
    return None


# Symmetric group

def _gamma_round_trip(w: Permutation, q: int) -> Observed:
    # doubled letters leave room for every odd x, so both cases of gamma occur
    r = tuple(2 * x for x in w.images)
    for x in range(1, 2 * w.n + 2, 2):
        observed = _first(
            lambda: _expect("gamma_inverse_gamma", gamma_inverse(x, gamma(x, r)), "word", r),
            lambda: _expect("gamma_gamma_inverse", gamma(x, gamma_inverse(x, r)), "word", r),
        )
        if observed is not None:
            return dict(observed, x=x)
    return None


def _descent_length(w: Permutation, q: int) -> Observed:
    length = inversion_count(w)
    by_length = frozenset(
        i for i in range(1, w.n)
        if length > inversion_count(compose(w, adjacent_transposition(i, w.n)))
    )
    return _expect("des", stats.s_des(w), "length_descents", by_length)


def _s_factor_ltrm_link(w: Permutation, q: int) -> Observed:
    p = s_canonical(w)
    letters = stats.ltrm(w)
    for j in range(2, w.n + 1):
        if (j in letters) != p.factor(j - 1).is_full_run():
            return {"letter": j, "ltrm": sorted(letters), "factor": str(p.factor(j - 1))}
    return None


def _rtl_phi_factor_preservation(w: Permutation, q: int) -> Observed:
    before = s_canonical(w)
    after = s_canonical(rtl_phi(w))
    for j in range(1, w.n):
        if before.factor(j).is_full_run() != after.factor(j).is_full_run():
            return {"j": j, "factor": str(before.factor(j)), "image_factor": str(after.factor(j))}
    return None


def _canonical_round_trip(w: Permutation, q: int) -> Observed:
    p = s_canonical(w)
    return _first(
        lambda: _expect("expanded", expand_s(p), "input", w),
        lambda: _expect("generators", p.length, "inversions", inversion_count(w)),
    )


def _q_one_degeneration(w: Permutation, q: int) -> Observed:
    return _first(
        lambda: _expect("ell_1", stats.ell_q(1, w), "ell_s", stats.ell_s(w)),
        lambda: _expect("des_1", stats.q_des(1, w), "des_s", stats.s_des(w)),
        lambda: _expect("del_1", stats.q_del(1, w), "del_s", stats.s_del(w)),
    )


# Alternating group

def _f_pairs(v: Permutation, q: int) -> Observed:
    w = f(v)
    return _first(
        lambda: _expect("ell_a", stats.ell_a(v), "ell_s_f", stats.ell_s(w)),
        lambda: _expect("rmaj_a", stats.rmaj_a(v), "rmaj_s_f", stats.rmaj_s(w)),
        lambda: _expect("del_a", stats.del_a(v), "del_s_f", stats.del_s(w)),
        lambda: _expect("des_a", stats.a_des(v), "des_s_f", stats.s_des(w)),
    )


def _ltram_ltrm_bridge(v: Permutation, q: int) -> Observed:
    lowered = frozenset(x - 1 for x in stats.ltram(v)) - {0}
    return _expect("ltram_minus_one", lowered, "ltrm_f", stats.ltrm(f(v)))


def _a_factor_ltram_link(v: Permutation, q: int) -> Observed:
    p = a_canonical(v)
    letters = stats.ltram(v)
    for j in range(3, v.n + 1):
        is_tail = p.factor(j - 2).kind is FactorKind.TAIL
        if (j in letters) != is_tail:
            return {"letter": j, "ltram": sorted(letters), "factor": str(p.factor(j - 2))}
    return None


def _psi_theorem(v: Permutation, q: int) -> Observed:
    image = psi(v)
    v_inv, image_inv = inverse(v), inverse(image)
    return _first(
        lambda: _expect("rmaj_a", stats.rmaj_a(v), "ell_a_psi", stats.ell_a(image)),
        lambda: _expect("del_a", stats.del_a(v), "del_a_psi", stats.del_a(image)),
        lambda: _expect("del_a_inv", stats.a_del(v_inv), "del_a_psi_inv", stats.a_del(image_inv)),
        lambda: _expect("des_a_inv", stats.a_des(v_inv), "des_a_psi_inv", stats.a_des(image_inv)),
        lambda: _expect("psi_inverse_psi", psi_inverse(image), "input", v),
    )


# q-analogues

def _q_transport(w: Permutation, q: int) -> Observed:
    image = f_q(q, w)
    offset = -(q - 1)
    return _first(
        lambda: _expect("del_q_shifted", stats.shift(stats.q_del(q, w), offset),
                        "del_s_fq", stats.s_del(image)),
        lambda: _expect("des_q_shifted", stats.shift(stats.q_des(q, w), offset),
                        "des_s_fq", stats.s_des(image)),
        lambda: _expect("rmaj_q", stats.rmaj_q(q, w), "rmaj_s_fq", stats.rmaj_s(image)),
    )


def _q_factor_ltrm_link(w: Permutation, q: int) -> Observed:
    p = s_canonical(w)
    letters = stats.ltrm_q(q, w)
    for j in range(q + 1, w.n + 1):
        factor = p.factor(j - 1)
        short = factor.ell is not None and factor.ell <= q
        if (j in letters) != short:
            return {"letter": j, "ltrm_q": sorted(letters), "factor": str(factor)}
    return None


def _psi_q_theorem(w: Permutation, q: int) -> Observed:
    image = psi_q(q, w)
    w_inv, image_inv = inverse(w), inverse(image)
    return _first(
        lambda: _expect("rmaj_q", stats.rmaj_q(q, w), "ell_q_psi", stats.ell_q(q, image)),
        lambda: _expect("del_q_inv", stats.q_del(q, w_inv), "del_q_psi_inv", stats.q_del(q, image_inv)),
        lambda: _expect("des_q_inv", stats.q_des(q, w_inv), "des_q_psi_inv", stats.q_des(q, image_inv)),
        lambda: _expect("psi_q_inverse_psi_q", psi_q_inverse(q, image), "input", w),
        lambda: None if q != 1 else _expect("psi_1", image, "rtl_phi", rtl_phi(w)),
    )


def _avoidance_monotone(w: Permutation, q: int) -> Observed:
    if avoids_pat_q(q, w) and not avoids_pat_q(q + 1, w):
        return {"avoids_q": True, "avoids_q_plus_one": False}
    return None


_PROPERTIES: List[PropertySpec] = [
    # symmetric group
    PropertySpec("inverse-rev-com", "s", "inverse(rev(w)) = com(inverse(w))",
                 lambda w, q: _expect("inverse_rev", inverse(rev(w)), "com_inverse", com(inverse(w)))),
    PropertySpec("rev-com-length", "s", "ell_S(rev com w) = ell_S(w)",
                 lambda w, q: _expect("ell_rev_com", stats.ell_s(rev(com(w))), "ell", stats.ell_s(w))),
    PropertySpec("rev-com-maj", "s", "maj_S(rev com w) = rmaj_S(w)",
                 lambda w, q: _expect("maj_rev_com", stats.maj_s(rev(com(w))), "rmaj", stats.rmaj_s(w))),
    PropertySpec("ltrm-duality", "s", "ltrm(w) = Del_S(w^-1) + {1}",
                 lambda w, q: _expect("ltrm", stats.ltrm(w), "del_inverse",
                                      stats.s_del(inverse(w)) | {1})),
    PropertySpec("descent-length", "s", "i in Des_S(w) iff ell_S(w) > ell_S(w s_i)", _descent_length),
    PropertySpec("s-factor-ltrm-link", "s", "j in ltrm(w) iff w_{j-1} = s_{j-1} ... s_1",
                 _s_factor_ltrm_link),
    PropertySpec("canonical-round-trip", "s", "expand_s(s_canonical(w)) = w, length = inversions",
                 _canonical_round_trip),
    PropertySpec("q-one-degeneration", "s", "q = 1 statistics equal the S statistics",
                 _q_one_degeneration),
    PropertySpec("phi-maj-length", "s", "maj_S(w) = ell_S(phi(w))",
                 lambda w, q: _expect("maj", stats.maj_s(w), "ell_phi", stats.ell_s(phi_permutation(w)))),
    PropertySpec("phi-rtlm", "s", "rtlm(w) = rtlm(phi(w))",
                 lambda w, q: _expect("rtlm", stats.rtlm(w), "rtlm_phi", stats.rtlm(phi_permutation(w)))),
    PropertySpec("phi-inverse-descents", "s", "Des_S(w^-1) = Des_S(phi(w)^-1)",
                 lambda w, q: _expect("des_inv", stats.s_des(inverse(w)), "des_phi_inv",
                                      stats.s_des(inverse(phi_permutation(w))))),
    PropertySpec("phi-com-commute", "s", "phi(com w) = com(phi w)",
                 lambda w, q: _expect("phi_com", phi_permutation(com(w)), "com_phi",
                                      com(phi_permutation(w)))),
    PropertySpec("phi-recursion-agreement", "s", "iterative phi = recursive phi",
                 lambda w, q: _expect("iterative", phi(w.images), "recursive", phi_recursive(w.images))),
    PropertySpec("gamma-round-trip", "s", "gamma_x and its inverse undo each other",
                 _gamma_round_trip),
    PropertySpec("phi-round-trip", "s", "phi_inverse(phi(w)) = w",
                 lambda w, q: _expect("round_trip", phi_inverse(phi(w.images)), "input", w.images)),
    PropertySpec("rtl-phi-rmaj-length", "s", "rmaj_S(w) = ell_S(rtl_phi(w))",
                 lambda w, q: _expect("rmaj", stats.rmaj_s(w), "ell_rtl_phi", stats.ell_s(rtl_phi(w)))),
    PropertySpec("rtl-phi-reversal-agreement", "s", "right-to-left algorithm = rev phi rev",
                 lambda w, q: _expect("direct", rtl_phi(w), "reversal", rtl_phi_by_reversal(w))),
    PropertySpec("rtl-phi-round-trip", "s", "rtl_phi_inverse(rtl_phi(w)) = w",
                 lambda w, q: _expect("round_trip", rtl_phi_inverse(rtl_phi(w)), "input", w)),
    PropertySpec("rtl-phi-ltrm", "s", "ltrm(w) = ltrm(rtl_phi(w))",
                 lambda w, q: _expect("ltrm", stats.ltrm(w), "ltrm_rtl_phi", stats.ltrm(rtl_phi(w)))),
    PropertySpec("rtl-phi-factor-preservation", "s",
                 "rtl_phi(w)_j = s_j ... s_1 iff w_j = s_j ... s_1", _rtl_phi_factor_preservation),
    # alternating group
    PropertySpec("f-pairs", "a", "ell, rmaj, del and Des agree between v and f(v)", _f_pairs),
    PropertySpec("f-inverse", "a", "f(v^-1) = f(v)^-1",
                 lambda v, q: _expect("f_inverse", f(inverse(v)), "inverse_f", inverse(f(v)))),
    PropertySpec("ltram-duality", "a", "ltram(v) = Del_A(v^-1) + {1, 2}",
                 lambda v, q: _expect("ltram", stats.ltram(v), "del_inverse",
                                      stats.a_del(inverse(v)) | {1, 2})),
    PropertySpec("ltram-ltrm-bridge", "a", "ltram(v) - 1 = ltrm(f(v)) away from 0",
                 _ltram_ltrm_bridge),
    PropertySpec("a-factor-ltram-link", "a", "j in ltram(v) iff v_{j-2} is a tail",
                 _a_factor_ltram_link),
    PropertySpec("a-procedure-oracle", "a", "peel-off presentation = three-step rewriting",
                 lambda v, q: _expect("peel", str(a_canonical(v)), "rewrite", str(a_procedure(v)))),
    PropertySpec("a-canonical-round-trip", "a", "expand_a(a_canonical(v)) = v",
                 lambda v, q: _expect("expanded", expand_a(a_canonical(v)), "input", v)),
    PropertySpec("g-f-round-trip", "a", "g_v(f(v)) = v",
                 lambda v, q: _expect("lifted", g(CoverContext.alternating(v), f(v)), "input", v)),
    PropertySpec("psi-f-commute", "a", "f(psi(v)) = rtl_phi(f(v))",
                 lambda v, q: _expect("f_psi", f(psi(v)), "rtl_phi_f", rtl_phi(f(v)))),
    PropertySpec("psi-theorem", "a",
                 "rmaj_A -> ell_A, del_A, inverse Del_A and Des_A preserved, round trip",
                 _psi_theorem),
    # q-analogues
    PropertySpec("q-duality", "q", "ltrm_q(w) = Del_q(w^-1) + {1..q}",
                 lambda w, q: _expect("ltrm_q", stats.ltrm_q(q, w), "del_q_inverse",
                                      stats.q_del(q, inverse(w)) | set(range(1, q + 1)))),
    PropertySpec("f-q-inverse", "q", "f_q(w^-1) = f_q(w)^-1",
                 lambda w, q: _expect("f_q_inverse", f_q(q, inverse(w)), "inverse_f_q",
                                      inverse(f_q(q, w)))),
    PropertySpec("f-q-length", "q", "ell_q(w) = ell_S(f_q(w))",
                 lambda w, q: _expect("ell_q", stats.ell_q(q, w), "ell_s_fq", stats.ell_s(f_q(q, w)))),
    PropertySpec("q-transport", "q", "Del_q, Des_q shifted by q-1 and rmaj_q carried by f_q",
                 _q_transport),
    PropertySpec("f-q-word-oracle", "q", "factor-wise f_q = letter-wise rewriting",
                 lambda w, q: _expect("factor_wise", f_q(q, w), "letter_wise", f_q_by_word(q, w))),
    PropertySpec("q-factor-ltrm-link", "q", "j in ltrm_q(w) iff w_{j-1} = s_{j-1} ... s_ell, ell <= q",
                 _q_factor_ltrm_link),
    PropertySpec("g-q-round-trip", "q", "g_{q,w}(f_q(w)) = w",
                 lambda w, q: _expect("lifted", g_q(CoverContext.symmetric(q, w), f_q(q, w)),
                                      "input", w)),
    PropertySpec("psi-q-f-q-commute", "q", "f_q(psi_q(w)) = rtl_phi(f_q(w))",
                 lambda w, q: _expect("f_q_psi_q", f_q(q, psi_q(q, w)), "rtl_phi_f_q",
                                      rtl_phi(f_q(q, w)))),
    PropertySpec("psi-q-theorem", "q",
                 "rmaj_q -> ell_q, inverse Del_q and Des_q preserved, round trip, psi_1 = rtl_phi",
                 _psi_q_theorem),
    PropertySpec("avoidance-oracle", "q", "fast avoidance criterion = dashed matcher",
                 lambda w, q: _expect("fast", avoids_pat_q(q, w), "matcher",
                                      avoids_pat_q_by_matcher(q, w))),
    PropertySpec("avoidance-monotone", "q", "avoiding Pat(q) implies avoiding Pat(q+1)",
                 _avoidance_monotone),
]

IMAGE_MAPS: Dict[str, Callable[[Permutation, int], Permutation]] = {
    "phi": lambda w, q: phi_permutation(w),
    "rtl_phi": lambda w, q: rtl_phi(w),
    "psi": lambda w, q: psi(w),
    "psi_q": lambda w, q: psi_q(q, w),
}

SUITES: Dict[str, List[str]] = {
    "foata": [
        "phi-maj-length", "phi-rtlm", "phi-inverse-descents", "phi-com-commute",
        "phi-recursion-agreement", "phi-round-trip", "rtl-phi-rmaj-length",
        "rtl-phi-reversal-agreement", "rtl-phi-round-trip",
    ],
    "lemmas": [
        "inverse-rev-com", "rev-com-length", "rev-com-maj", "ltrm-duality", "descent-length",
        "s-factor-ltrm-link", "rtl-phi-ltrm", "rtl-phi-factor-preservation", "q-one-degeneration",
        "f-pairs", "f-inverse", "ltram-duality", "ltram-ltrm-bridge", "a-factor-ltram-link",
        "g-f-round-trip", "psi-f-commute",
        "q-duality", "f-q-inverse", "f-q-length", "q-transport", "q-factor-ltrm-link",
        "g-q-round-trip", "psi-q-f-q-commute", "avoidance-monotone",
    ],
    "oracles": [
        "canonical-round-trip", "a-procedure-oracle", "a-canonical-round-trip",
        "f-q-word-oracle", "avoidance-oracle", "gamma-round-trip",
    ],
}


class PropertyRegistry:
    """Registry for element-wise properties"""

    def __init__(self, properties: Iterable[BaseProperty] = ()):
        self._properties: Dict[str, BaseProperty] = {}
        for prop in properties:
            self.register(prop)

    def register(self, prop: BaseProperty) -> None:
        key = prop.name.lower()
        if key in self._properties:
            raise DomainError(f"Property {prop.name!r} already registered", {"property": prop.name})
        self._properties[key] = prop

    def get_property(self, name: str) -> Optional[BaseProperty]:
        return self._properties.get(name.lower())

    def list_properties(self, group: Optional[str] = None) -> List[str]:
        return [
            name for name, prop in self._properties.items()
            if group is None or prop.group == group
        ]

    def suite(self, name: str) -> List[BaseProperty]:
        if name not in SUITES:
            raise DomainError(f"Unknown suite {name!r}", {"suite": name, "known": sorted(SUITES)})
        return [self.require(prop) for prop in SUITES[name]]

    def require(self, name: str) -> BaseProperty:
        prop = self.get_property(name)
        if prop is None:
            raise DomainError(f"Unknown property {name!r}", {"property": name})
        return prop


# Global registry instance
property_registry = PropertyRegistry(_PROPERTIES)


def get_property(name: str) -> BaseProperty:
    """Lookup that raises on unknown names"""
    return property_registry.require(name)


def resolve_image_map(name: str) -> Callable[[Permutation, int], Permutation]:
    try:
        return IMAGE_MAPS[name]
    except KeyError:
        raise DomainError(f"Unknown image map {name!r}", {"image_map": name})
