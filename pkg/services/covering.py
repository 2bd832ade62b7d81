"""
Covering maps f : A_{n+1} -> S_n and f_q : S_{n+q-1} -> S_n with their
anchored lifts g_u and g_{q,u}. All four act factor by factor on canonical
presentations.
"""

from dataclasses import dataclass
from typing import Optional

from services.canonical import (
    ACanonical,
    AFactor,
    FactorKind,
    SCanonical,
    SFactor,
    a_canonical,
    expand_a,
    expand_s,
    s,
    s_canonical,
    word_to_perm,
)
from services.perm_core import Permutation
from utils.exceptions import DegreeMismatchError, DomainError, InvariantViolation


@dataclass(frozen=True)
class CoverContext:
    """Lifting anchor with its presentation cached for repeated lifts"""

    anchor: Permutation
    q: int = 1
    a_presentation: Optional[ACanonical] = None
    s_presentation: Optional[SCanonical] = None

    @classmethod
    def alternating(cls, u: Permutation) -> "CoverContext":
        return cls(anchor=u, a_presentation=a_canonical(u))

    @classmethod
    def symmetric(cls, q: int, u: Permutation) -> "CoverContext":
        _require_q(q, u.n)
        return cls(anchor=u, q=q, s_presentation=s_canonical(u))


def _require_q(q: int, degree: int) -> None:
    if q < 1 or degree < q:
        raise DomainError(f"q must satisfy 1 <= q <= degree, got q={q}, degree={degree}",
                          {"q": q, "degree": degree})


def f_presentation(p: ACanonical) -> SCanonical:
    factors = []
    for factor in p.factors:
        if factor.kind is FactorKind.IDENTITY:
            factors.append(SFactor(factor.j))
        elif factor.kind is FactorKind.RUN:
            factors.append(SFactor(factor.j, factor.ell))
        else:
            factors.append(SFactor(factor.j, 1))
    return SCanonical(p.n, tuple(factors))


def f(v: Permutation) -> Permutation:
    """Rename a_j ... a_ell to s_j ... s_ell and both tails to s_j ... s_1"""
    if v.n < 3:
        raise DomainError(f"f needs degree at least 3, got {v.n}", {"degree": v.n})
    return expand_s(f_presentation(a_canonical(v)))


def _alternating_context(ctx: CoverContext) -> ACanonical:
    if ctx.a_presentation is None:
        raise InvariantViolation("Cover context has no A-canonical presentation")
    return ctx.a_presentation


def lift_compatible(ctx: CoverContext, w: Permutation) -> bool:
    """w_j = s_j ... s_1 implies u_j is a tail, so that f(g_u(w)) = w"""
    return presentation_compatible(ctx, s_canonical(w))


def presentation_compatible(ctx: CoverContext, p: SCanonical) -> bool:
    anchor = _alternating_context(ctx)
    if p.n != anchor.n:
        return False
    for factor in p.factors:
        if factor.is_full_run() and anchor.factor(factor.j).kind is not FactorKind.TAIL:
            return False
    return True


def g_presentation(ctx: CoverContext, p: SCanonical) -> ACanonical:
    """g_u: keep runs of length below j, replace s_j ... s_1 by the anchor's u_j"""
    anchor = _alternating_context(ctx)
    if p.n != anchor.n:
        raise DegreeMismatchError(
            f"g: anchor has degree {ctx.anchor.n}, expected {p.n + 1}",
            {"anchor_degree": ctx.anchor.n, "degree": p.n},
        )
    factors = []
    for factor in p.factors:
        if factor.ell is None:
            factors.append(AFactor(factor.j))
        elif factor.ell >= 2:
            factors.append(AFactor(factor.j, FactorKind.RUN, ell=factor.ell))
        else:
            factors.append(anchor.factor(factor.j))
    return ACanonical(anchor.n, tuple(factors))


def g(ctx: CoverContext, w: Permutation) -> Permutation:
    return expand_a(g_presentation(ctx, s_canonical(w)))


def f_q_presentation(q: int, p: SCanonical) -> SCanonical:
    n = p.n - q + 1
    factors = []
    for factor in p.factors[q - 1:]:
        j = factor.j - q + 1
        if factor.ell is None:
            factors.append(SFactor(j))
        else:
            factors.append(SFactor(j, max(factor.ell - q + 1, 1)))
    return SCanonical(n, tuple(factors))


def f_q(q: int, w: Permutation) -> Permutation:
    """Drop s_1, ..., s_{q-1} and rename s_j to s_{j-q+1}"""
    _require_q(q, w.n)
    return expand_s(f_q_presentation(q, s_canonical(w)))


def f_q_by_word(q: int, w: Permutation) -> Permutation:
    """Letter-by-letter rewriting of the S-word; cross-check for f_q"""
    _require_q(q, w.n)
    letters = [gen.index for gen in s_canonical(w).word()]
    word = [s(k - q + 1) for k in letters if k >= q]
    return word_to_perm(word, w.n - q + 1)


def _symmetric_context(ctx: CoverContext) -> SCanonical:
    if ctx.s_presentation is None:
        raise InvariantViolation("Cover context has no S-canonical presentation")
    return ctx.s_presentation


def q_lift_compatible(ctx: CoverContext, w: Permutation) -> bool:
    """w_j = s_j ... s_1 implies u_{j+q-1} = s_{j+q-1} ... s_ell with ell <= q"""
    return q_presentation_compatible(ctx, s_canonical(w))


def q_presentation_compatible(ctx: CoverContext, p: SCanonical) -> bool:
    anchor = _symmetric_context(ctx)
    q = ctx.q
    if p.n != anchor.n - q + 1:
        return False
    for factor in p.factors:
        if factor.is_full_run():
            lifted = anchor.factor(factor.j + q - 1)
            if lifted.ell is None or lifted.ell > q:
                return False
    return True


def g_q_presentation(ctx: CoverContext, p: SCanonical) -> SCanonical:
    """g_{q,u}: anchor prefix u_1 ... u_{q-1}, then shifted factors of w"""
    anchor = _symmetric_context(ctx)
    q = ctx.q
    if p.n != anchor.n - q + 1:
        raise DegreeMismatchError(
            f"g_q: anchor has degree {anchor.n}, expected {p.n + q - 1}",
            {"anchor_degree": anchor.n, "degree": p.n, "q": q},
        )
    factors = list(anchor.factors[: q - 1])
    for factor in p.factors:
        j = factor.j + q - 1
        if factor.ell is None:
            factors.append(SFactor(j))
        elif factor.ell >= 2:
            factors.append(SFactor(j, factor.ell + q - 1))
        else:
            factors.append(anchor.factor(j))
    return SCanonical(anchor.n, tuple(factors))


def g_q(ctx: CoverContext, w: Permutation) -> Permutation:
    return expand_s(g_q_presentation(ctx, s_canonical(w)))
