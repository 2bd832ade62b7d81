"""
Extended Foata bijections.

psi(v) = g_v(rtl_phi(f(v))) on A_{n+1} carries rmaj_A to ell_A;
psi_q(q, v) = g_{q,v}(rtl_phi(f_q(v))) on S_{n+q-1} carries rmaj_q to ell_q.
The inverses use the same pipeline with rtl_phi_inverse, anchored at the
argument.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Union

from services.canonical import ACanonical, SCanonical, expand_a, expand_s, s_canonical
from services.covering import (
    CoverContext,
    f_presentation,
    f_q_presentation,
    g_presentation,
    g_q_presentation,
    presentation_compatible,
    q_presentation_compatible,
)
from services.foata import rtl_phi, rtl_phi_inverse
from services.perm_core import Permutation
from utils.exceptions import DomainError, InvariantViolation

Presentation = Union[ACanonical, SCanonical]


@dataclass(frozen=True)
class PsiTrace:
    """Every stage of one evaluation, in pipeline order"""

    input: Permutation
    input_presentation: Presentation
    f_image: Permutation
    rtl_phi_image: Permutation
    s_presentation_of_image: SCanonical
    lifted_presentation: Presentation
    output: Permutation
    q: Optional[int] = None
    inverse: bool = False


def _run_alternating(
    v: Permutation, stage: Callable[[Permutation], Permutation], inverse: bool
) -> PsiTrace:
    if v.n < 3:
        raise DomainError(f"psi needs degree at least 3, got {v.n}", {"degree": v.n})
    ctx = CoverContext.alternating(v)
    f_image = expand_s(f_presentation(ctx.a_presentation))
    middle = stage(f_image)
    middle_presentation = s_canonical(middle)
    if not presentation_compatible(ctx, middle_presentation):
        raise InvariantViolation(
            "psi lift is not compatible with its anchor",
            {"input": list(v.images), "stage": list(middle.images)},
        )
    lifted = g_presentation(ctx, middle_presentation)
    return PsiTrace(
        input=v,
        input_presentation=ctx.a_presentation,
        f_image=f_image,
        rtl_phi_image=middle,
        s_presentation_of_image=middle_presentation,
        lifted_presentation=lifted,
        output=expand_a(lifted),
        inverse=inverse,
    )


def psi_trace(v: Permutation) -> PsiTrace:
    return _run_alternating(v, rtl_phi, inverse=False)


def psi_inverse_trace(p: Permutation) -> PsiTrace:
    return _run_alternating(p, rtl_phi_inverse, inverse=True)


def psi(v: Permutation) -> Permutation:
    return psi_trace(v).output


def psi_inverse(p: Permutation) -> Permutation:
    return psi_inverse_trace(p).output


def _run_symmetric(
    q: int, v: Permutation, stage: Callable[[Permutation], Permutation], inverse: bool
) -> PsiTrace:
    ctx = CoverContext.symmetric(q, v)
    f_image = expand_s(f_q_presentation(q, ctx.s_presentation))
    middle = stage(f_image)
    middle_presentation = s_canonical(middle)
    if not q_presentation_compatible(ctx, middle_presentation):
        raise InvariantViolation(
            "psi_q lift is not compatible with its anchor",
            {"q": q, "input": list(v.images), "stage": list(middle.images)},
        )
    lifted = g_q_presentation(ctx, middle_presentation)
    return PsiTrace(
        input=v,
        input_presentation=ctx.s_presentation,
        f_image=f_image,
        rtl_phi_image=middle,
        s_presentation_of_image=middle_presentation,
        lifted_presentation=lifted,
        output=expand_s(lifted),
        q=q,
        inverse=inverse,
    )


def psi_q_trace(q: int, v: Permutation) -> PsiTrace:
    return _run_symmetric(q, v, rtl_phi, inverse=False)


def psi_q_inverse_trace(q: int, p: Permutation) -> PsiTrace:
    return _run_symmetric(q, p, rtl_phi_inverse, inverse=True)


def psi_q(q: int, v: Permutation) -> Permutation:
    return psi_q_trace(q, v).output


def psi_q_inverse(q: int, p: Permutation) -> Permutation:
    return psi_q_inverse_trace(q, p).output
