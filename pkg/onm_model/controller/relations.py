"""Defining relations of O_{n,m}, the corner form of the generators, and the tameness monitor."""
import logging
from itertools import product
from typing import List, Optional

from onm_model.controller.checks import Claim, claim_equal
from onm_model.models.context import Context
from onm_model.models.elements import Element, Verdict, VerdictKind, combine, equals
from onm_model.models.words import reduced_words

logger = logging.getLogger(__name__)


def check_defining_relations(ctx: Context, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "defining relations of O_{n,m}"
    n, m = ctx.n, ctx.m
    p, q, zero = Element.p(ctx), Element.q(ctx), Element.zero(ctx)
    claims = []
    for i, k in product(range(1, n + 1), repeat=2):
        expected = q if i == k else zero
        claims.append(claim_equal("C1", cite, f"s{i}* s{k} = {expected}",
                                  lambda i=i, k=k: Element.s_star(ctx, i) * Element.s(ctx, k),
                                  lambda expected=expected: expected, refine_depth))
    for j, l in product(range(1, m + 1), repeat=2):
        expected = q if j == l else zero
        claims.append(claim_equal("C1", cite, f"t{j}* t{l} = {expected}",
                                  lambda j=j, l=l: Element.t_star(ctx, j) * Element.t(ctx, l),
                                  lambda expected=expected: expected, refine_depth))
    for i, j in product(range(1, n + 1), range(1, m + 1)):
        claims.append(claim_equal("C1", cite, f"s{i}* s{i} = t{j}* t{j}",
                                  lambda i=i: Element.s_star(ctx, i) * Element.s(ctx, i),
                                  lambda j=j: Element.t_star(ctx, j) * Element.t(ctx, j), refine_depth))

    def s_sum():
        return sum((Element.s(ctx, i) * Element.s_star(ctx, i) for i in range(1, n + 1)), zero)

    def t_sum():
        return sum((Element.t(ctx, j) * Element.t_star(ctx, j) for j in range(1, m + 1)), zero)

    claims += [
        claim_equal("C1", cite, "sum s_i s_i* = p", s_sum, lambda: p, refine_depth),
        claim_equal("C1", cite, "sum t_j t_j* = p", t_sum, lambda: p, refine_depth),
        claim_equal("C1", cite, "p q = 0", lambda: p * q, lambda: zero, refine_depth),
        claim_equal("C1", cite, "q p = 0", lambda: q * p, lambda: zero, refine_depth),
        claim_equal("C1", cite, "p + q = 1", lambda: p + q, lambda: Element.unit(ctx), refine_depth),
        claim_equal("C1", cite, "p p = p", lambda: p * p, lambda: p, refine_depth),
        claim_equal("C1", cite, "q q = q", lambda: q * q, lambda: q, refine_depth),
    ]
    return claims


def check_corner_form(ctx: Context, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "s_i = p s_i q and t_j = p t_j q"
    p, q = Element.p(ctx), Element.q(ctx)
    claims = []
    for i in range(1, ctx.n + 1):
        s = Element.s(ctx, i)
        claims.append(claim_equal("C2", cite, f"s{i} = p s{i} q", lambda s=s: p * s * q, lambda s=s: s, refine_depth))
    for j in range(1, ctx.m + 1):
        t = Element.t(ctx, j)
        claims.append(claim_equal("C2", cite, f"t{j} = p t{j} q", lambda t=t: p * t * q, lambda t=t: t, refine_depth))
    return claims


def tameness_verdict(ctx: Context, length: int, refine_depth: Optional[int] = None) -> Verdict:
    """w w* w = w for every reduced word of exactly `length` letters."""
    count = 0
    verdicts = []
    for w in reduced_words(ctx, length, include_units=length == 1):
        if len(w) != length:
            continue
        count += 1
        x = Element.from_monomial(w)
        verdict = equals(x * x.adjoint() * x, x, depth=refine_depth)
        if verdict.is_not_equal:
            return Verdict(VerdictKind.NOT_EQUAL, witness=verdict.witness, detail=f"w = {w}")
        if verdict.is_unconfirmed:
            logger.warning("tameness unconfirmed for %s", w)
            verdicts.append(Verdict(VerdictKind.UNCONFIRMED, detail=f"w = {w}: {verdict.detail}"))
    result = combine(verdicts)
    if result.is_equal:
        return Verdict(VerdictKind.EQUAL, detail=f"{count} words")
    return result


def check_tameness(ctx: Context, maxlen: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "tameness: every word is a partial isometry"
    return [Claim("C21", cite, f"w w* w = w, reduced words of length {length}",
                  lambda length=length: tameness_verdict(ctx, length, refine_depth))
            for length in range(1, maxlen + 1)]
