"""
Structure maps on the commutative corners A_p and A_q: the endomorphisms
alpha, beta (and their summands alpha_i, beta_j), the transfer maps L, M,
and the interaction V = alpha M, H = beta L.
"""
import logging
from typing import List, Optional

from onm_model.controller.checks import Claim, claim_equal, claim_holds
from onm_model.models.context import Context, OnmError
from onm_model.models.elements import Element, equals, fourier
from onm_model.models.freegroup import GroupWord
from onm_model.models.scalars import Scalar
from onm_model.models.words import P_SIDE, Q_SIDE, group_image, reduced_words

logger = logging.getLogger(__name__)


class NotInSubalgebraError(OnmError):
    pass


def corner(ctx: Context, side: str) -> Element:
    return Element.p(ctx) if side == P_SIDE else Element.q(ctx)


def in_subalgebra(x: Element, side: str) -> bool:
    """Every monomial is a projection under `side`, or x equals such a combination."""
    if all(group_image(w).is_identity and w.range == side for w in x.terms):
        return True
    unit = corner(x.ctx, side)
    diagonal = unit * fourier(x, GroupWord.identity(x.ctx)) * unit
    return equals(x, diagonal).is_equal


def require_subalgebra(x: Element, side: str, name: str) -> None:
    if not in_subalgebra(x, side):
        raise NotInSubalgebraError(f"{name} expects an element of A_{side.lower()}, got {x}")


# ---------------------------------------------------------------- the maps
def alpha_i(g: Element, i: int) -> Element:
    ctx = g.ctx
    return Element.s(ctx, i) * g * Element.s_star(ctx, i)


def beta_j(g: Element, j: int) -> Element:
    ctx = g.ctx
    return Element.t(ctx, j) * g * Element.t_star(ctx, j)


def alpha(g: Element) -> Element:
    require_subalgebra(g, Q_SIDE, "alpha")
    total = Element.zero(g.ctx)
    for i in range(1, g.ctx.n + 1):
        total = total + alpha_i(g, i)
    return total


def beta(g: Element) -> Element:
    require_subalgebra(g, Q_SIDE, "beta")
    total = Element.zero(g.ctx)
    for j in range(1, g.ctx.m + 1):
        total = total + beta_j(g, j)
    return total


def L(f: Element) -> Element:
    """(1/n) sum s_i* f s_i."""
    require_subalgebra(f, P_SIDE, "L")
    ctx = f.ctx
    total = Element.zero(ctx)
    for i in range(1, ctx.n + 1):
        total = total + Element.s_star(ctx, i) * f * Element.s(ctx, i)
    return Scalar.rational(ctx, 1, ctx.n) * total


def M(f: Element) -> Element:
    """(1/m) sum t_j* f t_j."""
    require_subalgebra(f, P_SIDE, "M")
    ctx = f.ctx
    total = Element.zero(ctx)
    for j in range(1, ctx.m + 1):
        total = total + Element.t_star(ctx, j) * f * Element.t(ctx, j)
    return Scalar.rational(ctx, 1, ctx.m) * total


def V(f: Element) -> Element:
    return alpha(M(f))


def H(f: Element) -> Element:
    return beta(L(f))


def spanning_projections(ctx: Context, side: str, depth: int) -> List[Element]:
    """
    The corner unit, the range projections w w* of reduced words of length
    <= depth, and their pairwise meets whose word has length <= 2 * depth.
    """
    out = [corner(ctx, side)]
    seen = {out[0]}
    for w in reduced_words(ctx, depth, range_side=side, include_units=False):
        x = Element.from_monomial(w)
        projection = x * x.adjoint()
        if projection not in seen:
            seen.add(projection)
            out.append(projection)
    atoms = out[1:]
    for k, f in enumerate(atoms):
        for g in atoms[k + 1:]:
            meet = f * g
            if meet and meet.max_length() <= 2 * depth and meet not in seen:
                seen.add(meet)
                out.append(meet)
    return out


def is_cone_element(x: Element) -> bool:
    """Nonnegative combination of projections."""
    return all(group_image(w).is_identity and c.is_nonnegative() for w, c in x.terms.items())


# ------------------------------------------------------------------ checks
def check_transfer_identities(ctx: Context, depth: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "transfer maps: L alpha = id, L(alpha(g) f) = g L(f)"
    gs = spanning_projections(ctx, Q_SIDE, depth)
    fs = spanning_projections(ctx, P_SIDE, min(depth, 2))
    claims = []
    for g in gs:
        claims.append(claim_equal("C4", cite, f"L(alpha({g})) = {g}",
                                  lambda g=g: L(alpha(g)), lambda g=g: g, refine_depth))
        claims.append(claim_equal("C4", cite, f"M(beta({g})) = {g}",
                                  lambda g=g: M(beta(g)), lambda g=g: g, refine_depth))
        for f in fs:
            claims.append(claim_equal("C4", cite, f"L(alpha({g}) {f}) = {g} L({f})",
                                      lambda g=g, f=f: L(alpha(g) * f), lambda g=g, f=f: g * L(f), refine_depth))
            claims.append(claim_equal("C4", cite, f"M(beta({g}) {f}) = {g} M({f})",
                                      lambda g=g, f=f: M(beta(g) * f), lambda g=g, f=f: g * M(f), refine_depth))
    return claims


def check_homomorphisms(ctx: Context, depth: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "alpha, beta are unital *-endomorphisms; alpha_i, beta_j are *-homomorphisms"
    gs = spanning_projections(ctx, Q_SIDE, min(depth, 2))
    q = Element.q(ctx)
    p = Element.p(ctx)
    claims = [
        claim_equal("C3", cite, "alpha(q) = p", lambda: alpha(q), lambda: p, refine_depth),
        claim_equal("C3", cite, "beta(q) = p", lambda: beta(q), lambda: p, refine_depth),
    ]
    for g in gs:
        for h in gs:
            claims.append(claim_equal("C3", cite, f"alpha({g} . {h}) = alpha({g}) alpha({h})",
                                      lambda g=g, h=h: alpha(g * h), lambda g=g, h=h: alpha(g) * alpha(h),
                                      refine_depth))
            claims.append(claim_equal("C3", cite, f"beta({g} . {h}) = beta({g}) beta({h})",
                                      lambda g=g, h=h: beta(g * h), lambda g=g, h=h: beta(g) * beta(h),
                                      refine_depth))
        for i in range(1, ctx.n + 1):
            claims.append(claim_equal("C3", cite, f"alpha_{i}({g}*) = alpha_{i}({g})*",
                                      lambda g=g, i=i: alpha_i(g.adjoint(), i),
                                      lambda g=g, i=i: alpha_i(g, i).adjoint(), refine_depth))
            for h in gs:
                claims.append(claim_equal("C3", cite, f"alpha_{i}({g} . {h}) = alpha_{i}({g}) alpha_{i}({h})",
                                          lambda g=g, h=h, i=i: alpha_i(g * h, i),
                                          lambda g=g, h=h, i=i: alpha_i(g, i) * alpha_i(h, i), refine_depth))
        for j in range(1, ctx.m + 1):
            claims.append(claim_equal("C3", cite, f"beta_{j}({g}*) = beta_{j}({g})*",
                                      lambda g=g, j=j: beta_j(g.adjoint(), j),
                                      lambda g=g, j=j: beta_j(g, j).adjoint(), refine_depth))
            for h in gs:
                claims.append(claim_equal("C3", cite, f"beta_{j}({g} . {h}) = beta_{j}({g}) beta_{j}({h})",
                                          lambda g=g, h=h, j=j: beta_j(g * h, j),
                                          lambda g=g, h=h, j=j: beta_j(g, j) * beta_j(h, j), refine_depth))
    return claims


def check_interaction_axioms(ctx: Context, depth: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "(V, H) is an interaction over A_p"
    fs = spanning_projections(ctx, P_SIDE, min(depth, 2))
    p = Element.p(ctx)
    claims = [
        claim_equal("C5", cite, "V(p) = p", lambda: V(p), lambda: p, refine_depth),
        claim_equal("C5", cite, "H(p) = p", lambda: H(p), lambda: p, refine_depth),
    ]
    for f in fs:
        claims.append(claim_holds("C5", cite, f"V({f}), H({f}) in the projection cone (boundedness unchecked)",
                                  lambda f=f: _cone_report(f)))
        claims.append(claim_equal("C5", cite, f"V({f})* = V({f})",
                                  lambda f=f: V(f).adjoint(), lambda f=f: V(f), refine_depth))
        claims.append(claim_equal("C5", cite, f"H({f})* = H({f})",
                                  lambda f=f: H(f).adjoint(), lambda f=f: H(f), refine_depth))
        claims.append(claim_equal("C5", cite, f"VHV({f}) = V({f})",
                                  lambda f=f: V(H(V(f))), lambda f=f: V(f), refine_depth))
        claims.append(claim_equal("C5", cite, f"HVH({f}) = H({f})",
                                  lambda f=f: H(V(H(f))), lambda f=f: H(f), refine_depth))
        for g in fs:
            claims.append(claim_equal("C5", cite, f"V(H({f}) {g}) = V(H({f})) V({g})",
                                      lambda f=f, g=g: V(H(f) * g), lambda f=f, g=g: V(H(f)) * V(g),
                                      refine_depth))
            claims.append(claim_equal("C5", cite, f"V({g} H({f})) = V({g}) V(H({f}))",
                                      lambda f=f, g=g: V(g * H(f)), lambda f=f, g=g: V(g) * V(H(f)),
                                      refine_depth))
            claims.append(claim_equal("C5", cite, f"H(V({f}) {g}) = H(V({f})) H({g})",
                                      lambda f=f, g=g: H(V(f) * g), lambda f=f, g=g: H(V(f)) * H(g),
                                      refine_depth))
            claims.append(claim_equal("C5", cite, f"H({g} V({f})) = H({g}) H(V({f}))",
                                      lambda f=f, g=g: H(g * V(f)), lambda f=f, g=g: H(g) * H(V(f)),
                                      refine_depth))
    return claims


def _cone_report(f: Element):
    images = {"V": V(f), "H": H(f)}
    bad = [name for name, image in images.items() if not is_cone_element(image)]
    return not bad, ("" if not bad else "outside the cone: " + ", ".join(bad))


def check_assorted(ctx: Context, depth: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "values of L, M, V, H on p_i, q_j"
    n, m = ctx.n, ctx.m
    p, q = Element.p(ctx), Element.q(ctx)
    inv_n, inv_m = Scalar.rational(ctx, 1, n), Scalar.rational(ctx, 1, m)
    fs = spanning_projections(ctx, P_SIDE, min(depth, 2))
    claims = []
    for i in range(1, n + 1):
        p_i = Element.s(ctx, i) * Element.s_star(ctx, i)
        claims.append(claim_equal("C15", cite, f"L(p{i}) = 1/n q",
                                  lambda p_i=p_i: L(p_i), lambda: inv_n * q, refine_depth))
        claims.append(claim_equal("C15", cite, f"H(p{i}) = 1/n p",
                                  lambda p_i=p_i: H(p_i), lambda: inv_n * p, refine_depth))
        for f in fs:
            claims.append(claim_equal("C15", cite, f"p{i} V(H(p{i} {f})) = 1/n p{i} {f}",
                                      lambda p_i=p_i, f=f: p_i * V(H(p_i * f)),
                                      lambda p_i=p_i, f=f: inv_n * (p_i * f), refine_depth))
    for j in range(1, m + 1):
        q_j = Element.t(ctx, j) * Element.t_star(ctx, j)
        claims.append(claim_equal("C15", cite, f"M(q{j}) = 1/m q",
                                  lambda q_j=q_j: M(q_j), lambda: inv_m * q, refine_depth))
        claims.append(claim_equal("C15", cite, f"V(q{j}) = 1/m p",
                                  lambda q_j=q_j: V(q_j), lambda: inv_m * p, refine_depth))
        for f in fs:
            claims.append(claim_equal("C15", cite, f"q{j} H(V(q{j} {f})) = 1/m q{j} {f}",
                                      lambda q_j=q_j, f=f: q_j * H(V(q_j * f)),
                                      lambda q_j=q_j, f=f: inv_m * (q_j * f), refine_depth))
    return claims
