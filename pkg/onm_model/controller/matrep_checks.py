"""
The 2x2 picture: sigma_i = r_i1 r_11* (x) e21 and tau_j = r_1j* (x) e21 satisfy
the defining relations in the corner cut down by p_1 (x) e11 + p (x) e22,
with q-role p_1 (x) e11 and p-role p (x) e22.
"""
from itertools import product
from typing import List, Optional, Tuple

from onm_model.controller.checks import Claim
from onm_model.controller.covariant import CovariantObjects, st_star
from onm_model.models.context import Context
from onm_model.models.elements import Element, Verdict, combine, equals
from onm_model.models.matrep import Mat2, mat_equals


def build_sigma_tau(ctx: Context) -> Tuple[Tuple[Mat2, ...], Tuple[Mat2, ...]]:
    c = CovariantObjects.build(ctx)
    r = c.r
    sigma = tuple(Mat2.unit(r[(i, 1)] * r[(1, 1)].adjoint(), 2, 1) for i in range(1, ctx.n + 1))
    tau = tuple(Mat2.unit(r[(1, j)].adjoint(), 2, 1) for j in range(1, ctx.m + 1))
    return sigma, tau


def corner_roles(ctx: Context) -> Tuple[Mat2, Mat2]:
    """(q-role, p-role) = (p_1 (x) e11, p (x) e22)."""
    p1 = Element.s(ctx, 1) * Element.s_star(ctx, 1)
    return Mat2.unit(p1, 1, 1), Mat2.unit(Element.p(ctx), 2, 2)


def _mat_claim(check_id: str, cite: str, instance: str, lhs, rhs, refine_depth) -> Claim:
    return Claim(check_id, cite, instance, lambda: mat_equals(lhs(), rhs(), depth=refine_depth))


def _mat_projection(a: Mat2, refine_depth: Optional[int]) -> Verdict:
    return combine([mat_equals(a.adjoint(), a, depth=refine_depth), mat_equals(a * a, a, depth=refine_depth)])


def check_sigma_tau(ctx: Context, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "sigma_i, tau_j satisfy the defining relations in the corner"
    sigma, tau = build_sigma_tau(ctx)
    q_role, p_role = corner_roles(ctx)
    u = q_role + p_role
    zero = Mat2.zero(ctx)
    c = CovariantObjects.build(ctx)
    claims = []
    for i, k in product(range(1, ctx.n + 1), repeat=2):
        expected = q_role if i == k else zero
        claims.append(_mat_claim("C17", cite, f"sigma{i}* sigma{k} = {'p1 e11' if i == k else '0'}",
                                 lambda i=i, k=k: sigma[i - 1].adjoint() * sigma[k - 1],
                                 lambda expected=expected: expected, refine_depth))
    for j, l in product(range(1, ctx.m + 1), repeat=2):
        expected = q_role if j == l else zero
        claims.append(_mat_claim("C17", cite, f"tau{j}* tau{l} = {'p1 e11' if j == l else '0'}",
                                 lambda j=j, l=l: tau[j - 1].adjoint() * tau[l - 1],
                                 lambda expected=expected: expected, refine_depth))
    for i in range(1, ctx.n + 1):
        claims.append(_mat_claim("C17", cite, f"sigma{i} sigma{i}* = p{i} e22",
                                 lambda i=i: sigma[i - 1] * sigma[i - 1].adjoint(),
                                 lambda i=i: Mat2.unit(c.pi(i), 2, 2), refine_depth))
        claims.append(_mat_claim("C17", cite, f"sigma{i} = p-role sigma{i} q-role",
                                 lambda i=i: p_role * sigma[i - 1] * q_role,
                                 lambda i=i: sigma[i - 1], refine_depth))
        claims.append(_mat_claim("C17", cite, f"u sigma{i} = sigma{i} u = sigma{i}",
                                 lambda i=i: u * sigma[i - 1] + sigma[i - 1] * u,
                                 lambda i=i: sigma[i - 1] + sigma[i - 1], refine_depth))
    for j in range(1, ctx.m + 1):
        claims.append(_mat_claim("C17", cite, f"tau{j} tau{j}* = q{j} e22",
                                 lambda j=j: tau[j - 1] * tau[j - 1].adjoint(),
                                 lambda j=j: Mat2.unit(c.qj(j), 2, 2), refine_depth))
        claims.append(_mat_claim("C17", cite, f"tau{j} = p-role tau{j} q-role",
                                 lambda j=j: p_role * tau[j - 1] * q_role,
                                 lambda j=j: tau[j - 1], refine_depth))
        claims.append(_mat_claim("C17", cite, f"u tau{j} = tau{j} u = tau{j}",
                                 lambda j=j: u * tau[j - 1] + tau[j - 1] * u,
                                 lambda j=j: tau[j - 1] + tau[j - 1], refine_depth))

    def sum_of(mats):
        total = zero
        for a in mats:
            total = total + a * a.adjoint()
        return total

    claims += [
        _mat_claim("C17", cite, "sum sigma_i sigma_i* = p-role", lambda: sum_of(sigma), lambda: p_role, refine_depth),
        _mat_claim("C17", cite, "sum tau_j tau_j* = p-role", lambda: sum_of(tau), lambda: p_role, refine_depth),
        _mat_claim("C17", cite, "p-role q-role = 0", lambda: p_role * q_role, lambda: zero, refine_depth),
        Claim("C17", cite, "u = p1 e11 + p e22 is a projection", lambda: _mat_projection(u, refine_depth)),
    ]
    for i in range(1, ctx.n + 1):
        claims.append(Claim("C17", cite, f"sigma{i} entry is s{i} s1'",
                            lambda i=i: mat_equals(sigma[i - 1], Mat2.unit(
                                Element.s(ctx, i) * Element.s_star(ctx, 1), 2, 1), depth=refine_depth)))
    for j in range(1, ctx.m + 1):
        claims.append(Claim("C17", cite, f"tau{j} entry is t{j} s1'",
                            lambda j=j: mat_equals(tau[j - 1], Mat2.unit(
                                Element.t(ctx, j) * Element.s_star(ctx, 1), 2, 1), depth=refine_depth)))
    return claims


def check_gamma_lambda(ctx: Context, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "Gamma(s_i t_j*) = r_ij (x) e22 and Lambda(s_i t_j*) = r_ij"
    sigma, tau = build_sigma_tau(ctx)
    c = CovariantObjects.build(ctx)
    r = c.r
    claims = []
    for i, j in product(range(1, ctx.n + 1), range(1, ctx.m + 1)):
        claims.append(_mat_claim("C18", cite, f"sigma{i} tau{j}* = r[{i},{j}] e22",
                                 lambda i=i, j=j: sigma[i - 1] * tau[j - 1].adjoint(),
                                 lambda i=i, j=j: Mat2.unit(r[(i, j)], 2, 2), refine_depth))
        claims.append(_mat_claim("C18", cite, f"r[{i},1] r[1,1]* r[1,{j}] = r[{i},{j}]",
                                 lambda i=i, j=j: Mat2.unit(r[(i, 1)] * r[(1, 1)].adjoint() * r[(1, j)], 2, 2),
                                 lambda i=i, j=j: Mat2.unit(r[(i, j)], 2, 2), refine_depth))
    return claims


def check_round_trip(ctx: Context, refine_depth: Optional[int] = None) -> List[Claim]:
    """
    s_i t_j* -> r_ij -> s_i t_j* on F, and on products of two letters of
    F and F*, where the middle map sends each factor to its r or r*.
    """
    cite = "Psi Lambda is the identity on the generators F"
    c = CovariantObjects.build(ctx)
    pairs = [(i, j) for i in range(1, ctx.n + 1) for j in range(1, ctx.m + 1)]
    claims = []
    for i, j in pairs:
        claims.append(Claim("C19", cite, f"s{i}t{j}' -> r[{i},{j}] -> s{i}t{j}'",
                            lambda i=i, j=j: _round_trip(c, ((i, j, False),), refine_depth)))
    for (i, j), (k, l) in product(pairs, repeat=2):
        for starred in (False, True):
            word = ((i, j, False), (k, l, starred))
            second = f"s{k}t{l}'"
            if starred:
                second = f"({second})'"
            label = f"s{i}t{j}' {second}"
            claims.append(Claim("C19", cite, f"{label} round trip",
                                lambda word=word: _round_trip(c, word, refine_depth)))
    return claims


def _round_trip(c: CovariantObjects, word, refine_depth: Optional[int]) -> Verdict:
    ctx = c.ctx
    image = Element.unit(ctx)
    original = Element.unit(ctx)
    for i, j, starred in word:
        r = c.r[(i, j)]
        g = st_star(ctx, i, j)
        image = image * (r.adjoint() if starred else r)
        original = original * (g.adjoint() if starred else g)
    return equals(image, original, depth=refine_depth)
