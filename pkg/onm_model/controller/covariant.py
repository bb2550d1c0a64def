"""
The covariant pair inside O_{n,m}: S, T, R = S T*, p_i, q_j, r_ij, and the
identities relating them to V and H. Also the factorization of p-corner
words over F = {s_i t_j*} and its adjoints.
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from onm_model.controller.checks import Claim, claim_equal, claim_holds, claim_nonzero
from onm_model.controller.maps import H, L, M, V, alpha, beta, spanning_projections
from onm_model.models.context import Context, OnmError
from onm_model.models.elements import (
    Element,
    Verdict,
    VerdictKind,
    equals,
    fourier,
    is_partial_isometry,
    is_projection,
)
from onm_model.models.freegroup import GroupWord
from onm_model.models.scalars import Scalar
from onm_model.models.words import (
    Letter,
    Monomial,
    P_SIDE,
    Q_SIDE,
    group_image,
    reduce_word,
    reduced_words,
)

logger = logging.getLogger(__name__)


class FactorizationError(OnmError):
    pass


@dataclass(frozen=True)
class CovariantObjects:
    ctx: Context
    S: Element
    T: Element
    R: Element
    p_i: Tuple[Element, ...]
    q_j: Tuple[Element, ...]
    r: Dict[Tuple[int, int], Element]

    @classmethod
    def build(cls, ctx: Context) -> "CovariantObjects":
        n, m = ctx.n, ctx.m
        S = Scalar.inv_sqrt(ctx, n) * sum((Element.s(ctx, i) for i in range(1, n + 1)), Element.zero(ctx))
        T = Scalar.inv_sqrt(ctx, m) * sum((Element.t(ctx, j) for j in range(1, m + 1)), Element.zero(ctx))
        R = S * T.adjoint()
        p_i = tuple(Element.s(ctx, i) * Element.s_star(ctx, i) for i in range(1, n + 1))
        q_j = tuple(Element.t(ctx, j) * Element.t_star(ctx, j) for j in range(1, m + 1))
        root = Scalar.sqrt(ctx, n * m)
        r = {(i, j): root * (p_i[i - 1] * R * q_j[j - 1]) for i in range(1, n + 1) for j in range(1, m + 1)}
        return cls(ctx, S, T, R, p_i, q_j, r)

    def pi(self, i: int) -> Element:
        return self.p_i[i - 1]

    def qj(self, j: int) -> Element:
        return self.q_j[j - 1]


def st_star(ctx: Context, i: int, j: int) -> Element:
    return Element.s(ctx, i) * Element.t_star(ctx, j)


# ------------------------------------------------------------------ checks
def check_pisom_suite(ctx: Context, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "S, T are isometries on q; R = S T* is a partial isometry"
    c = CovariantObjects.build(ctx)
    q = Element.q(ctx)
    S, T, R = c.S, c.T, c.R
    return [
        claim_equal("C6", cite, "S* S = q", lambda: S.adjoint() * S, lambda: q, refine_depth),
        claim_equal("C6", cite, "T* T = q", lambda: T.adjoint() * T, lambda: q, refine_depth),
        claim_equal("C6", cite, "R R* R = R", lambda: R * R.adjoint() * R, lambda: R, refine_depth),
        claim_equal("C6", cite, "R R* = S S*", lambda: R * R.adjoint(), lambda: S * S.adjoint(), refine_depth),
        claim_equal("C6", cite, "R* R = T T*", lambda: R.adjoint() * R, lambda: T * T.adjoint(), refine_depth),
        Claim("C6", cite, "R is a partial isometry", lambda: is_partial_isometry(R, depth=refine_depth)),
    ]


def check_slmab(ctx: Context, depth: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "S* f S = L(f), S g = alpha(g) S and the t-analogues"
    c = CovariantObjects.build(ctx)
    S, T = c.S, c.T
    fs = spanning_projections(ctx, P_SIDE, depth)
    gs = spanning_projections(ctx, Q_SIDE, depth)
    claims = []
    for f in fs:
        claims.append(claim_equal("C7", cite, f"S* {f} S = L({f})",
                                  lambda f=f: S.adjoint() * f * S, lambda f=f: L(f), refine_depth))
        claims.append(claim_equal("C7", cite, f"T* {f} T = M({f})",
                                  lambda f=f: T.adjoint() * f * T, lambda f=f: M(f), refine_depth))
        for i, k in product(range(1, ctx.n + 1), repeat=2):
            if i != k:
                claims.append(claim_equal("C7", cite, f"s{i}* {f} s{k} = 0",
                                          lambda f=f, i=i, k=k: Element.s_star(ctx, i) * f * Element.s(ctx, k),
                                          lambda: Element.zero(ctx), refine_depth))
    for g in gs:
        claims.append(claim_equal("C7", cite, f"S {g} = alpha({g}) S",
                                  lambda g=g: S * g, lambda g=g: alpha(g) * S, refine_depth))
        claims.append(claim_equal("C7", cite, f"T {g} = beta({g}) T",
                                  lambda g=g: T * g, lambda g=g: beta(g) * T, refine_depth))
    return claims


def check_covariance(ctx: Context, depth: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "R f R* = V(f) R R* and R* f R = H(f) R* R"
    R = CovariantObjects.build(ctx).R
    Rs = R.adjoint()
    claims = []
    for f in spanning_projections(ctx, P_SIDE, depth):
        claims.append(claim_equal("C8", cite, f"R {f} R* = V({f}) R R*",
                                  lambda f=f: R * f * Rs, lambda f=f: V(f) * R * Rs, refine_depth))
        claims.append(claim_equal("C8", cite, f"R* {f} R = H({f}) R* R",
                                  lambda f=f: Rs * f * R, lambda f=f: H(f) * Rs * R, refine_depth))
    return claims


def check_tro(ctx: Context, depth: int, seed: int = 0, samples: int = 24,
              refine_depth: Optional[int] = None) -> List[Claim]:
    """
    (aRb)(cRd)*(eRf) = a V(b d*) R H(c* e) f over spanning a..f: every
    tuple with at most one slot different from p, plus seeded random tuples.
    """
    cite = "ternary ring identity for R"
    R = CovariantObjects.build(ctx).R
    fs = spanning_projections(ctx, P_SIDE, min(depth, 2))
    p = fs[0]
    tuples = [(p,) * 6]
    for slot in range(6):
        for f in fs[1:]:
            tup = [p] * 6
            tup[slot] = f
            tuples.append(tuple(tup))
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        tuples.append(tuple(fs[k] for k in rng.integers(0, len(fs), size=6)))

    def lhs(a, b, c, d, e, f):
        return (a * R * b) * (c * R * d).adjoint() * (e * R * f)

    def rhs(a, b, c, d, e, f):
        return a * V(b * d.adjoint()) * R * H(c.adjoint() * e) * f

    claims = []
    for tup in tuples:
        label = ", ".join(str(x) for x in tup)
        claims.append(claim_equal("C9", cite, f"(a..f) = ({label})",
                                  lambda tup=tup: lhs(*tup), lambda tup=tup: rhs(*tup), refine_depth))
    return claims


def check_redundancies(ctx: Context, depth: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "redundancies p_i R R* p_i = 1/n p_i, q_j R* R q_j = 1/m q_j"
    c = CovariantObjects.build(ctx)
    R = c.R
    RR = R * R.adjoint()
    # the q_j redundancy sits on the source side of R
    RsR = R.adjoint() * R
    inv_n, inv_m = Scalar.rational(ctx, 1, ctx.n), Scalar.rational(ctx, 1, ctx.m)
    fs = spanning_projections(ctx, P_SIDE, depth)
    claims = []
    for i in range(1, ctx.n + 1):
        p_i = c.pi(i)
        claims.append(claim_equal("C10", cite, f"p{i} R R* p{i} = 1/n p{i}",
                                  lambda p_i=p_i: p_i * RR * p_i, lambda p_i=p_i: inv_n * p_i, refine_depth))
        for f in fs:
            claims.append(claim_equal("C10", cite, f"(p{i} R R* p{i}) {f} R = 1/n p{i} {f} R",
                                      lambda p_i=p_i, f=f: p_i * RR * p_i * f * R,
                                      lambda p_i=p_i, f=f: inv_n * (p_i * f * R), refine_depth))
    for j in range(1, ctx.m + 1):
        q_j = c.qj(j)
        claims.append(claim_equal("C10", cite, f"q{j} R* R q{j} = 1/m q{j}",
                                  lambda q_j=q_j: q_j * RsR * q_j, lambda q_j=q_j: inv_m * q_j, refine_depth))
        for f in fs:
            claims.append(claim_equal("C10", cite, f"R {f} (q{j} R* R q{j}) = 1/m R {f} q{j}",
                                      lambda q_j=q_j, f=f: R * f * q_j * RsR * q_j,
                                      lambda q_j=q_j, f=f: inv_m * (R * f * q_j), refine_depth))
    return claims


@dataclass(frozen=True)
class NotPowerWitness:
    ctx: Context
    fourier_coefficient: Element
    fourier_verdict: Optional[Verdict]
    r_squared: Verdict
    commutator: Optional[Verdict]

    @property
    def degenerate(self) -> bool:
        return self.ctx.n == 1 or self.ctx.m == 1

    def holds(self) -> bool:
        if self.degenerate:
            return self.r_squared.is_equal and self.commutator is not None and self.commutator.is_equal
        return self.fourier_verdict is not None and self.fourier_verdict.is_not_equal \
            and self.r_squared.is_not_equal

    def __str__(self):
        if self.degenerate:
            return (f"n={self.ctx.n}, m={self.ctx.m}: R R* and R* R commute ({self.commutator}); "
                    f"R^2 partial isometry: {self.r_squared}")
        return (f"fourier(S S* T T* - T T* S S*, a1 a2^-1 b1 b2^-1) = {self.fourier_coefficient} "
                f"({self.fourier_verdict}); R^2 partial isometry: {self.r_squared}")


def not_power_group(ctx: Context) -> GroupWord:
    return GroupWord(ctx, (("s", 1, 1), ("s", 2, -1), ("t", 1, 1), ("t", 2, -1)))


def check_not_power(ctx: Context, refine_depth: Optional[int] = None) -> NotPowerWitness:
    c = CovariantObjects.build(ctx)
    S, T, R = c.S, c.T, c.R
    r_squared = is_partial_isometry(R * R, depth=refine_depth)
    if ctx.n == 1 or ctx.m == 1:
        RRs, RsR = R * R.adjoint(), R.adjoint() * R
        commutator = equals(RRs * RsR, RsR * RRs, depth=refine_depth)
        return NotPowerWitness(ctx, Element.zero(ctx), None, r_squared, commutator)
    x = S * S.adjoint() * T * T.adjoint() - T * T.adjoint() * S * S.adjoint()
    coefficient = fourier(x, not_power_group(ctx))
    verdict = equals(coefficient, Element.zero(ctx), depth=refine_depth)
    return NotPowerWitness(ctx, coefficient, verdict, r_squared, None)


def check_not_power_claims(ctx: Context, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "R is not a power partial isometry when n, m >= 2"
    if ctx.n == 1 or ctx.m == 1:
        return [claim_holds("C11", cite, "degenerate branch: R^2 is a partial isometry",
                            lambda: _witness_report(check_not_power(ctx, refine_depth)))]
    c = CovariantObjects.build(ctx)
    expected = Scalar.rational(ctx, 1, ctx.n * ctx.m) * Element.from_letters(
        ctx, Letter("s", 1), Letter("s*", 2), Letter("t", 1), Letter("t*", 2))

    def coefficient():
        S, T = c.S, c.T
        x = S * S.adjoint() * T * T.adjoint() - T * T.adjoint() * S * S.adjoint()
        return fourier(x, not_power_group(ctx))

    return [
        claim_holds("C11", cite, "fourier coefficient at a1 a2^-1 b1 b2^-1 is 1/(nm) s1 s2* t1 t2*",
                    lambda: (coefficient() == expected, f"got {coefficient()}")),
        claim_nonzero("C11", cite, "fourier coefficient at a1 a2^-1 b1 b2^-1 is nonzero", coefficient, refine_depth),
        Claim("C11", cite, "R^2 is not a partial isometry",
              lambda: is_partial_isometry(c.R * c.R, depth=refine_depth), expect=VerdictKind.NOT_EQUAL),
    ]


def _witness_report(witness: NotPowerWitness):
    return witness.holds(), str(witness)

def p_corner_words(ctx: Context, maxlen: int) -> List[Monomial]:
    """Nonzero reduced words with range and source on the P side, p included."""
    return [w for w in reduced_words(ctx, maxlen, range_side=P_SIDE, source_side=P_SIDE)]


def _cancellation_search(y: Element, candidates: Sequence[Element], right: Element,
                         refine_depth: Optional[int]):
    zero = Element.zero(y.ctx)
    for f in candidates:
        if equals(y * f * right, zero, depth=refine_depth).is_not_equal:
            return True, f"f = {f}"
    return False, "no f in the search set separates y"


def check_cancellation_sample(ctx: Context, maxlen: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "y A_p R = 0 implies y = 0, and likewise for R*"
    c = CovariantObjects.build(ctx)
    R, Rs = c.R, c.R.adjoint()
    candidates = [Element.p(ctx)] + list(c.p_i) + spanning_projections(ctx, P_SIDE, min(maxlen, 3))[1:]
    claims = []
    for w in p_corner_words(ctx, maxlen):
        y = Element.from_monomial(w)
        claims.append(claim_holds("C12", cite, f"y = {w}: some f with y f R != 0",
                                  lambda y=y: _cancellation_search(y, candidates, R, refine_depth)))
        claims.append(claim_holds("C12", cite, f"y = {w}: some f with y f R* != 0",
                                  lambda y=y: _cancellation_search(y, candidates, Rs, refine_depth)))
    return claims


# ----------------------------------------------------------- factorization
@dataclass(frozen=True)
class FGenerator:
    """s_i t_j*, or its adjoint t_j s_i* when starred."""
    i: int
    j: int
    starred: bool = False

    def to_element(self, ctx: Context) -> Element:
        x = st_star(ctx, self.i, self.j)
        return x.adjoint() if self.starred else x

    def __str__(self):
        base = f"s{self.i}t{self.j}'"
        return f"({base})'" if self.starred else base


@dataclass(frozen=True)
class Factorization:
    """A sum of products over F and F*; a single product unless the word is p."""
    ctx: Context
    terms: Tuple[Tuple[FGenerator, ...], ...]

    def to_element(self) -> Element:
        total = Element.zero(self.ctx)
        for term in self.terms:
            value = term[0].to_element(self.ctx)
            for g in term[1:]:
                value = value * g.to_element(self.ctx)
            total = total + value
        return total

    def __str__(self):
        return " + ".join(" , ".join(str(g) for g in term) for term in self.terms)


def _as_letters(ctx: Context, w: Union[Monomial, Sequence[Letter]]) -> Tuple[Letter, ...]:
    letters = tuple(w.letters) if isinstance(w, Monomial) else tuple(w)
    if not letters:
        raise FactorizationError("empty word")
    reduced = reduce_word(ctx, letters)
    if reduced is None or reduced.letters != letters:
        raise FactorizationError(f"{' '.join(map(str, letters))} is not a reduced word")
    return letters


def factor_into_F(ctx: Context, w: Union[Monomial, Sequence[Letter]]) -> Factorization:
    """
    Write a reduced p-corner word as a product over F and F*, pair by pair:
    s_i t_j* -> s_i t_j*, t_j s_i* -> (s_i t_j*)*, s_i s_k* -> s_i t_1* (s_k t_1*)*,
    t_j t_l* -> (s_1 t_j*)* s_1 t_l*. p itself is the sum of (s_i t_1*)(s_i t_1*)*.
    """
    letters = _as_letters(ctx, w)
    if letters == (Letter("p"),):
        return Factorization(ctx, tuple((FGenerator(i, 1), FGenerator(i, 1, True)) for i in range(1, ctx.n + 1)))
    if letters[0].range != P_SIDE or letters[-1].source != P_SIDE or letters[0].is_unit:
        raise FactorizationError(f"{' '.join(map(str, letters))} is not in the p-corner")
    factors: List[FGenerator] = []
    for k in range(0, len(letters), 2):
        x, y = letters[k], letters[k + 1]
        if x.family == "s" and y.family == "t":
            factors.append(FGenerator(x.index, y.index))
        elif x.family == "t" and y.family == "s":
            factors.append(FGenerator(y.index, x.index, True))
        elif x.family == "s":
            factors.extend([FGenerator(x.index, 1), FGenerator(y.index, 1, True)])
        else:
            factors.extend([FGenerator(1, x.index, True), FGenerator(1, y.index)])
    return Factorization(ctx, (tuple(factors),))


def check_factorization(ctx: Context, maxlen: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "F and F* generate the p-corner; range projections of their words lie in A_p"
    claims = []
    for w in p_corner_words(ctx, maxlen):
        x = Element.from_monomial(w)
        claims.append(claim_equal("C13", cite, f"{w} = product over F",
                                  lambda w=w: factor_into_F(ctx, w).to_element(), lambda x=x: x, refine_depth))
        if w.letters != (Letter("p"),):
            claims.append(Claim("C13", cite, f"z z* in A_p for z = {w}",
                                lambda x=x: _range_projection_in_corner(x, refine_depth)))
    return claims


def _range_projection_in_corner(z: Element, refine_depth: Optional[int]) -> Verdict:
    e = z * z.adjoint()
    verdict = is_projection(e, depth=refine_depth)
    if not verdict.is_equal:
        return verdict
    ok = all(group_image(w).is_identity and w.range == P_SIDE for w in e.terms)
    return Verdict(VerdictKind.EQUAL if ok else VerdictKind.NOT_EQUAL,
                   detail="" if ok else f"{e} is not a combination of projections under p")


# ------------------------------------------------------------------ r_ij
def check_r_identities(ctx: Context, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "r_ij = sqrt(nm) p_i R q_j equals s_i t_j*"
    c = CovariantObjects.build(ctx)
    claims = []
    for (i, j), r in sorted(c.r.items()):
        claims.append(claim_equal("C14", cite, f"r[{i},{j}] = s{i} t{j}'",
                                  lambda r=r: r, lambda i=i, j=j: st_star(ctx, i, j), refine_depth))
    scale = Scalar.inv_sqrt(ctx, ctx.n * ctx.m)
    claims.append(claim_equal("C14", cite, "R = 1/sqrt(nm) sum r_ij",
                              lambda: c.R, lambda: scale * sum(c.r.values(), Element.zero(ctx)), refine_depth))
    return claims


def check_r_relations(ctx: Context, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "r_ij r_kl* = 0 (j != l), r_ij* r_kl = 0 (i != k), r_ij r_ij* = p_i, r_ij* r_ij = q_j"
    c = CovariantObjects.build(ctx)
    zero = Element.zero(ctx)
    claims = []
    for (i, j), r in sorted(c.r.items()):
        claims.append(claim_equal("C16", cite, f"r[{i},{j}] r[{i},{j}]* = p{i}",
                                  lambda r=r: r * r.adjoint(), lambda i=i: c.pi(i), refine_depth))
        claims.append(claim_equal("C16", cite, f"r[{i},{j}]* r[{i},{j}] = q{j}",
                                  lambda r=r: r.adjoint() * r, lambda j=j: c.qj(j), refine_depth))
        for (k, l), s in sorted(c.r.items()):
            if j != l:
                claims.append(claim_equal("C16", cite, f"r[{i},{j}] r[{k},{l}]* = 0",
                                          lambda r=r, s=s: r * s.adjoint(), lambda: zero, refine_depth))
            if i != k:
                claims.append(claim_equal("C16", cite, f"r[{i},{j}]* r[{k},{l}] = 0",
                                          lambda r=r, s=s: r.adjoint() * s, lambda: zero, refine_depth))
    return claims


def check_normalizer(ctx: Context, depth: int, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "r_ij normalizes A_p: r_ij f r_ij* = m V(q_j f) p_i"
    c = CovariantObjects.build(ctx)
    m = Scalar.rational(ctx, ctx.m)
    fs = spanning_projections(ctx, P_SIDE, min(depth, 2))
    claims = []
    for (i, j), r in sorted(c.r.items()):
        q_j, p_i = c.qj(j), c.pi(i)
        for f in fs:
            claims.append(claim_equal("C19", cite, f"r[{i},{j}] {f} r[{i},{j}]* = m V(q{j} {f}) p{i}",
                                      lambda r=r, f=f: r * f * r.adjoint(),
                                      lambda q_j=q_j, p_i=p_i, f=f: m * (V(q_j * f) * p_i), refine_depth))
            claims.append(claim_holds("C19", cite, f"r[{i},{j}]* {f} r[{i},{j}] lies in A_p",
                                      lambda r=r, f=f: _diagonal_report(r.adjoint() * f * r)))
    return claims


def _diagonal_report(x: Element):
    ok = all(group_image(w).is_identity and w.range == P_SIDE for w in x.terms)
    return ok, "" if ok else f"{x} has off-diagonal terms"


def check_fullness(ctx: Context, refine_depth: Optional[int] = None) -> List[Claim]:
    cite = "p and q are full projections"
    p, q, one = Element.p(ctx), Element.q(ctx), Element.unit(ctx)
    s1, s1s = Element.s(ctx, 1), Element.s_star(ctx, 1)

    def q_sum():
        total = Element.zero(ctx)
        for i in range(1, ctx.n + 1):
            total = total + Element.s(ctx, i) * q * Element.s_star(ctx, i)
        return total

    return [
        claim_equal("C20", cite, "s1* p s1 = q", lambda: s1s * p * s1, lambda: q, refine_depth),
        claim_equal("C20", cite, "p + s1* p s1 = 1", lambda: p + s1s * p * s1, lambda: one, refine_depth),
        claim_equal("C20", cite, "sum s_i q s_i* = p", q_sum, lambda: p, refine_depth),
        claim_equal("C20", cite, "q + sum s_i q s_i* = 1", lambda: q + q_sum(), lambda: one, refine_depth),
    ]
