"""
Elements of the dense *-subalgebra: finite Scalar combinations of reduced
monomials, with *-algebra arithmetic, Fourier fibers over the free group,
value-preserving refinement and a three-valued equality engine.
"""
import logging
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from onm_model.models.context import Context, OnmError, same_context
from onm_model.models.freegroup import GroupWord
from onm_model.models.scalars import Scalar, render_rational
from onm_model.models.spectrum import atom_projections, decide_fiber, EXHAUSTED, NONZERO
from onm_model.models.words import (
    Letter,
    Monomial,
    P,
    P_SIDE,
    Q,
    Sstar,
    S,
    T,
    Tstar,
    adjoint_word,
    concat,
    group_image,
    reduce_word,
)

logger = logging.getLogger(__name__)


class RefinementError(OnmError):
    pass


Number = Union[int, Scalar]


class Element:
    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: Context, terms: Optional[Dict[Monomial, Scalar]] = None):
        self.ctx = ctx
        self.terms: Dict[Monomial, Scalar] = {w: c for w, c in (terms or {}).items() if c}
        self._hash = None

    # ------------------------------------------------------------ builders
    @classmethod
    def zero(cls, ctx: Context) -> "Element":
        return cls(ctx)

    @classmethod
    def from_monomial(cls, w: Optional[Monomial], coef: Optional[Number] = None) -> "Element":
        if w is None:
            raise OnmError("from_monomial needs a nonzero monomial; use Element.zero")
        c = Scalar.one(w.ctx) if coef is None else _as_scalar(w.ctx, coef)
        return cls(w.ctx, {w: c})

    @classmethod
    def from_letters(cls, ctx: Context, *letters: Letter) -> "Element":
        w = reduce_word(ctx, letters)
        if w is None:
            return cls.zero(ctx)
        return cls.from_monomial(w)

    @classmethod
    def p(cls, ctx: Context) -> "Element":
        return cls.from_letters(ctx, P)

    @classmethod
    def q(cls, ctx: Context) -> "Element":
        return cls.from_letters(ctx, Q)

    @classmethod
    def unit(cls, ctx: Context) -> "Element":
        """1 = p + q."""
        return cls.p(ctx) + cls.q(ctx)

    @classmethod
    def s(cls, ctx: Context, i: int) -> "Element":
        return cls.from_letters(ctx, S(i))

    @classmethod
    def t(cls, ctx: Context, j: int) -> "Element":
        return cls.from_letters(ctx, T(j))

    @classmethod
    def s_star(cls, ctx: Context, i: int) -> "Element":
        return cls.from_letters(ctx, Sstar(i))

    @classmethod
    def t_star(cls, ctx: Context, j: int) -> "Element":
        return cls.from_letters(ctx, Tstar(j))

    # --------------------------------------------------------- inspection
    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: Monomial) -> Scalar:
        return self.terms.get(w, Scalar.zero(self.ctx))

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def group_images(self) -> List[GroupWord]:
        return sorted({group_image(w) for w in self.terms}, key=GroupWord.sort_key)

    def __eq__(self, other):
        """Structural equality; algebraic equality is `equals`."""
        if not isinstance(other, Element):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.n, self.ctx.m, frozenset(self.terms.items())))
        return self._hash

    # --------------------------------------------------------- arithmetic
    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            same_context(self.ctx, other.ctx)
            return other
        return scale(_as_scalar(self.ctx, other), Element.unit(self.ctx))

    def __add__(self, other) -> "Element":
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> "Element":
        return sub(self, self._coerce(other))

    def __rsub__(self, other) -> "Element":
        return sub(self._coerce(other), self)

    def __neg__(self) -> "Element":
        return scale(Scalar.rational(self.ctx, -1), self)

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return mul(self, other)
        return scale(_as_scalar(self.ctx, other), self)

    def __rmul__(self, other) -> "Element":
        return scale(_as_scalar(self.ctx, other), self)

    def __pow__(self, k: int) -> "Element":
        if k < 1:
            raise OnmError("only positive powers of elements are defined")
        result = self
        for _ in range(k - 1):
            result = mul(result, self)
        return result

    def adjoint(self) -> "Element":
        return adjoint(self)

    def __str__(self):
        return render_element(self)

    def __repr__(self):
        return f"Element({self}; n={self.ctx.n}, m={self.ctx.m})"


def _as_scalar(ctx: Context, value: Number) -> Scalar:
    if isinstance(value, Scalar):
        same_context(ctx, value.ctx)
        return value
    return Scalar(ctx, value)


def add(x: Element, y: Element) -> Element:
    ctx = same_context(x.ctx, y.ctx)
    acc = dict(x.terms)
    for w, c in y.terms.items():
        acc[w] = acc[w] + c if w in acc else c
    return Element(ctx, acc)


def sub(x: Element, y: Element) -> Element:
    return add(x, scale(Scalar.rational(y.ctx, -1), y))


def scale(k: Scalar, x: Element) -> Element:
    same_context(k.ctx, x.ctx)
    if k.is_zero:
        return Element.zero(x.ctx)
    return Element(x.ctx, {w: k * c for w, c in x.terms.items()})


def mul(x: Element, y: Element) -> Element:
    ctx = same_context(x.ctx, y.ctx)
    acc: Dict[Monomial, Scalar] = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            w = concat(w1, w2)
            if w is None:
                continue
            c = c1 * c2
            acc[w] = acc[w] + c if w in acc else c
    return Element(ctx, acc)


def adjoint(x: Element) -> Element:
    # scalars are real
    return Element(x.ctx, {adjoint_word(w): c for w, c in x.terms.items()})


# ------------------------------------------------------------------ fourier
@dataclass(frozen=True)
class Fiber:
    g: GroupWord
    c: Element

    def __post_init__(self):
        for w in self.c.terms:
            if group_image(w) != self.g:
                raise OnmError(f"monomial {w} is not homogeneous of degree {self.g}")


def fourier(x: Element, g: GroupWord) -> Element:
    same_context(x.ctx, g.ctx)
    return Element(x.ctx, {w: c for w, c in x.terms.items() if group_image(w) == g})


def fibers(x: Element) -> List[Fiber]:
    grouped: Dict[GroupWord, Dict[Monomial, Scalar]] = {}
    for w, c in x.terms.items():
        grouped.setdefault(group_image(w), {})[w] = c
    return [Fiber(g, Element(x.ctx, grouped[g])) for g in sorted(grouped, key=GroupWord.sort_key)]


# ------------------------------------------------------------------- refine
Schedule = Sequence[Tuple[int, str]]


def _interface_side(w: Monomial, position: int) -> str:
    if position == 0:
        return w.range
    return w.letters[position - 1].source


def p_interfaces(w: Monomial) -> List[int]:
    return [k for k in range(len(w) + 1) if _interface_side(w, k) == P_SIDE]


def default_schedule(x: Element) -> List[Tuple[int, str]]:
    """Leftmost P-type interface over all terms, s-family."""
    positions = [p_interfaces(w)[0] for w in x.terms if p_interfaces(w)]
    if not positions:
        return []
    return [(min(positions), "s")]


def refine(x: Element, schedule: Optional[Schedule] = None) -> Element:
    """
    Insert p = sum s_i s_i* (family "s") or p = sum t_j t_j* (family "t")
    at the designated interface of every monomial, one schedule step at a
    time. Interfaces that are not P-typed, or lie past the end of a
    monomial, are left alone.
    """
    if schedule is None:
        schedule = default_schedule(x)
    ctx = x.ctx
    current = x
    for position, family in schedule:
        if position < 0:
            raise RefinementError(f"negative refinement position {position}")
        if family not in ("s", "t"):
            raise RefinementError(f"unknown refinement family {family!r}")
        acc: Dict[Monomial, Scalar] = {}
        for w, c in current.terms.items():
            if position > len(w) or _interface_side(w, position) != P_SIDE:
                pieces = [w]
            else:
                head, tail = w.letters[:position], w.letters[position:]
                pieces = []
                for k in range(1, ctx.family_size(family) + 1):
                    inserted = (Letter(family, k), Letter(family + "*", k))
                    piece = reduce_word(ctx, head + inserted + tail)
                    if piece is not None:
                        pieces.append(piece)
            for piece in pieces:
                acc[piece] = acc[piece] + c if piece in acc else c
        current = Element(ctx, acc)
    return current


# ------------------------------------------------------------------- equals
class VerdictKind(Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNCONFIRMED = "Unconfirmed"


@dataclass(frozen=True)
class Witness:
    fiber: GroupWord
    coefficient: Scalar
    atom: Tuple[Monomial, ...]

    def __str__(self):
        atom = " . ".join(f"({w})" for w in self.atom)
        return f"fiber {self.fiber}: coefficient {self.coefficient} on {atom}"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness: Optional[Witness] = None
    detail: str = ""

    @property
    def is_equal(self) -> bool:
        return self.kind is VerdictKind.EQUAL

    @property
    def is_not_equal(self) -> bool:
        return self.kind is VerdictKind.NOT_EQUAL

    @property
    def is_unconfirmed(self) -> bool:
        return self.kind is VerdictKind.UNCONFIRMED

    def __str__(self):
        if self.witness is not None:
            return f"{self.kind.value} [{self.witness}]"
        if self.detail:
            return f"{self.kind.value} [{self.detail}]"
        return self.kind.value


EQUAL = Verdict(VerdictKind.EQUAL)


class VerdictCache:
    """Memo of equals verdicts keyed by (difference, budget)."""

    def __init__(self, limit: int = 200_000):
        self._data: Dict[Tuple[Element, int], Verdict] = {}
        self._lock = threading.Lock()
        self.limit = limit

    def get(self, key) -> Optional[Verdict]:
        with self._lock:
            return self._data.get(key)

    def put(self, key, verdict: Verdict) -> None:
        with self._lock:
            if len(self._data) >= self.limit:
                self._data.clear()
            self._data[key] = verdict

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self):
        with self._lock:
            return len(self._data)


verdict_cache = VerdictCache()


def refine_budget(*xs: Element) -> int:
    return max((x.max_length() for x in xs), default=0) + 2


def equals(x: Element, y: Element, depth: Optional[int] = None) -> Verdict:
    """
    Decide x = y: split x - y into Fourier fibers and refine each fiber
    until it is zero on every atom or an atom with nonzero coefficient is
    found. `depth` bounds the refinement; by default it is the longest
    monomial length plus two.
    """
    ctx = same_context(x.ctx, y.ctx)
    d = sub(x, y)
    if d.is_zero:
        return EQUAL
    budget = refine_budget(x, y) if depth is None else depth
    key = (d, budget)
    cached = verdict_cache.get(key)
    if cached is not None:
        return cached
    verdict = EQUAL
    for fiber in fibers(d):
        terms = [(c, w.letters) for w, c in fiber.c.terms.items()]
        outcome = decide_fiber(ctx, terms, budget)
        if outcome.status == NONZERO:
            witness = Witness(fiber.g, outcome.coefficient, atom_projections(ctx, outcome.root, outcome.labels))
            verdict = Verdict(VerdictKind.NOT_EQUAL, witness=witness)
            break
        if outcome.status == EXHAUSTED and verdict.is_equal:
            verdict = Verdict(VerdictKind.UNCONFIRMED,
                              detail=f"fiber {fiber.g}: refinement depth {budget} exhausted")
    if verdict.is_unconfirmed:
        logger.warning("equality unconfirmed in context %s: %s", ctx, verdict.detail)
    verdict_cache.put(key, verdict)
    return verdict


def is_partial_isometry(x: Element, depth: Optional[int] = None) -> Verdict:
    return equals(x * x.adjoint() * x, x, depth=depth)


def is_projection(x: Element, depth: Optional[int] = None) -> Verdict:
    """x* = x and x x = x; the first failing verdict is returned."""
    first = equals(x.adjoint(), x, depth=depth)
    if not first.is_equal:
        return first
    return equals(x * x, x, depth=depth)


# ---------------------------------------------------------------- rendering
def _coefficient_parts(c: Scalar) -> Iterator[Tuple[bool, str]]:
    for coord, radicand in c.parts():
        mag = abs(coord)
        pieces = []
        if mag != 1:
            pieces.append(render_rational(mag))
        if radicand != 1:
            pieces.append(f"sqrt({radicand})")
        yield coord < 0, " ".join(pieces)


def render_element(x: Element) -> str:
    if x.is_zero:
        return "0"
    ordered = sorted(x.terms.items(), key=lambda kv: (group_image(kv[0]).sort_key(), str(kv[0])))
    out = ""
    for w, c in ordered:
        for negative, coef in _coefficient_parts(c):
            term = f"{coef} {w}" if coef else str(w)
            if not out:
                out = ("-" if negative else "") + term
            else:
                out += (" - " if negative else " + ") + term
    return out


def combine(verdicts: Iterable[Verdict]) -> Verdict:
    """NotEqual wins over Unconfirmed, which wins over Equal."""
    pending = None
    for verdict in verdicts:
        if verdict.is_not_equal:
            return verdict
        if verdict.is_unconfirmed and pending is None:
            pending = verdict
    return pending or EQUAL
