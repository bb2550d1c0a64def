"""
Reduced words over s_i, t_j, their adjoints, p and q.

A word is read as operator composition: the rightmost letter acts first.
Every letter has a source side and a range side (P or Q); s_i and t_j
map Q to P, their adjoints map P to Q, and p, q are the identities of
their side.
"""
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from onm_model.models.context import Context, OnmError
from onm_model.models.freegroup import GroupWord

P_SIDE = "P"
Q_SIDE = "Q"


class WordError(OnmError):
    pass


class Letter(NamedTuple):
    kind: str          # "s", "t", "s*", "t*", "p", "q"
    index: int = 0

    @property
    def family(self) -> str:
        return self.kind[0]

    @property
    def is_star(self) -> bool:
        return self.kind.endswith("*")

    @property
    def is_unit(self) -> bool:
        return self.kind in ("p", "q")

    @property
    def source(self) -> str:
        return _SOURCE[self.kind]

    @property
    def range(self) -> str:
        return _RANGE[self.kind]

    def star(self) -> "Letter":
        return Letter(_STAR[self.kind], self.index)

    def __str__(self):
        if self.is_unit:
            return self.kind
        return f"{self.family}{self.index}" + ("'" if self.is_star else "")


_SOURCE = {"s": Q_SIDE, "t": Q_SIDE, "s*": P_SIDE, "t*": P_SIDE, "p": P_SIDE, "q": Q_SIDE}
_RANGE = {"s": P_SIDE, "t": P_SIDE, "s*": Q_SIDE, "t*": Q_SIDE, "p": P_SIDE, "q": Q_SIDE}
_STAR = {"s": "s*", "t": "t*", "s*": "s", "t*": "t", "p": "p", "q": "q"}

P = Letter("p")
Q = Letter("q")


def S(i: int) -> Letter:
    return Letter("s", i)


def T(j: int) -> Letter:
    return Letter("t", j)


def Sstar(i: int) -> Letter:
    return Letter("s*", i)


def Tstar(j: int) -> Letter:
    return Letter("t*", j)


def check_letter(ctx: Context, letter: Letter) -> None:
    if letter.is_unit:
        return
    if letter.family == "s":
        ctx.check_s(letter.index)
    else:
        ctx.check_t(letter.index)


class Monomial:
    """A nonzero reduced word. Build through reduce_word, not directly."""
    __slots__ = ("ctx", "letters", "_hash", "_text")

    def __init__(self, ctx: Context, letters: Tuple[Letter, ...]):
        self.ctx = ctx
        self.letters = letters
        self._hash = None
        self._text = None

    @property
    def source(self) -> str:
        return self.letters[-1].source

    @property
    def range(self) -> str:
        return self.letters[0].range

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.ctx == other.ctx and self.letters == other.letters

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def __str__(self):
        if self._text is None:
            self._text = " ".join(str(x) for x in self.letters)
        return self._text

    def __repr__(self):
        return f"Monomial({self})"


def _reduce(letters: Sequence[Letter]) -> Optional[Tuple[Letter, ...]]:
    for left, right in zip(letters, letters[1:]):
        if left.source != right.range:
            return None
    if len(letters) > 1:
        core = [x for x in letters if not x.is_unit]
        if not core:
            return (letters[0],)
    else:
        core = list(letters)
    stack: List[Letter] = []
    cancelled = False
    for letter in core:
        top = stack[-1] if stack else None
        if top is not None and top.is_star and not letter.is_star and not letter.is_unit \
                and top.family == letter.family:
            if top.index != letter.index:
                return None
            stack.pop()
            cancelled = True
        else:
            stack.append(letter)
    if not stack:
        return (Q,) if cancelled else None
    return tuple(stack)


def reduce_word(ctx: Context, letters: Sequence[Letter]) -> Optional[Monomial]:
    """
    Normal form of a letter sequence, or None for Zero.

    Rules: type mismatch -> Zero; s_i* s_k -> 0 (i != k) or q (i = k), same
    for t; p and q are absorbed by type-consistent neighbours.
    """
    if not letters:
        raise WordError("empty letter sequence")
    for letter in letters:
        check_letter(ctx, letter)
    reduced = _reduce(letters)
    if reduced is None:
        return None
    return Monomial(ctx, reduced)


def concat(x: Monomial, y: Monomial) -> Optional[Monomial]:
    """Product of two reduced words; letters are already bounds-checked."""
    reduced = _reduce(x.letters + y.letters)
    if reduced is None:
        return None
    return Monomial(x.ctx, reduced)


def word(ctx: Context, *letters: Letter) -> Optional[Monomial]:
    return reduce_word(ctx, letters)


def adjoint_word(w: Optional[Monomial]) -> Monomial:
    if w is None:
        raise WordError("adjoint of Zero is Zero; handle it before calling adjoint_word")
    return Monomial(w.ctx, tuple(x.star() for x in reversed(w.letters)))


def group_image(w: Monomial) -> GroupWord:
    letters = []
    for x in w.letters:
        if x.is_unit:
            continue
        letters.append((x.family, x.index, -1 if x.is_star else 1))
    return GroupWord(w.ctx, tuple(letters))


def is_projection_word(w: Monomial) -> bool:
    """w w = w and w* = w, decided by the equality engine."""
    from onm_model.models.elements import Element, equals

    x = Element.from_monomial(w)
    return equals(x * x, x).is_equal and equals(x.adjoint(), x).is_equal


# ------------------------------------------------------------------ rewriting
# Single-step rule applications, used to test that reduce_word does not
# depend on the order in which rules fire.

ZERO_WORD = None


def redexes(letters: Sequence[Letter]) -> List[int]:
    """Positions k such that some rule applies to the pair (k, k+1)."""
    out = []
    for k, (left, right) in enumerate(zip(letters, letters[1:])):
        if left.source != right.range:
            out.append(k)
        elif left.is_unit or right.is_unit:
            out.append(k)
        elif left.is_star and not right.is_star and left.family == right.family:
            out.append(k)
    return out


def rewrite_at(letters: Sequence[Letter], k: int) -> Optional[Tuple[Letter, ...]]:
    left, right = letters[k], letters[k + 1]
    head, tail = tuple(letters[:k]), tuple(letters[k + 2:])
    if left.source != right.range:
        return ZERO_WORD
    if left.is_unit:
        return head + (right,) + tail
    if right.is_unit:
        return head + (left,) + tail
    if left.is_star and not right.is_star and left.family == right.family:
        if left.index != right.index:
            return ZERO_WORD
        return head + (Q,) + tail
    raise WordError(f"no rule applies at position {k}")


# ---------------------------------------------------------------- enumeration
def _next_letters(ctx: Context) -> List[Letter]:
    return [S(i) for i in range(1, ctx.n + 1)] + [T(j) for j in range(1, ctx.m + 1)] \
        + [Sstar(i) for i in range(1, ctx.n + 1)] + [Tstar(j) for j in range(1, ctx.m + 1)]


def reduced_words(ctx: Context, max_len: int, range_side: Optional[str] = None,
                  source_side: Optional[str] = None, include_units: bool = True) -> Iterator[Monomial]:
    """All nonzero reduced monomials of length 1..max_len, shortest first."""
    if max_len < 1:
        return
    alphabet = _next_letters(ctx)

    def keep(w: Tuple[Letter, ...]) -> bool:
        return (range_side is None or w[0].range == range_side) and \
            (source_side is None or w[-1].source == source_side)

    if include_units:
        for unit in (P, Q):
            if keep((unit,)):
                yield Monomial(ctx, (unit,))
    layer = [(x,) for x in alphabet]
    for length in range(1, max_len + 1):
        for w in layer:
            if keep(w):
                yield Monomial(ctx, w)
        if length == max_len:
            break
        nxt = []
        for w in layer:
            last = w[-1]
            for x in alphabet:
                if last.source != x.range:
                    continue
                if last.is_star and not x.is_star and last.family == x.family:
                    continue
                nxt.append(w + (x,))
        layer = nxt
