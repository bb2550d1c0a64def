"""Reduced words in the free group on a1..an, b1..bm."""
from dataclasses import dataclass
from typing import Iterable, Tuple

from onm_model.models.context import Context, same_context

# (family, index, exponent); family "s" renders as a, "t" as b
GroupLetter = Tuple[str, int, int]

_FAMILY_NAME = {"s": "a", "t": "b"}


def free_reduce(letters: Iterable[GroupLetter]) -> Tuple[GroupLetter, ...]:
    stack = []
    for letter in letters:
        family, index, exp = letter
        if stack and stack[-1] == (family, index, -exp):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def _check_letter(ctx: Context, letter: GroupLetter) -> None:
    family, index, exp = letter
    if family == "s":
        ctx.check_s(index)
    elif family == "t":
        ctx.check_t(index)
    else:
        raise ValueError(f"unknown family {family!r}")
    if exp not in (1, -1):
        raise ValueError(f"exponent must be +1 or -1, got {exp}")


@dataclass(frozen=True)
class GroupWord:
    ctx: Context
    letters: Tuple[GroupLetter, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            _check_letter(self.ctx, letter)
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def identity(cls, ctx: Context) -> "GroupWord":
        return cls(ctx, ())

    @classmethod
    def a(cls, ctx: Context, i: int, exp: int = 1) -> "GroupWord":
        return cls(ctx, (("s", i, exp),))

    @classmethod
    def b(cls, ctx: Context, j: int, exp: int = 1) -> "GroupWord":
        return cls(ctx, (("t", j, exp),))

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return group_mul(self, other)

    def __len__(self):
        return len(self.letters)

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __str__(self):
        if not self.letters:
            return "e"
        out = []
        for family, index, exp in self.letters:
            token = f"{_FAMILY_NAME[family]}{index}"
            out.append(token if exp == 1 else token + "^-1")
        return " ".join(out)


def group_mul(g: GroupWord, h: GroupWord) -> GroupWord:
    ctx = same_context(g.ctx, h.ctx)
    return GroupWord(ctx, g.letters + h.letters)


def group_inv(g: GroupWord) -> GroupWord:
    return GroupWord(g.ctx, tuple((f, i, -e) for f, i, e in reversed(g.letters)))
