"""2x2 matrices over Elements."""
from dataclasses import dataclass
from typing import Optional

from onm_model.models.context import Context, same_context
from onm_model.models.elements import Element, Verdict, combine, equals


@dataclass(frozen=True)
class Mat2:
    e11: Element
    e12: Element
    e21: Element
    e22: Element

    def __post_init__(self):
        ctx = self.e11.ctx
        for entry in (self.e12, self.e21, self.e22):
            same_context(ctx, entry.ctx)

    @property
    def ctx(self) -> Context:
        return self.e11.ctx

    @classmethod
    def zero(cls, ctx: Context) -> "Mat2":
        z = Element.zero(ctx)
        return cls(z, z, z, z)

    @classmethod
    def unit(cls, x: Element, row: int, col: int) -> "Mat2":
        """x tensor e_{row,col}."""
        z = Element.zero(x.ctx)
        entries = [z, z, z, z]
        entries[2 * (row - 1) + (col - 1)] = x
        return cls(*entries)

    def entries(self):
        return (self.e11, self.e12, self.e21, self.e22)

    def __add__(self, other: "Mat2") -> "Mat2":
        return mat_add(self, other)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return mat_add(self, mat_scale(-1, other))

    def __mul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def adjoint(self) -> "Mat2":
        return mat_adjoint(self)

    def __str__(self):
        return f"[[{self.e11}, {self.e12}], [{self.e21}, {self.e22}]]"


def mat_add(a: Mat2, b: Mat2) -> Mat2:
    return Mat2(*(x + y for x, y in zip(a.entries(), b.entries())))


def mat_scale(k, a: Mat2) -> Mat2:
    return Mat2(*(k * x for x in a.entries()))


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    same_context(a.ctx, b.ctx)
    return Mat2(
        a.e11 * b.e11 + a.e12 * b.e21,
        a.e11 * b.e12 + a.e12 * b.e22,
        a.e21 * b.e11 + a.e22 * b.e21,
        a.e21 * b.e12 + a.e22 * b.e22,
    )


def mat_adjoint(a: Mat2) -> Mat2:
    return Mat2(a.e11.adjoint(), a.e21.adjoint(), a.e12.adjoint(), a.e22.adjoint())


def mat_equals(a: Mat2, b: Mat2, depth: Optional[int] = None) -> Verdict:
    return combine(equals(x, y, depth=depth) for x, y in zip(a.entries(), b.entries()))
