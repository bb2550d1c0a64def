"""
Exact arithmetic in Q(sqrt(n), sqrt(m)).

A Scalar holds four rational coordinates (a, b, c, d) for
a + b*sqrt(u) + c*sqrt(v) + d*sqrt(u*v), where u, v are the square-free
parts of n and m. Degenerate bases (u = 1, v = 1, u = v) are folded at
construction so that equal values always have equal coordinates.
"""
from typing import Iterator, Tuple, Union

import sympy
from sympy import QQ
from sympy.ntheory.factor_ import core

from onm_model.models.context import Context, OnmError, same_context


class ScalarDivisionError(OnmError, ZeroDivisionError):
    pass


class ScalarDomainError(OnmError):
    pass


Number = Union[int, "Scalar"]


def _q(value) -> "QQ.dtype":
    if isinstance(value, tuple):
        return QQ(*value)
    return QQ(value)


def _fold(ctx: Context, a, b, c, d):
    u, v = ctx.u, ctx.v
    if u == 1:
        a, b, c, d = a + b, QQ(0), c + d, QQ(0)
    if v == 1:
        a, b, c, d = a + c, b + d, QQ(0), QQ(0)
    if u == v and u != 1:
        a, b, c, d = a + d * u, b + c, QQ(0), QQ(0)
    return a, b, c, d


class Scalar:
    __slots__ = ("ctx", "coords", "_hash")

    def __init__(self, ctx: Context, a=0, b=0, c=0, d=0):
        self.ctx = ctx
        self.coords = _fold(ctx, _q(a), _q(b), _q(c), _q(d))
        self._hash = None

    # ------------------------------------------------------------ builders
    @classmethod
    def zero(cls, ctx: Context) -> "Scalar":
        return cls(ctx)

    @classmethod
    def one(cls, ctx: Context) -> "Scalar":
        return cls(ctx, 1)

    @classmethod
    def rational(cls, ctx: Context, p: int, q: int = 1) -> "Scalar":
        if q == 0:
            raise ScalarDivisionError("zero denominator")
        return cls(ctx, QQ(p, q))

    @classmethod
    def sqrt(cls, ctx: Context, k: int) -> "Scalar":
        """sqrt(k) as a field element; k must land in Q(sqrt(n), sqrt(m))."""
        if k < 0:
            raise ScalarDomainError(f"sqrt({k}) is not real")
        if k == 0:
            return cls.zero(ctx)
        r = int(core(k, 2))
        s = int(sympy.sqrt(k // r))
        u, v = ctx.u, ctx.v
        if r == 1:
            return cls(ctx, s)
        if r == u:
            return cls(ctx, 0, s)
        if r == v:
            return cls(ctx, 0, 0, s)
        if u != v and r == int(core(u * v, 2)):
            g = int(sympy.sqrt((u * v) // r))
            return cls(ctx, 0, 0, 0, QQ(s, g))
        raise ScalarDomainError(f"sqrt({k}) is outside Q(sqrt({ctx.n}), sqrt({ctx.m}))")

    @classmethod
    def inv_sqrt(cls, ctx: Context, k: int) -> "Scalar":
        return scalar_inv(cls.sqrt(ctx, k))

    @staticmethod
    def _accepts(other) -> bool:
        return isinstance(other, (int, Scalar, QQ.dtype))

    def _coerce(self, other: Number) -> "Scalar":
        if isinstance(other, Scalar):
            same_context(self.ctx, other.ctx)
            return other
        return Scalar(self.ctx, other)

    # --------------------------------------------------------- arithmetic
    def __add__(self, other: Number) -> "Scalar":
        if not self._accepts(other):
            return NotImplemented
        other = self._coerce(other)
        return Scalar(self.ctx, *(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.ctx, *(-x for x in self.coords))

    def __sub__(self, other: Number) -> "Scalar":
        if not self._accepts(other):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> "Scalar":
        return self._coerce(other) - self

    def __mul__(self, other: Number) -> "Scalar":
        if not self._accepts(other):
            return NotImplemented
        other = self._coerce(other)
        u, v = self.ctx.u, self.ctx.v
        a, b, c, d = self.coords
        e, f, g, h = other.coords
        return Scalar(
            self.ctx,
            a * e + u * b * f + v * c * g + u * v * d * h,
            a * f + b * e + v * (c * h + d * g),
            a * g + c * e + u * (b * h + d * f),
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "Scalar":
        if not self._accepts(other):
            return NotImplemented
        return self * scalar_inv(self._coerce(other))

    def __rtruediv__(self, other: Number) -> "Scalar":
        return self._coerce(other) * scalar_inv(self)

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return scalar_inv(self) ** (-k)
        result = Scalar.one(self.ctx)
        for _ in range(k):
            result = result * self
        return result

    # --------------------------------------------------------- comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Scalar(self.ctx, other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.ctx == other.ctx and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.n, self.ctx.m, self.coords))
        return self._hash

    def __bool__(self) -> bool:
        return any(self.coords)

    @property
    def is_zero(self) -> bool:
        return not self

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def conjugate(self) -> "Scalar":
        # every coordinate is real
        return self

    def to_sympy(self) -> sympy.Expr:
        u, v = self.ctx.u, self.ctx.v
        a, b, c, d = (sympy.Rational(int(x.numerator), int(x.denominator)) for x in self.coords)
        return a + b * sympy.sqrt(u) + c * sympy.sqrt(v) + d * sympy.sqrt(u * v)

    def is_nonnegative(self) -> bool:
        if self.is_rational:
            return self.coords[0] >= 0
        return bool(self.to_sympy() >= 0)

    # ----------------------------------------------------------- rendering
    def parts(self) -> Iterator[Tuple["QQ.dtype", int]]:
        """Nonzero (rational, radicand) pairs; radicand 1 is the rational part."""
        u, v = self.ctx.u, self.ctx.v
        for coord, radicand in zip(self.coords, (1, u, v, u * v)):
            if coord:
                yield coord, radicand

    def __str__(self):
        pieces = []
        for coord, radicand in self.parts():
            sign = "-" if coord < 0 else "+"
            mag = render_rational(abs(coord))
            if radicand == 1:
                body = mag
            elif mag == "1":
                body = f"sqrt({radicand})"
            else:
                body = f"{mag}*sqrt({radicand})"
            pieces.append((sign, body))
        if not pieces:
            return "0"
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Scalar({self}; n={self.ctx.n}, m={self.ctx.m})"


def render_rational(q) -> str:
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def scalar_add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def scalar_inv(x: Scalar) -> Scalar:
    if x.is_zero:
        raise ScalarDivisionError("inverse of zero scalar")
    ctx = x.ctx
    a, b, c, d = x.coords
    # conjugate in sqrt(u), then in sqrt(v); the final norm is rational
    bar_u = Scalar(ctx, a, -b, c, -d)
    y = x * bar_u
    ya, yb, yc, yd = y.coords
    bar_v = Scalar(ctx, ya, -yb, -yc, yd)
    norm = (y * bar_v).coords[0]
    return bar_u * bar_v * Scalar(ctx, QQ(1) / norm)
