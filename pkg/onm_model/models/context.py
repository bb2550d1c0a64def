from dataclasses import dataclass, field

from sympy.ntheory.factor_ import core


class OnmError(Exception):
    pass


class ContextMismatchError(OnmError):
    pass


class IndexOutOfRangeError(OnmError):
    pass


@dataclass(frozen=True)
class Context:
    """
    The (n, m) pair every algebra value lives over.

    u and v are the square-free parts of n and m; the scalar field is
    Q(sqrt(u), sqrt(v)).
    """
    n: int
    m: int
    u: int = field(init=False, repr=False, compare=False)
    v: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise OnmError(f"n and m must be >= 1, got ({self.n}, {self.m})")
        object.__setattr__(self, "u", int(core(self.n, 2)))
        object.__setattr__(self, "v", int(core(self.m, 2)))

    def check_s(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexOutOfRangeError(f"s-index {i} outside 1..{self.n}")

    def check_t(self, j: int) -> None:
        if not 1 <= j <= self.m:
            raise IndexOutOfRangeError(f"t-index {j} outside 1..{self.m}")

    def family_size(self, family: str) -> int:
        return self.n if family == "s" else self.m

    def __str__(self):
        return f"(n={self.n}, m={self.m})"


def same_context(a: Context, b: Context) -> Context:
    if a != b:
        raise ContextMismatchError(f"context mismatch: {a} vs {b}")
    return a
