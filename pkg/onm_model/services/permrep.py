"""
Concrete partial-permutation models of O_{n,m}.

Two kinds of (n,m)-dynamical system are built:

* exact: finite X, Y with |X| = n|Y| = m|Y|, so n = m. h_i(y) = (i-1)k + y and
  v_j is a seeded random bijection of Y onto the j-th block of a random
  partition of X.
* truncated: a seeded random labelled ball of radius D-1 in the orbit tree
  of the universal system. A monomial of length L acts exactly on states at
  distance <= D-1-L from the centre; that set is the exactness window and
  nothing outside it is ever compared.

Operators are sparse {(row, column): Scalar} maps over the model basis.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from onm_model.controller.checks import Claim, holds
from onm_model.models.context import Context, OnmError
from onm_model.models.elements import Element
from onm_model.models.scalars import Scalar
from onm_model.models.words import Letter, P_SIDE, Q_SIDE

logger = logging.getLogger(__name__)

EXACT = "exact"
TRUNCATED = "truncated"
DAGGER_CITATION = "V and H as averages over inverse branches"


class WindowError(OnmError):
    pass


@dataclass
class Model:
    ctx: Context
    kind: str
    size: int
    seed: int
    sides: List[str] = field(default_factory=list)
    # (family, index) -> {source state: image state}
    down: Dict[Tuple[str, int], Dict[int, int]] = field(default_factory=dict)
    # family -> {X state: (label, parent Y state)}
    up: Dict[str, Dict[int, Tuple[int, int]]] = field(default_factory=dict)
    distance: List[int] = field(default_factory=list)
    radius: Optional[int] = None

    def descriptor(self) -> str:
        return f"{self.ctx.n}:{self.ctx.m}:{self.kind}:{self.size}:{self.seed}"

    def __str__(self):
        return self.descriptor()

    @property
    def states(self) -> range:
        return range(len(self.sides))

    def x_states(self) -> List[int]:
        return [v for v in self.states if self.sides[v] == P_SIDE]

    def y_states(self) -> List[int]:
        return [v for v in self.states if self.sides[v] == Q_SIDE]

    def act(self, letter: Letter, v: int) -> Optional[int]:
        if letter.is_unit:
            return v if self.sides[v] == letter.range else None
        if not letter.is_star:
            return self.down[(letter.family, letter.index)].get(v)
        parent = self.up[letter.family].get(v)
        if parent is None or parent[0] != letter.index:
            return None
        return parent[1]

    def apply(self, letters: Sequence[Letter], v: int) -> Optional[int]:
        """Image of basis state v under the word, rightmost letter first."""
        for letter in reversed(letters):
            v = self.act(letter, v)
            if v is None:
                return None
        return v

    def window(self, max_len: int) -> List[int]:
        if self.radius is None:
            return list(self.states)
        reach = self.radius - max_len
        cols = [v for v in self.states if self.distance[v] <= reach]
        if not cols:
            raise WindowError(f"model {self.descriptor()} has an empty window for words of length {max_len}")
        return cols


def _link(model: Model, family: str, label: int, y: int, x: int) -> None:
    model.down[(family, label)][y] = x
    model.up[family][x] = (label, y)


def _empty(ctx: Context, kind: str, size: int, seed: int) -> Model:
    model = Model(ctx, kind, size, seed)
    for i in range(1, ctx.n + 1):
        model.down[("s", i)] = {}
    for j in range(1, ctx.m + 1):
        model.down[("t", j)] = {}
    model.up = {"s": {}, "t": {}}
    return model


def build_exact_model(n: int, k: int, seed: int = 0) -> Model:
    """Finite system with Y = {0..k-1} and X = {0..nk-1}; requires m = n."""
    if n < 1 or k < 1:
        raise OnmError(f"exact model needs n >= 1 and k >= 1, got n={n}, k={k}")
    ctx = Context(n, n)
    model = _empty(ctx, EXACT, k, seed)
    rng = np.random.default_rng(seed)
    model.sides = [P_SIDE] * (n * k) + [Q_SIDE] * k
    model.distance = [0] * ((n + 1) * k)
    y_state = [n * k + y for y in range(k)]
    for i in range(1, n + 1):
        for y in range(k):
            _link(model, "s", i, y_state[y], (i - 1) * k + y)
    blocks = rng.permutation(n * k).reshape(n, k)
    for j in range(1, n + 1):
        for y in range(k):
            _link(model, "t", j, y_state[y], int(blocks[j - 1][y]))
    return model


def build_truncated_model(n: int, m: int, depth: int, seed: int = 0) -> Model:
    """Random labelled ball of radius depth-1 around a random centre state."""
    if n < 1 or m < 1 or depth < 1:
        raise OnmError(f"truncated model needs n, m, depth >= 1, got ({n}, {m}, {depth})")
    ctx = Context(n, m)
    model = _empty(ctx, TRUNCATED, depth, seed)
    model.radius = depth - 1
    rng = np.random.default_rng(seed)

    def new_state(side: str, dist: int) -> int:
        model.sides.append(side)
        model.distance.append(dist)
        return len(model.sides) - 1

    root = new_state(P_SIDE if rng.integers(0, 2) == 0 else Q_SIDE, 0)
    frontier = [root]
    while frontier:
        v = frontier.pop(0)
        dist = model.distance[v]
        if dist >= model.radius:
            continue
        if model.sides[v] == Q_SIDE:
            for family, size in (("s", n), ("t", m)):
                for label in range(1, size + 1):
                    if v in model.down[(family, label)]:
                        continue
                    child = new_state(P_SIDE, dist + 1)
                    _link(model, family, label, v, child)
                    frontier.append(child)
        else:
            for family, size in (("s", n), ("t", m)):
                if v in model.up[family]:
                    continue
                label = int(rng.integers(1, size + 1))
                parent = new_state(Q_SIDE, dist + 1)
                _link(model, family, label, parent, v)
                frontier.append(parent)
    return model


def model_from_descriptor(text: str) -> Model:
    """Inverse of Model.descriptor: 'n:m:kind:size:seed'."""
    try:
        n, m, kind, size, seed = text.strip().split(":")
        n, m, size, seed = int(n), int(m), int(size), int(seed)
    except ValueError:
        raise OnmError(f"malformed model descriptor {text!r}")
    if kind == EXACT:
        if n != m:
            raise OnmError("exact models need n = m")
        return build_exact_model(n, size, seed)
    if kind == TRUNCATED:
        return build_truncated_model(n, m, size, seed)
    raise OnmError(f"unknown model kind {kind!r}")


# ----------------------------------------------------------------- operators
@dataclass(frozen=True)
class Operator:
    ctx: Context
    entries: Dict[Tuple[int, int], Scalar]

    def restrict(self, columns: Iterable[int]) -> "Operator":
        keep = set(columns)
        return Operator(self.ctx, {k: c for k, c in self.entries.items() if k[1] in keep})

    def __add__(self, other: "Operator") -> "Operator":
        acc = dict(self.entries)
        for k, c in other.entries.items():
            acc[k] = acc[k] + c if k in acc else c
        return Operator(self.ctx, {k: c for k, c in acc.items() if c})

    def __mul__(self, other: "Operator") -> "Operator":
        by_col: Dict[int, List[Tuple[int, Scalar]]] = {}
        for (row, col), c in self.entries.items():
            by_col.setdefault(col, []).append((row, c))
        acc: Dict[Tuple[int, int], Scalar] = {}
        for (mid, col), c in other.entries.items():
            for row, d in by_col.get(mid, ()):
                key = (row, col)
                acc[key] = acc[key] + d * c if key in acc else d * c
        return Operator(self.ctx, {k: c for k, c in acc.items() if c})

    def adjoint(self) -> "Operator":
        # real entries
        return Operator(self.ctx, {(col, row): c for (row, col), c in self.entries.items()})

    def diagonal(self, v: int) -> Scalar:
        return self.entries.get((v, v), Scalar.zero(self.ctx))


def identity_operator(model: Model) -> Operator:
    one = Scalar.one(model.ctx)
    return Operator(model.ctx, {(v, v): one for v in model.states})


def represent(x: Element, model: Model) -> Operator:
    """Linear extension of the generator assignment; columns outside the window are not exact."""
    if x.ctx != model.ctx:
        raise OnmError(f"element context {x.ctx} differs from model context {model.ctx}")
    model.window(x.max_length())
    acc: Dict[Tuple[int, int], Scalar] = {}
    for w, c in x.terms.items():
        for v in model.states:
            image = model.apply(w.letters, v)
            if image is None:
                continue
            key = (image, v)
            acc[key] = acc[key] + c if key in acc else c
    return Operator(model.ctx, {k: c for k, c in acc.items() if c})


def separates(x: Element, y: Element, model: Model) -> bool:
    cols = model.window(max(x.max_length(), y.max_length()))
    return represent(x, model).restrict(cols) != represent(y, model).restrict(cols)


# -------------------------------------------------------------------- oracle
@dataclass(frozen=True)
class OracleVerdict:
    refuted: bool
    model: Optional[str] = None
    trials: int = 0

    def __str__(self):
        if self.refuted:
            return f"Refuted (model {self.model})"
        return f"NotRefuted ({self.trials} models)"


def oracle_models(ctx: Context, max_len: int, trials: int, seed: int) -> List[Model]:
    """
    Seeded models for the oracle: for n = m exact and truncated models
    alternate, otherwise only truncated ones exist.
    """
    models = []
    for t in range(trials):
        model_seed = seed + t
        if ctx.n == ctx.m and t % 2 == 0:
            models.append(build_exact_model(ctx.n, 2 + (t // 2) % 3, model_seed))
        else:
            models.append(build_truncated_model(ctx.n, ctx.m, max_len + 2, model_seed))
    return models


def refute_equality(x: Element, y: Element, trials: int = 10, seed: int = 0) -> OracleVerdict:
    if x.ctx != y.ctx:
        raise OnmError(f"context mismatch: {x.ctx} vs {y.ctx}")
    max_len = max(x.max_length(), y.max_length(), 1)
    for model in oracle_models(x.ctx, max_len, trials, seed):
        if separates(x, y, model):
            logger.info("oracle refuted equality on model %s", model.descriptor())
            return OracleVerdict(True, model.descriptor(), trials)
    return OracleVerdict(False, None, trials)


# ------------------------------------------------------- averaging formulas
def dagger_values(f: Element, model: Model, max_len: int = 0) -> Tuple[Dict[int, Scalar], Dict[int, Scalar]]:
    """
    Pointwise V(f)(x) = 1/m sum_j f(v_j(alpha(x))) and
    H(f)(x) = 1/n sum_i f(h_i(beta(x))) on the X states of the window.
    """
    ctx = model.ctx
    cols = [v for v in model.window(max(f.max_length() + 2, max_len)) if model.sides[v] == P_SIDE]
    rep = represent(f, model)
    inv_n, inv_m = Scalar.rational(ctx, 1, ctx.n), Scalar.rational(ctx, 1, ctx.m)
    v_values, h_values = {}, {}
    for x in cols:
        alpha_x = model.up["s"][x][1]
        beta_x = model.up["t"][x][1]
        total = Scalar.zero(ctx)
        for j in range(1, ctx.m + 1):
            total = total + rep.diagonal(model.down[("t", j)][alpha_x])
        v_values[x] = inv_m * total
        total = Scalar.zero(ctx)
        for i in range(1, ctx.n + 1):
            total = total + rep.diagonal(model.down[("s", i)][beta_x])
        h_values[x] = inv_n * total
    return v_values, h_values


def _dagger_report(f: Element, model: Model):
    from onm_model.controller.maps import H, V

    images = {"V": V(f), "H": H(f)}
    reach = max(x.max_length() for x in images.values())
    v_values, h_values = dagger_values(f, model, reach)
    symbolic = {name: represent(x, model) for name, x in images.items()}
    for name, values in (("V", v_values), ("H", h_values)):
        op = symbolic[name].restrict(values)
        expected = {(x, x): c for x, c in values.items() if c}
        if op.entries != expected:
            return False, f"{name}({f}) differs from the averaging formula on model {model.descriptor()}"
    return True, f"model {model.descriptor()}, {len(v_values)} states"


def check_dagger_formulas(model: Model, depth: int) -> List[Claim]:
    from onm_model.controller.maps import spanning_projections

    cite = DAGGER_CITATION
    claims = []
    for f in spanning_projections(model.ctx, P_SIDE, depth):
        claims.append(Claim("C5", cite, f"V({f}), H({f}) match the averaging formula on {model.descriptor()}",
                            lambda f=f: holds(*_dagger_report(f, model))))
    return claims
