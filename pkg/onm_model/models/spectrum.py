"""
Refinement kernel behind the equality engine.

A point of the spectrum is a rooted, labelled orbit tree of the universal
(n,m)-system. Y-states (Q side) have n a-children and m b-children;
X-states (P side) have exactly one a-parent and one b-parent, and the
labels of those two edges are what p = sum s_i s_i* and p = sum t_j t_j*
refine. A vertex is addressed by its reduced path of moves from the root;
a move is (family, index, +1) going down along s_index / t_index and
(family, label, -1) going up along s_label* / t_label*.

Within one Fourier fiber every monomial w equals 1_range(w) times the same
partial translation, so a fiber vanishes iff the coefficients of the
monomials whose range contains the point add up to zero at every point.
Labels are decided lazily, only when a range walk asks for them.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from onm_model.models.context import Context
from onm_model.models.scalars import Scalar
from onm_model.models.words import (
    Letter,
    Monomial,
    P_SIDE,
    Q_SIDE,
    P,
    Q,
    reduce_word,
)

logger = logging.getLogger(__name__)

Move = Tuple[str, int, int]
Path = Tuple[Move, ...]
LabelKey = Tuple[Path, str]
Labels = Dict[LabelKey, int]

ZERO = "zero"
NONZERO = "nonzero"
EXHAUSTED = "exhausted"


def _push(path: Path, move: Move) -> Path:
    family, index, exp = move
    if path and path[-1] == (family, index, -exp):
        return path[:-1]
    return path + (move,)


def known_label(path: Path, family: str, labels: Labels) -> Optional[int]:
    """Label of the `family` parent edge of the X-state at `path`, if decided."""
    if path and path[-1][0] == family and path[-1][2] == 1:
        return path[-1][1]
    return labels.get((path, family))


def range_walk(letters: Sequence[Letter], root: str, labels: Labels) -> Union[bool, LabelKey]:
    """
    True if the point lies in the range of the word, False if not, or the
    undecided label the walk needs next.
    """
    path: Path = ()
    side = root
    for letter in letters:
        step = letter.star()
        if step.is_unit:
            if side != step.range:
                return False
            continue
        if not step.is_star:
            if side != Q_SIDE:
                return False
            path = _push(path, (step.family, step.index, 1))
            side = P_SIDE
            continue
        if side != P_SIDE:
            return False
        label = known_label(path, step.family, labels)
        if label is None:
            return (path, step.family)
        if label != step.index:
            return False
        path = _push(path, (step.family, step.index, -1))
        side = Q_SIDE
    return True


@dataclass
class FiberOutcome:
    status: str
    coefficient: Optional[Scalar] = None
    root: Optional[str] = None
    labels: Labels = field(default_factory=dict)
    pending: Optional[LabelKey] = None

    @property
    def vanishes(self) -> bool:
        return self.status == ZERO


def decide_fiber(ctx: Context, terms: List[Tuple[Scalar, Sequence[Letter]]], budget: int) -> FiberOutcome:
    """
    Decide whether sum c * 1_range(w) is identically zero.

    Branches first on the side of the root, then on every label a range
    walk asks for. A label at tree distance d is only decided if d + 1 does
    not exceed `budget`.
    """
    stack: List[Tuple[str, Labels]] = [(Q_SIDE, {}), (P_SIDE, {})]
    while stack:
        root, labels = stack.pop()
        total = Scalar.zero(ctx)
        pending: Optional[LabelKey] = None
        for coef, letters in terms:
            status = range_walk(letters, root, labels)
            if status is True:
                total = total + coef
            elif status is not False:
                pending = status
                break
        if pending is None:
            if total:
                return FiberOutcome(NONZERO, coefficient=total, root=root, labels=labels)
            continue
        path, family = pending
        if len(path) + 1 > budget:
            logger.debug("refinement budget %d exhausted at %s/%s", budget, path, family)
            return FiberOutcome(EXHAUSTED, root=root, labels=labels, pending=pending)
        for label in range(ctx.family_size(family), 0, -1):
            refined = dict(labels)
            refined[pending] = label
            stack.append((root, refined))
    return FiberOutcome(ZERO)


def _path_letters(path: Path) -> Tuple[Letter, ...]:
    """The word that carries the root to `path`, rightmost letter first."""
    out = []
    for family, index, exp in path:
        out.append(Letter(family if exp == 1 else family + "*", index))
    return tuple(reversed(out))


def atom_projections(ctx: Context, root: str, labels: Labels) -> Tuple[Monomial, ...]:
    """
    The commuting projections whose product is the refinement atom: the
    root side, then W* f_i f_i* W for every decided label, W walking the
    root to the labelled state.
    """
    atom = [Monomial(ctx, (P if root == P_SIDE else Q,))]
    for (path, family), label in sorted(labels.items(), key=lambda kv: (len(kv[0][0]), kv[0])):
        carry = _path_letters(path)
        back = tuple(x.star() for x in reversed(carry))
        projection = reduce_word(ctx, back + (Letter(family, label), Letter(family + "*", label)) + carry)
        if projection is not None:
            atom.append(projection)
    return tuple(atom)
