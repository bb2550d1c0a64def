import unittest

from onm_model.models.scalars import Scalar
from onm_model.models.spectrum import (
    EXHAUSTED,
    NONZERO,
    ZERO,
    atom_projections,
    decide_fiber,
    known_label,
    range_walk,
)
from onm_model.models.words import P, P_SIDE, Q, Q_SIDE, S, Sstar, T, Tstar
from test.onm_test.helpers import CTX_22


def one():
    return Scalar.one(CTX_22)


def minus_one():
    return Scalar.rational(CTX_22, -1)


class TestRangeWalk(unittest.TestCase):

    def test_units(self):
        self.assertTrue(range_walk((P,), P_SIDE, {}))
        self.assertFalse(range_walk((P,), Q_SIDE, {}))

    def test_generator_range_needs_label(self):
        self.assertEqual(range_walk((S(1),), P_SIDE, {}), ((), "s"))
        self.assertTrue(range_walk((S(1),), P_SIDE, {((), "s"): 1}))
        self.assertFalse(range_walk((S(1),), P_SIDE, {((), "s"): 2}))

    def test_star_range_is_q_side(self):
        self.assertTrue(range_walk((Sstar(1),), Q_SIDE, {}))
        self.assertFalse(range_walk((Sstar(1),), P_SIDE, {}))

    def test_label_known_from_path(self):
        path = (("t", 2, 1),)
        self.assertEqual(known_label(path, "t", {}), 2)
        self.assertIsNone(known_label(path, "s", {}))


class TestDecideFiber(unittest.TestCase):

    def test_vanishing_sum(self):
        terms = [(one(), (S(1), Sstar(1))), (one(), (S(2), Sstar(2))), (minus_one(), (P,))]
        self.assertEqual(decide_fiber(CTX_22, terms, 4).status, ZERO)

    def test_nonvanishing_sum(self):
        terms = [(one(), (S(1), Sstar(1))), (minus_one(), (P,))]
        outcome = decide_fiber(CTX_22, terms, 4)
        self.assertEqual(outcome.status, NONZERO)
        self.assertEqual(outcome.coefficient, minus_one())
        self.assertEqual(outcome.labels, {((), "s"): 2})

    def test_budget(self):
        terms = [(one(), (T(1), Tstar(1))), (minus_one(), (P,))]
        self.assertEqual(decide_fiber(CTX_22, terms, 0).status, EXHAUSTED)

    def test_atom(self):
        atom = atom_projections(CTX_22, P_SIDE, {((), "s"): 2})
        self.assertEqual([str(w) for w in atom], ["p", "s2 s2'"])
        self.assertEqual([str(w) for w in atom_projections(CTX_22, Q_SIDE, {})], ["q"])


if __name__ == "__main__":
    unittest.main()
