import unittest

import numpy as np

from onm_model.controller.checks import run_claims
from onm_model.models.context import OnmError
from onm_model.models.elements import Element, equals
from onm_model.models.report import PASS
from onm_model.models.scalars import Scalar
from onm_model.models.words import reduced_words
from onm_model.services.permrep import (
    Model,
    WindowError,
    build_exact_model,
    build_truncated_model,
    check_dagger_formulas,
    dagger_values,
    identity_operator,
    model_from_descriptor,
    refute_equality,
    represent,
    separates,
)
from test.onm_test.helpers import CTX_22, CTX_23, el


class TestExactModel(unittest.TestCase):

    def setUp(self):
        self.model = build_exact_model(2, 3, seed=0)

    def test_sizes(self):
        self.assertEqual(len(self.model.x_states()), 6)
        self.assertEqual(len(self.model.y_states()), 3)
        self.assertEqual(self.model.descriptor(), "2:2:exact:3:0")

    def test_range_projections_sum_to_indicator_of_x(self):
        one = Scalar.one(CTX_22)
        expected = {(x, x): one for x in self.model.x_states()}
        self.assertEqual(represent(el("s1 s1' + s2 s2'"), self.model).entries, expected)
        self.assertEqual(represent(el("t1 t1' + t2 t2'"), self.model).entries, expected)
        self.assertEqual(represent(el("p"), self.model).entries, expected)

    def test_unit_is_identity(self):
        self.assertEqual(represent(el("1"), self.model), identity_operator(self.model))

    def test_generators_are_isometries_on_y(self):
        rep = represent(el("t2' t2"), self.model)
        self.assertEqual(rep, represent(el("q"), self.model))

    def test_star_homomorphism(self):
        x, y = el("s1 t2'"), el("t1 s2' + 2 p1")
        rx, ry = represent(x, self.model), represent(y, self.model)
        self.assertEqual(represent(x.adjoint(), self.model), rx.adjoint())
        self.assertEqual(represent(x * y, self.model), rx * ry)
        self.assertEqual(represent(x + y, self.model), rx + ry)

    def test_exact_needs_square_shape(self):
        with self.assertRaises(OnmError):
            model_from_descriptor("2:3:exact:3:0")


class TestTruncatedModel(unittest.TestCase):

    def test_window_annihilation(self):
        model = build_truncated_model(2, 3, 4, seed=1)
        cols = model.window(2)
        self.assertTrue(cols)
        product = represent(el("s1'", CTX_23), model) * represent(el("s2", CTX_23), model)
        self.assertEqual(product.restrict(cols).entries, {})

    def test_relations_hold_on_window(self):
        model = build_truncated_model(2, 3, 5, seed=3)
        cols = model.window(2)
        for lhs, rhs in (("s1 s1' + s2 s2'", "p"), ("t1 t1' + t2 t2' + t3 t3'", "p"), ("s2' s2", "q")):
            self.assertFalse(separates(el(lhs, CTX_23), el(rhs, CTX_23), model), lhs)
            self.assertEqual(represent(el(lhs, CTX_23), model).restrict(cols),
                             represent(el(rhs, CTX_23), model).restrict(cols))

    def test_radius_zero_refuses(self):
        model = build_truncated_model(2, 3, 1, seed=0)
        self.assertEqual(len(model.sides), 1)
        with self.assertRaises(WindowError):
            represent(el("s1", CTX_23), model)

    def test_descriptor_replays_model(self):
        model = build_truncated_model(2, 3, 4, seed=7)
        again = model_from_descriptor(model.descriptor())
        self.assertEqual(again.sides, model.sides)
        self.assertEqual(again.down, model.down)
        self.assertEqual(again.up, model.up)

    def test_ball_structure(self):
        model = build_truncated_model(2, 2, 3, seed=2)
        for v in model.states:
            if model.distance[v] < model.radius and model.sides[v] == "P":
                self.assertIn(v, model.up["s"])
                self.assertIn(v, model.up["t"])

    def test_bad_descriptor(self):
        with self.assertRaises(OnmError):
            model_from_descriptor("2:3:truncated")
        with self.assertRaises(OnmError):
            model_from_descriptor("2:3:spiral:3:0")


class TestOracle(unittest.TestCase):

    def test_refutes_nonzero_word(self):
        result = refute_equality(el("s1 s2' t1 t2'"), Element.zero(CTX_22), trials=10, seed=0)
        self.assertTrue(result.refuted)
        self.assertIsInstance(model_from_descriptor(result.model), Model)

    def test_refutes_in_unequal_shape(self):
        result = refute_equality(el("s1 s1'", CTX_23), el("p", CTX_23), trials=10, seed=0)
        self.assertTrue(result.refuted)
        self.assertTrue(result.model.startswith("2:3:truncated:"))

    def test_equal_pairs_not_refuted(self):
        self.assertFalse(refute_equality(el("p + q"), el("1"), trials=5).refuted)
        self.assertFalse(refute_equality(el("S' S"), el("q"), trials=10).refuted)
        self.assertFalse(refute_equality(el("R R' R"), el("R"), trials=10).refuted)
        self.assertEqual(str(refute_equality(el("p"), el("p"), trials=3)), "NotRefuted (3 models)")


class TestOracleAgreement(unittest.TestCase):
    """The oracle never refutes an Equal verdict and catches NotEqual ones."""

    def random_element(self, ctx, words, rng):
        x = Element.zero(ctx)
        for _ in range(int(rng.integers(1, 4))):
            k = int(rng.integers(-3, 4))
            if k:
                x = x + Element.from_monomial(words[int(rng.integers(0, len(words)))], k)
        return x

    def assert_agreement(self, ctx, pairs, seed):
        rng = np.random.default_rng(seed)
        words = list(reduced_words(ctx, 2))
        cuntz_defect = sum((Element.s(ctx, i) * Element.s_star(ctx, i) for i in range(1, ctx.n + 1)),
                           Element.zero(ctx)) - Element.p(ctx)
        equal, not_equal = 0, []
        for _ in range(pairs):
            x = self.random_element(ctx, words, rng)
            if rng.integers(0, 2) == 0:
                y = x + cuntz_defect * self.random_element(ctx, words, rng)
            else:
                y = self.random_element(ctx, words, rng)
            verdict = equals(x, y)
            if verdict.is_equal:
                equal += 1
                self.assertFalse(refute_equality(x, y).refuted, msg=f"{x} vs {y}")
            elif verdict.is_not_equal:
                not_equal.append(refute_equality(x, y).refuted)
        self.assertGreater(equal, pairs // 4)
        self.assertGreater(len(not_equal), pairs // 4)
        self.assertGreaterEqual(sum(not_equal) / len(not_equal), 0.95)

    def test_square_context(self):
        self.assert_agreement(CTX_22, 200, seed=11)

    def test_unequal_context(self):
        self.assert_agreement(CTX_23, 150, seed=12)


class TestDaggerFormulas(unittest.TestCase):

    def test_exact_model(self):
        entries = run_claims(check_dagger_formulas(build_exact_model(2, 3, seed=4), 1))
        self.assertEqual(len(entries), 5)
        self.assertTrue(all(e.verdict == PASS for e in entries))

    def test_truncated_model(self):
        entries = run_claims(check_dagger_formulas(build_truncated_model(2, 3, 9, seed=5), 1))
        self.assertTrue(all(e.verdict == PASS for e in entries))

    def test_values_of_p(self):
        model = build_exact_model(2, 2, seed=1)
        v_values, h_values = dagger_values(el("p"), model)
        one = Scalar.one(CTX_22)
        self.assertTrue(all(c == one for c in v_values.values()))
        self.assertTrue(all(c == one for c in h_values.values()))


if __name__ == "__main__":
    unittest.main()
