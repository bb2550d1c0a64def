import unittest

from onm_model.controller.checks import run_claims
from onm_model.controller.covariant import (
    CovariantObjects,
    FactorizationError,
    check_cancellation_sample,
    check_covariance,
    check_fullness,
    check_not_power,
    check_normalizer,
    check_not_power_claims,
    check_pisom_suite,
    check_r_identities,
    check_r_relations,
    check_redundancies,
    check_factorization,
    check_slmab,
    check_tro,
    factor_into_F,
    not_power_group,
    p_corner_words,
)
from onm_model.models.elements import equals
from onm_model.models.report import PASS
from onm_model.models.words import P, S, Sstar, T, Tstar, word
from test.onm_test.helpers import CTX_11, CTX_12, CTX_22, CTX_23, el


class TestCovariantObjects(unittest.TestCase):

    def test_r_expansion(self):
        c = CovariantObjects.build(CTX_22)
        self.assertEqual(c.R, el("1/2 s1 t1' + 1/2 s1 t2' + 1/2 s2 t1' + 1/2 s2 t2'"))
        self.assertEqual(c.R, el("R"))

    def test_r_ij_is_s_i_t_j_star(self):
        c = CovariantObjects.build(CTX_23)
        self.assertEqual(c.r[(2, 3)], el("s2 t3'", CTX_23))
        self.assertTrue(equals(el("r[1,2]"), el("s1 t2'")).is_equal)

    def test_isometries(self):
        self.assertEqual(el("S' S", CTX_23), el("q", CTX_23))
        self.assertEqual(el("T' T", CTX_23), el("q", CTX_23))


class TestFactorization(unittest.TestCase):

    def test_s_s_star(self):
        factors = factor_into_F(CTX_22, word(CTX_22, S(1), Sstar(2)))
        self.assertEqual(str(factors), "s1t1' , (s2t1')'")
        self.assertTrue(equals(factors.to_element(), el("s1 s2'")).is_equal)

    def test_t_t_star(self):
        factors = factor_into_F(CTX_23, word(CTX_23, T(2), Tstar(3)))
        self.assertEqual(str(factors), "(s1t2')' , s1t3'")
        self.assertTrue(equals(factors.to_element(), el("t2 t3'", CTX_23)).is_equal)

    def test_p(self):
        factors = factor_into_F(CTX_22, word(CTX_22, P))
        self.assertEqual(str(factors), "s1t1' , (s1t1')' + s2t1' , (s2t1')'")
        self.assertTrue(equals(factors.to_element(), el("p")).is_equal)

    def test_every_short_corner_word(self):
        for w in p_corner_words(CTX_23, 4):
            self.assertTrue(equals(factor_into_F(CTX_23, w).to_element(), el(str(w), CTX_23)).is_equal, str(w))

    def test_outside_corner(self):
        with self.assertRaises(FactorizationError):
            factor_into_F(CTX_22, word(CTX_22, S(1)))
        with self.assertRaises(FactorizationError):
            factor_into_F(CTX_22, word(CTX_22, Sstar(1), S(1)))


class TestNotPower(unittest.TestCase):

    def test_fiber_witness(self):
        witness = check_not_power(CTX_22)
        self.assertFalse(witness.degenerate)
        self.assertTrue(witness.holds())
        self.assertEqual(str(witness.fourier_coefficient), "1/4 s1 s2' t1 t2'")
        self.assertEqual(str(not_power_group(CTX_22)), "a1 a2^-1 b1 b2^-1")

    def test_degenerate_branch(self):
        for ctx in (CTX_11, CTX_12):
            witness = check_not_power(ctx)
            self.assertTrue(witness.degenerate)
            self.assertTrue(witness.r_squared.is_equal)
            self.assertTrue(witness.holds())


class TestCovariantChecks(unittest.TestCase):

    def assert_all_pass(self, claims):
        entries = run_claims(claims, workers=2)
        self.assertGreater(len(entries), 0)
        failing = [(e.id, e.instance, e.verdict, e.witness) for e in entries if e.verdict != PASS]
        self.assertEqual(failing, [])

    def test_pisom(self):
        self.assert_all_pass(check_pisom_suite(CTX_23))

    def test_redundancies(self):
        self.assert_all_pass(check_redundancies(CTX_22, 1))

    def test_not_power_claims(self):
        self.assert_all_pass(check_not_power_claims(CTX_22))
        self.assert_all_pass(check_not_power_claims(CTX_11))

    def test_factorization(self):
        self.assert_all_pass(check_factorization(CTX_22, 2))

    def test_r_identities_and_relations(self):
        self.assert_all_pass(check_r_identities(CTX_23))
        self.assert_all_pass(check_r_relations(CTX_23))

    def test_fullness(self):
        self.assert_all_pass(check_fullness(CTX_12))

    def test_shift_relations(self):
        self.assert_all_pass(check_slmab(CTX_22, 1))

    def test_covariance(self):
        self.assert_all_pass(check_covariance(CTX_23, 1))

    def test_ternary_identity(self):
        self.assert_all_pass(check_tro(CTX_22, 1, seed=3, samples=4))

    def test_cancellation(self):
        self.assert_all_pass(check_cancellation_sample(CTX_22, 2))

    def test_normalizer(self):
        self.assert_all_pass(check_normalizer(CTX_12, 1))


if __name__ == "__main__":
    unittest.main()
