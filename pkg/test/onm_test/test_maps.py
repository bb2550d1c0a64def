import unittest

from onm_model.controller.checks import run_claims
from onm_model.controller.maps import (
    H,
    L,
    M,
    NotInSubalgebraError,
    V,
    alpha,
    alpha_i,
    beta,
    check_assorted,
    check_homomorphisms,
    check_interaction_axioms,
    check_transfer_identities,
    in_subalgebra,
    is_cone_element,
    spanning_projections,
)
from onm_model.models.elements import equals
from onm_model.models.report import PASS
from onm_model.models.words import P_SIDE, Q_SIDE
from test.onm_test.helpers import CTX_22, CTX_23, el


class TestMaps(unittest.TestCase):

    def test_alpha_beta_unital(self):
        self.assertTrue(equals(alpha(el("q")), el("p")).is_equal)
        self.assertTrue(equals(beta(el("q", CTX_23)), el("p", CTX_23)).is_equal)

    def test_alpha_i(self):
        self.assertEqual(alpha_i(el("q"), 2), el("s2 s2'"))

    def test_transfer_values(self):
        self.assertEqual(L(el("p1")), el("1/2 q"))
        self.assertEqual(M(el("q2", CTX_23)), el("1/3 q", CTX_23))
        self.assertTrue(equals(L(alpha(el("q"))), el("q")).is_equal)

    def test_interaction_values(self):
        self.assertTrue(equals(V(el("q1", CTX_23)), el("1/3 p", CTX_23)).is_equal)
        self.assertTrue(equals(H(el("p1", CTX_23)), el("1/2 p", CTX_23)).is_equal)
        self.assertTrue(equals(V(el("p")), el("p")).is_equal)

    def test_subalgebra_guard(self):
        self.assertTrue(in_subalgebra(el("p1 q1"), P_SIDE))
        self.assertFalse(in_subalgebra(el("s1"), Q_SIDE))
        with self.assertRaises(NotInSubalgebraError):
            alpha(el("s1"))
        with self.assertRaises(NotInSubalgebraError):
            L(el("q"))

    def test_spanning_projections(self):
        fs = spanning_projections(CTX_22, P_SIDE, 1)
        self.assertEqual(fs[0], el("p"))
        self.assertEqual(len(fs), 5)
        for f in fs:
            self.assertTrue(is_cone_element(f))

    def test_spanning_projections_include_meets(self):
        atoms = spanning_projections(CTX_23, P_SIDE, 1)
        fs = spanning_projections(CTX_23, P_SIDE, 2)
        self.assertIn(el("p1 q1", CTX_23), fs)
        self.assertNotIn(el("p1 q1", CTX_23), atoms)
        self.assertGreater(len(fs), len(atoms))
        self.assertEqual(len(fs), len(set(fs)))
        for f in fs:
            self.assertTrue(equals(f * f, f).is_equal)
            self.assertTrue(equals(f.adjoint(), f).is_equal)

    def test_cone(self):
        self.assertTrue(is_cone_element(V(el("p1"))))
        self.assertFalse(is_cone_element(el("p - p1")))


class TestMapChecks(unittest.TestCase):

    def assert_all_pass(self, claims):
        entries = run_claims(claims, workers=2)
        self.assertGreater(len(entries), 0)
        failing = [(e.id, e.instance, e.verdict, e.witness) for e in entries if e.verdict != PASS]
        self.assertEqual(failing, [])

    def test_homomorphisms(self):
        self.assert_all_pass(check_homomorphisms(CTX_22, 1))

    def test_transfer_identities(self):
        self.assert_all_pass(check_transfer_identities(CTX_23, 1))

    def test_interaction_axioms(self):
        self.assert_all_pass(check_interaction_axioms(CTX_22, 1))

    def test_assorted(self):
        self.assert_all_pass(check_assorted(CTX_23, 1))


if __name__ == "__main__":
    unittest.main()
