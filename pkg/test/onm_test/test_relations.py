import unittest

import pytest

from onm_model.controller.checks import run_claims
from onm_model.controller.relations import (
    check_corner_form,
    check_defining_relations,
    check_tameness,
    tameness_verdict,
)
from onm_model.models.report import FAIL, PASS
from test.onm_test.helpers import CTX_11, CTX_22, CTX_23, CTX_32, SMALL_CONTEXTS


class TestRelations(unittest.TestCase):

    def test_defining_relations_all_contexts(self):
        for ctx in SMALL_CONTEXTS:
            entries = run_claims(check_defining_relations(ctx))
            self.assertTrue(all(e.verdict == PASS for e in entries), str(ctx))
            self.assertEqual({e.id for e in entries}, {"C1"})

    def test_defining_relation_count(self):
        # n^2 + m^2 + nm index instances plus seven fixed relations
        self.assertEqual(len(check_defining_relations(CTX_23)), 4 + 9 + 6 + 7)

    def test_corner_form(self):
        entries = run_claims(check_corner_form(CTX_32))
        self.assertEqual(len(entries), 5)
        self.assertTrue(all(e.verdict == PASS for e in entries))

    def test_tameness_short_words(self):
        for length in range(1, 4):
            self.assertTrue(tameness_verdict(CTX_22, length).is_equal, length)

    def test_tameness_claims(self):
        claims = check_tameness(CTX_11, 4)
        self.assertEqual([c.instance for c in claims][-1], "w w* w = w, reduced words of length 4")
        entries = run_claims(claims, workers=2)
        self.assertTrue(all(e.verdict == PASS for e in entries))

    @pytest.mark.slow
    def test_tameness_up_to_length_six(self):
        for ctx in (CTX_22, CTX_23):
            entries = run_claims(check_tameness(ctx, 6), workers=2)
            self.assertEqual(len(entries), 6)
            self.assertFalse([e.witness for e in entries if e.verdict == FAIL])
            self.assertTrue(all(e.verdict == PASS for e in entries[:4]))

    def test_tameness_detail_counts_words(self):
        verdict = tameness_verdict(CTX_23, 1)
        self.assertEqual(verdict.detail, "12 words")


if __name__ == "__main__":
    unittest.main()
