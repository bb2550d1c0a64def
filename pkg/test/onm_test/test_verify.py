import unittest

import pytest

from onm_model.config import ENGINE_VERSION
from onm_model.controller.checks import run_claims
from onm_model.controller.verify import (
    ALL_CHECKS,
    CheckSelectionError,
    DAGGER_CITATION,
    collect_claims,
    parse_checks,
    run_verification,
    store_report,
)
from onm_model.models.context import OnmError
from onm_model.models.report import FAIL, PASS, UNCONFIRMED, get_report_by_id
from test.onm_test.helpers import CTX_11, CTX_12, CTX_22, CTX_23, SMALL_CONTEXTS, close_session, memory_session


class TestCheckSelection(unittest.TestCase):

    def test_default_is_everything(self):
        self.assertEqual(parse_checks(None), list(ALL_CHECKS))
        self.assertEqual(parse_checks(""), list(ALL_CHECKS))
        self.assertEqual(len(ALL_CHECKS), 21)

    def test_ranges_and_duplicates(self):
        self.assertEqual(parse_checks("C1,C5-C7"), ["C1", "C5", "C6", "C7"])
        self.assertEqual(parse_checks("c3, 3, C2-3"), ["C3", "C2"])

    def test_bad_selection(self):
        for text in ("C22", "C0", "X1", "C3-C30"):
            with self.assertRaises(CheckSelectionError, msg=text):
                parse_checks(text)


class TestVerification(unittest.TestCase):

    def test_depth_must_be_positive(self):
        with self.assertRaises(OnmError):
            collect_claims(CTX_11, 0, ["C1"])

    def test_claims_carry_their_check_id(self):
        claims = collect_claims(CTX_12, 1, ["C20", "C2"])
        self.assertEqual({c.check_id for c in claims}, {"C2", "C20"})

    def test_run_fullness(self):
        report = run_verification(CTX_11, 1, ["C20"], workers=1)
        self.assertEqual((report.version, report.n, report.m, report.depth), (ENGINE_VERSION, 1, 1, 1))
        self.assertEqual(len(report.entries), 4)
        self.assertTrue(all(e.verdict == PASS for e in report.entries))
        self.assertEqual(report.exit_code(), 0)

    def test_dagger_claims_follow_depth(self):
        def dagger_count(ctx, depth):
            claims = collect_claims(ctx, depth, ["C5"])
            return sum(1 for c in claims if c.citation == DAGGER_CITATION)

        self.assertEqual(dagger_count(CTX_22, 1), 5)
        self.assertGreater(dagger_count(CTX_22, 3), dagger_count(CTX_22, 1))
        self.assertGreater(dagger_count(CTX_23, 2), dagger_count(CTX_23, 1))
        self.assertEqual(dagger_count(CTX_23, 3), dagger_count(CTX_23, 2))

    def test_dagger_claims_pass_at_depth_two(self):
        claims = [c for c in collect_claims(CTX_22, 2, ["C5"]) if c.citation == DAGGER_CITATION]
        entries = run_claims(claims, workers=2)
        self.assertTrue(all(e.verdict == PASS for e in entries))

    def test_entries_are_ordered(self):
        report = run_verification(CTX_12, 1, ["C20", "C1"], workers=2)
        numbers = [e.check_number() for e in report.entries]
        self.assertEqual(numbers, sorted(numbers))


@pytest.mark.slow
class TestFullCorpus(unittest.TestCase):

    def test_depth_three_over_small_contexts(self):
        for ctx in SMALL_CONTEXTS:
            with self.subTest(ctx=str(ctx)):
                report = run_verification(ctx, 3)
                self.assertEqual(report.depth, 3)
                failed = [f"{e.id} {e.instance}: {e.witness}" for e in report.entries if e.verdict == FAIL]
                self.assertEqual(failed, [])
                open_entries = [f"{e.id} {e.instance}" for e in report.entries
                                if e.verdict == UNCONFIRMED and e.id not in ("C11", "C12")]
                self.assertEqual(open_entries, [])


class TestStoreReport(unittest.TestCase):

    def setUp(self):
        self.engine, self.db = memory_session()

    def tearDown(self):
        close_session(self.engine, self.db)

    def test_store_and_reload(self):
        report = run_verification(CTX_11, 1, ["C20"], workers=1)
        record = store_report(self.db, report)
        self.assertEqual(get_report_by_id(self.db, record.id).to_report(), report)


if __name__ == "__main__":
    unittest.main()
