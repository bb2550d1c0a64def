import unittest
from unittest.mock import MagicMock, patch

from fastapi.testclient import TestClient

from onm_model.appView import app, get_db
from test.onm_test.helpers import get_report_data


class TestViewEndpoints(unittest.TestCase):
    def setUp(self):
        self.client = TestClient(app)
        self.db_mock = MagicMock()

        def override_get_db():
            yield self.db_mock

        app.dependency_overrides[get_db] = override_get_db

    def tearDown(self):
        app.dependency_overrides.clear()

    # -------------------- /eval --------------------

    def test_eval_normalizes(self):
        resp = self.client.post("/eval", json={"expr": "p q"})
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp.json()["result"], "0")

        resp = self.client.post("/eval", json={"expr": "S' S", "n": 2, "m": 3})
        self.assertEqual(resp.json()["result"], "q")

    def test_eval_with_equals(self):
        resp = self.client.post("/eval", json={"expr": "r[1,2]", "equals": "s1 t2'", "n": 2, "m": 3})
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp.json()["verdict"], "Equal")

        resp = self.client.post("/eval", json={"expr": "s1 s2' t1 t2'", "equals": "0"})
        self.assertEqual(resp.json()["verdict"], "NotEqual")

    def test_eval_bad_expression(self):
        resp = self.client.post("/eval", json={"expr": "s1 $"})
        self.assertEqual(resp.status_code, 400)
        self.assertIn("column 4", resp.json()["detail"])

    def test_eval_bad_context(self):
        resp = self.client.post("/eval", json={"expr": "p", "n": 0})
        self.assertEqual(resp.status_code, 400)

    # -------------------- /fourier --------------------

    def test_fourier(self):
        body = {"expr": "s1 s2' t1 t2' + p", "at": "a1 a2^-1 b1 b2^-1"}
        resp = self.client.post("/fourier", json=body)
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp.json()["result"], "s1 s2' t1 t2'")

        resp = self.client.post("/fourier", json={"expr": "s1 s2' t1 t2' + p", "at": "e"})
        self.assertEqual(resp.json()["result"], "p")

    def test_fourier_bad_group_word(self):
        resp = self.client.post("/fourier", json={"expr": "p", "at": "a3"})
        self.assertEqual(resp.status_code, 400)

    # -------------------- /verify --------------------

    def test_verify_selected_check(self):
        resp = self.client.post("/verify", json={"n": 1, "m": 1, "depth": 1, "checks": "C2"})
        self.assertEqual(resp.status_code, 200)
        body = resp.json()
        self.assertTrue(body["entries"])
        self.assertTrue(all(e["id"] == "C2" for e in body["entries"]))
        self.assertEqual(body["summary"]["fail"], 0)
        self.assertNotIn("report_id", body)

    @patch("onm_model.appView.store_report")
    def test_verify_and_store(self, mock_store):
        mock_store.return_value = MagicMock(id=7)
        resp = self.client.post("/verify", json={"n": 1, "m": 1, "depth": 1, "checks": "C2", "store": True})
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp.json()["report_id"], 7)
        mock_store.assert_called_once()

    def test_verify_unknown_check(self):
        resp = self.client.post("/verify", json={"checks": "C99"})
        self.assertEqual(resp.status_code, 400)

    @patch("onm_model.appView.run_verification")
    def test_verify_unexpected_error(self, mock_run):
        mock_run.side_effect = RuntimeError("boom")
        resp = self.client.post("/verify", json={"checks": "C1"})
        self.assertEqual(resp.status_code, 500)
        self.assertEqual(resp.json()["detail"], "Unexpected error during verification.")

    # -------------------- /reports --------------------

    @patch("onm_model.appView.get_reports")
    def test_list_reports(self, mock_get):
        mock_get.return_value = [MagicMock(id=1, n=2, m=3, depth=3, seed=0, passed=2, failed=0, unconfirmed=1)]
        resp = self.client.get("/reports?n=2")
        self.assertEqual(resp.status_code, 200)
        self.assertEqual(resp.json(), [{"id": 1, "n": 2, "m": 3, "depth": 3, "seed": 0,
                                        "pass": 2, "fail": 0, "unconfirmed": 1}])
        mock_get.assert_called_once_with(self.db_mock, 2, None)

    @patch("onm_model.appView.get_report_by_id")
    def test_get_report_success(self, mock_get):
        record = MagicMock(id=5)
        record.to_report.return_value = get_report_data()
        mock_get.return_value = record
        resp = self.client.get("/reports/5")
        self.assertEqual(resp.status_code, 200)
        body = resp.json()
        self.assertEqual(body["id"], 5)
        self.assertEqual(body["summary"], {"pass": 2, "fail": 0, "unconfirmed": 1})

    @patch("onm_model.appView.get_report_by_id")
    def test_get_report_not_found(self, mock_get):
        mock_get.return_value = None
        resp = self.client.get("/reports/404")
        self.assertEqual(resp.status_code, 404)
        self.assertEqual(resp.json()["detail"], "Report not found")


if __name__ == "__main__":
    unittest.main()
