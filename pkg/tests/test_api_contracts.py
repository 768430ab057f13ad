from django.test import SimpleTestCase
from django.urls import reverse
from rest_framework.test import APIClient


class ApiContractTests(SimpleTestCase):
    def setUp(self):
        self.client = APIClient()

    def post(self, name, payload):
        return self.client.post(reverse(name), payload, format="json")

    def test_polygon_check(self):
        res = self.post("mds_checker:check-polygon", {"p_left": ["-3/4", "1/2"], "p_right": ["1/4", "3/4"]})
        self.assertEqual(res.status_code, 200)
        body = res.json()
        self.assertEqual(body["schema"], "mds-oracle/1")
        self.assertEqual(body["kind"], "2d")
        self.assertEqual(body["verdict"], "NotMDS")
        self.assertEqual({"id", "holds", "witness"}, set(body["conditions"][0]))

    def test_polygon_rejects_floats(self):
        res = self.post("mds_checker:check-polygon", {"p_left": [-0.75, "1/2"], "p_right": ["1/4", "3/4"]})
        self.assertEqual(res.status_code, 400)
        self.assertIn("p_left", res.json())
        self.assertEqual(res.json()["status_code"], 400)

    def test_polytope_check_with_scale(self):
        res = self.post("mds_checker:check-polytope", {
            "p_left": ["-3/5", "-1/5", "-3/10"],
            "p_right": ["6/17", "2/17", "3/17"],
            "m_factor": 2,
        })
        self.assertEqual(res.status_code, 200)
        self.assertEqual(res.json()["verdict"], "NotMDS")
        self.assertEqual(res.json()["normalization"]["m_factor"], 2)

    def test_tetra_check(self):
        res = self.post("mds_checker:check-tetra", {"tuple": ["-5/18", "5/7", "2/5", "1"]})
        self.assertEqual(res.status_code, 200)
        body = res.json()
        self.assertEqual(body["verdict"], "Inconclusive")
        self.assertEqual(body["summary"]["n"], 4)
        self.assertEqual(body["summary"]["right_size"], 5)

    def test_tetra_check_domain_error(self):
        res = self.post("mds_checker:check-tetra", {"tuple": ["-3/5", "6/17", "1/3"]})
        self.assertEqual(res.status_code, 400)
        self.assertEqual(res.json()["code"], "invalid_polytope")

    def test_tetra_check_bad_vertex_order(self):
        res = self.post("mds_checker:check-tetra", {"tuple": ["3/5", "6/17", "1/3", "1/2"]})
        self.assertEqual(res.status_code, 400)
        self.assertIn("tuple", res.json())

    def test_projection_report_never_decides(self):
        res = self.post("mds_checker:tetra-projections", {"tuple": ["-3/5", "6/17", "1/3", "1/2"]})
        self.assertEqual(res.status_code, 200)
        self.assertEqual(res.json()["verdict"], "Inconclusive")
        self.assertEqual(len(res.json()["sub_reports"]), 2)

    def test_wps_check(self):
        res = self.post("wps:wps-check", {"weights": [17, 20, 18, 27]})
        self.assertEqual(res.status_code, 200)
        self.assertEqual(res.json()["verdict"], "NotMDS")
        self.assertEqual(res.json()["summary"]["relation"], [2, 1, 3, 2])

    def test_wps_check_validates_weights(self):
        self.assertEqual(self.post("wps:wps-check", {"weights": [17, 20, 18]}).status_code, 400)
        self.assertEqual(self.post("wps:wps-check", {"weights": [17, 0, 18, 27]}).status_code, 400)

    def test_tetra_fan(self):
        res = self.post("wps:tetra-fan", {"tuple": ["-3/5", "6/17", "1/3", "1/2"]})
        self.assertEqual(res.status_code, 200)
        self.assertEqual(res.json(), {
            "rays": [[5, -2, -2], [-2, -1, -1], [-1, 3, 0], [-1, 0, 2]],
            "weights": [17, 20, 18, 27],
            "index": 1,
        })

    def test_schema_is_served(self):
        res = self.client.get(reverse("schema"))
        self.assertEqual(res.status_code, 200)
