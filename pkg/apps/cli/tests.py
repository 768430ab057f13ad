import io
import json
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout

from django.test import SimpleTestCase, override_settings

from apps.mds_checker.services import check_tetra
from apps.polytopes.shapes import TetraTuple
from apps.wps.types import Relation, TableRow, WpsWeights
from common.exceptions import InputError
from .rendering import render
from .runner import run

FIRST_ROW = TableRow(WpsWeights((47, 13, 12, 30)), Relation(1, 1, (5, 2), 60), 1)


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue(), err.getvalue()


class RenderingTests(SimpleTestCase):
    def test_markdown_rows(self):
        lines = render([FIRST_ROW], "md").splitlines()
        self.assertEqual(lines[0], "| weights | relation | n |")
        self.assertEqual(lines[2], "| 47,13,12,30 | (1,1,5,2) | 1 |")

    def test_empty_table_keeps_header(self):
        self.assertEqual(render([], "md"), "| weights | relation | n |\n| --- | --- | --- |")
        self.assertEqual(render([], "csv"), "weights,relation,n")

    def test_csv_quotes_weights(self):
        self.assertEqual(render([FIRST_ROW], "csv").splitlines()[1], '"47,13,12,30","(1,1,5,2)",1')

    def test_report_formats(self):
        report = check_tetra(TetraTuple.of("-3/5", "6/17", "1/3", "1/2"))
        self.assertEqual(json.loads(render(report, "json"))["verdict"], "NotMDS")
        self.assertTrue(render(report, "md").startswith("**tetra**: NotMDS (full-chain)"))
        header, *rows = render(report, "csv").splitlines()
        self.assertEqual(header, "kind,verdict,condition,holds,witness")
        self.assertEqual(len(rows), 3)

    def test_unknown_format(self):
        with self.assertRaises(InputError):
            render([], "xml")


class RunnerTests(SimpleTestCase):
    def test_not_mds_exits_zero(self):
        code, out, _ = invoke("check-tetra", "--tuple=-3/5,6/17,1/3,1/2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["verdict"], "NotMDS")

    def test_json_flag(self):
        code, out, _ = invoke("check-tetra", "--tuple=-3/5,6/17,1/3,1/2", "--json")
        self.assertEqual(code, 0)
        body = json.loads(out)
        self.assertEqual(body["summary"]["n"], 1)
        self.assertEqual(body["summary"]["w"], "81/85")

    def test_inconclusive_exits_one(self):
        code, out, err = invoke("check-tetra", "--tuple=-5/18,5/7,2/5,1")
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["verdict"], "Inconclusive")
        self.assertIn("tetra.slice_sizes", err)

    def test_bad_input_exits_two(self):
        code, _, err = invoke("check-tetra", "--tuple=-3/5,6/x,1/3,1/2")
        self.assertEqual(code, 2)
        self.assertIn("input_error", err)
        self.assertEqual(invoke("check-tetra", "--tuple=1/2,1,0,0")[0], 2)
        self.assertEqual(invoke("no-such-command")[0], 2)
        self.assertEqual(invoke("check-tetra")[0], 2)

    def test_plane_polygon_from_flags(self):
        code, out, _ = invoke("check-2d", "--left=-3/4,1/2", "--right=1/4,3/4", "--format=md")
        self.assertEqual(code, 0)
        self.assertIn("2d.vertex_off_line", out)
        self.assertEqual(invoke("check-2d", "--left=-3/4,1/2", "--right=1/4,1/2")[0], 1)

    def test_polytope_from_json_file(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
            json.dump({"p_left": ["-3/5", "-1/5", "-3/10"], "p_right": ["6/17", "2/17", "3/17"]}, handle)
        self.addCleanup(os.remove, handle.name)
        code, out, _ = invoke("check-3d", f"--json-file={handle.name}")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["summary"]["m"], 170)

    def test_json_file_errors(self):
        self.assertEqual(invoke("check-3d", "--json-file=/nonexistent/shape.json")[0], 2)
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
            json.dump({"p_left": [-0.6, 0, 0], "p_right": ["6/17", 0, 0]}, handle)
        self.addCleanup(os.remove, handle.name)
        self.assertEqual(invoke("check-3d", f"--json-file={handle.name}")[0], 2)

    def test_wps_commands(self):
        self.assertEqual(invoke("check-wps", "--weights=17,20,18,27")[0], 0)
        self.assertEqual(invoke("check-wps", "--weights=7,18,5,25")[0], 1)
        self.assertEqual(invoke("check-wps", "--weights=7,18")[0], 2)
        code, out, _ = invoke("rays", "--tuple=-3/5,6/17,1/3,1/2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["weights"], [17, 20, 18, 27])

    @override_settings(MDS_SEARCH_BACKEND="local", MDS_ORACLE_JOBS=1)
    def test_search_table(self):
        code, out, err = invoke("search", "--dim=3", "--bound=6", "--format=md")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("| weights | relation | n |"))
        self.assertIn("rows", err)
        self.assertEqual(invoke("search", "--dim=5", "--bound=6")[0], 2)

    @override_settings(MDS_ORACLE_MAX_N=2, MDS_ORACLE_MAX_A=8, MDS_ORACLE_MAX_ABS=5)
    def test_verify_derivative(self):
        code, out, _ = invoke("verify-derivative", "--samples=4", "--seed=5", "--dims=2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["passed"]["2d"], 4)
        self.assertEqual(invoke("verify-derivative", "--dims=7")[0], 2)
