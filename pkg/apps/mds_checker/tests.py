from fractions import Fraction as F

from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies as st

from apps.derivative_oracle.services import derivative_nonvanishing
from apps.polytopes import services as poly
from apps.polytopes.shapes import Polygon4, Polytope3, TetraTuple
from common.exceptions import InvalidPolytope, NotSizeOne
from . import services
from .reports import Verdict


def polygon(right):
    return Polygon4(p_left=(F(-3, 4), F(1, 2)), p_right=right)


EXAMPLE_POLYGON = polygon((F(1, 4), F(3, 4)))
TETRA_FIRST = TetraTuple.of("-3/5", "6/17", "1/3", "1/2")
TETRA_INDEX_TWO = TetraTuple.of("-2/3", "1/3", "1/2", "1/2")
TETRA_WIDE_SLICE = TetraTuple.of("-5/18", "5/7", "2/5", "1")
TETRA_SHORT_CHAIN = TetraTuple.of("-3/10", "7/10", "1/2", "1/2")

_left_xs = [F(1, 2), F(1, 3), F(1, 4)]
_right_xs = [F(1, 2), F(1, 3), F(2, 3), F(3, 4), F(1, 4)]
_slopes = [F(-1), F(-1, 2), F(0), F(1, 2), F(1), F(-3, 2)]
_crossings = [
    (F(0), F(0)), (F(1, 2), F(0)), (F(0), F(1, 2)), (F(1, 3), F(1, 3)),
    (F(1, 2), F(1, 2)), (F(1, 4), F(1, 2)),
]


@st.composite
def narrow_polytopes(draw):
    x_l, x_r = -draw(st.sampled_from(_left_xs)), draw(st.sampled_from(_right_xs))
    s_y, s_z = draw(st.sampled_from(_slopes)), draw(st.sampled_from(_slopes))
    qy, qz = draw(st.sampled_from(_crossings))
    return Polytope3(
        p_left=(x_l, qy + s_y * x_l, qz + s_z * x_l),
        p_right=(x_r, qy + s_y * x_r, qz + s_z * x_r),
    )


class Check2DTests(SimpleTestCase):
    def test_worked_polygon(self):
        report = services.check_2d(EXAMPLE_POLYGON)
        self.assertEqual(report.verdict, Verdict.NOT_MDS)
        self.assertEqual(report.branch, "width-one")
        self.assertEqual(report.summary["n"], 1)
        self.assertEqual(report.summary["w"], 1)
        self.assertEqual(report.normalization["shear"], -3)
        self.assertEqual(report.condition("2d.vertex_off_line").witness["line_value"], F(43, 4))

    def test_lowered_right_vertex_is_inconclusive(self):
        report = services.check_2d(polygon((F(1, 4), F(1, 2))))
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)
        self.assertEqual(report.failing(), ["2d.vertex_off_line"])

    def test_raised_right_vertex(self):
        self.assertTrue(services.check_2d(polygon((F(1, 4), F(1)))).is_not_mds)
        report = services.check_2d(polygon((F(1, 4), F(7, 6))))
        self.assertTrue(report.is_not_mds)
        self.assertEqual(report.branch, "triangle")
        self.assertEqual(report.summary["m"], 12)

    def test_doubling_m_keeps_verdicts(self):
        for right in ((F(1, 4), F(3, 4)), (F(1, 4), F(1, 2)), (F(1, 4), F(1)), (F(1, 4), F(7, 6))):
            p = polygon(right)
            self.assertEqual(services.check_2d(p, m_factor=2).verdict, services.check_2d(p).verdict)

    @given(st.integers(-3, 3))
    def test_shear_does_not_change_verdict(self, a):
        for right in ((F(1, 4), F(3, 4)), (F(1, 4), F(1, 2))):
            p = polygon(right)
            self.assertEqual(services.check_2d(poly.shear_2d(p, a)).verdict, services.check_2d(p).verdict)

    def test_report_serializes_rationals(self):
        payload = services.check_2d(EXAMPLE_POLYGON).to_dict()
        self.assertEqual(payload["verdict"], "NotMDS")
        self.assertEqual(payload["schema"], "mds-oracle/1")
        line = next(c for c in payload["conditions"] if c["id"] == "2d.vertex_off_line")
        self.assertEqual(line["witness"]["line_value"], "43/4")


class Check3DTests(SimpleTestCase):
    def test_worked_tetrahedra(self):
        first = services.check_3d(poly.tetra_to_polytope(TETRA_FIRST))
        self.assertEqual(first.verdict, Verdict.NOT_MDS)
        self.assertEqual(first.summary["n"], 1)
        self.assertEqual(first.summary["m"], 170)

        wide = services.check_3d(poly.tetra_to_polytope(TETRA_WIDE_SLICE))
        self.assertEqual(wide.verdict, Verdict.INCONCLUSIVE)
        self.assertIn("3d.right_slices", wide.failing())
        self.assertEqual(wide.summary["n"], 4)
        self.assertEqual(wide.normalization["shear"], [0, -1])

    def test_width_gate(self):
        report = services.check_3d(Polytope3(p_left=(-1, 0, 0), p_right=(1, 1, 1)))
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)
        self.assertIn("3d.width", report.failing())

    def test_stability_and_shears(self):
        for t in (TETRA_FIRST, TETRA_INDEX_TWO, TETRA_WIDE_SLICE):
            p = poly.tetra_to_polytope(t)
            verdict = services.check_3d(p).verdict
            self.assertEqual(services.check_3d(p, m_factor=2).verdict, verdict)
            for a_y, a_z in ((1, 0), (-3, 2), (3, 3)):
                self.assertEqual(services.check_3d(poly.shear_3d(p, a_y, a_z)).verdict, verdict)

    @settings(max_examples=60, deadline=None)
    @given(narrow_polytopes())
    def test_conditions_match_derivative_criterion(self, p):
        assume(p.width <= 1)
        report = services.check_3d(p)
        problem = services.derivative_problem(p)
        assume(problem is not None)
        self.assertEqual(services.derivative_conditions_hold(report), derivative_nonvanishing(problem)[0])

    def test_derivative_problem_coordinates(self):
        p = poly.tetra_to_polytope(TETRA_FIRST)
        problem = services.derivative_problem(p)
        report = services.check_3d(p)
        m = report.summary["m"]
        self.assertEqual(problem.A, int(m * p.width) - 1)
        self.assertEqual(problem.beta_bar, int(m * p.y_left) - report.summary["b"])
        self.assertEqual(problem.gamma_bar, int(m * p.z_left) - report.summary["c"])


class CheckN1Tests(SimpleTestCase):
    def test_worked_tetrahedra(self):
        for t in (TETRA_FIRST, TETRA_INDEX_TWO):
            p = poly.tetra_to_polytope(t)
            report = services.check_3d_n1(p)
            self.assertEqual(report.verdict, Verdict.NOT_MDS)
            self.assertEqual(report.verdict, services.check_3d(p).verdict)

    def test_point_on_vertex_line(self):
        report = services.check_3d_n1(poly.tetra_to_polytope(TetraTuple.of("-3/2", "1/2", 0, 0)))
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)
        self.assertEqual(sorted(report.failing()), ["n1.off_line", "n1.width"])

    def test_requires_single_point(self):
        with self.assertRaises(NotSizeOne):
            services.check_3d_n1(poly.tetra_to_polytope(TETRA_WIDE_SLICE))


class CheckTetraTests(SimpleTestCase):
    def test_worked_tuples(self):
        first = services.check_tetra(TETRA_FIRST)
        self.assertEqual(first.verdict, Verdict.NOT_MDS)
        self.assertEqual(first.branch, "full-chain")
        self.assertEqual(first.summary["w"], F(81, 85))

        wide = services.check_tetra(TETRA_WIDE_SLICE)
        self.assertEqual(wide.verdict, Verdict.INCONCLUSIVE)
        self.assertEqual(wide.failing(), ["tetra.slice_sizes"])
        self.assertEqual((wide.summary["n"], wide.summary["right_size"]), (4, 5))

        self.assertTrue(services.check_tetra(TETRA_INDEX_TWO).is_not_mds)

    def test_empty_left_slice_is_rejected(self):
        # 1 + floor(1/2 + 1/2 + 1/2) - 1 - 1 = 0 points next to P_L
        with self.assertRaises(InvalidPolytope):
            services.check_tetra(TetraTuple.of(-2, "1/3", "1/2", "1/2"))

    def test_reflected_branch(self):
        report = services.check_tetra(TETRA_SHORT_CHAIN)
        self.assertTrue(report.is_not_mds)
        self.assertEqual(report.branch, "reflected")
        self.assertEqual(report.summary["right_chain"], [1, 1, 3])
        self.assertEqual(report.sub_reports[0].verdict, Verdict.NOT_MDS)
        # check_3d needs the whole chain
        self.assertIn("3d.right_slices", services.check_3d(poly.tetra_to_polytope(TETRA_SHORT_CHAIN)).failing())

    def test_agrees_with_polytope_check(self):
        for t in (TETRA_FIRST, TETRA_INDEX_TWO, TETRA_WIDE_SLICE):
            self.assertEqual(
                services.check_tetra(t).verdict,
                services.check_3d(poly.tetra_to_polytope(t)).verdict,
            )

    def test_projections_do_not_suffice(self):
        for t in (TETRA_FIRST, TETRA_INDEX_TWO):
            report = services.projection_report(t)
            self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)
            for plane in ("xy", "xz"):
                self.assertEqual(report.summary[plane]["left_column"], 2)
            for planar in report.sub_reports:
                self.assertIn("2d.right_columns", planar.failing())
