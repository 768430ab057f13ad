from fractions import Fraction as F

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from apps.wps.services import reconstruct_tetra
from apps.wps.tables import PUBLISHED_THREE_SPACES
from apps.wps.types import WpsWeights, relation_of
from common.exceptions import InvalidPolytope, OutOfRange
from . import services
from .shapes import Polygon4, Polytope3, TetraTuple

EXAMPLE_POLYGON = Polygon4(p_left=(F(-3, 4), F(1, 2)), p_right=(F(1, 4), F(3, 4)))
TETRA_FIRST = TetraTuple.of("-3/5", "6/17", "1/3", "1/2")
TETRA_INDEX_TWO = TetraTuple.of("-2/3", "1/3", "1/2", "1/2")
TETRA_WIDE_SLICE = TetraTuple.of("-5/18", "5/7", "2/5", "1")
WORKED_TETRAS = [TETRA_FIRST, TETRA_INDEX_TWO, TETRA_WIDE_SLICE]

_xs = [F(1, 2), F(1), F(3, 2), F(1, 3), F(2, 3), F(4, 3)]
_slopes = [F(-1), F(-1, 2), F(0), F(1, 2), F(1), F(3, 2)]
_crossings_2d = [F(0), F(1, 3), F(1, 2), F(2, 3), F(1)]
_crossings_3d = [
    (F(0), F(0)), (F(1, 2), F(0)), (F(0), F(1, 2)), (F(1, 3), F(1, 3)),
    (F(1, 2), F(1, 2)), (F(1, 3), F(0)), (F(0), F(1, 3)), (F(1, 3), F(2, 3)),
]


@st.composite
def small_polygons(draw):
    x_l, x_r = -draw(st.sampled_from(_xs)), draw(st.sampled_from(_xs))
    s = draw(st.sampled_from(_slopes))
    y0 = draw(st.sampled_from(_crossings_2d))
    return Polygon4(p_left=(x_l, y0 + s * x_l), p_right=(x_r, y0 + s * x_r))


@st.composite
def small_polytopes(draw):
    x_l, x_r = -draw(st.sampled_from(_xs)), draw(st.sampled_from(_xs))
    s_y, s_z = draw(st.sampled_from(_slopes)), draw(st.sampled_from(_slopes))
    qy, qz = draw(st.sampled_from(_crossings_3d))
    return Polytope3(
        p_left=(x_l, qy + s_y * x_l, qz + s_z * x_l),
        p_right=(x_r, qy + s_y * x_r, qz + s_z * x_r),
    )


class ShapeValidationTests(SimpleTestCase):
    def test_rejects_vertices_on_one_side(self):
        with self.assertRaises(InvalidPolytope):
            Polygon4(p_left=(F(1, 2), 0), p_right=(F(1, 4), 0))

    def test_rejects_crossing_outside_base(self):
        with self.assertRaises(InvalidPolytope):
            Polygon4(p_left=(-1, 2), p_right=(1, 2))
        with self.assertRaises(InvalidPolytope):
            Polytope3(p_left=(-1, 1, 0), p_right=(1, 1, 0))

    def test_triangle_degenerations(self):
        self.assertFalse(EXAMPLE_POLYGON.is_triangle)
        self.assertTrue(Polygon4(p_left=(F(-3, 4), F(1, 2)), p_right=(F(1, 4), F(7, 6))).is_triangle)
        self.assertTrue(services.tetra_to_polytope(TETRA_FIRST).is_tetrahedron)


class ShearTests(SimpleTestCase):
    def test_shear_normalize_2d(self):
        sheared, a = services.shear_normalize_2d(EXAMPLE_POLYGON)
        self.assertEqual(a, -3)
        self.assertEqual(sheared.p_right, (F(1, 4), F(0)))

        unchanged, a = services.shear_normalize_2d(sheared)
        self.assertEqual(a, 0)
        self.assertEqual(unchanged, sheared)

        low = Polygon4(p_left=(F(-1, 2), F(1, 2)), p_right=(F(1, 2), F(-1, 4)))
        sheared, a = services.shear_normalize_2d(low)
        self.assertEqual(a, 1)
        self.assertEqual(sheared.p_right, (F(1, 2), F(1, 4)))

    def test_shear_normalize_3d(self):
        _, shears = services.shear_normalize_3d(services.tetra_to_polytope(TETRA_FIRST))
        self.assertEqual(shears, (0, 0))
        _, shears = services.shear_normalize_3d(services.tetra_to_polytope(TETRA_WIDE_SLICE))
        self.assertEqual(shears, (0, -1))
        _, shears = services.shear_normalize_3d(Polytope3(p_left=(-1, 0, 0), p_right=(1, 1, 1)))
        self.assertEqual(shears, (-1, -1))

    @given(small_polytopes(), st.integers(-3, 3), st.integers(-3, 3))
    def test_width_is_shear_invariant(self, p, a_y, a_z):
        self.assertEqual(services.width(services.shear_3d(p, a_y, a_z)), services.width(p))
        self.assertEqual(services.width(services.shear_normalize_3d(p)[0]), services.width(p))


class ScaleAndWidthTests(SimpleTestCase):
    def test_integrality_scale(self):
        self.assertEqual(services.integrality_scale(EXAMPLE_POLYGON), 4)
        self.assertEqual(services.integrality_scale(services.tetra_to_polytope(TETRA_FIRST)), 170)
        self.assertEqual(services.integrality_scale(Polytope3(p_left=(-1, 0, 0), p_right=(1, 1, 1))), 1)

    def test_width(self):
        self.assertEqual(services.width(EXAMPLE_POLYGON), 1)
        self.assertEqual(services.width(TETRA_FIRST), F(81, 85))
        self.assertEqual(services.width(TETRA_WIDE_SLICE), F(125, 126))


class ColumnTests(SimpleTestCase):
    def test_example_columns(self):
        self.assertEqual(services.column(EXAMPLE_POLYGON, 4, -2).size, 1)
        self.assertEqual(services.column(EXAMPLE_POLYGON, 4, 1).size, 1)
        self.assertEqual(services.column(EXAMPLE_POLYGON, 4, 0).size, 5)
        self.assertEqual(services.column(EXAMPLE_POLYGON, 8, 0).size, 9)

    def test_out_of_range(self):
        with self.assertRaises(OutOfRange):
            services.column(EXAMPLE_POLYGON, 4, 2)

    def test_scale_must_be_integral(self):
        with self.assertRaises(InvalidPolytope):
            services.column(EXAMPLE_POLYGON, 2, 0)


class SliceTests(SimpleTestCase):
    def test_left_slices_of_worked_tetrahedra(self):
        for t, expected in ((TETRA_FIRST, 1), (TETRA_WIDE_SLICE, 4), (TETRA_INDEX_TWO, 1)):
            p = services.tetra_to_polytope(t)
            m = services.integrality_scale(p)
            x = int(m * p.x_left) + 1
            self.assertEqual(services.slice_profile(p, m, x).size, expected)
            self.assertEqual(services.tetra_slice_size_left(t), expected)

    def test_closed_form_right_sizes(self):
        self.assertEqual(services.tetra_slice_size_right(TETRA_FIRST, 1), 1)
        self.assertEqual(services.tetra_slice_size_right(TETRA_WIDE_SLICE, 4), 5)
        self.assertEqual(services.tetra_slice_size_left(TetraTuple.of("-1/2", "1/2", "1/3", "1/3")), 1)

    def test_closed_form_right_matches_slices(self):
        p = services.tetra_to_polytope(TETRA_WIDE_SLICE)
        m = services.integrality_scale(p)
        for n in range(1, 6):
            x = int(m * p.x_right) - n + 1
            self.assertEqual(services.slice_profile(p, m, x).size, services.tetra_slice_size_right(TETRA_WIDE_SLICE, n))

    def test_middle_slice_is_full_triangle(self):
        p = services.tetra_to_polytope(TETRA_FIRST)
        self.assertEqual(services.slice_profile(p, 170, 0).size, 171)

    def test_sizes_grow_toward_the_base(self):
        for t in WORKED_TETRAS:
            p = services.tetra_to_polytope(t)
            m = services.integrality_scale(p)
            sizes = services.slice_sizes(p, m)
            left = [sizes[x] for x in range(int(m * p.x_left), 1)]
            right = [sizes[x] for x in range(int(m * p.x_right), -1, -1)]
            self.assertEqual(left, sorted(left))
            self.assertEqual(right, sorted(right))


class ProjectionTests(SimpleTestCase):
    def test_projection_coordinates(self):
        flat = services.project(services.tetra_to_polytope(TETRA_FIRST), "xy")
        self.assertEqual(flat.p_left, (F(-3, 5), F(-1, 5)))
        self.assertEqual(flat.p_right, (F(6, 17), F(2, 17)))
        self.assertTrue(flat.is_triangle)

    def test_slices_never_exceed_columns(self):
        for t in WORKED_TETRAS:
            p = services.tetra_to_polytope(t)
            m = services.integrality_scale(p)
            for plane in ("xy", "xz"):
                columns = services.column_sizes(services.project(p, plane), m)
                for x, size in services.slice_sizes(p, m).items():
                    self.assertLessEqual(size, columns[x], msg=f"{t} {plane} x={x}")

    def test_published_tetrahedra_slices_never_exceed_columns(self):
        checked = set()
        for weights, (e, f, *_), _ in PUBLISHED_THREE_SPACES:
            t = reconstruct_tetra(WpsWeights(weights), relation_of(weights, e, f))
            if t is None:
                continue
            checked.add(weights)
            p = services.tetra_to_polytope(t)
            m = services.integrality_scale(p)
            slices = services.slice_sizes(p, m)
            for plane in ("xy", "xz"):
                columns = services.column_sizes(services.project(p, plane), m)
                for x, size in slices.items():
                    self.assertLessEqual(size, columns[x], msg=f"{weights} {plane} x={x}")
        self.assertLessEqual({(47, 13, 12, 30), (17, 20, 18, 27)}, checked)

    def test_projected_left_column_is_too_large(self):
        for t in (TETRA_FIRST, TETRA_INDEX_TWO):
            p = services.tetra_to_polytope(t)
            m = services.integrality_scale(p)
            for plane in ("xy", "xz"):
                col = services.column(services.project(p, plane), m, int(m * p.x_left) + 1)
                self.assertEqual(col.size, 2)

    def test_reflection(self):
        self.assertEqual(
            services.reflect_tetra(TETRA_FIRST).as_tuple(),
            (F(-6, 17), F(3, 5), F(-1, 3), F(-1, 2)),
        )
        p = services.tetra_to_polytope(TETRA_FIRST)
        self.assertEqual(services.reflect(p).p_left, (F(-6, 17), F(2, 17), F(3, 17)))


class BruteForceOracleTests(SimpleTestCase):
    @settings(max_examples=30, deadline=None)
    @given(small_polygons(), st.sampled_from([1, 2]))
    def test_columns_match_enumeration(self, p, factor):
        m = services.integrality_scale(p) * factor
        for x in range(int(m * p.x_left), int(m * p.x_right) + 1):
            self.assertEqual(
                services.column(p, m, x).point_set(),
                services.lattice_points_brute(p, m, x),
            )

    @settings(max_examples=25, deadline=None)
    @given(small_polytopes())
    def test_slices_match_enumeration(self, p):
        m = services.integrality_scale(p)
        self.assertLessEqual(m, 24)
        for x in range(int(m * p.x_left), int(m * p.x_right) + 1):
            self.assertEqual(
                services.slice_profile(p, m, x).point_set(),
                services.lattice_points_brute(p, m, x),
            )
