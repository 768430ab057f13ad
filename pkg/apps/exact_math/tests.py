from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from common.exceptions import InputError, NoPositiveRelation, ZeroVector
from . import services

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


class FloorAndFactorialTests(SimpleTestCase):
    def test_floor_examples(self):
        self.assertEqual(services.rat_floor(Fraction(5, 2)), 2)
        self.assertEqual(services.rat_floor(Fraction(-5, 2)), -3)
        self.assertEqual(services.rat_floor(Fraction(3)), 3)
        self.assertEqual(services.rat_ceil(Fraction(-5, 2)), -2)

    def test_falling_factorial_examples(self):
        self.assertEqual(services.falling_factorial(5, 3), 60)
        self.assertEqual(services.falling_factorial(2, 4), 0)
        self.assertEqual(services.falling_factorial(Fraction(-1, 2), 2), Fraction(3, 4))
        self.assertEqual(services.falling_factorial(Fraction(7, 3), 0), 1)

    @given(rationals)
    def test_floor_brackets_value(self, q):
        f = services.rat_floor(q)
        self.assertTrue(f <= q < f + 1)
        self.assertEqual(services.rat_ceil(q), -services.rat_floor(-q))

    @given(rationals, st.integers(min_value=0, max_value=8))
    def test_falling_factorial_step(self, x, i):
        self.assertEqual(
            services.falling_factorial(x, i + 1),
            services.falling_factorial(x, i) * (x - i),
        )


class ParsingTests(SimpleTestCase):
    def test_parse_accepts_fractions_and_integers(self):
        self.assertEqual(services.parse_rational("-3/5"), Fraction(-3, 5))
        self.assertEqual(services.parse_rational("7"), Fraction(7))
        self.assertEqual(services.format_rational(Fraction(6, 17)), "6/17")

    def test_parse_rejects_floats(self):
        with self.assertRaises(InputError) as ctx:
            services.parse_rational("0.5")
        self.assertEqual(ctx.exception.token, "0.5")
        with self.assertRaises(InputError):
            services.parse_rational("1/0")


class KernelTests(SimpleTestCase):
    def test_identity_has_trivial_kernel(self):
        m = services.RatMatrix.from_rows([[1, 0], [0, 1]])
        self.assertEqual(services.kernel_basis(m), [])

    def test_single_relation(self):
        m = services.RatMatrix.from_rows([[1, -1]])
        self.assertEqual(services.kernel_basis(m), [(Fraction(1), Fraction(1))])

    def test_zero_row_has_full_kernel(self):
        m = services.RatMatrix.from_rows([[0, 0, 0]])
        self.assertEqual(len(services.kernel_basis(m)), 3)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=3))
    def test_kernel_vectors_are_annihilated(self, rows):
        m = services.RatMatrix.from_rows(rows)
        for v in services.kernel_basis(m):
            self.assertTrue(all(x == 0 for x in m.apply(v)))


class PrimitiveTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(services.primitive([Fraction(5, 2), -1, -1]), (5, -2, -2))
        self.assertEqual(services.primitive([Fraction(-1, 3), 1, 0]), (-1, 3, 0))
        self.assertEqual(services.primitive([4, 8]), (1, 2))

    def test_zero_vector(self):
        with self.assertRaises(ZeroVector):
            services.primitive([0, 0, 0])

    @given(
        st.lists(rationals, min_size=2, max_size=4).filter(lambda v: any(x != 0 for x in v)),
        st.fractions(min_value=Fraction(1, 20), max_value=20),
    )
    def test_scale_invariance(self, v, c):
        self.assertEqual(services.primitive([c * x for x in v]), services.primitive(v))


class RelationAndIndexTests(SimpleTestCase):
    first_rays = [(5, -2, -2), (-2, -1, -1), (-1, 3, 0), (-1, 0, 2)]
    second_rays = [(5, -2, -2), (2, -3, -3), (-1, 2, 0), (-1, 0, 2)]

    def test_positive_relation(self):
        self.assertEqual(services.positive_relation(self.first_rays), (17, 20, 18, 27))
        self.assertEqual(services.positive_relation(self.second_rays), (2, 6, 11, 11))
        standard = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
        self.assertEqual(services.positive_relation(standard), (1, 1, 1, 1))

    def test_relation_satisfies_rays(self):
        w = services.positive_relation(self.first_rays)
        for k in range(3):
            self.assertEqual(sum(wi * ray[k] for wi, ray in zip(w, self.first_rays)), 0)

    def test_no_positive_relation(self):
        with self.assertRaises(NoPositiveRelation):
            services.positive_relation([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])

    def test_lattice_index(self):
        self.assertEqual(services.lattice_index(self.first_rays), 1)
        self.assertEqual(services.lattice_index(self.second_rays), 2)
        self.assertEqual(services.lattice_index([(1, 0, 0), (0, 1, 0)]), services.INFINITE)
