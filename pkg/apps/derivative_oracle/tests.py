from fractions import Fraction as F

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from . import services
from .problems import Problem2D, Problem3D


@st.composite
def problems_3d(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    A = draw(st.integers(1, 12))
    B, C = draw(st.integers(-6, 6)), draw(st.integers(-6, 6))
    # stay close to the staircase so the boundary cases are hit
    y_bar, z_bar = draw(st.integers(-2, n + 2)), draw(st.integers(-2, n + 2))
    return Problem3D(A=A, B=B, C=C, beta=B + y_bar, gamma=C + z_bar, n=n)


class ClosedFormTests(SimpleTestCase):
    def test_closed_form_2d_examples(self):
        self.assertEqual(services.closed_form_2d(Problem2D(A=3, B=1, beta=0, n=1)), F(-4, 3))
        self.assertEqual(services.closed_form_2d(Problem2D(A=5, B=2, beta=7, n=3)), F(228, 5))
        self.assertEqual(services.closed_form_2d(Problem2D(A=4, B=3, beta=5, n=4)), 0)
        self.assertEqual(services.closed_form_2d(Problem2D(A=7, B=0, beta=0, n=3)), 0)

    def test_closed_form_3d_blend(self):
        p = Problem3D(A=4, B=1, C=1, beta=3, gamma=2, n=2)
        self.assertEqual(services.closed_form_3d(p, 1), F(5, 4))

    @given(problems_3d())
    def test_end_cases_reduce_to_plane(self, p):
        self.assertEqual(services.closed_form_3d(p, p.n), services.closed_form_2d(p.as_2d()))
        mirrored = Problem2D(A=p.A, B=p.C, beta=p.gamma, n=p.n)
        self.assertEqual(services.closed_form_3d(p, 0), services.closed_form_2d(mirrored))


class Oracle2DTests(SimpleTestCase):
    def test_examples(self):
        cert = services.oracle_2d(Problem2D(A=3, B=1, beta=0, n=1))
        self.assertTrue(cert.agree)
        self.assertEqual(cert.oracle_value, F(-4, 3))
        cert = services.oracle_2d(Problem2D(A=5, B=2, beta=7, n=3))
        self.assertEqual(cert.oracle_value, F(228, 5))
        self.assertTrue(cert.recurrence_ok)

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(1, 30), st.integers(-20, 20), st.integers(-20, 20), st.integers(1, 6)
    )
    def test_oracle_matches_closed_form(self, A, B, beta, n):
        cert = services.oracle_2d(Problem2D(A=A, B=B, beta=beta, n=n))
        self.assertEqual(cert.kernel_dim, 1)
        self.assertEqual(cert.oracle_value, cert.closed_form)
        self.assertTrue(cert.recurrence_ok)


class Oracle3DTests(SimpleTestCase):
    def test_smallest_case(self):
        certs = services.oracle_3d(Problem3D(A=2, B=1, C=-1, beta=4, gamma=3, n=1))
        self.assertEqual([c.d for c in certs], [0, 1])
        for cert in certs:
            self.assertEqual(cert.kernel_dim, 2)
            self.assertTrue(cert.ok, cert.to_dict())

    def test_blend_example(self):
        certs = services.oracle_3d(Problem3D(A=4, B=1, C=1, beta=3, gamma=2, n=2))
        self.assertEqual(certs[1].oracle_value, F(5, 4))
        self.assertTrue(all(c.ok for c in certs))

    @settings(max_examples=25, deadline=None)
    @given(problems_3d(max_n=3))
    def test_oracle_matches_closed_form(self, p):
        certs = services.oracle_3d(p, seed=7)
        self.assertEqual(len(certs), p.n + 1)
        for cert in certs:
            self.assertEqual(cert.kernel_dim, p.n + 1)
            self.assertEqual(cert.oracle_value, cert.closed_form, cert.to_dict())
            self.assertTrue(cert.recurrence_ok)


class NonVanishingTests(SimpleTestCase):
    def test_inside_staircase_vanishes(self):
        p = Problem3D(A=5, B=2, C=3, beta=3, gamma=4, n=3)
        self.assertEqual(services.derivative_nonvanishing(p), (False, None))

    def test_on_the_line_vanishes(self):
        # (beta_bar, gamma_bar) = (nB/A, nC/A) = (1, 1)
        p = Problem3D(A=2, B=1, C=1, beta=2, gamma=2, n=2)
        self.assertEqual(services.lemma42_nonvanish(p), (False, None))

    def test_boundary_case_depends_on_b(self):
        self.assertFalse(services.derivative_nonvanishing(Problem3D(A=3, B=0, C=2, beta=0, gamma=3, n=2))[0])
        holds, d = services.derivative_nonvanishing(Problem3D(A=3, B=1, C=2, beta=1, gamma=3, n=2))
        self.assertTrue(holds)
        self.assertNotEqual(services.closed_form_3d(Problem3D(A=3, B=1, C=2, beta=1, gamma=3, n=2), d), 0)

    @settings(max_examples=300, deadline=None)
    @given(problems_3d(max_n=6))
    def test_criterion_matches_scan_over_d(self, p):
        holds, witness = services.derivative_nonvanishing(p)
        scan = any(services.closed_form_3d(p, d) != 0 for d in range(p.n + 1))
        self.assertEqual(holds, scan)
        if holds:
            self.assertNotEqual(services.closed_form_3d(p, witness), 0)


@override_settings(MDS_ORACLE_MAX_N=3, MDS_ORACLE_MAX_A=12, MDS_ORACLE_MAX_ABS=8)
class CampaignTests(SimpleTestCase):
    def test_small_campaign_passes(self):
        summary = services.run_campaign(samples=15, seed=11)
        self.assertTrue(summary.ok, summary.to_dict())
        self.assertEqual(summary.passed["2d"], 15)
        self.assertEqual(summary.passed["3d"], 15)
        self.assertEqual(summary.passed["nonvanishing"], 15)

    def test_campaign_is_deterministic(self):
        first = services.run_campaign(samples=5, seed=3, dims=(2,))
        second = services.run_campaign(samples=5, seed=3, dims=(2,))
        self.assertEqual(first.to_dict(), second.to_dict())
