from fractions import Fraction as F

from django.test import SimpleTestCase, override_settings

from apps.mds_checker.reports import Verdict
from apps.mds_checker.services import check_tetra
from apps.polytopes import services as poly
from apps.polytopes.shapes import TetraTuple
from common.exceptions import InputError
from config.celery import app as celery_app
from . import services
from .tables import PUBLISHED_THREE_SPACES
from .types import Relation, TableRow, WpsWeights, relation_of


def W(*weights):
    return WpsWeights(weights)


TABLE_ONE_SAMPLE = [
    ((47, 13, 12, 30), (1, 1, 5, 2), 1),
    ((19, 41, 15, 20), (1, 1, 4, 3), 3),
    ((11, 32, 18, 27), (2, 1, 3, 2), 2),
    ((17, 20, 18, 27), (2, 1, 3, 2), 1),
    ((47, 7, 18, 27), (1, 1, 3, 2), 1),
    ((29, 50, 27, 36), (2, 1, 4, 3), 2),
]


class WeightsTests(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(WpsWeights.parse("17, 20,18,27"), W(17, 20, 18, 27))
        with self.assertRaises(InputError) as ctx:
            WpsWeights.parse("17,x,18,27")
        self.assertEqual(ctx.exception.token, "x")

    def test_rejects_bad_tuples(self):
        for weights in ((1, 2, 3), (1, 2, 3, 4, 5, 6), (0, 1, 2, 3)):
            with self.assertRaises(InputError):
                WpsWeights(weights)

    def test_normalize(self):
        self.assertEqual(services.normalize_weights(W(17, 20, 18, 27)), (W(17, 20, 18, 27), True))
        self.assertEqual(services.normalize_weights(W(6, 18, 33, 33)), (W(2, 6, 11, 11), False))
        canonical, reduced = services.normalize_weights(W(4, 6, 8, 3))
        self.assertEqual(canonical, W(2, 3, 3, 4))
        self.assertFalse(reduced)
        self.assertEqual(services.normalize_weights(canonical)[0], canonical)


class RelationTests(SimpleTestCase):
    def test_table_relations(self):
        self.assertEqual(services.find_relations(W(47, 13, 12, 30)), [Relation(1, 1, (5, 2), 60)])
        self.assertIn(Relation(2, 1, (3, 2), 54), services.find_relations(W(17, 20, 18, 27)))
        self.assertIn(Relation(1, 3, (4, 1, 1), 52), services.find_relations(W(19, 11, 13, 52, 52)))

    def test_relation_identities(self):
        for weights, _, _ in TABLE_ONE_SAMPLE:
            w = W(*weights)
            for rel in services.find_relations(w):
                self.assertEqual(rel.e * w.a + rel.f * w.b, rel.d)
                self.assertTrue(all(gi * ci == rel.d for gi, ci in zip(rel.g, w.c)))

    def test_no_relation_without_coprime_g(self):
        # c = (4, 6, 10) gives g = (15, 10, 6)
        self.assertEqual(services.find_relations(W(1, 1, 4, 6, 10)), [])

    def test_width(self):
        self.assertEqual(services.wps_width(W(17, 20, 18, 27), relation_of((17, 20, 18, 27), 2, 1)), F(81, 85))
        self.assertEqual(services.wps_width(W(7, 18, 5, 25), relation_of((7, 18, 5, 25), 1, 1)), F(125, 126))
        self.assertEqual(services.wps_width(W(47, 13, 12, 30), relation_of((47, 13, 12, 30), 1, 1)), F(600, 611))


class SliceTests(SimpleTestCase):
    def test_delta_slices(self):
        for weights, (e, f, *_), n in TABLE_ONE_SAMPLE:
            rel = relation_of(weights, e, f)
            self.assertEqual(services.delta_slice(rel, W(*weights)).size, n, weights)

    def test_delta_slice_in_dimension_four(self):
        w = W(19, 11, 13, 52, 52)
        rel = relation_of(w.weights, 1, 3)
        self.assertEqual(len(services.delta_points(rel, w)), 10)
        self.assertEqual(services.delta_slice(rel, w).size, 3)
        self.assertEqual(services.gamma_slice(rel, w, 3), 3)

    def test_gamma_slices(self):
        rel = relation_of((17, 20, 18, 27), 2, 1)
        self.assertEqual(services.gamma_slice(rel, W(17, 20, 18, 27), 1), 1)
        w = W(7, 18, 5, 25)
        rel = relation_of(w.weights, 1, 1)
        self.assertEqual(services.delta_slice(rel, w).size, 4)
        self.assertEqual(services.gamma_slice(rel, w, 4), 5)

    def test_gamma_slice_needs_positive_n(self):
        with self.assertRaises(ValueError):
            services.gamma_slice(relation_of((17, 20, 18, 27), 2, 1), W(17, 20, 18, 27), 0)


class CheckWpsTests(SimpleTestCase):
    def test_table_rows_pass(self):
        for weights, relation, n in TABLE_ONE_SAMPLE:
            report = services.check_wps(W(*weights))
            self.assertEqual(report.verdict, Verdict.NOT_MDS, weights)
            self.assertEqual(report.summary["relation"], relation)
            self.assertEqual(report.summary["n"], n)

    def test_dimension_four(self):
        report = services.check_wps(W(47, 13, 12, 30, 60))
        self.assertTrue(report.is_not_mds)
        self.assertEqual(report.summary["relation"], (1, 1, 5, 2, 1))
        self.assertEqual(report.summary["n"], 1)

    def test_example_outside_the_criterion(self):
        report = services.check_wps(W(7, 18, 5, 25))
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)
        (sub,) = report.sub_reports
        self.assertEqual(sub.failing(), ["wps.slices"])
        self.assertEqual(sub.condition("wps.slices").witness["gamma_size"], 5)

    def test_order_of_a_and_b_matters(self):
        self.assertFalse(services.check_wps(W(13, 47, 12, 30)).is_not_mds)

    def test_report_json(self):
        payload = services.check_wps(W(17, 20, 18, 27)).to_dict()
        self.assertEqual(payload["verdict"], "NotMDS")
        self.assertEqual(payload["summary"]["relation"], [2, 1, 3, 2])
        self.assertEqual(payload["sub_reports"][0]["summary"]["w"], "81/85")


class FanTests(SimpleTestCase):
    def test_first_example(self):
        fan = services.tetra_fan(TetraTuple.of("-3/5", "6/17", "1/3", "1/2"))
        self.assertEqual(fan.rays, ((5, -2, -2), (-2, -1, -1), (-1, 3, 0), (-1, 0, 2)))
        self.assertEqual(fan.weights, W(17, 20, 18, 27))
        self.assertEqual(fan.index, 1)

    def test_sublattice_example(self):
        fan = services.tetra_fan(TetraTuple.of("-2/3", "1/3", "1/2", "1/2"))
        self.assertEqual(fan.rays, ((5, -2, -2), (-2, -1, -1), (-1, 2, 0), (-1, 0, 2)))
        self.assertEqual(fan.weights, W(2, 2, 3, 3))
        self.assertEqual(fan.index, 6)

    def test_third_example(self):
        fan = services.tetra_fan(TetraTuple.of("-5/18", "5/7", "2/5", "1"))
        self.assertEqual(fan.weights, W(7, 18, 5, 25))
        self.assertEqual(fan.to_dict()["weights"], [7, 18, 5, 25])


class ReconstructionTests(SimpleTestCase):
    def test_worked_pair(self):
        t = services.reconstruct_tetra(W(17, 20, 18, 27), relation_of((17, 20, 18, 27), 2, 1))
        self.assertEqual(t, TetraTuple.of("-3/5", "6/17", "1/3", "1/2"))

    def test_table_rows_match_tetra_criterion(self):
        for weights, (e, f, *_), n in TABLE_ONE_SAMPLE:
            w, rel = W(*weights), relation_of(weights, e, f)
            t = services.reconstruct_tetra(w, rel)
            if t is None:
                continue
            self.assertEqual(t.width, services.wps_width(w, rel))
            self.assertEqual(poly.tetra_slice_size_left(t), services.delta_slice(rel, w).size)
            self.assertEqual(poly.tetra_slice_size_right(t, n), services.gamma_slice(rel, w, n))
            self.assertEqual(check_tetra(t).verdict, Verdict.NOT_MDS, weights)

    def test_first_row_reconstructs(self):
        t = services.reconstruct_tetra(W(47, 13, 12, 30), relation_of((47, 13, 12, 30), 1, 1))
        self.assertEqual(t, TetraTuple.of("-10/13", "10/47", "1/5", "1/2"))


@override_settings(MDS_SEARCH_BACKEND="local", MDS_ORACLE_JOBS=1)
class SearchTests(SimpleTestCase):
    def test_chunks_find_table_rows(self):
        rows = services.search_chunk(3, 50, [(12, 30), (18, 27)])
        found = {(r.weights.weights, r.relation.as_tuple(), r.n) for r in rows}
        for weights, relation, n in TABLE_ONE_SAMPLE:
            if weights[2:] in ((12, 30), (18, 27)):
                self.assertIn((weights, relation, n), found)

    def test_one_row_per_unordered_pair(self):
        rows = services.search_chunk(3, 50, [(18, 27)])
        found = {(r.weights.weights, r.relation.as_tuple(), r.n) for r in rows}
        expected = {row for row in PUBLISHED_THREE_SPACES if row[0][2:] == (18, 27)}
        self.assertEqual(found, expected)
        weights = {r.weights.weights for r in rows}
        for swapped in ((7, 47, 18, 27), (32, 11, 18, 27), (28, 13, 18, 27)):
            self.assertNotIn(swapped, weights)

    def test_rows_are_reduced_and_pass(self):
        for row in services.search(3, 12):
            self.assertTrue(services.is_reduced(row.weights.weights))
            self.assertTrue(services.check_wps(row.weights).is_not_mds)

    def test_sorted_and_deterministic(self):
        first = services.search(3, 16)
        self.assertEqual(first, sorted(first, key=lambda row: row.sort_key))
        self.assertEqual(first, services.search(3, 16))

    def test_process_pool_matches_inline(self):
        self.assertEqual(services.search(3, 14, jobs=2), services.search(3, 14, jobs=1))

    @override_settings(MDS_SEARCH_BACKEND="celery")
    def test_celery_backend_matches_inline(self):
        previous = celery_app.conf.task_always_eager
        celery_app.conf.task_always_eager = True
        self.addCleanup(setattr, celery_app.conf, "task_always_eager", previous)
        self.assertEqual(services.search(3, 14), services.search(3, 14, backend="local"))

    def test_rejects_unsupported_dimension(self):
        with self.assertRaises(InputError):
            services.search(5, 10)

    def test_row_cells(self):
        row = TableRow(W(47, 13, 12, 30), Relation(1, 1, (5, 2), 60), 1)
        self.assertEqual(row.cells(), ("47,13,12,30", "(1,1,5,2)", "1"))
        self.assertEqual(TableRow.from_dict(row.to_dict()), row)
