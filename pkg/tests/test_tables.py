"""
Reproduction of the published lists of weighted projective 3- and 4-spaces
passing the criterion. Slow: run with MDS_RUN_SLOW=1.
"""
import os
import unittest

from django.test import SimpleTestCase

from apps.mds_checker.reports import Verdict
from apps.wps.services import check_wps, search
from apps.wps.tables import (
    PUBLISHED_FOUR_SPACES,
    PUBLISHED_THREE_SPACES,
    UNPUBLISHED_THREE_SPACES,
    space_key,
)
from apps.wps.types import WpsWeights

RUN_SLOW = os.environ.get("MDS_RUN_SLOW") == "1"


@unittest.skipUnless(RUN_SLOW, "set MDS_RUN_SLOW=1 to reproduce the full lists")
class PublishedTablesTests(SimpleTestCase):
    def assert_row_passes(self, weights, relation, n):
        report = check_wps(WpsWeights(weights))
        self.assertEqual(report.verdict, Verdict.NOT_MDS, weights)
        self.assertIn(relation, report.summary["relations"])
        label = "(" + ",".join(str(x) for x in relation) + ")"
        sub = next(r for r in report.sub_reports if r.branch == label)
        self.assertTrue(sub.is_not_mds, weights)
        self.assertEqual(sub.summary["n"], n, weights)

    def test_three_spaces(self):
        for weights, relation, n in PUBLISHED_THREE_SPACES:
            with self.subTest(weights=weights):
                self.assert_row_passes(weights, relation, n)

    def test_four_spaces(self):
        for weights, relation, n in PUBLISHED_FOUR_SPACES:
            with self.subTest(weights=weights):
                self.assert_row_passes(weights, relation, n)

    def test_search_reproduces_three_spaces(self):
        rows = search(3, 50)
        keys = [space_key(row.weights.weights) for row in rows]
        self.assertEqual(len(keys), len(set(keys)))
        extras = {space_key(w) for w in UNPUBLISHED_THREE_SPACES}
        self.assertLessEqual(extras, set(keys))
        found = {
            (row.weights.weights, row.relation.as_tuple(), row.n)
            for row in rows
            if space_key(row.weights.weights) not in extras
        }
        self.assertEqual(found, set(PUBLISHED_THREE_SPACES))
        self.assertEqual(len(rows), len(PUBLISHED_THREE_SPACES) + len(extras))

    def test_search_reproduces_four_spaces(self):
        # the published bound is a, b, c_i < 65
        rows = [row for row in search(4, 65) if max(row.weights.weights[:2]) < 65]
        found = {(row.weights.weights, row.relation.as_tuple(), row.n) for row in rows}
        self.assertEqual(found, set(PUBLISHED_FOUR_SPACES))
