"""Tests for the catalog of triples dependent at two consecutive shifts."""

import os
import unittest

from multdep.errors import DomainError
from multdep.lattice import classify
from multdep.search import search_triples
from multdep.shapes import SHAPE_CASES, ShapeMatch, classify_shape, generate_shapes, instantiate

SLOW = os.getenv('MULTDEP_SLOW_TESTS') == '1'


def _catalog(N):
    return {tuple(sorted(t)) for case_id in SHAPE_CASES for t in generate_shapes(case_id, N)}


class TestClassifyShape(unittest.TestCase):
    def test_case_a(self):
        matches = classify_shape(2, 8, 5)
        self.assertIn(('A', {'d': 5}), [(m.case_id, m.param_dict()) for m in matches])

    def test_case_b(self):
        matches = classify_shape(8, 4, 26)
        self.assertIn(('B', {'x': 2, 'y': 3}), [(m.case_id, m.param_dict()) for m in matches])

    def test_case_d(self):
        matches = classify_shape(3, 9, 7)
        self.assertIn(('D', {'d': 2, 'x': 2, 'y': 3, 's': 2}),
                      [(m.case_id, m.param_dict()) for m in matches])

    def test_case_c(self):
        matches = classify_shape(4, 8, 24)
        self.assertIn(('C', {'d': 2, 'x': 2, 'y': 3, 's': 2}),
                      [(m.case_id, m.param_dict()) for m in matches])

    def test_matches_rebuild_input(self):
        for triple in [(2, 8, 5), (26, 8, 4), (7, 3, 9), (24, 4, 8)]:
            matches = classify_shape(*triple)
            self.assertTrue(matches, triple)
            for match in matches:
                self.assertEqual(match.apply(), triple)
                self.assertEqual(ShapeMatch.from_dict(match.to_dict()), match)

    def test_no_shape(self):
        self.assertEqual(classify_shape(2, 3, 5), [])
        self.assertEqual(classify_shape(9, 49, 63), [])

    def test_validation(self):
        with self.assertRaises(DomainError):
            classify_shape(2, 2, 3)
        with self.assertRaises(DomainError):
            classify_shape(1, 2, 3)
        with self.assertRaises(DomainError):
            instantiate('E', {})
        with self.assertRaises(DomainError):
            instantiate('E', {'d': 5})
        with self.assertRaises(DomainError):
            ShapeMatch.from_dict({'case_id': 'E', 'params': {}, 'permutation': [0, 1, 2]})


class TestGenerateShapes(unittest.TestCase):
    def test_examples(self):
        self.assertIn((2, 4, 8), generate_shapes('C', 30))
        self.assertEqual(generate_shapes('A', 9), [(2, 8, d) for d in (3, 4, 5, 6, 7, 9)])
        self.assertIn((3, 9, 7), generate_shapes('D', 10))
        self.assertIn((8, 4, 26), generate_shapes('B', 30))

    def test_entries_bounded_and_distinct(self):
        for case_id in SHAPE_CASES:
            for triple in generate_shapes(case_id, 300):
                self.assertLessEqual(max(triple), 300)
                self.assertGreaterEqual(min(triple), 2)
                self.assertEqual(len(set(triple)), 3)

    def test_generated_triples_classify(self):
        for case_id in SHAPE_CASES:
            for triple in generate_shapes(case_id, 300):
                self.assertIn(case_id, [m.case_id for m in classify_shape(*triple)], triple)

    def test_sound(self):
        for case_id in SHAPE_CASES:
            for triple in generate_shapes(case_id, 500):
                for t in (0, 1):
                    report = classify(tuple(v + t for v in triple))
                    self.assertEqual(report.dep_order, 2, (case_id, triple, t))

    def test_validation(self):
        with self.assertRaises(DomainError):
            generate_shapes('E', 10)
        with self.assertRaises(DomainError):
            generate_shapes('A', 2)


class TestCatalogComplete(unittest.TestCase):
    def test_catalog_equals_search(self):
        hits = search_triples(60, (0, 1), dep_order=2, jobs=1, progress=False)
        found = {h.triple for h in hits}
        self.assertEqual(found, _catalog(60))
        for triple in found:
            self.assertTrue(classify_shape(*triple), triple)

    @unittest.skipUnless(SLOW, "set MULTDEP_SLOW_TESTS=1")
    def test_catalog_equals_search_large(self):
        hits = search_triples(500, (0, 1), dep_order=2, progress=False)
        self.assertEqual({h.triple for h in hits}, _catalog(500))


if __name__ == '__main__':
    unittest.main()
