"""Tests for the Pillai-type equation scans and their applications to pairs."""

import os
import unittest
from itertools import product
from math import isqrt

from multdep.arith import pair_dependent
from multdep.config import Config, set_config
from multdep.errors import DomainError, IndependentError
from multdep.pillai import (
    EXCEPTIONAL_SHIFTS,
    EXCEPTIONAL_TRIPLES,
    CatalogReport,
    OpenEquationSolution,
    PillaiInstance,
    PillaiSolution,
    VicinityReport,
    bennett_catalog_check,
    corollary_pair_bound,
    exceptional_pairs,
    open_equation_scan,
    pillai_solutions,
    vicinity_inequality_solutions,
    vicinity_scan,
)

SLOW = os.getenv('MULTDEP_SLOW_TESTS') == '1'


def _solutions(d, c, t, bound=10 ** 9):
    return [(s.n, s.m) for s in pillai_solutions(PillaiInstance(d, c, t, bound))]


class TestPillaiSolutions(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(_solutions(3, 2, 1), [(1, 1), (2, 3)])
        self.assertEqual(_solutions(2, 3, 5), [(3, 1), (5, 3)])
        self.assertEqual(_solutions(5, 2, 1), [(1, 2)])
        self.assertEqual(_solutions(91, 2, 89), [(1, 1), (2, 13)])
        self.assertEqual(_solutions(15, 6, 9), [(1, 1), (2, 3)])

    def test_bound_is_respected(self):
        self.assertEqual(_solutions(3, 2, 1, bound=8), [(1, 1)])
        small = set(_solutions(2, 3, 13, bound=10 ** 4))
        self.assertLessEqual(small, set(_solutions(2, 3, 13)))

    def test_monotone_in_bound(self):
        instances = list(EXCEPTIONAL_TRIPLES) + [(2, 3, 1), (5, 2, 1), (7, 3, 4), (2, 7, 1), (10, 3, 7)]
        bounds = [10 ** 2, 10 ** 4, 10 ** 6, 10 ** 9, 10 ** 12]
        for d, c, t in instances:
            found = [set(_solutions(d, c, t, bound=B)) for B in bounds]
            for smaller, larger in zip(found, found[1:]):
                self.assertLessEqual(smaller, larger, (d, c, t))

    def test_difference_one_has_single_solution(self):
        for d, c in product(range(2, 101), repeat=2):
            expected = 2 if (d, c) == (3, 2) else 1
            self.assertLessEqual(len(_solutions(d, c, 1)), expected, (d, c))

    def test_instance_validation(self):
        with self.assertRaises(DomainError):
            PillaiInstance(3, 2, 0, 100)
        with self.assertRaises(DomainError):
            PillaiInstance(1, 2, 1, 100)

    def test_solution_dict(self):
        self.assertEqual(PillaiSolution.from_dict({'n': 2, 'm': 3}), PillaiSolution(2, 3))


class TestCatalogCheck(unittest.TestCase):
    def test_passes(self):
        report = bennett_catalog_check(bound=10 ** 9, sample=300, seed=7)
        self.assertTrue(report.passed)
        self.assertEqual(len(report.exceptional), len(EXCEPTIONAL_TRIPLES))
        for entry in report.exceptional:
            self.assertEqual(len(entry.solutions), 2, (entry.d, entry.c, entry.t))
        self.assertEqual(report.sample_size, 300)
        self.assertEqual(CatalogReport.from_dict(report.to_dict()), report)

    def test_reproducible(self):
        one = bennett_catalog_check(bound=10 ** 6, sample=50, seed=3)
        two = bennett_catalog_check(bound=10 ** 6, sample=50, seed=3)
        self.assertEqual(one.to_dict(), two.to_dict())

    def test_small_bound_rejected(self):
        with self.assertRaises(DomainError):
            bennett_catalog_check(bound=10 ** 5)


class TestExceptionalPairs(unittest.TestCase):
    def test_examples(self):
        expected = {
            1: (2, 8), 3: (5, 125), 4: (2, 32), 5: (3, 27), 9: (6, 216),
            10: (3, 2187), 13: (3, 243), 89: (2, 8192),
        }
        self.assertEqual(set(EXCEPTIONAL_SHIFTS), set(expected))
        for t, pair in expected.items():
            self.assertEqual(exceptional_pairs(t), pair, t)

    def test_pairs_are_dependent(self):
        for t in EXCEPTIONAL_SHIFTS:
            a, b = exceptional_pairs(t)
            self.assertTrue(pair_dependent(a, b))
            self.assertTrue(pair_dependent(a + t, b + t))
            self.assertLessEqual(a, corollary_pair_bound(t))

    def test_small_configured_bound(self):
        set_config(Config(pillai_bound=100))
        try:
            self.assertEqual(exceptional_pairs(89), (2, 8192))
            self.assertEqual(exceptional_pairs(10), (3, 2187))
        finally:
            set_config(Config())

    def test_other_shift_rejected(self):
        with self.assertRaises(DomainError):
            exceptional_pairs(2)


class TestVicinity(unittest.TestCase):
    def test_small_pair_has_empty_range(self):
        report = vicinity_scan(9, 81)
        self.assertEqual(report.eps_max, 0)
        self.assertEqual(report.checked, 0)
        self.assertEqual(report.neighbors, ())

    def test_examples(self):
        report = vicinity_scan(64, 4096)
        self.assertEqual((report.eps_max, report.delta_max), (1, 15))
        self.assertEqual(report.checked, 60)
        self.assertEqual(report.neighbors, ())

        report = vicinity_scan(81, 6561)
        self.assertEqual((report.eps_max, report.delta_max), (2, 20))
        self.assertEqual(report.neighbors, ())
        self.assertEqual(VicinityReport.from_dict(report.to_dict()), report)

    def test_validation(self):
        with self.assertRaises(IndependentError):
            vicinity_scan(2, 3)
        with self.assertRaises(DomainError):
            vicinity_scan(8, 2)

    def test_all_dependent_pairs_are_isolated(self):
        limit = 2000
        for g in range(2, isqrt(limit) + 1):
            powers = []
            value = g
            while value <= limit:
                powers.append(value)
                value *= g
            for i, a in enumerate(powers):
                for b in powers[i + 1:]:
                    self.assertEqual(vicinity_scan(a, b).neighbors, (), (a, b))

    @unittest.skipUnless(SLOW, "set MULTDEP_SLOW_TESTS=1")
    def test_all_dependent_pairs_are_isolated_large(self):
        limit = 10 ** 4
        for g in range(2, isqrt(limit) + 1):
            value = g
            powers = []
            while value <= limit:
                powers.append(value)
                value *= g
            for i, a in enumerate(powers):
                for b in powers[i + 1:]:
                    self.assertEqual(vicinity_scan(a, b).neighbors, (), (a, b))

    def test_inequality_solutions(self):
        self.assertEqual(vicinity_inequality_solutions(2, 1025, 10 ** 4), [(10, 1)])
        for d, c in product(range(2, 30), repeat=2):
            self.assertLessEqual(len(vicinity_inequality_solutions(d, c, 10 ** 12)), 1, (d, c))

    def test_corollary_bound(self):
        self.assertEqual(corollary_pair_bound(3), 144)
        self.assertEqual(corollary_pair_bound(-2), 64)
        with self.assertRaises(DomainError):
            corollary_pair_bound(0)


def _open_eq_oracle(eq_id, P, B):
    found = []
    for d, x, y, s, r in product(range(2, P + 1), repeat=5):
        if x == y:
            continue
        if eq_id == 1:
            inner = (d ** x + 1) ** s
            ok = inner <= B and (inner + 1) ** r <= B and (inner + 1) ** r - d ** y == 2
        elif eq_id == 2:
            inner = (d ** x - 1) ** s
            ok = (inner <= B and (inner - 1) ** r <= B and d ** y <= B
                  and d ** y - (inner - 1) ** r == 2)
        else:
            inner = (d ** x + 1) ** s
            ok = inner <= B and d ** y <= B and inner - (d ** y - 1) ** r == 2
        if ok:
            found.append((d, x, y, s, r))
    return found


class TestOpenEquations(unittest.TestCase):
    def test_matches_oracle(self):
        for eq_id in (1, 2, 3):
            sols = open_equation_scan(eq_id, 5, 10 ** 6)
            self.assertEqual([(s.d, s.x, s.y, s.s, s.r) for s in sols],
                             _open_eq_oracle(eq_id, 5, 10 ** 6), eq_id)

    def test_solution_keys(self):
        sol = OpenEquationSolution(3, 2, 2, 3, 2, 2)
        self.assertIn('m', sol.to_dict())
        self.assertEqual(OpenEquationSolution.from_dict(sol.to_dict()), sol)
        self.assertIn('t', OpenEquationSolution(1, 2, 2, 3, 2, 2).to_dict())

    def test_validation(self):
        with self.assertRaises(DomainError):
            open_equation_scan(4, 10, 10 ** 6)
        with self.assertRaises(DomainError):
            open_equation_scan(1, 1, 10 ** 6)
        with self.assertRaises(DomainError):
            open_equation_scan(1, 10, 10)

    @unittest.skipUnless(SLOW, "set MULTDEP_SLOW_TESTS=1")
    def test_wider_scan(self):
        for eq_id in (1, 2, 3):
            for sol in open_equation_scan(eq_id, 60, 10 ** 18):
                self.assertNotEqual(sol.x, sol.y)


if __name__ == '__main__':
    unittest.main()
