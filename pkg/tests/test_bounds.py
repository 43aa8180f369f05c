"""Tests for the linear-forms bound chain."""

import json
import math
import os
import unittest

import mpmath

from multdep.bounds import (
    CASE_IDS,
    BoundChainResult,
    MatveevInput,
    _log10_bc_bound,
    _run_scenario,
    _Scenario,
    bound_pipeline,
    case_of_hit,
    check_hits_against_bounds,
    matveev_log_lower_bound,
    solve_self_bound,
)
from multdep.config import get_config
from multdep.errors import DomainError
from multdep.search import search_fixed_a, search_triples

SLOW = os.getenv('MULTDEP_SLOW_TESTS') == '1'


def _matveev_reference(a_list, b_list):
    n = len(a_list)
    constant = 0.5 * (1 + math.log(2)) * math.e * n ** 4.5 * 30 ** (n + 3)
    log_product = math.prod(math.log(a) for a in a_list)
    return -constant * log_product * (1 + math.log(max(abs(b) for b in b_list)))


def _scan_self_bound(C, k, limit=10 ** 5):
    last_failure = None
    for M in range(3, limit):
        if M < C * math.log(M) ** k:
            last_failure = M
    return 3 if last_failure is None else last_failure + 1


class TestMatveev(unittest.TestCase):
    def test_single_log(self):
        value = matveev_log_lower_bound(MatveevInput((2,), (1,)))
        self.assertAlmostEqual(value / -1.29199e6, 1.0, places=4)
        self.assertAlmostEqual(value / _matveev_reference((2,), (1,)), 1.0, places=12)

    def test_two_logs(self):
        value = matveev_log_lower_bound(MatveevInput((2, 3), (7, -10)))
        self.assertAlmostEqual(value / -3.1821e9, 1.0, places=4)
        self.assertAlmostEqual(value / _matveev_reference((2, 3), (7, -10)), 1.0, places=12)

    def test_monotone(self):
        small = matveev_log_lower_bound(MatveevInput((2, 3), (1, 1)))
        bigger_base = matveev_log_lower_bound(MatveevInput((2, 5), (1, 1)))
        more_logs = matveev_log_lower_bound(MatveevInput((2, 3, 5), (1, 1, 1)))
        self.assertLess(bigger_base, small)
        self.assertLess(more_logs, small)

    def test_monotone_in_coefficients(self):
        values = [matveev_log_lower_bound(MatveevInput((2, 3, 7), (b, 1, -1)))
                  for b in (1, 10, 1000, 10 ** 6, 10 ** 12)]
        for larger, smaller in zip(values[1:], values):
            self.assertLess(larger, smaller)
        # only max|b_i| enters
        self.assertEqual(matveev_log_lower_bound(MatveevInput((2, 3), (5, -7))),
                         matveev_log_lower_bound(MatveevInput((2, 3), (-7, 1))))

    def test_validation(self):
        with self.assertRaises(DomainError):
            MatveevInput((2, 3), (0, 0))
        with self.assertRaises(DomainError):
            MatveevInput((1, 3), (1, 1))
        with self.assertRaises(DomainError):
            MatveevInput((2, 3), (1,))
        inp = MatveevInput((2, 3), (7, -10))
        self.assertEqual(MatveevInput.from_dict(inp.to_dict()), inp)


class TestSolveSelfBound(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(solve_self_bound(10, 2), 340)
        self.assertEqual(solve_self_bound(0.1, 1), 3)

    def test_against_integer_scan(self):
        cases = [(C, k) for C in (0.5, 1, 3, 10, 50, 100) for k in (1, 2)]
        cases += [(C, 3) for C in (0.5, 1, 3)]
        for C, k in cases:
            self.assertEqual(solve_self_bound(C, k), _scan_self_bound(C, k), (C, k))

    def test_large_constant(self):
        C, k = 1e20, 4
        m_star = solve_self_bound(C, k)
        self.assertGreaterEqual(m_star, C * math.log(m_star) ** k * (1 - 1e-12))
        self.assertLess(m_star - 1, C * math.log(m_star - 1) ** k * (1 + 1e-12))

    def test_validation(self):
        with self.assertRaises(DomainError):
            solve_self_bound(0, 2)
        with self.assertRaises(DomainError):
            solve_self_bound(10, 0)


class TestBoundPipeline(unittest.TestCase):
    def test_a_three_all_three_dependent(self):
        result = bound_pipeline(3, 'all3')
        self.assertGreaterEqual(result.log10_bc_bound, 1e54)
        self.assertLessEqual(result.log10_bc_bound, 1e62)
        self.assertGreater(result.M_bound, 10 ** 42)
        self.assertLess(result.M_bound, 10 ** 47)
        self.assertIn('log10_bc_chain', result.constants)
        self.assertTrue(result.chain_steps)
        self.assertTrue(result.scenario.startswith('all3.'))

    def test_every_case_is_finite(self):
        for a in (3, 5, 6):
            for case_id in CASE_IDS:
                result = bound_pipeline(a, case_id)
                self.assertTrue(math.isfinite(result.log10_bc_bound), (a, case_id))
                self.assertGreater(result.M_bound, 2)
                self.assertTrue(math.isfinite(result.q_bounds['ln_q']))

    def test_aliases(self):
        self.assertEqual(bound_pipeline(3, 'all-3-dep').to_dict(), bound_pipeline(3, 'all3').to_dict())

    def test_result_json_roundtrip(self):
        result = bound_pipeline(5, 'two3')
        data = json.loads(json.dumps(result.to_dict()))
        self.assertEqual(BoundChainResult.from_dict(data).to_dict(), result.to_dict())

    def test_infinite_families_rejected(self):
        for a in (2, 8):
            with self.assertRaises(DomainError):
                bound_pipeline(a, 'all3')
        with self.assertRaises(DomainError):
            bound_pipeline(3, 'all4')

    def test_case_of_hit(self):
        self.assertEqual(case_of_hit([2, 2, 2]), 'all2')
        self.assertEqual(case_of_hit([3, 2, 3]), 'two3')
        self.assertEqual(case_of_hit([3, 3, 3]), 'all3')

    def test_known_hits_within_bounds(self):
        hits = search_fixed_a(3, 300, progress=False)
        for case_id in CASE_IDS:
            self.assertEqual(check_hits_against_bounds(hits, bound_pipeline(3, case_id)), [])

    def test_bc_bound_grows_with_unknown_logs(self):
        with mpmath.workdps(get_config().precision_dps):
            for a in (3, 5, 6):
                fixed = (a, a + 1)
                values = []
                for unknown in (1, 2, 3):
                    sc = _Scenario(f"unknown={unknown}", fixed, 2, 8, 1, ((fixed, unknown),))
                    m_star, c_q = _run_scenario(a, sc)[:2]
                    values.append(_log10_bc_bound(a, m_star, c_q))
                self.assertEqual(values, sorted(values), a)
                self.assertLess(values[0], values[-1])

    @unittest.skipUnless(SLOW, "set MULTDEP_SLOW_TESTS=1")
    def test_search_hits_within_bounds(self):
        hits = search_triples(1000, (0, 1, 2), progress=False)
        results = {}
        for hit in hits:
            case_id = case_of_hit(rec.dep_order for rec in hit.per_shift)
            for a in hit.triple:
                if a in (2, 8):
                    continue
                if (a, case_id) not in results:
                    results[a, case_id] = bound_pipeline(a, case_id)
                self.assertEqual(check_hits_against_bounds([hit], results[a, case_id]), [], hit.triple)


if __name__ == '__main__':
    unittest.main()
