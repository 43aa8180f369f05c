"""Tests for factorization, canonical roots and S-units."""

import unittest

from sympy import factorint

from multdep.arith import (
    CanonicalRoot,
    FactorSieve,
    Factorization,
    canonical_root,
    factorize,
    is_s_unit,
    pair_dependent,
    s_units,
    support,
)
from multdep.errors import DomainError


class TestFactorize(unittest.TestCase):
    def test_small_values(self):
        self.assertEqual(factorize(360).factors, ((2, 3), (3, 2), (5, 1)))
        self.assertEqual(factorize(1).factors, ())
        self.assertEqual(factorize(97).factors, ((97, 1),))

    def test_large_value_uses_fallback(self):
        n = 2 ** 61 - 1
        self.assertEqual(factorize(n).factors, ((n, 1),))
        m = 10 ** 12 + 39
        self.assertEqual(factorize(m).recompose(), m)

    def test_rejects_non_positive(self):
        with self.assertRaises(DomainError):
            factorize(0)
        with self.assertRaises(DomainError):
            factorize(-4)

    def test_factorization_validates(self):
        with self.assertRaises(DomainError):
            Factorization(12, ((3, 1), (2, 2)))
        with self.assertRaises(DomainError):
            Factorization(12, ((2, 1), (3, 1)))
        with self.assertRaises(DomainError):
            Factorization(4, ((2, 0),))

    def test_factorization_dict_roundtrip(self):
        f = factorize(720)
        self.assertEqual(Factorization.from_dict(f.to_dict()), f)


class TestFactorSieve(unittest.TestCase):
    def test_agrees_with_sympy(self):
        sieve = FactorSieve(2000)
        for n in range(2, 2001):
            self.assertEqual(dict(sieve.factor_pairs(n)), factorint(n), n)

    def test_covers(self):
        sieve = FactorSieve(50)
        self.assertTrue(sieve.covers(50))
        self.assertFalse(sieve.covers(51))
        self.assertFalse(sieve.covers(0))

    def test_rejects_tiny_limit(self):
        with self.assertRaises(DomainError):
            FactorSieve(1)


class TestCanonicalRoot(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(canonical_root(64), CanonicalRoot(2, 6))
        self.assertEqual(canonical_root(36), CanonicalRoot(6, 2))
        self.assertEqual(canonical_root(72), CanonicalRoot(72, 1))
        self.assertEqual(canonical_root(3 ** 10 * 5 ** 15), CanonicalRoot(3 ** 2 * 5 ** 3, 5))

    def test_value(self):
        for n in range(2, 500):
            self.assertEqual(canonical_root(n).value, n)

    def test_rejects_one(self):
        with self.assertRaises(DomainError):
            canonical_root(1)

    def test_pair_dependent(self):
        pair = pair_dependent(2, 8)
        self.assertTrue(pair)
        self.assertEqual(pair.base, 2)
        self.assertEqual(pair.exponents, (1, 3))
        self.assertTrue(pair_dependent(27, 243))
        self.assertFalse(pair_dependent(2, 3))
        self.assertFalse(pair_dependent(12, 18))


class TestSUnits(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(s_units([2, 3], 10), [1, 2, 3, 4, 6, 8, 9])
        self.assertEqual(s_units([], 5), [1])
        self.assertEqual(s_units([3, 2, 3], 10), [1, 2, 3, 4, 6, 8, 9])
        self.assertEqual(s_units([2], 0), [])

    def test_matches_support_filter(self):
        primes = {2, 5, 7}
        expected = [n for n in range(1, 3001) if support(n) <= primes]
        self.assertEqual(s_units(primes, 3000), expected)

    def test_is_s_unit(self):
        self.assertTrue(is_s_unit(12, [2, 3]))
        self.assertTrue(is_s_unit(1, []))
        self.assertFalse(is_s_unit(10, [2, 3]))

    def test_support(self):
        self.assertEqual(support(360), frozenset({2, 3, 5}))
        self.assertEqual(support(1), frozenset())


if __name__ == '__main__':
    unittest.main()
