"""Tests for configuration and small helpers."""

import os
import unittest
from unittest.mock import patch

from multdep.config import Config
from multdep.errors import ConfigError, DomainError
from multdep.utils import format_tuple, parse_int_list, partition_range, require_at_least


class TestConfig(unittest.TestCase):
    def test_defaults(self):
        with patch.dict(os.environ, {}, clear=True):
            config = Config()
        self.assertEqual(config.sieve_limit, 10_000_000)
        self.assertEqual(config.max_workers, 1)
        self.assertEqual(config.classify_cap, 8)
        self.assertEqual(config.log_level, 'INFO')

    def test_environment(self):
        env = {'MULTDEP_SIEVE_LIMIT': '1_000', 'MULTDEP_JOBS': '4', 'MULTDEP_LOG_LEVEL': 'debug'}
        with patch.dict(os.environ, env, clear=True):
            config = Config()
        self.assertEqual(config.sieve_limit, 1000)
        self.assertEqual(config.max_workers, 4)
        self.assertEqual(config.log_level, 'DEBUG')

    def test_invalid_environment(self):
        with patch.dict(os.environ, {'MULTDEP_JOBS': 'many'}, clear=True):
            with self.assertRaises(ConfigError):
                Config()
        with patch.dict(os.environ, {'MULTDEP_SIEVE_LIMIT': '0'}, clear=True):
            with self.assertRaises(ConfigError):
                Config()

    def test_invalid_arguments(self):
        with self.assertRaises(ConfigError):
            Config(classify_cap=0)
        with self.assertRaises(ConfigError):
            Config(precision_dps=10)


class TestUtils(unittest.TestCase):
    def test_parse_int_list(self):
        self.assertEqual(parse_int_list('0,1,2'), [0, 1, 2])
        self.assertEqual(parse_int_list(' 3, 5 ,'), [3, 5])

    def test_partition_range(self):
        parts = partition_range(2, 20, 4)
        self.assertEqual(len(parts), 4)
        self.assertEqual(sorted(v for part in parts for v in part), list(range(2, 20)))
        self.assertEqual(partition_range(5, 5, 3), [])
        self.assertEqual(len(partition_range(0, 2, 8)), 2)

    def test_format_tuple(self):
        self.assertEqual(format_tuple((2, 8, 5)), '(2, 8, 5)')

    def test_require_at_least(self):
        require_at_least([2, 3], 2, "values")
        with self.assertRaises(DomainError):
            require_at_least([2, 1], 2, "values")
        with self.assertRaises(DomainError):
            require_at_least([True], 0, "values")


if __name__ == '__main__':
    unittest.main()
