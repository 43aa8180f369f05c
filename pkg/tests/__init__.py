"""Tests for the multiplicative dependence toolkit."""
