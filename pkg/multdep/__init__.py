"""
Multiplicative Dependence Toolkit

Decide and classify multiplicative dependence of integer tuples, search for
consecutive dependent pairs and triples, check the Pillai catalogs and
evaluate effective bound chains.
"""

from .config import Config

__version__ = "0.1.0"
__all__ = ["Config"]
