"""Exact integer arithmetic: factorization, canonical roots and S-units."""

import logging
import threading
from dataclasses import dataclass
from math import gcd, isqrt, prod
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np
from sympy import factorint

from .config import get_config
from .errors import DomainError
from .utils import require_at_least

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition of a positive integer."""

    value: int
    factors: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise DomainError(f"primes must be strictly increasing: {primes}")
        if any(e < 1 for _, e in self.factors):
            raise DomainError(f"exponents must be positive: {self.factors}")
        if self.recompose() != self.value:
            raise DomainError(f"factors {self.factors} do not recompose to {self.value}")

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.factors)

    def recompose(self) -> int:
        return prod(p ** e for p, e in self.factors)

    def to_dict(self) -> Dict:
        return {
            'value': self.value,
            'factors': [[p, e] for p, e in self.factors],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'Factorization':
        return cls(value=int(data['value']),
                   factors=tuple((int(p), int(e)) for p, e in data['factors']))


@dataclass(frozen=True)
class CanonicalRoot:
    """Representation n = base**exponent with base not a perfect power."""

    base: int
    exponent: int

    @property
    def value(self) -> int:
        return self.base ** self.exponent

    def to_dict(self) -> Dict:
        return {'base': self.base, 'exponent': self.exponent}

    @classmethod
    def from_dict(cls, data: Dict) -> 'CanonicalRoot':
        return cls(base=int(data['base']), exponent=int(data['exponent']))


@dataclass(frozen=True)
class PairDependence:
    """Outcome of the common-base pair test; truthy when dependent."""

    u: int
    v: int
    dependent: bool
    base: Optional[int] = None
    exponents: Optional[Tuple[int, int]] = None

    def __bool__(self):
        return self.dependent

    def to_dict(self) -> Dict:
        return {
            'u': self.u,
            'v': self.v,
            'dependent': self.dependent,
            'base': self.base,
            'exponents': list(self.exponents) if self.exponents else None,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'PairDependence':
        exps = data.get('exponents')
        return cls(u=int(data['u']), v=int(data['v']), dependent=bool(data['dependent']),
                   base=data.get('base'), exponents=tuple(exps) if exps else None)


class FactorSieve:
    """Smallest-prime-factor table for every integer up to a limit."""

    def __init__(self, limit: int):
        """
        Build the table.

        Args:
            limit: Largest integer the table answers for (at least 2)
        """
        if limit < 2:
            raise DomainError(f"sieve limit must be at least 2, got {limit}")
        self.limit = limit
        spf = np.zeros(limit + 1, dtype=np.int64)
        # Each composite gets its smallest prime, marked from p*p upward
        for p in range(2, isqrt(limit) + 1):
            if spf[p] == 0:
                block = spf[p * p::p]
                block[block == 0] = p
        # Unmarked entries are 0, 1 and the primes, each its own smallest factor
        untouched = spf == 0
        spf[untouched] = np.arange(limit + 1, dtype=np.int64)[untouched]
        self._spf = spf
        logger.debug(f"Built smallest-prime-factor sieve up to {limit}")

    def covers(self, n: int) -> bool:
        return 1 <= n <= self.limit

    def factor_pairs(self, n: int) -> Tuple[Tuple[int, int], ...]:
        """Prime factorization of 1 <= n <= limit as ((p, e), ...)."""
        spf = self._spf
        pairs = []
        while n > 1:
            # Strip the smallest prime factor completely
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
        return tuple(pairs)

    def factorize(self, n: int) -> Factorization:
        return Factorization(n, self.factor_pairs(n))


_sieve_lock = threading.Lock()
_shared_sieve: Optional[FactorSieve] = None


def get_sieve(limit: int) -> Optional[FactorSieve]:
    """
    Return a shared sieve covering at least `limit`, building or growing it.

    Returns None when `limit` exceeds the configured sieve limit; callers then
    factor through sympy instead.
    """
    global _shared_sieve
    cap = get_config().sieve_limit
    if limit > cap:
        logger.warning(f"Requested sieve up to {limit} exceeds MULTDEP_SIEVE_LIMIT={cap}")
        return None
    with _sieve_lock:
        if _shared_sieve is None or _shared_sieve.limit < limit:
            # At least double the old table, never beyond the cap
            target = min(cap, max(limit, 2 * _shared_sieve.limit if _shared_sieve else limit))
            _shared_sieve = FactorSieve(target)
        return _shared_sieve


def factorize(n: int, sieve: Optional[FactorSieve] = None) -> Factorization:
    """
    Prime factorization of a positive integer.

    Uses the given or already-built shared sieve when it covers n, otherwise
    sympy's factorint (trial division followed by Pollard rho).

    Args:
        n: Integer >= 1

    Returns:
        Factorization with primes in increasing order
    """
    require_at_least([n], 1, "factorize input")
    if sieve is None:
        sieve = _shared_sieve
    if sieve is not None and sieve.covers(n):
        return sieve.factorize(n)
    # Outside the sieve range
    factors = factorint(n)
    return Factorization(n, tuple(sorted((int(p), int(e)) for p, e in factors.items())))


def canonical_root_of(fact: Factorization) -> CanonicalRoot:
    """Canonical root of an already factored integer >= 2."""
    if fact.value < 2:
        raise DomainError(f"canonical root needs n >= 2, got {fact.value}")
    # h = gcd of the exponents, g = prod p^(e / h)
    h = 0
    for e in fact.exponents:
        h = gcd(h, e)
    base = prod(p ** (e // h) for p, e in fact.factors)
    return CanonicalRoot(base, h)


def canonical_root(n: int, sieve: Optional[FactorSieve] = None) -> CanonicalRoot:
    """
    Write n = g**h with h maximal.

    Args:
        n: Integer >= 2

    Returns:
        CanonicalRoot(g, h); g is not itself a perfect power
    """
    require_at_least([n], 2, "canonical_root input")
    return canonical_root_of(factorize(n, sieve))


def pair_dependent(u: int, v: int, sieve: Optional[FactorSieve] = None) -> PairDependence:
    """
    Decide whether (u, v) is multiplicatively dependent.

    Two integers >= 2 are dependent exactly when they are powers of one base,
    i.e. when their canonical roots share the base.
    """
    require_at_least([u, v], 2, "pair entries")
    ru = canonical_root(u, sieve)
    rv = canonical_root(v, sieve)
    if ru.base == rv.base:
        return PairDependence(u, v, True, ru.base, (ru.exponent, rv.exponent))
    return PairDependence(u, v, False)


def support(n: int, sieve: Optional[FactorSieve] = None) -> FrozenSet[int]:
    """Set of primes dividing n (empty for n = 1)."""
    return frozenset(factorize(n, sieve).primes)


def s_units(primes: Iterable[int], limit: int) -> List[int]:
    """
    All integers 1 <= u <= limit whose prime divisors lie in `primes`.

    Args:
        primes: Primes of the set S (duplicates ignored)
        limit: Upper bound, inclusive

    Returns:
        Sorted list, 1 included when limit >= 1
    """
    basis = sorted(set(primes))
    if limit < 1:
        return []
    found = []

    # Depth-first over the primes: multiply by p while the product stays <= limit
    def extend(idx: int, value: int):
        if idx == len(basis):
            found.append(value)
            return
        p = basis[idx]
        while value <= limit:
            extend(idx + 1, value)
            value *= p

    extend(0, 1)
    found.sort()
    return found


def is_s_unit(n: int, primes: Iterable[int]) -> bool:
    """True if every prime divisor of n >= 1 lies in `primes`."""
    # Divide out the allowed primes; any cofactor left lies outside S
    for p in primes:
        while n % p == 0:
            n //= p
    return n == 1
