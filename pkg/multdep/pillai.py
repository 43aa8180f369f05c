"""
Bounded Pillai equations d^n - c^m = t and the catalogs built on them.

Every scan is exact integer arithmetic under an explicit bound on the powers;
nothing here claims completeness beyond that bound.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy import integer_log

from .arith import get_sieve, pair_dependent
from .config import get_config
from .errors import DomainError, IndependentError
from .utils import require_at_least

logger = logging.getLogger(__name__)

# (d, c, t) with two solutions of d^n - c^m = t, 1 <= t <= 100
EXCEPTIONAL_TRIPLES: Tuple[Tuple[int, int, int], ...] = (
    (3, 2, 1), (2, 3, 5), (2, 3, 13), (4, 3, 13), (16, 3, 13),
    (2, 5, 3), (13, 3, 10), (91, 2, 89), (6, 2, 4), (15, 6, 9),
)

EXCEPTIONAL_SHIFTS: Tuple[int, ...] = tuple(sorted({t for _, _, t in EXCEPTIONAL_TRIPLES}))

# every catalog solution has d^n, c^m <= 91**2
_CATALOG_POWER_BOUND = 10 ** 6


@dataclass(frozen=True)
class PillaiInstance:
    """The equation d^n - c^m = t restricted to d^n, c^m <= bound."""

    d: int
    c: int
    t: int
    bound: int

    def __post_init__(self):
        require_at_least([self.d, self.c], 2, "Pillai bases")
        if isinstance(self.t, bool) or not isinstance(self.t, int) or self.t == 0:
            raise DomainError(f"t must be a nonzero integer, got {self.t!r}")
        if self.bound < max(self.d, self.c):
            raise DomainError(f"bound {self.bound} is below max(d, c) = {max(self.d, self.c)}")

    def to_dict(self) -> Dict:
        return {'d': self.d, 'c': self.c, 't': self.t, 'bound': self.bound}

    @classmethod
    def from_dict(cls, data: Dict) -> 'PillaiInstance':
        return cls(d=data['d'], c=data['c'], t=data['t'], bound=data['bound'])


@dataclass(frozen=True)
class PillaiSolution:
    n: int
    m: int

    def to_dict(self) -> Dict:
        return {'n': self.n, 'm': self.m}

    @classmethod
    def from_dict(cls, data: Dict) -> 'PillaiSolution':
        return cls(n=data['n'], m=data['m'])


@dataclass(frozen=True)
class CatalogEntry:
    """Solutions found for one (d, c, t) of the catalog check."""

    d: int
    c: int
    t: int
    solutions: Tuple[PillaiSolution, ...]
    expected: str

    @property
    def ok(self) -> bool:
        if self.expected == 'exactly-2':
            return len(self.solutions) == 2
        return len(self.solutions) <= 1

    def to_dict(self) -> Dict:
        return {
            'd': self.d, 'c': self.c, 't': self.t,
            'solutions': [s.to_dict() for s in self.solutions],
            'expected': self.expected,
            'ok': self.ok,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CatalogEntry':
        return cls(d=data['d'], c=data['c'], t=data['t'],
                   solutions=tuple(PillaiSolution.from_dict(s) for s in data['solutions']),
                   expected=data['expected'])


@dataclass(frozen=True)
class CatalogReport:
    """Outcome of checking the two-solution catalog up to a bound."""

    bound: int
    exceptional: Tuple[CatalogEntry, ...]
    sample_size: int
    sample_seed: int
    sample_failures: Tuple[CatalogEntry, ...] = ()

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.exceptional) and not self.sample_failures

    def to_dict(self) -> Dict:
        return {
            'bound': self.bound,
            'exceptional': [e.to_dict() for e in self.exceptional],
            'sample_size': self.sample_size,
            'sample_seed': self.sample_seed,
            'sample_failures': [e.to_dict() for e in self.sample_failures],
            'passed': self.passed,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CatalogReport':
        return cls(
            bound=data['bound'],
            exceptional=tuple(CatalogEntry.from_dict(e) for e in data['exceptional']),
            sample_size=data['sample_size'],
            sample_seed=data['sample_seed'],
            sample_failures=tuple(CatalogEntry.from_dict(e) for e in data['sample_failures']),
        )


@dataclass(frozen=True)
class VicinityReport:
    """Neighbors (a + eps, b + delta) of a dependent pair that are dependent too."""

    a: int
    b: int
    eps_max: int
    delta_max: int
    checked: int
    skipped: Tuple[Tuple[int, int], ...] = ()
    neighbors: Tuple[Tuple[int, int], ...] = ()

    def to_dict(self) -> Dict:
        return {
            'a': self.a, 'b': self.b,
            'eps_max': self.eps_max, 'delta_max': self.delta_max,
            'checked': self.checked,
            'skipped': [list(p) for p in self.skipped],
            'neighbors': [list(p) for p in self.neighbors],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'VicinityReport':
        return cls(a=data['a'], b=data['b'], eps_max=data['eps_max'],
                   delta_max=data['delta_max'], checked=data['checked'],
                   skipped=tuple(tuple(p) for p in data['skipped']),
                   neighbors=tuple(tuple(p) for p in data['neighbors']))


@dataclass(frozen=True)
class OpenEquationSolution:
    """A solution of one of the three open exponential equations."""

    eq_id: int
    d: int
    x: int
    y: int
    s: int
    r: int

    @property
    def outer_name(self) -> str:
        return 'm' if self.eq_id == 3 else 't'

    def to_dict(self) -> Dict:
        return {'eq_id': self.eq_id, 'd': self.d, 'x': self.x, 'y': self.y,
                's': self.s, self.outer_name: self.r}

    @classmethod
    def from_dict(cls, data: Dict) -> 'OpenEquationSolution':
        outer = data['m'] if data['eq_id'] == 3 else data['t']
        return cls(eq_id=data['eq_id'], d=data['d'], x=data['x'], y=data['y'],
                   s=data['s'], r=outer)


def _exact_log(value: int, base: int) -> Optional[int]:
    """e >= 1 with base**e == value, or None."""
    if value < base:
        return None
    e, exact = integer_log(value, base)
    return int(e) if exact else None


def pillai_solutions(inst: PillaiInstance) -> List[PillaiSolution]:
    """
    All (n, m) with d^n - c^m = t and both powers at most the bound.

    n runs over [1, log_d B]; m is recovered by an exact logarithm of d^n - t.
    """
    solutions = []
    dn = inst.d
    # d^n - t must be an exact power of c
    n = 1
    while dn <= inst.bound:
        m = _exact_log(dn - inst.t, inst.c)
        if m is not None and inst.c ** m <= inst.bound:
            solutions.append(PillaiSolution(n, m))
        dn *= inst.d
        n += 1
    for sol in solutions:
        assert inst.d ** sol.n - inst.c ** sol.m == inst.t
    return solutions


def bennett_catalog_check(bound: Optional[int] = None, sample: Optional[int] = None,
                          seed: Optional[int] = None) -> CatalogReport:
    """
    Check the two-solution catalog and sample its complement.

    Each catalog triple must show exactly two solutions below `bound`; every
    sampled (d, c, t) with d, c in [2, 100] and t in [1, 100] outside the
    catalog must show at most one.
    """
    config = get_config()
    bound = bound if bound is not None else config.pillai_bound
    sample = sample if sample is not None else config.catalog_sample
    seed = seed if seed is not None else config.catalog_seed
    if bound < 10 ** 6:
        raise DomainError(f"catalog check needs a bound of at least 10**6, got {bound}")

    exceptional = []
    for d, c, t in EXCEPTIONAL_TRIPLES:
        sols = pillai_solutions(PillaiInstance(d, c, t, bound))
        exceptional.append(CatalogEntry(d, c, t, tuple(sols), 'exactly-2'))

    # Draw uniformly until `sample` instances outside the catalog are checked
    rng = np.random.default_rng(seed)
    catalog = set(EXCEPTIONAL_TRIPLES)
    failures = []
    drawn = 0
    while drawn < sample:
        d, c, t = (int(v) for v in rng.integers(low=(2, 2, 1), high=(101, 101, 101)))
        if (d, c, t) in catalog:
            continue
        drawn += 1
        sols = pillai_solutions(PillaiInstance(d, c, t, bound))
        if len(sols) > 1:
            failures.append(CatalogEntry(d, c, t, tuple(sols), 'at-most-1'))

    report = CatalogReport(bound, tuple(exceptional), sample, seed, tuple(failures))
    if not report.passed:
        logger.error(f"Catalog check failed at bound {bound}")
    else:
        logger.info(f"Catalog check passed at bound {bound} with {sample} sampled instances")
    return report


def exceptional_pairs(t: int) -> Tuple[int, int]:
    """
    The unique pair (a, b) with (a, b) and (a + t, b + t) both dependent.

    Built from the two solutions of a catalog triple (d, c, t) as
    a = c^m1 and b = c^m2.
    """
    if t not in EXCEPTIONAL_SHIFTS:
        raise DomainError(f"t={t} has no dependent pair; expected one of {list(EXCEPTIONAL_SHIFTS)}")
    d, c, _ = next(triple for triple in EXCEPTIONAL_TRIPLES if triple[2] == t)
    bound = max(get_config().pillai_bound, _CATALOG_POWER_BOUND)
    sols = pillai_solutions(PillaiInstance(d, c, t, bound))
    if len(sols) != 2:
        raise ArithmeticError(f"catalog triple {(d, c, t)} yields {len(sols)} solutions")
    first, second = sorted(sols, key=lambda s: s.m)
    return c ** first.m, c ** second.m


def vicinity_scan(a: int, b: int) -> VicinityReport:
    """
    Look for dependent pairs (a + eps, b + delta) next to a dependent pair.

    Ranges are 0 < |eps| < sqrt(a)/4 and 0 < |delta| < sqrt(b)/4, compared
    exactly as 16*eps^2 < a. Neighbors with an entry below 2 are skipped.
    """
    require_at_least([a, b], 2, "vicinity pair")
    if a >= b:
        raise DomainError(f"vicinity pair needs a < b, got ({a}, {b})")
    if not pair_dependent(a, b):
        raise IndependentError(f"({a}, {b}) is multiplicatively independent")

    # Largest eps with 16 eps^2 < a, integer only
    eps_max = 0
    while 16 * (eps_max + 1) ** 2 < a:
        eps_max += 1
    delta_max = 0
    while 16 * (delta_max + 1) ** 2 < b:
        delta_max += 1

    sieve = get_sieve(b + delta_max) if b + delta_max <= get_config().sieve_limit else None
    offsets_a = [e for e in range(-eps_max, eps_max + 1) if e != 0]
    offsets_b = [e for e in range(-delta_max, delta_max + 1) if e != 0]
    checked = 0
    skipped = []
    neighbors = []
    for eps in offsets_a:
        for delta in offsets_b:
            u, v = a + eps, b + delta
            if u < 2 or v < 2:
                skipped.append((u, v))
                continue
            checked += 1
            if pair_dependent(u, v, sieve):
                neighbors.append((u, v))
    if neighbors:
        logger.warning(f"Dependent neighbors of ({a}, {b}): {neighbors}")
    return VicinityReport(a, b, eps_max, delta_max, checked, tuple(skipped), tuple(neighbors))


def vicinity_inequality_solutions(d: int, c: int, bound: int) -> List[Tuple[int, int]]:
    """
    All (n, m) with d^n, c^m <= bound and 0 < |d^n - c^m| < max(d^n, c^m)^(1/2) / 4.

    Tested exactly as 16 * (d^n - c^m)^2 < max(d^n, c^m). Only the two powers of
    c adjacent to d^n can be that close.
    """
    require_at_least([d, c], 2, "bases")
    found = set()
    dn, n = d, 1
    while dn <= bound:
        # c^m0 <= d^n < c^(m0 + 1)
        m0 = max(1, int(integer_log(dn, c)[0]))
        for m in (m0, m0 + 1):
            cm = c ** m
            if cm > bound:
                continue
            diff = dn - cm
            if diff != 0 and 16 * diff * diff < max(dn, cm):
                found.add((n, m))
        dn *= d
        n += 1
    return sorted(found)


def corollary_pair_bound(t: int) -> int:
    """No dependent pairs (a, b), (a + t, b + t) exist with 16 t^2 < a < b."""
    if t == 0:
        raise DomainError("t must be nonzero")
    return 16 * t * t


def _open_eq_value(eq_id: int, d: int, x: int, y: int, s: int, r: int) -> int:
    if eq_id == 1:
        return ((d ** x + 1) ** s + 1) ** r - d ** y
    if eq_id == 2:
        return d ** y - ((d ** x - 1) ** s - 1) ** r
    return (d ** x + 1) ** s - (d ** y - 1) ** r


def open_equation_scan(eq_id: int, param_bound: int, value_bound: int) -> List[OpenEquationSolution]:
    """
    Bounded scan of one of three exponential equations with right-hand side 2.

        1: ((d^x + 1)^s + 1)^t - d^y = 2
        2: d^y - ((d^x - 1)^s - 1)^t = 2
        3: (d^x + 1)^s - (d^y - 1)^m = 2

    All unknowns are integers in [2, param_bound] with x != y, and every
    intermediate power stays at most value_bound.

    Returns:
        Solutions sorted by (d, x, y, s, outer exponent)
    """
    if eq_id not in (1, 2, 3):
        raise DomainError(f"eq_id must be 1, 2 or 3, got {eq_id!r}")
    if param_bound < 2:
        raise DomainError(f"param_bound must be at least 2, got {param_bound}")
    if value_bound < 16:
        raise DomainError(f"value_bound must be at least 16, got {value_bound}")

    P, B = param_bound, value_bound
    params = range(2, P + 1)
    found = []
    for d in params:
        if d ** 2 > B:
            break
        for x in params:
            dx = d ** x
            if dx + 1 > B:
                break
            inner = dx + 1 if eq_id in (1, 3) else dx - 1
            for s in params:
                power = inner ** s
                if power > B:
                    break
                if eq_id == 3:
                    # (d^y - 1)^m = power - 2
                    for y in params:
                        if y == x:
                            continue
                        if d ** y > B:
                            break
                        base = d ** y - 1
                        m = _exact_log(power - 2, base)
                        if m is not None and 2 <= m <= P:
                            found.append(OpenEquationSolution(3, d, x, y, s, m))
                    continue
                # d^y = step^r - 2 (eq 1) or step^r + 2 (eq 2)
                step = power + 1 if eq_id == 1 else power - 1
                if step < 2:
                    continue
                for r in params:
                    outer = step ** r
                    if outer > B:
                        break
                    target = outer - 2 if eq_id == 1 else outer + 2
                    y = _exact_log(target, d)
                    if y is not None and 2 <= y <= P and y != x and d ** y <= B:
                        found.append(OpenEquationSolution(eq_id, d, x, y, s, r))

    for sol in found:
        assert _open_eq_value(sol.eq_id, sol.d, sol.x, sol.y, sol.s, sol.r) == 2
    found.sort(key=lambda sol: (sol.d, sol.x, sol.y, sol.s, sol.r))
    logger.info(f"Equation {eq_id} up to params {P}, values {B}: {len(found)} solutions")
    return found
