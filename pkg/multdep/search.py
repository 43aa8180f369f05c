"""
Exhaustive range searches for consecutive multiplicatively dependent pairs and triples.

Triple searches prune the third entry with an S-unit condition: at any shift t
where (a+t, b+t) is independent, a relation on (a+t, b+t, c+t) must involve
c+t, so every prime of c+t divides (a+t)(b+t).
"""

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from math import isqrt
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from sympy import perfect_power
from tqdm import tqdm

from .arith import Factorization, canonical_root, factorize, get_sieve, is_s_unit, pair_dependent, s_units
from .config import get_config
from .errors import CheckMismatch, DomainError
from .lattice import DependenceReport, classify, classify_factored, verify_relation
from .pillai import corollary_pair_bound
from .utils import partition_range, require_at_least

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShiftRecord:
    """Classification of one shifted triple (a+t, b+t, c+t)."""

    t: int
    dep_order: Optional[int]
    witness: Optional[Tuple[int, ...]] = None
    dependent_pair: Optional[Tuple[int, int]] = None

    def to_dict(self) -> Dict:
        return {
            't': self.t,
            'dep_order': self.dep_order if self.dep_order is not None else 'independent',
            'witness': list(self.witness) if self.witness is not None else None,
            'dependent_pair': list(self.dependent_pair) if self.dependent_pair is not None else None,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'ShiftRecord':
        order = data['dep_order']
        witness = data.get('witness')
        pair = data.get('dependent_pair')
        return cls(
            t=data['t'],
            dep_order=None if order == 'independent' else int(order),
            witness=tuple(witness) if witness is not None else None,
            dependent_pair=tuple(pair) if pair is not None else None,
        )

    @classmethod
    def from_report(cls, t: int, report: DependenceReport) -> 'ShiftRecord':
        pair = None
        if report.dep_order == 2:
            i, j = report.witness_support
            pair = (report.values[i], report.values[j])
        return cls(t, report.dep_order, report.witness, pair)


@dataclass(frozen=True)
class TripleHit:
    """A triple a < b < c whose searched shifts are all dependent."""

    a: int
    b: int
    c: int
    per_shift: Tuple[ShiftRecord, ...]
    fixed: Optional[int] = None

    @property
    def triple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def three_dependent_shifts(self) -> int:
        return sum(1 for rec in self.per_shift if rec.dep_order == 3)

    def sort_key(self) -> Tuple[int, int, int]:
        return (self.c, self.b, self.a)

    def to_dict(self) -> Dict:
        data = {
            'a': self.a,
            'b': self.b,
            'c': self.c,
            'per_shift': [rec.to_dict() for rec in self.per_shift],
        }
        if self.fixed is not None:
            data['fixed'] = self.fixed
        return data

    @classmethod
    def from_dict(cls, data: Dict) -> 'TripleHit':
        return cls(
            a=data['a'], b=data['b'], c=data['c'],
            per_shift=tuple(ShiftRecord.from_dict(rec) for rec in data['per_shift']),
            fixed=data.get('fixed'),
        )


@dataclass(frozen=True)
class PairHit:
    """Dependent pair (a, b) whose translate by t is dependent too."""

    a: int
    b: int
    t: int
    bases: Tuple[int, int]

    def to_dict(self) -> Dict:
        return {'a': self.a, 'b': self.b, 't': self.t, 'bases': list(self.bases)}

    @classmethod
    def from_dict(cls, data: Dict) -> 'PairHit':
        return cls(a=data['a'], b=data['b'], t=data['t'], bases=tuple(data['bases']))


class _RangeTables:
    """Memoized factorizations, canonical bases and supports."""

    def __init__(self, limit: int):
        self.sieve = get_sieve(limit)
        self._facts: Dict[int, Factorization] = {}
        self._bases: Dict[int, int] = {}
        self._supports: Dict[int, FrozenSet[int]] = {}
        self._units: Dict[Tuple[FrozenSet[int], int], List[int]] = {}

    def fact(self, n: int) -> Factorization:
        f = self._facts.get(n)
        if f is None:
            f = factorize(n, self.sieve)
            self._facts[n] = f
        return f

    def base(self, n: int) -> int:
        g = self._bases.get(n)
        if g is None:
            g = canonical_root(n, self.sieve).base
            self._bases[n] = g
        return g

    def supp(self, n: int) -> FrozenSet[int]:
        s = self._supports.get(n)
        if s is None:
            s = frozenset(self.fact(n).primes)
            self._supports[n] = s
        return s

    def units(self, primes: FrozenSet[int], limit: int) -> List[int]:
        key = (primes, limit)
        found = self._units.get(key)
        if found is None:
            found = s_units(primes, limit)
            self._units[key] = found
        return found


def _validate_shifts(shifts: Iterable[int]) -> Tuple[int, ...]:
    shifts = tuple(sorted(set(shifts)))
    if not shifts:
        raise DomainError("shift list must be nonempty")
    require_at_least(shifts, 0, "shifts")
    return shifts


def _validate_order(dep_order: Optional[int]) -> None:
    if dep_order is not None and dep_order not in (2, 3):
        raise DomainError(f"a triple can only be 2- or 3-dependent, got dep_order {dep_order}")


def _third_candidates(tables: _RangeTables, a: int, b: int, shifts: Sequence[int],
                      lo: int, hi: int, dep_order: Optional[int]) -> Iterable[int]:
    """Values c in [lo, hi] that pass the S-unit condition at every shift."""
    constrained = []
    for t in shifts:
        # (a+t, b+t) dependent already: c is free at this shift, unless order 3 is required
        if tables.base(a + t) == tables.base(b + t):
            if dep_order == 3:
                return ()
            continue
        # Otherwise every prime of c + t divides (a + t)(b + t)
        constrained.append((t, tables.supp(a + t) | tables.supp(b + t)))
    if not constrained:
        return range(lo, hi + 1)

    # Walk the units of the smallest prime set and filter by the other shifts
    t0, primes0 = min(constrained, key=lambda item: (len(item[1]), item[0]))
    rest = [(t, primes) for t, primes in constrained if t != t0]
    found = []
    for u in tables.units(primes0, hi + t0):
        c = u - t0
        if c < lo:
            continue
        if c > hi:
            break
        if all(is_s_unit(c + t, primes) for t, primes in rest):
            found.append(c)
    return found


def _shift_records(tables: _RangeTables, triple: Sequence[int], shifts: Sequence[int],
                   dep_order: Optional[int]) -> Optional[Tuple[ShiftRecord, ...]]:
    """Per-shift records, or None as soon as one shift misses the requirement."""
    records = []
    for t in shifts:
        shifted = tuple(v + t for v in triple)
        report = classify_factored(shifted, [tables.fact(v) for v in shifted])
        if dep_order is None:
            if not report.dependent:
                return None
        elif report.dep_order != dep_order:
            return None
        records.append(ShiftRecord.from_report(t, report))
    return tuple(records)


def _scan_a_values(a_values: Sequence[int], N: int, shifts: Tuple[int, ...],
                   dep_order: Optional[int], exclude_28: bool) -> List[TripleHit]:
    """Worker: every hit whose smallest entry lies in `a_values`."""
    tables = _RangeTables(N + shifts[-1])
    hits = []
    for a in a_values:
        for b in range(a + 1, N):
            for c in _third_candidates(tables, a, b, shifts, b + 1, N, dep_order):
                if exclude_28 and {2, 8} <= {a, b, c}:
                    continue
                # Candidates only passed the support test; classify each shift exactly
                records = _shift_records(tables, (a, b, c), shifts, dep_order)
                if records is not None:
                    hits.append(TripleHit(a, b, c, records))
    return hits


def _run_partitioned(parts: List[range], worker, args: tuple, jobs: int,
                     progress: bool, desc: str) -> List:
    """Run `worker(part, *args)` over every part and concatenate the results."""
    results = []
    if jobs <= 1 or len(parts) <= 1:
        for part in tqdm(parts, desc=desc, disable=not progress):
            results.extend(worker(list(part), *args))
        return results

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(worker, list(part), *args) for part in parts]
        with tqdm(total=len(futures), desc=desc, disable=not progress) as pbar:
            # Completion order is irrelevant: callers sort the hits
            for future in as_completed(futures):
                results.extend(future.result())
                pbar.update(1)
    return results


def _verify_triple_hits(hits: Sequence[TripleHit], shifts: Sequence[int],
                        dep_order: Optional[int]) -> None:
    """Re-classify every hit without any fast path and check its stored witnesses."""
    for hit in hits:
        witnesses = {rec.t: rec.witness for rec in hit.per_shift}
        for t in shifts:
            shifted = tuple(v + t for v in hit.triple)
            report = classify(shifted)
            ok = report.dependent if dep_order is None else report.dep_order == dep_order
            # prod (a_i + t)^k_i == 1 for the recorded relation
            ok = ok and verify_relation(shifted, witnesses.get(t) or ())
            if not ok:
                raise CheckMismatch(
                    f"hit {hit.triple} fails re-verification at shift {t}",
                    diff={'hit': hit.to_dict(), 'shift': t, 'report': report.to_dict()},
                )


def search_triples(N: int, shifts: Iterable[int] = (0, 1, 2), dep_order: Optional[int] = None,
                   exclude_28: bool = False, jobs: Optional[int] = None,
                   progress: bool = True) -> List[TripleHit]:
    """
    All triples 2 <= a < b < c <= N dependent at every shift.

    Args:
        N: Largest entry (at least 3)
        shifts: Nonnegative shifts t; each (a+t, b+t, c+t) must qualify
        dep_order: None for "any dependence", otherwise the exact order (2 or 3)
        exclude_28: Drop triples containing both 2 and 8
        jobs: Worker processes (defaults to Config.max_workers)
        progress: Show a tqdm bar on stderr

    Returns:
        Hits sorted by (c, b, a); identical for every worker count
    """
    if isinstance(N, bool) or not isinstance(N, int) or N < 3:
        raise DomainError(f"N must be an integer >= 3, got {N!r}")
    shifts = _validate_shifts(shifts)
    _validate_order(dep_order)
    if jobs is None:
        jobs = get_config().max_workers

    logger.info(f"Searching triples up to {N} at shifts {list(shifts)} "
                f"(dep_order={dep_order or 'any'}, exclude_28={exclude_28}, jobs={jobs})")
    started = time.time()
    parts = partition_range(2, N - 1, jobs * 8)
    hits = _run_partitioned(parts, _scan_a_values, (N, shifts, dep_order, exclude_28),
                            jobs, progress, "Triple search")
    hits.sort(key=TripleHit.sort_key)
    _verify_triple_hits(hits, shifts, dep_order)
    logger.info(f"Found {len(hits)} triples in {time.time() - started:.1f}s")
    return hits


def search_pairs(N: int, t: int) -> List[PairHit]:
    """
    All dependent pairs 1 < a < b <= N whose translates by t are dependent.

    Dependent pairs are exactly (g**x, g**y) with g not a perfect power, so
    only bases g <= sqrt(N) can contribute.

    Args:
        N: Largest b (at least 3)
        t: Nonzero shift; pairs with a + t < 2 are skipped

    Returns:
        Hits sorted by (b, a)
    """
    if isinstance(N, bool) or not isinstance(N, int) or N < 3:
        raise DomainError(f"N must be an integer >= 3, got {N!r}")
    if isinstance(t, bool) or not isinstance(t, int) or t == 0:
        raise DomainError(f"shift t must be a nonzero integer, got {t!r}")

    sieve = get_sieve(N + abs(t)) if N + abs(t) <= get_config().sieve_limit else None
    hits = []
    for g in range(2, isqrt(N) + 1):
        if perfect_power(g):
            continue
        # g, g^2, ... up to N
        powers = []
        value = g
        while value <= N:
            powers.append(value)
            value *= g
        for i, a in enumerate(powers):
            if a + t < 2:
                continue
            # (a, b) is dependent by construction; only the translate is tested
            for b in powers[i + 1:]:
                shifted = pair_dependent(a + t, b + t, sieve)
                if shifted:
                    hits.append(PairHit(a, b, t, (g, shifted.base)))

    hits.sort(key=lambda hit: (hit.b, hit.a))
    for hit in hits:
        if not (pair_dependent(hit.a, hit.b) and pair_dependent(hit.a + t, hit.b + t)):
            raise CheckMismatch(f"pair {hit.a, hit.b} fails re-verification",
                                diff={'hit': hit.to_dict()})
    logger.info(f"Found {len(hits)} pairs up to {N} for t={t}")
    return hits


def complete_triple(a: int, b: int, N: int, shifts: Iterable[int] = (0, 1, 2),
                    dep_order: Optional[int] = None) -> List[int]:
    """
    Every third entry c <= N completing (a, b) at all shifts.

    Args:
        a, b: Distinct integers >= 2 (order as given; no sorting is imposed)
        N: Largest c
        shifts: Nonnegative shifts
        dep_order: None for any dependence, or the exact order required

    Returns:
        Sorted list of c, with c >= 2 and c not in {a, b}
    """
    require_at_least([a, b], 2, "a and b")
    if a == b:
        raise DomainError(f"a and b must differ, got {a} twice")
    shifts = _validate_shifts(shifts)
    _validate_order(dep_order)
    if {a, b} == {2, 8}:
        logger.warning("(2, 8) completes to the infinite family 2^x*5^y - 2; "
                       f"the scan is truncated at {N}")
    if N < 2:
        return []

    tables = _RangeTables(N + shifts[-1])
    found = []
    for c in _third_candidates(tables, a, b, shifts, 2, N, dep_order):
        if c in (a, b):
            continue
        if _shift_records(tables, (a, b, c), shifts, dep_order) is not None:
            found.append(c)
    logger.debug(f"complete_triple({a}, {b}) up to {N}: {found}")
    return found


def search_fixed_a(a: int, N: int, shifts: Iterable[int] = (0, 1, 2),
                   dep_order: Optional[int] = None, progress: bool = True) -> List[TripleHit]:
    """
    All triples containing `a` with the other entries b < c <= N.

    Hits are stored with entries sorted and `fixed` set to a.
    """
    require_at_least([a], 2, "a")
    if isinstance(N, bool) or not isinstance(N, int) or N < 3:
        raise DomainError(f"N must be an integer >= 3, got {N!r}")
    shifts = _validate_shifts(shifts)
    _validate_order(dep_order)

    # Factor tables cover a + t as well as every b + t and c + t
    tables = _RangeTables(max(N, a) + shifts[-1])
    hits = []
    for b in tqdm(range(2, N), desc=f"Completing a={a}", disable=not progress):
        if b == a:
            continue
        for c in _third_candidates(tables, a, b, shifts, b + 1, N, dep_order):
            if c == a:
                continue
            triple = tuple(sorted((a, b, c)))
            records = _shift_records(tables, triple, shifts, dep_order)
            if records is not None:
                hits.append(TripleHit(*triple, per_shift=records, fixed=a))
    hits.sort(key=TripleHit.sort_key)
    _verify_triple_hits(hits, shifts, dep_order)
    logger.info(f"Found {len(hits)} triples through a={a} up to {N}")
    return hits


def pair_survey(t_values: Iterable[int], N: int) -> Dict[int, List[PairHit]]:
    """
    Run search_pairs for every t and check the 16*t**2 bound on a.

    Returns:
        Mapping t -> hits (empty lists included), in increasing t
    """
    survey = {}
    for t in sorted(set(t_values)):
        hits = search_pairs(N, t)
        bound = corollary_pair_bound(t)
        for hit in hits:
            if hit.a > bound:
                raise CheckMismatch(f"pair {hit.a, hit.b} for t={t} exceeds a <= {bound}",
                                    diff={'hit': hit.to_dict(), 'bound': bound})
        survey[t] = hits
    logger.info(f"Pair survey: t with pairs = {[t for t, hits in survey.items() if hits]}")
    return survey


def summarize_hits(hits: Iterable[TripleHit]) -> Dict[int, int]:
    """Number of hits by how many of their shifts are 3-dependent."""
    counts = Counter(hit.three_dependent_shifts for hit in hits)
    return dict(sorted(counts.items()))
