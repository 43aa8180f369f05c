"""
Catalog of triples (a, b, c) with (a, b, c) and (a+1, b+1, c+1) both 2-dependent.

Up to permutation every such triple has one of four shapes:

    A: (2, 8, d)                          d not in {2, 8}
    B: (8, 2^x, 3^y - 1)                  x not in {1, 3}, y > 2
    C: (d^x, d^y, (d^x + 1)^s - 1)        x != y, s > 1
    D: (d^x - 1, (d^x - 1)^s, d^y - 1)    x != y, d^x > 2, d^y > 2, s > 1

Matches report the canonical d (not itself a perfect power); other roots of
the same numbers describe the same triple.
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Tuple

from sympy import integer_log

from .arith import canonical_root
from .errors import DomainError
from .utils import require_at_least

logger = logging.getLogger(__name__)

SHAPE_CASES = ('A', 'B', 'C', 'D')


@dataclass(frozen=True)
class ShapeMatch:
    """
    A catalog shape reproducing an input triple.

    permutation[k] is the input position holding shape slot k.
    """

    case_id: str
    params: Tuple[Tuple[str, int], ...]
    permutation: Tuple[int, int, int]

    def param_dict(self) -> Dict[str, int]:
        return dict(self.params)

    def slots(self) -> Tuple[int, int, int]:
        return instantiate(self.case_id, self.param_dict())

    def apply(self) -> Tuple[int, int, int]:
        """The input triple rebuilt from the shape."""
        out = [0, 0, 0]
        for slot, value in enumerate(self.slots()):
            out[self.permutation[slot]] = value
        return tuple(out)

    def to_dict(self) -> Dict:
        return {
            'case_id': self.case_id,
            'params': self.param_dict(),
            'permutation': list(self.permutation),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'ShapeMatch':
        if data['case_id'] not in SHAPE_CASES:
            raise DomainError(f"unknown shape case {data['case_id']!r}")
        return cls(case_id=data['case_id'],
                   params=tuple(sorted(data['params'].items())),
                   permutation=tuple(data['permutation']))


def instantiate(case_id: str, params: Dict[str, int]) -> Tuple[int, int, int]:
    """The shape's triple in slot order."""
    if case_id not in SHAPE_CASES:
        raise DomainError(f"unknown shape case {case_id!r}")
    if case_id == 'A':
        return (2, 8, params['d'])
    if case_id == 'B':
        return (8, 2 ** params['x'], 3 ** params['y'] - 1)
    d, x, y, s = params['d'], params['x'], params['y'], params['s']
    if case_id == 'C':
        return (d ** x, d ** y, (d ** x + 1) ** s - 1)
    if case_id == 'D':
        return ((d ** x - 1), (d ** x - 1) ** s, d ** y - 1)


def _exact_log(value: int, base: int) -> Optional[int]:
    if value < base:
        return None
    e, exact = integer_log(value, base)
    return int(e) if exact else None


def _match_slots(x1: int, x2: int, x3: int) -> List[Tuple[str, Dict[str, int]]]:
    """Every case whose slots equal (x1, x2, x3) exactly."""
    found = []
    if x1 == 2 and x2 == 8 and x3 not in (2, 8):
        found.append(('A', {'d': x3}))

    if x1 == 8:
        x = _exact_log(x2, 2)
        y = _exact_log(x3 + 1, 3)
        if x is not None and x not in (1, 3) and y is not None and y > 2:
            found.append(('B', {'x': x, 'y': y}))

    # C: x1, x2 distinct powers of one base, x3 + 1 = (x1 + 1)^s
    r1, r2 = canonical_root(x1), canonical_root(x2)
    if r1.base == r2.base and r1.exponent != r2.exponent:
        s = _exact_log(x3 + 1, x1 + 1)
        if s is not None and s > 1:
            found.append(('C', {'d': r1.base, 'x': r1.exponent, 'y': r2.exponent, 's': s}))

    # D: x2 = x1^s, and x1 + 1, x3 + 1 are distinct powers of one base
    s = _exact_log(x2, x1)
    if s is not None and s > 1:
        g1, g3 = canonical_root(x1 + 1), canonical_root(x3 + 1)
        if g1.base == g3.base and g1.exponent != g3.exponent:
            found.append(('D', {'d': g1.base, 'x': g1.exponent, 'y': g3.exponent, 's': s}))
    return found


def classify_shape(a: int, b: int, c: int) -> List[ShapeMatch]:
    """
    All catalog shapes that reproduce (a, b, c) up to permutation.

    Args:
        a, b, c: Pairwise distinct integers >= 2

    Returns:
        Matches sorted by case and permutation; empty when no shape fits
    """
    triple = (a, b, c)
    require_at_least(triple, 2, "triple entries")
    if len(set(triple)) != 3:
        raise DomainError(f"triple entries must be pairwise distinct, got {triple}")

    matches = set()
    for perm in permutations(range(3)):
        slots = tuple(triple[p] for p in perm)
        for case_id, params in _match_slots(*slots):
            match = ShapeMatch(case_id, tuple(sorted(params.items())), perm)
            assert match.apply() == triple
            matches.add(match)
    return sorted(matches, key=lambda m: (m.case_id, m.permutation, m.params))


def _powers(base: int, limit: int, start: int = 1) -> List[Tuple[int, int]]:
    """(e, base^e) for e >= start while base^e <= limit."""
    out = []
    e, value = start, base ** start
    while value <= limit:
        out.append((e, value))
        e += 1
        value *= base
    return out


def generate_shapes(case_id: str, N: int) -> List[Tuple[int, int, int]]:
    """
    Every triple of one shape with all entries <= N.

    Args:
        case_id: A, B, C or D
        N: Bound on the entries (at least 3)

    Returns:
        Pairwise-distinct triples in slot order, sorted
    """
    if case_id not in SHAPE_CASES:
        raise DomainError(f"case_id must be one of {list(SHAPE_CASES)}, got {case_id!r}")
    if isinstance(N, bool) or not isinstance(N, int) or N < 3:
        raise DomainError(f"N must be an integer >= 3, got {N!r}")

    found = set()
    if case_id == 'A':
        if N >= 8:
            found.update((2, 8, d) for d in range(3, N + 1) if d != 8)
    elif case_id == 'B':
        if N >= 8:
            for x, two_x in _powers(2, N):
                if x in (1, 3):
                    continue
                # 3^y - 1 <= N
                for y, three_y in _powers(3, N + 1, start=3):
                    found.add((8, two_x, three_y - 1))
    elif case_id == 'C':
        d = 2
        while d <= N:
            powers = _powers(d, N)
            for x, dx in powers:
                # (d^x + 1)^s - 1 <= N with s >= 2
                for _, outer in _powers(dx + 1, N + 1, start=2):
                    for y, dy in powers:
                        if y != x:
                            found.add((dx, dy, outer - 1))
            d += 1
    else:
        d = 2
        while d - 1 <= N:
            powers = _powers(d, N + 1)
            for x, dx in powers:
                if dx <= 2:
                    continue
                for _, inner in _powers(dx - 1, N, start=2):
                    for y, dy in powers:
                        if y != x and dy > 2:
                            found.add((dx - 1, inner, dy - 1))
            d += 1

    # Drop triples where two slots coincide
    triples = sorted(t for t in found if len(set(t)) == 3)
    logger.debug(f"Shape {case_id} up to {N}: {len(triples)} triples")
    return triples
