"""Multiplicative dependence as exact integer linear algebra."""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import gcd, prod
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import Factorization, canonical_root_of, factorize
from .config import get_config
from .errors import CapExceededError, DomainError, IndependentError
from .utils import require_at_least

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class ExponentMatrix:
    """Exponent vectors of a tuple over the union of its prime divisors."""

    values: Tuple[int, ...]
    primes: Tuple[int, ...]
    rows: Tuple[Vector, ...]

    def columns(self) -> List[List[int]]:
        """The transpose: one row per prime, one column per tuple element."""
        return [[row[j] for row in self.rows] for j in range(len(self.primes))]

    def to_dict(self) -> Dict:
        return {
            'values': list(self.values),
            'primes': list(self.primes),
            'rows': [list(r) for r in self.rows],
        }


@dataclass(frozen=True)
class DependenceReport:
    """Smallest dependent subtuple size plus one exact relation."""

    values: Tuple[int, ...]
    dep_order: Optional[int]
    witness: Optional[Vector] = None
    witness_support: Optional[Tuple[int, ...]] = None

    @property
    def dependent(self) -> bool:
        return self.dep_order is not None

    def to_dict(self) -> Dict:
        return {
            'values': list(self.values),
            'dep_order': self.dep_order if self.dep_order is not None else 'independent',
            'witness': list(self.witness) if self.witness is not None else None,
            'witness_support': list(self.witness_support) if self.witness_support is not None else None,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'DependenceReport':
        order = data['dep_order']
        witness = data.get('witness')
        support = data.get('witness_support')
        return cls(
            values=tuple(data['values']),
            dep_order=None if order == 'independent' else int(order),
            witness=tuple(witness) if witness is not None else None,
            witness_support=tuple(support) if support is not None else None,
        )


@dataclass(frozen=True)
class ThreeDepDecomposition:
    """b = prod p_i^y_i * q^beta and c = prod p_i^z_i * q^gamma over the primes of a."""

    a: int
    b: int
    c: int
    a_primes: Tuple[int, ...]
    x: Vector
    y: Vector
    z: Vector
    q: int
    beta: int
    gamma: int

    def to_dict(self) -> Dict:
        return {
            'a': self.a, 'b': self.b, 'c': self.c,
            'a_primes': list(self.a_primes),
            'x': list(self.x), 'y': list(self.y), 'z': list(self.z),
            'q': self.q, 'beta': self.beta, 'gamma': self.gamma,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'ThreeDepDecomposition':
        return cls(
            a=data['a'], b=data['b'], c=data['c'],
            a_primes=tuple(data['a_primes']),
            x=tuple(data['x']), y=tuple(data['y']), z=tuple(data['z']),
            q=data['q'], beta=data['beta'], gamma=data['gamma'],
        )


# ---------------------------------------------------------------------------
# Fraction-free elimination
# ---------------------------------------------------------------------------

def bareiss_echelon(matrix: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[int]]:
    """
    Fraction-free row echelon form.

    Every division performed is exact (Bareiss), so all entries stay integers.

    Args:
        matrix: Integer matrix as a list of rows

    Returns:
        (echelon rows, pivot columns); len(pivot columns) is the rank
    """
    m = [list(row) for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots = []
    prev = 1
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        # First row at or below piv_r with a nonzero entry in this column
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            row = m[r]
            prow = m[piv_r]
            # 2x2 minor over the previous pivot, exact by Sylvester's identity
            for c in range(piv_c, n_cols):
                num = fp * row[c] - fr * prow[c]
                row[c] = num // prev
            row[piv_c] = 0
        prev = fp
        pivots.append(piv_c)
        piv_r += 1
    return m, pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix."""
    if not rows or not rows[0]:
        return 0
    return len(bareiss_echelon(rows)[1])


def normalize_relation(vector: Sequence[int]) -> Vector:
    """Divide by the content and make the first nonzero entry positive."""
    g = 0
    for v in vector:
        g = gcd(g, v)
    if g == 0:
        return tuple(vector)
    out = [v // g for v in vector]
    for v in out:
        if v != 0:
            if v < 0:
                out = [-w for w in out]
            break
    return tuple(out)


def integer_kernel_vector(rows: Sequence[Sequence[int]]) -> Optional[Vector]:
    """
    A nonzero integer k with sum_i k_i * rows[i] = 0, or None if the rows are independent.

    The system is the transpose (one equation per column). The first free
    element is set to the product of the pivots, which keeps the triangular
    back substitution integral.
    """
    n = len(rows)
    width = len(rows[0]) if n else 0
    if n == 0:
        return None
    if width == 0:
        return normalize_relation([1] + [0] * (n - 1))
    # One equation per prime: sum_i k_i * e_ij = 0
    system = [[rows[i][j] for i in range(n)] for j in range(width)]
    echelon, pivots = bareiss_echelon(system)
    if len(pivots) == n:
        return None
    pivot_set = set(pivots)
    free = next(c for c in range(n) if c not in pivot_set)
    scale = prod(echelon[r][c] for r, c in enumerate(pivots))
    k = [0] * n
    k[free] = scale
    # Back substitution from the last pivot row up
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        s = sum(echelon[r][j] * k[j] for j in range(c + 1, n))
        num = -s
        den = echelon[r][c]
        if num % den != 0:
            raise ArithmeticError(f"non-integral back substitution at column {c}")
        k[c] = num // den
    relation = normalize_relation(k)
    if any(sum(relation[i] * rows[i][j] for i in range(n)) != 0 for j in range(width)):
        raise ArithmeticError(f"kernel vector {relation} does not annihilate the rows")
    return relation


# ---------------------------------------------------------------------------
# Tuples of integers
# ---------------------------------------------------------------------------

def _validate_tuple(values: Sequence[int]) -> Tuple[int, ...]:
    values = tuple(values)
    if not values:
        raise DomainError("tuple must be nonempty")
    require_at_least(values, 2, "tuple entries")
    return values


def exponent_matrix_from(values: Sequence[int],
                         factorizations: Sequence[Factorization]) -> ExponentMatrix:
    """Exponent matrix of already factored entries."""
    primes = sorted({p for f in factorizations for p in f.primes})
    index = {p: j for j, p in enumerate(primes)}
    rows = []
    for f in factorizations:
        row = [0] * len(primes)
        for p, e in f.factors:
            row[index[p]] = e
        rows.append(tuple(row))
    return ExponentMatrix(tuple(values), tuple(primes), tuple(rows))


def exponent_matrix(values: Sequence[int]) -> ExponentMatrix:
    """
    Exponent matrix of a tuple of integers >= 2.

    Args:
        values: Nonempty tuple, every entry >= 2

    Returns:
        ExponentMatrix over the sorted union of prime divisors, rows in input order
    """
    values = _validate_tuple(values)
    return exponent_matrix_from(values, [factorize(v) for v in values])


def is_dependent(values: Sequence[int]) -> bool:
    """True if the tuple admits a nonzero integer relation."""
    em = exponent_matrix(values)
    return rank(em.rows) < len(em.rows)


def witness(values: Sequence[int]) -> Vector:
    """
    Normalized relation (k_1, ..., k_n) with prod a_i^k_i = 1.

    Raises:
        IndependentError: if the tuple is multiplicatively independent
    """
    em = exponent_matrix(values)
    relation = integer_kernel_vector(em.rows)
    if relation is None:
        raise IndependentError(f"{tuple(values)} is multiplicatively independent")
    return relation


def verify_relation(values: Sequence[int], relation: Sequence[int]) -> bool:
    """Check prod a_i^k_i = 1 exactly by comparing numerator and denominator."""
    if len(values) != len(relation) or not any(relation):
        return False
    # Move negative exponents to the other side so both products are integers
    num = prod(v ** k for v, k in zip(values, relation) if k > 0)
    den = prod(v ** -k for v, k in zip(values, relation) if k < 0)
    return num == den


def classify_factored(values: Sequence[int],
                      factorizations: Sequence[Factorization]) -> DependenceReport:
    """
    Dependence order of a factored tuple.

    Subtuples are visited by increasing size, lexicographically within a size;
    the first dependent one supplies the witness.
    """
    values = tuple(values)
    em = exponent_matrix_from(values, factorizations)
    n = len(values)
    if rank(em.rows) == n:
        return DependenceReport(values, None)

    # pairs go through canonical roots, larger subtuples through the kernel
    roots = [canonical_root_of(f) for f in factorizations]
    for size in range(2, n + 1):
        for subset in combinations(range(n), size):
            if size == 2:
                i, j = subset
                if roots[i].base != roots[j].base:
                    continue
                # g^hi, g^hj: (hj, -hi) / gcd is the primitive relation
                hi, hj = roots[i].exponent, roots[j].exponent
                g = gcd(hi, hj)
                local = (hj // g, -(hi // g))
            else:
                local = integer_kernel_vector([em.rows[i] for i in subset])
                if local is None:
                    continue
            full = [0] * n
            for idx, k in zip(subset, local):
                full[idx] = k
            return DependenceReport(values, size, normalize_relation(full), subset)
    raise ArithmeticError(f"rank deficient tuple {values} without a dependent subtuple")


def classify(values: Sequence[int], cap: Optional[int] = None) -> DependenceReport:
    """
    k-multiplicative dependence of a tuple.

    Args:
        values: Tuple of integers >= 2
        cap: Longest tuple accepted (defaults to Config.classify_cap)

    Returns:
        DependenceReport; dep_order None means independent
    """
    values = _validate_tuple(values)
    if cap is None:
        cap = get_config().classify_cap
    if len(values) > cap:
        raise CapExceededError(f"tuple of length {len(values)} exceeds the cap {cap}")
    return classify_factored(values, [factorize(v) for v in values])


def decompose_3dep(a: int, b: int, c: int) -> ThreeDepDecomposition:
    """
    Split b and c over the primes of a and a common cofactor base q.

    Raises:
        IndependentError: if (a, b, c) is not 3-multiplicatively dependent
    """
    require_at_least([a, b, c], 2, "triple entries")
    report = classify((a, b, c))
    if report.dep_order != 3:
        raise IndependentError(f"({a}, {b}, {c}) is not 3-multiplicatively dependent "
                               f"(dep_order {report.dep_order or 'independent'})")

    fa = factorize(a)
    a_primes = fa.primes
    # Exponents of b and c at the primes of a; the rest is the cofactor
    fb = factorize(b).as_dict()
    fc = factorize(c).as_dict()
    y = tuple(fb.get(p, 0) for p in a_primes)
    z = tuple(fc.get(p, 0) for p in a_primes)
    q1 = b // prod(p ** e for p, e in zip(a_primes, y))
    q2 = c // prod(p ** e for p, e in zip(a_primes, z))

    if q1 == 1 and q2 == 1:
        q, beta, gamma = 1, 1, 1
    else:
        if q1 == 1 or q2 == 1:
            raise ArithmeticError(f"cofactors {q1}, {q2} of a 3-dependent triple must both exceed 1")
        r1 = canonical_root_of(factorize(q1))
        r2 = canonical_root_of(factorize(q2))
        if r1.base != r2.base:
            raise ArithmeticError(f"cofactors {q1}, {q2} are not multiplicatively dependent")
        q, beta, gamma = r1.base, r1.exponent, r2.exponent

    result = ThreeDepDecomposition(a, b, c, a_primes, fa.exponents, y, z, q, beta, gamma)
    _check_decomposition(result)
    logger.debug(f"Decomposed ({a}, {b}, {c}): q={q}, beta={beta}, gamma={gamma}")
    return result


def _check_decomposition(d: ThreeDepDecomposition) -> None:
    assert d.b == prod(p ** e for p, e in zip(d.a_primes, d.y)) * d.q ** d.beta
    assert d.c == prod(p ** e for p, e in zip(d.a_primes, d.z)) * d.q ** d.gamma
    assert all(gcd(d.q, p) == 1 for p in d.a_primes)
    assert tuple(d.gamma * v for v in d.y) != tuple(d.beta * v for v in d.z)
    if d.q > 1:
        assert all(d.gamma * yi != d.beta * zi for yi, zi in zip(d.y, d.z))
