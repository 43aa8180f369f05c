"""
Effective bounds from linear forms in logarithms.

The pipeline mirrors the effectivity argument for three consecutive dependent
triples with a fixed entry a. Each application of the integer-case Matveev
bound is recorded as a ChainStep. Additive constants are absorbed into
multiples of ln M with the single rule c <= (c / ln 2) * ln M, valid for M >= 2.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import mpmath

from .arith import factorize
from .config import get_config
from .errors import DomainError
from .utils import require_at_least

logger = logging.getLogger(__name__)

CASE_IDS = ('all2', 'one3', 'two3', 'all3')

_CASE_ALIASES = {
    'all-2-dep': 'all2',
    'one-3-dep': 'one3',
    'two-3-dep': 'two3',
    'all-3-dep': 'all3',
}


@dataclass(frozen=True)
class MatveevInput:
    """The linear form b_1 ln a_1 + ... + b_n ln a_n."""

    a_list: Tuple[int, ...]
    b_list: Tuple[int, ...]

    def __post_init__(self):
        if len(self.a_list) != len(self.b_list) or not self.a_list:
            raise DomainError("a_list and b_list must be nonempty and of equal length")
        require_at_least(self.a_list, 2, "Matveev bases")
        if not any(self.b_list):
            raise DomainError("coefficients b_list must not all be zero")

    @property
    def n(self) -> int:
        return len(self.a_list)

    def to_dict(self) -> Dict:
        return {'a_list': list(self.a_list), 'b_list': list(self.b_list)}

    @classmethod
    def from_dict(cls, data: Dict) -> 'MatveevInput':
        return cls(a_list=tuple(data['a_list']), b_list=tuple(data['b_list']))


@dataclass(frozen=True)
class ChainStep:
    """One Matveev application inside a bound chain."""

    label: str
    logs: int
    fixed_log_product: float
    coefficient_exponent: int
    upper_constant: float
    resulting_constant: float
    power_of_log_M: int

    def to_dict(self) -> Dict:
        return {
            'label': self.label,
            'logs': self.logs,
            'fixed_log_product': self.fixed_log_product,
            'coefficient_exponent': self.coefficient_exponent,
            'upper_constant': self.upper_constant,
            'resulting_constant': self.resulting_constant,
            'power_of_log_M': self.power_of_log_M,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'ChainStep':
        return cls(**data)


@dataclass(frozen=True)
class BoundChainResult:
    """Bounds for one fixed a and one case, worst case over shift assignments."""

    a: int
    case_id: str
    M_bound: int
    q_bounds: Dict[str, float]
    log10_bc_bound: float
    constants: Dict[str, float]
    chain_steps: Tuple[ChainStep, ...] = ()
    scenario: str = ''

    def to_dict(self) -> Dict:
        return {
            'a': self.a,
            'case_id': self.case_id,
            'M_bound': self.M_bound,
            'q_bounds': dict(self.q_bounds),
            'log10_bc_bound': self.log10_bc_bound,
            'constants': dict(self.constants),
            'chain_steps': [step.to_dict() for step in self.chain_steps],
            'scenario': self.scenario,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'BoundChainResult':
        return cls(
            a=data['a'],
            case_id=data['case_id'],
            M_bound=data['M_bound'],
            q_bounds=dict(data['q_bounds']),
            log10_bc_bound=data['log10_bc_bound'],
            constants=dict(data['constants']),
            chain_steps=tuple(ChainStep.from_dict(s) for s in data['chain_steps']),
            scenario=data.get('scenario', ''),
        )


@dataclass(frozen=True)
class _Scenario:
    """
    Shape of one sub-case of the argument.

    The first linear form has only fixed logarithms and satisfies
    |Lambda| < K * M^k1 / min{b, c} with coefficients up to M^e1. Each back
    form has the listed fixed logarithms plus `unknown` logarithms of q's,
    coefficients up to M and |Lambda| < 4 / b.
    """

    label: str
    stage1_fixed: Tuple[int, ...]
    e1: int
    K: int
    k1: int
    back_forms: Tuple[Tuple[Tuple[int, ...], int], ...] = field(default_factory=tuple)


def matveev_constant(n: int) -> mpmath.mpf:
    """0.5 (1 + ln 2) e n^4.5 30^(n+3)."""
    n = mpmath.mpf(n)
    return mpmath.mpf('0.5') * (1 + mpmath.log(2)) * mpmath.e * n ** mpmath.mpf('4.5') * mpmath.mpf(30) ** (n + 3)


def matveev_log_lower_bound(inp: MatveevInput) -> float:
    """
    Lower bound for ln|Lambda| when Lambda != 0 (not checked here).

    Returns:
        -0.5 (1 + ln 2) e n^4.5 30^(n+3) * prod ln a_i * (1 + ln max|b_i|)
    """
    with mpmath.workdps(get_config().precision_dps):
        log_product = mpmath.fprod(mpmath.log(a) for a in inp.a_list)
        b_max = max(abs(b) for b in inp.b_list)
        value = -matveev_constant(inp.n) * log_product * (1 + mpmath.log(b_max))
        return float(value)


def _satisfies(M: int, C, k: int) -> bool:
    return mpmath.mpf(M) >= C * mpmath.log(M) ** k


def solve_self_bound(C, k: int) -> int:
    """
    Smallest M* >= 3 with M >= C (ln M)^k for every integer M >= M*.

    M / (ln M)^k increases for M >= e^k, so above that point the crossing is
    located by doubling and binary search; below it every M is tested.

    Args:
        C: Positive real constant
        k: Positive integer power

    Returns:
        M*; every M with M < C (ln M)^k is below it
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    with mpmath.workdps(get_config().precision_dps):
        C = mpmath.mpf(C)
        if C <= 0:
            raise DomainError(f"C must be positive, got {C}")
        lo = max(3, int(mpmath.ceil(mpmath.e ** k)))

        # Monotone from lo on: if lo holds, only [3, lo) can fail
        if _satisfies(lo, C, k):
            failures = [M for M in range(3, lo) if not _satisfies(M, C, k)]
            return failures[-1] + 1 if failures else 3

        # Double until the inequality holds, then bisect
        hi = lo * 2
        while not _satisfies(hi, C, k):
            lo, hi = hi, hi * 2
        # lo fails, hi holds
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _satisfies(mid, C, k):
                hi = mid
            else:
                lo = mid
        return hi


def _normalize_case(case_id: str) -> str:
    case_id = _CASE_ALIASES.get(case_id, case_id)
    if case_id not in CASE_IDS:
        raise DomainError(f"case_id must be one of {list(CASE_IDS)}, got {case_id!r}")
    return case_id


def _scenarios(a: int, case_id: str) -> List[_Scenario]:
    """
    Sub-case shapes over every assignment {i, j, k} = {0, 1, 2}.

    A fixed q of a dependent pair (a + l, b + l) divides into a + l as a power,
    so ln q <= ln(a + l); a + l itself stands in for it.
    """
    primes = {l: factorize(a + l).primes for l in range(3)}
    # Every ordering of the shifts into the roles i, j, k
    found = []
    for i, j, k in permutations(range(3)):
        tag = f"i={i},j={j},k={k}"
        qi, qj = (a + i,), (a + j,)
        if case_id == 'all2':
            found.append(_Scenario(f"all2[{tag}]", qi + qj, 2, 8, 1,
                                   ((qi, 1), (qj, 1))))
        elif case_id == 'one3':
            found.append(_Scenario(f"one3.pairs-ai-aj[{tag}]", qi + qj + primes[k], 2, 8, 1,
                                   ((qi + primes[k], 1), (qj + primes[k], 1))))
            found.append(_Scenario(f"one3.pairs-ai-bj[{tag}]", qi + primes[k], 3, 12, 2,
                                   ((qi + primes[k], 2),)))
        elif case_id == 'two3':
            found.append(_Scenario(f"two3.pair-ai[{tag}]", qi + primes[j] + primes[k], 3, 12, 2,
                                   ((qi + primes[j], 1), (primes[j] + primes[k], 2))))
            found.append(_Scenario(f"two3.pair-bi[{tag}]", primes[j] + primes[k], 4, 16, 3,
                                   ((primes[j], 2), (primes[k], 2))))
    if case_id == 'all3':
        every = primes[0] + primes[1] + primes[2]
        pairs = tuple((primes[i] + primes[j], 2) for i, j in combinations(range(3), 2))
        found.append(_Scenario("all3.one-q-coefficient-vanishes", every, 2, 8, 1, pairs))
        found.append(_Scenario("all3.all-q-eliminated", every, 4, 16, 3, pairs))
    return found


def _log_product(values: Sequence[int]):
    return mpmath.fprod(mpmath.log(v) for v in values)


def _run_scenario(a: int, sc: _Scenario):
    """Evaluate one scenario; returns (M*, worst back form data, steps, constants)."""
    ln2 = mpmath.log(2)
    steps = []

    # ln min{b,c} < C_min ln M
    n1 = len(sc.stage1_fixed)
    p1 = _log_product(sc.stage1_fixed)
    cm1 = matveev_constant(n1)
    c_min = mpmath.log(sc.K) / ln2 + sc.k1 + cm1 * p1 * (1 / ln2 + sc.e1)
    steps.append(ChainStep(f"{sc.label}: min(b,c)", n1, float(p1), sc.e1,
                           float(mpmath.log(sc.K)), float(c_min), 1))

    # q <= min{b,c} + 2 <= 3 min{b,c}
    c_q = c_min + mpmath.log(3) / ln2
    steps.append(ChainStep(f"{sc.label}: q", 0, 1.0, 0, float(mpmath.log(3)), float(c_q), 1))

    best = None
    for fixed, unknown in sc.back_forms:
        # fixed logs plus `unknown` logs of q, each ln q < C_q ln M
        n = len(fixed) + unknown
        p = _log_product(fixed)
        power = unknown + 1
        c_b = mpmath.log(4) / ln2 ** power + matveev_constant(n) * p * c_q ** unknown * (1 / ln2 + 1)
        steps.append(ChainStep(f"{sc.label}: back{list(fixed)}+{unknown}q", n, float(p), 1,
                               float(mpmath.log(4)), float(c_b), power))
        # exponents <= ln(b + 2) / ln 2 <= ln b / ln 2 + 1
        c_close = (c_b + ln2 / ln2 ** power) / ln2
        m_star = solve_self_bound(c_close, power)
        steps.append(ChainStep(f"{sc.label}: M", 0, 1.0, 0, 0.0, float(c_close), power))
        if best is None or m_star > best[0]:
            best = (m_star, c_b, c_close, power)

    m_star, c_b, c_close, power = best
    constants = {
        'matveev_stage1': float(cm1),
        'C_min': float(c_min),
        'C_q': float(c_q),
        'C_b': float(c_b),
        'C_close': float(c_close),
        'closure_power': float(power),
        'absorption_ln2': float(ln2),
    }
    return m_star, c_q, c_b, power, steps, constants


def _log10_bc_bound(a: int, m_star: int, c_q):
    """log10 max{b, c} from M* and ln q < C_q ln M*."""
    ln_q = c_q * mpmath.log(m_star)
    # b + l = prod p^y * q^beta with exponents <= M and prod p <= a + 2
    return m_star * (mpmath.log(a + 2) + ln_q) / mpmath.log(10)


def bound_pipeline(a: int, case_id: str) -> BoundChainResult:
    """
    Effective bounds on M, ln q and log10 max{b, c} for a fixed a.

    Args:
        a: Fixed entry, a >= 2 and a not in {2, 8}
        case_id: all2, one3, two3 or all3 (the number of 3-dependent shifts)

    Returns:
        BoundChainResult for the worst scenario of the case
    """
    require_at_least([a], 2, "a")
    if a in (2, 8):
        raise DomainError(f"a={a} admits infinite families; no bound exists")
    case_id = _normalize_case(case_id)

    with mpmath.workdps(get_config().precision_dps):
        worst = None
        all_steps = []
        for sc in _scenarios(a, case_id):
            m_star, c_q, c_b, power, steps, constants = _run_scenario(a, sc)
            all_steps.extend(steps)
            if worst is None or m_star > worst[0]:
                worst = (m_star, c_q, c_b, power, constants, sc.label)

        m_star, c_q, c_b, power, constants, label = worst
        ln_m = mpmath.log(m_star)
        ln10 = mpmath.log(10)
        ln_q = c_q * ln_m
        log10_bc = _log10_bc_bound(a, m_star, c_q)
        constants = dict(constants)
        constants['log10_bc_chain'] = float(c_b * ln_m ** power / ln10)
        constants['log10_M_bound'] = float(mpmath.log10(m_star))

        result = BoundChainResult(
            a=a,
            case_id=case_id,
            M_bound=int(m_star),
            q_bounds={'ln_q': float(ln_q), 'log10_q': float(ln_q / ln10)},
            log10_bc_bound=float(log10_bc),
            constants=constants,
            chain_steps=tuple(all_steps),
            scenario=label,
        )
    logger.info(f"Bound chain a={a} case={case_id}: M <= {float(m_star):.3e}, "
                f"log10 max(b,c) <= {result.log10_bc_bound:.3e} ({label})")
    return result


def case_of_hit(shift_orders: Iterable[Optional[int]]) -> str:
    """Case id from the dependence orders at shifts 0, 1, 2."""
    # Case index = number of 3-dependent shifts
    threes = sum(1 for order in shift_orders if order == 3)
    return CASE_IDS[threes]


def check_hits_against_bounds(hits: Iterable, result: BoundChainResult) -> List[Dict]:
    """
    Hits through result.a whose other entries exceed the bound.

    Args:
        hits: TripleHit records
        result: Pipeline output for the same a and case

    Returns:
        One violation record per offending hit (expected empty)
    """
    violations = []
    with mpmath.workdps(get_config().precision_dps):
        for hit in hits:
            triple = (hit.a, hit.b, hit.c)
            if result.a not in triple:
                continue
            others = list(triple)
            others.remove(result.a)
            largest = max(others)
            if float(mpmath.log10(largest)) >= result.log10_bc_bound:
                violations.append({'hit': hit.to_dict(), 'log10_bc_bound': result.log10_bc_bound})
    return violations
