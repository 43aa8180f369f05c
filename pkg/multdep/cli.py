"""Command-line interface: every operation as a subcommand emitting JSON lines or CSV."""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from . import __version__
from .arith import canonical_root, factorize
from .bounds import CASE_IDS, bound_pipeline
from .config import get_config
from .errors import CheckMismatch, DomainError
from .lattice import classify, decompose_3dep
from .pillai import (
    PillaiInstance,
    bennett_catalog_check,
    corollary_pair_bound,
    open_equation_scan,
    pillai_solutions,
    vicinity_inequality_solutions,
    vicinity_scan,
)
from .records import OutputRecord, write_csv, write_json_lines
from .search import complete_triple, pair_survey, search_fixed_a, search_pairs, search_triples
from .shapes import SHAPE_CASES, classify_shape, generate_shapes
from .utils import parse_int_list, setup_logging

logger = logging.getLogger(__name__)

# fixed column order per command for --format csv
CSV_COLUMNS: Dict[str, List[str]] = {
    'factor': ['value', 'factors', 'base', 'exponent'],
    'dep': ['values', 'dep_order', 'witness', 'witness_support'],
    'decompose': ['a', 'b', 'c', 'a_primes', 'x', 'y', 'z', 'q', 'beta', 'gamma'],
    'triples': ['a', 'b', 'c', 'per_shift'],
    'pairs': ['a', 'b', 't', 'bases'],
    'complete': ['a', 'b', 'max', 'shifts', 'c_values'],
    'fixed-a': ['fixed', 'a', 'b', 'c', 'per_shift'],
    'pair-survey': ['t', 'pairs', 'corollary_bound'],
    'shapes-classify': ['triple', 'matches'],
    'shapes-generate': ['case_id', 'triple'],
    'pillai': ['instance', 'solutions'],
    'catalog-check': ['bound', 'passed', 'exceptional', 'sample_size', 'sample_seed', 'sample_failures'],
    'vicinity': ['a', 'b', 'eps_max', 'delta_max', 'checked', 'skipped', 'neighbors'],
    'bennett-vicinity': ['d', 'c', 'bound', 'solutions'],
    'open-eq': ['eq_id', 'param_bound', 'value_bound', 'solutions'],
    'bound': ['a', 'case_id', 'M_bound', 'q_bounds', 'log10_bc_bound', 'scenario', 'constants', 'chain_steps'],
    'golden': ['name', 'passed', 'expected', 'found'],
}

_CASE_CHOICES = list(CASE_IDS) + ['all-2-dep', 'one-3-dep', 'two-3-dep', 'all-3-dep']

# three consecutive dependent triples up to 1000 without {2, 8}, sorted by (c, b, a)
_ELEVEN = [(2, 4, 14), (2, 6, 48), (3, 6, 48), (6, 8, 48), (6, 18, 48), (7, 15, 49),
           (7, 49, 79), (8, 32, 98), (6, 30, 216), (2, 14, 224), (2, 30, 960)]


def _records(command: str, payloads) -> List[OutputRecord]:
    return [OutputRecord(command, payload) for payload in payloads]


def cmd_factor(args) -> List[OutputRecord]:
    fact = factorize(args.n)
    payload = fact.to_dict()
    if args.n >= 2:
        payload.update(canonical_root(args.n).to_dict())
    return _records('factor', [payload])


def cmd_dep(args) -> List[OutputRecord]:
    return _records('dep', [classify(tuple(args.values)).to_dict()])


def cmd_decompose(args) -> List[OutputRecord]:
    return _records('decompose', [decompose_3dep(args.a, args.b, args.c).to_dict()])


def cmd_triples(args) -> List[OutputRecord]:
    hits = search_triples(args.max, args.shifts, dep_order=args.dep_order,
                          exclude_28=args.exclude_2_8, jobs=args.jobs, progress=not args.quiet)
    return _records('triples', [hit.to_dict() for hit in hits])


def cmd_pairs(args) -> List[OutputRecord]:
    return _records('pairs', [hit.to_dict() for hit in search_pairs(args.max, args.t)])


def cmd_complete(args) -> List[OutputRecord]:
    found = complete_triple(args.a, args.b, args.max, args.shifts, dep_order=args.dep_order)
    return _records('complete', [{
        'a': args.a, 'b': args.b, 'max': args.max,
        'shifts': sorted(set(args.shifts)), 'c_values': found,
    }])


def cmd_fixed_a(args) -> List[OutputRecord]:
    hits = search_fixed_a(args.a, args.max, args.shifts, dep_order=args.dep_order,
                          progress=not args.quiet)
    return _records('fixed-a', [hit.to_dict() for hit in hits])


def cmd_pair_survey(args) -> List[OutputRecord]:
    survey = pair_survey(range(1, args.t_max + 1), args.max)
    return _records('pair-survey', [
        {'t': t, 'pairs': [hit.to_dict() for hit in hits], 'corollary_bound': corollary_pair_bound(t)}
        for t, hits in survey.items()
    ])


def cmd_shapes(args) -> List[OutputRecord]:
    if args.shapes_command == 'classify':
        matches = classify_shape(args.a, args.b, args.c)
        return _records('shapes-classify', [{
            'triple': [args.a, args.b, args.c],
            'matches': [m.to_dict() for m in matches],
        }])
    triples = generate_shapes(args.case, args.max)
    return _records('shapes-generate', [{'case_id': args.case, 'triple': list(t)} for t in triples])


def cmd_pillai(args) -> List[OutputRecord]:
    inst = PillaiInstance(args.d, args.c, args.t, args.bound)
    sols = pillai_solutions(inst)
    return _records('pillai', [{'instance': inst.to_dict(), 'solutions': [s.to_dict() for s in sols]}])


def cmd_catalog_check(args) -> List[OutputRecord]:
    report = bennett_catalog_check(args.bound, sample=args.sample, seed=args.seed)
    if not report.passed:
        raise CheckMismatch("catalog check failed", diff=report.to_dict())
    return _records('catalog-check', [report.to_dict()])


def cmd_vicinity(args) -> List[OutputRecord]:
    return _records('vicinity', [vicinity_scan(args.a, args.b).to_dict()])


def cmd_bennett_vicinity(args) -> List[OutputRecord]:
    sols = vicinity_inequality_solutions(args.d, args.c, args.bound)
    return _records('bennett-vicinity', [{
        'd': args.d, 'c': args.c, 'bound': args.bound,
        'solutions': [list(s) for s in sols],
    }])


def cmd_open_eq(args) -> List[OutputRecord]:
    sols = open_equation_scan(args.id, args.param_bound, args.value_bound)
    return _records('open-eq', [{
        'eq_id': args.id, 'param_bound': args.param_bound, 'value_bound': args.value_bound,
        'solutions': [s.to_dict() for s in sols],
    }])


def cmd_bound(args) -> List[OutputRecord]:
    return _records('bound', [bound_pipeline(args.a, args.case).to_dict()])


def _golden_checks(slow: bool, jobs: Optional[int], progress: bool):
    """Yield (name, expected, found) for every golden comparison."""
    n_triples = 1000 if slow else 120
    hits = search_triples(n_triples, (0, 1, 2), exclude_28=True, jobs=jobs, progress=progress)
    expected = [t for t in _ELEVEN if max(t) <= n_triples]
    yield (f"three consecutive dependent triples up to {n_triples}",
           [list(t) for t in expected], [list(h.triple) for h in hits])

    if slow:
        hits = search_triples(1000, (0, 1), dep_order=3, jobs=jobs, progress=progress)
        yield ("two consecutive 3-dependent triples up to 1000",
               {'count': 13, 'smallest_c': [9, 49, 63]},
               {'count': len(hits), 'smallest_c': list(hits[0].triple) if hits else None})

    n_pairs = 10 ** 6 if slow else 10 ** 4
    yield (f"pairs with t=1 up to {n_pairs}", [[2, 8]],
           [[h.a, h.b] for h in search_pairs(n_pairs, 1)])

    n_complete = 10 ** 5 if slow else 2000
    yield (f"completions of (3, 2) up to {n_complete}", [8],
           complete_triple(3, 2, n_complete, (0, 1, 2)))


def cmd_golden(args) -> List[OutputRecord]:
    records = []
    failed = []
    for name, expected, found in _golden_checks(args.slow, args.jobs, not args.quiet):
        passed = expected == found
        records.append(OutputRecord('golden', {
            'name': name, 'passed': passed, 'expected': expected, 'found': found,
        }))
        if not passed:
            logger.error(f"Golden check failed: {name}")
            failed.append({'name': name, 'expected': expected, 'found': found})
    if failed:
        raise CheckMismatch(f"{len(failed)} golden checks failed", diff={'failed': failed, 'records': [
            r.to_dict() for r in records]})
    return records


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS
    parser.add_argument('--format', choices=['json', 'csv'],
                        default=default if suppress else 'json',
                        help='Output format (default: json lines)')
    parser.add_argument('--jobs', type=int, metavar='K',
                        default=default if suppress else None,
                        help='Worker processes for searches (default: MULTDEP_JOBS or 1)')
    parser.add_argument('--quiet', '-q', action='store_true',
                        default=default if suppress else False,
                        help='Reduce output verbosity')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='multdep',
        description='Multiplicative dependence of integer tuples: searches, catalogs and bounds.'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest='command', required=True)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _add_common(p, suppress=True)
        p.set_defaults(handler=handler)
        return p

    p = add('factor', cmd_factor, 'Prime factorization and canonical root')
    p.add_argument('n', type=int)

    p = add('dep', cmd_dep, 'Dependence order and witness of a tuple')
    p.add_argument('values', type=int, nargs='+')

    p = add('decompose', cmd_decompose, 'Split a 3-dependent triple over the primes of a')
    p.add_argument('a', type=int)
    p.add_argument('b', type=int)
    p.add_argument('c', type=int)

    p = add('triples', cmd_triples, 'Triples dependent at every shift')
    p.add_argument('--max', type=int, required=True, metavar='N')
    p.add_argument('--shifts', type=parse_int_list, default=[0, 1, 2])
    p.add_argument('--dep-order', type=int, choices=[2, 3], default=None)
    p.add_argument('--exclude-2-8', action='store_true',
                   help='Drop triples containing both 2 and 8')

    p = add('pairs', cmd_pairs, 'Dependent pairs whose translate is dependent')
    p.add_argument('--max', type=int, required=True, metavar='N')
    p.add_argument('--t', type=int, required=True)

    p = add('complete', cmd_complete, 'Every c completing a fixed (a, b)')
    p.add_argument('--a', type=int, required=True)
    p.add_argument('--b', type=int, required=True)
    p.add_argument('--max', type=int, required=True, metavar='N')
    p.add_argument('--shifts', type=parse_int_list, default=[0, 1, 2])
    p.add_argument('--dep-order', type=int, choices=[2, 3], default=None)

    p = add('fixed-a', cmd_fixed_a, 'Every triple through a fixed a')
    p.add_argument('--a', type=int, required=True)
    p.add_argument('--max', type=int, required=True, metavar='N')
    p.add_argument('--shifts', type=parse_int_list, default=[0, 1, 2])
    p.add_argument('--dep-order', type=int, choices=[2, 3], default=None)

    p = add('pair-survey', cmd_pair_survey, 'Pairs for every t in [1, T]')
    p.add_argument('--t-max', type=int, default=100, metavar='T')
    p.add_argument('--max', type=int, required=True, metavar='N')

    p = add('shapes', cmd_shapes, 'Shape catalog of doubly 2-dependent triples')
    shapes_sub = p.add_subparsers(dest='shapes_command', required=True)
    sp = shapes_sub.add_parser('classify')
    _add_common(sp, suppress=True)
    sp.add_argument('a', type=int)
    sp.add_argument('b', type=int)
    sp.add_argument('c', type=int)
    sp = shapes_sub.add_parser('generate')
    _add_common(sp, suppress=True)
    sp.add_argument('--case', choices=list(SHAPE_CASES), required=True)
    sp.add_argument('--max', type=int, required=True, metavar='N')

    p = add('pillai', cmd_pillai, 'Solutions of d^n - c^m = t')
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--c', type=int, required=True)
    p.add_argument('--t', type=int, required=True)
    p.add_argument('--bound', type=int, default=None, metavar='B')

    p = add('catalog-check', cmd_catalog_check, 'Check the two-solution Pillai catalog')
    p.add_argument('--bound', type=int, default=None, metavar='B')
    p.add_argument('--sample', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)

    p = add('vicinity', cmd_vicinity, 'Dependent neighbors of a dependent pair')
    p.add_argument('--a', type=int, required=True)
    p.add_argument('--b', type=int, required=True)

    p = add('bennett-vicinity', cmd_bennett_vicinity, 'Close powers |d^n - c^m| < max^(1/2) / 4')
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--c', type=int, required=True)
    p.add_argument('--bound', type=int, required=True, metavar='B')

    p = add('open-eq', cmd_open_eq, 'Bounded scan of an open exponential equation')
    p.add_argument('--id', type=int, choices=[1, 2, 3], required=True)
    p.add_argument('--param-bound', type=int, required=True, metavar='P')
    p.add_argument('--value-bound', type=int, required=True, metavar='B')

    p = add('bound', cmd_bound, 'Effective bound chain for a fixed a')
    p.add_argument('--a', type=int, required=True)
    p.add_argument('--case', choices=_CASE_CHOICES, required=True)

    p = add('golden', cmd_golden, 'Compare searches against the published lists')
    p.add_argument('--slow', action='store_true', help='Run the full-size comparisons')

    return parser


def _emit(records: List[OutputRecord], fmt: str, command: str, stream: TextIO) -> None:
    if fmt == 'csv':
        write_csv(records, CSV_COLUMNS[command], stream)
    else:
        write_json_lines(records, stream)


def _csv_command(args) -> str:
    if args.command == 'shapes':
        return f'shapes-{args.shapes_command}'
    return args.command


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Parse argv, run one subcommand and write its records.

    Returns:
        0 on success, 1 on a domain error, 2 on a usage error, 3 on a failed check,
        4 on an internal error
    """
    stdout = stdout if stdout is not None else sys.stdout
    # argparse exits with 2 on a usage error
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logging(logging.WARNING if args.quiet else get_config().log_level)
    if getattr(args, 'bound', None) is None and args.command == 'pillai':
        args.bound = get_config().pillai_bound
    if args.jobs is not None and args.jobs < 1:
        logger.error(f"--jobs must be positive, got {args.jobs}")
        return 2

    # Map library errors to exit codes
    try:
        records = args.handler(args)
    except CheckMismatch as e:
        logger.error(f"Check failed: {e}")
        write_json_lines([OutputRecord('check-mismatch', {'message': str(e), 'diff': e.diff})], stdout)
        return 3
    except DomainError as e:
        logger.error(f"Invalid input: {e}")
        return 1
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        return 4

    # Write records only when the command succeeded
    _emit(records, args.format, _csv_command(args), stdout)
    return 0


def main():
    """Main CLI interface."""
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
