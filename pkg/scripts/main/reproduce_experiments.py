"""Run every experiment of the multiplicative dependence study and store the records."""

import argparse
import logging
import sys
import time
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from multdep.cli import run
from multdep.utils import setup_logging

# (output name, argv, full-size argv); None means the quick argv is already full size
EXPERIMENTS = [
    ('three_consecutive_triples',
     ['triples', '--max', '200', '--shifts', '0,1,2', '--exclude-2-8'],
     ['triples', '--max', '1000', '--shifts', '0,1,2', '--exclude-2-8']),
    ('two_consecutive_3dep_triples',
     ['triples', '--max', '200', '--shifts', '0,1', '--dep-order', '3'],
     ['triples', '--max', '1000', '--shifts', '0,1', '--dep-order', '3']),
    ('pairs_t1',
     ['pairs', '--max', '10000', '--t', '1'],
     ['pairs', '--max', '1000000', '--t', '1']),
    ('pair_survey',
     ['pair-survey', '--t-max', '100', '--max', '10000'], None),
    ('fixed_a_3',
     ['complete', '--a', '3', '--b', '2', '--max', '5000', '--shifts', '0,1,2'],
     ['complete', '--a', '3', '--b', '2', '--max', '100000', '--shifts', '0,1,2']),
    ('catalog_check', ['catalog-check', '--bound', '1000000000'], None),
    ('open_equation_1', ['open-eq', '--id', '1', '--param-bound', '8', '--value-bound', '1000000'], None),
    ('open_equation_2', ['open-eq', '--id', '2', '--param-bound', '8', '--value-bound', '1000000'], None),
    ('open_equation_3', ['open-eq', '--id', '3', '--param-bound', '8', '--value-bound', '1000000'], None),
    ('bound_a3_all3', ['bound', '--a', '3', '--case', 'all3'], None),
    ('bound_a3_all2', ['bound', '--a', '3', '--case', 'all2'], None),
]


def reproduce_experiments(output_dir: Path, full: bool, jobs: int, verbose: bool = True) -> int:
    """
    Run each experiment through the CLI, one JSON-lines file per experiment.

    Returns:
        Number of experiments that exited non-zero
    """
    output_dir.mkdir(parents=True, exist_ok=True)
    failures = 0
    for name, quick_argv, full_argv in EXPERIMENTS:
        argv = list(full_argv if (full and full_argv) else quick_argv)
        if argv[0] == 'triples':
            argv += ['--jobs', str(jobs)]
        if not verbose:
            argv.append('--quiet')

        path = output_dir / f"{name}.jsonl"
        started = time.time()
        with open(path, 'w', encoding='utf-8') as f:
            code = run(argv, stdout=f)
        elapsed = time.time() - started

        if code == 0:
            print(f"✓ {name} ({elapsed:.1f}s) -> {path}")
        else:
            failures += 1
            print(f"✗ {name} exited with {code} ({elapsed:.1f}s), see {path}")
    return failures


def main():
    """Main CLI interface."""
    parser = argparse.ArgumentParser(
        description='Reproduce the searches, catalog checks and bound chains.'
    )
    parser.add_argument('--output-dir', type=str, default='./results',
                       help='Directory for the JSON-lines records (default: ./results)')
    parser.add_argument('--full', action='store_true',
                       help='Run the full-size searches (minutes instead of seconds)')
    parser.add_argument('--jobs', type=int, default=1, metavar='K',
                       help='Worker processes for triple searches (default: 1)')
    parser.add_argument('--quiet', '-q', action='store_true',
                       help='Reduce output verbosity')

    args = parser.parse_args()
    setup_logging(logging.WARNING if args.quiet else logging.INFO)

    print("=" * 60)
    print("Reproducing experiments" + (" (full size)" if args.full else ""))
    print("=" * 60)
    failures = reproduce_experiments(Path(args.output_dir), args.full, args.jobs,
                                     verbose=not args.quiet)
    print("=" * 60)
    sys.exit(1 if failures else 0)


if __name__ == '__main__':
    main()
