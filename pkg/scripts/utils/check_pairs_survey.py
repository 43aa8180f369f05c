"""Survey dependent pairs (a, b), (a + t, b + t) for every shift t up to a limit."""

import argparse
import logging
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from multdep.errors import CheckMismatch
from multdep.pillai import EXCEPTIONAL_SHIFTS, exceptional_pairs
from multdep.search import pair_survey
from multdep.utils import format_tuple, setup_logging


def check_pairs_survey(t_max: int, N: int) -> bool:
    """
    Print which t have pairs and compare them with the Pillai catalog.

    Returns:
        True if exactly the catalog shifts have a pair, each matching exceptional_pairs(t)
    """
    survey = pair_survey(range(1, t_max + 1), N)
    with_pairs = {t: hits for t, hits in survey.items() if hits}

    print("=" * 60)
    print(f"Dependent pairs up to b <= {N}, t in [1, {t_max}]")
    print("=" * 60)
    for t, hits in with_pairs.items():
        pairs = ", ".join(format_tuple((h.a, h.b)) for h in hits)
        print(f"  t={t:3d}: {pairs}   (16t^2 = {16 * t * t})")
    print()

    expected = {t for t in EXCEPTIONAL_SHIFTS if t <= t_max}
    ok = set(with_pairs) == expected
    for t in sorted(expected):
        hits = with_pairs.get(t, [])
        pair = exceptional_pairs(t)
        if pair[1] > N:
            print(f"⚠ t={t}: expected pair {pair} lies beyond N={N}")
            ok = False
            continue
        if [(h.a, h.b) for h in hits] != [pair]:
            print(f"✗ t={t}: found {[(h.a, h.b) for h in hits]}, expected {pair}")
            ok = False

    print("✓ Survey matches the catalog" if ok else "✗ Survey differs from the catalog")
    print("=" * 60)
    return ok


if __name__ == "__main__":
    parser = argparse.ArgumentParser(
        description='Survey consecutive dependent pairs for t = 1..T.'
    )
    parser.add_argument('--t-max', type=int, default=100, metavar='T',
                       help='Largest shift (default: 100)')
    parser.add_argument('--max', type=int, default=10000, metavar='N',
                       help='Largest b (default: 10000, covers t=89)')
    parser.add_argument('--quiet', '-q', action='store_true',
                       help='Reduce output verbosity')

    args = parser.parse_args()
    setup_logging(logging.WARNING if args.quiet else logging.INFO)

    try:
        sys.exit(0 if check_pairs_survey(args.t_max, args.max) else 3)
    except CheckMismatch as e:
        print(f"✗ {e}")
        sys.exit(3)
