"""Run the seeded fuzz campaigns used by the acceptance suite and print summaries.

    python scripts/run_fuzz.py                 # 1000 planar trials (seed 42), 200 spatial (seed 7)
    python scripts/run_fuzz.py --dim 4 --count 50 --seed 3
"""
import argparse
import sys
import time

from coconvex.fuzz import run_fuzz

DEFAULT_CAMPAIGNS = [(2, 1000, 42), (3, 200, 7)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--witness-dir", default="witnesses")
    args = ap.parse_args()

    campaigns = [(args.dim, args.count, args.seed)] if args.dim else DEFAULT_CAMPAIGNS
    failed = False
    for dim, count, seed in campaigns:
        t0 = time.perf_counter()
        summary = run_fuzz(dim, count, seed, args.witness_dir)
        print("\n".join(summary.lines()))
        print(f"elapsed {time.perf_counter() - t0:.1f}s\n")
        failed |= summary.failed
    return 2 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
