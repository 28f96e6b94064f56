"""Tabulate |IOF_n^par|, the brute-force rank and 3n-6.

    python scripts/rank_table.py --max-n 6
"""
import argparse
import time

from iofpar.generators import standard_generating_set
from iofpar.search import brute_rank, check_minimality, enumerate_members, is_generating


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()

    print(f"{'n':>3} {'|IOF|':>7} {'rank':>5} {'3n-6':>5} {'A_n gen':>8} {'minimal':>8} {'secs':>6}")
    for n in range(1, args.max_n + 1):
        t = time.perf_counter()
        members = enumerate_members(n)
        rank = brute_rank(n)
        if n >= 4:
            gens = [g for _, g in standard_generating_set(n)]
            gen, minimal, formula = is_generating(n, gens, members), check_minimality(n), 3 * n - 6
        else:
            gen = minimal = formula = "-"
        secs = time.perf_counter() - t
        print(f"{n:>3} {len(members):>7} {rank:>5} {formula!s:>5} {gen!s:>8} {minimal!s:>8} {secs:>6.2f}")


if __name__ == "__main__":
    main()
