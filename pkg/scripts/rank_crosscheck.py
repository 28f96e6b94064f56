"""Recompute small ranks with weaker pruning than the default search.

Forcing only the v_i (or nothing at all) checks that the lemma-based
pruning does not hide a smaller generating set. n=5 with
partial-identity forcing takes about a minute.

    python scripts/rank_crosscheck.py
"""
import time

from iofpar.search import brute_rank

RUNS = [(3, "none"), (4, "none"), (4, "partial-identities"), (5, "partial-identities")]

for n, pruning in RUNS:
    t = time.perf_counter()
    r = brute_rank(n, pruning=pruning)
    print(f"n={n} pruning={pruning:<19} rank={r} ({time.perf_counter() - t:.1f}s)")
