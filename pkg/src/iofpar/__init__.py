"""Order-, fence- and parity-preserving partial injections on {1..n}."""
from .factorization import breakpoints, check_inverse_word, factorize, guard_set, render, render_over_An
from .fence import fence_below, is_member_direct, is_member_fast
from .generators import (
    BlockWord,
    Symbol,
    eval_word,
    expand_to_An,
    gen_u,
    gen_v,
    gen_x,
    parse_word,
    run_product,
    standard_generating_set,
)
from .pinj import PartialInjection, compose, decode, empty, encode, identity, inverse, make, rank_of
from .search import ElementSet, brute_rank, check_minimality, classify_rank, closure, enumerate_members, is_generating

__all__ = [name for name in dir() if not name.startswith("_")]
