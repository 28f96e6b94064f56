"""Exhaustive oracles: enumeration, closure, generating sets and rank."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product

from .fence import is_member_direct
from .generators import Symbol, standard_generating_set, symbol_map, u, v, x
from .pinj import PartialInjection, all_partial_injections, compose, identity


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ElementSet:
    """Deduplicated elements in canonical order (sorted by graph)."""

    n: int
    elements: tuple[PartialInjection, ...]

    @classmethod
    def of(cls, n, items) -> ElementSet:
        return cls(n, tuple(sorted(set(items), key=lambda a: a.pairs)))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item):
        return item in self.as_set()

    def as_set(self) -> frozenset[PartialInjection]:
        return frozenset(self.elements)

    def __le__(self, other):
        return self.as_set() <= other.as_set()


def _extend(n, d0, m0, prefix, out):
    out.append(PartialInjection(n, tuple(prefix)))
    for d in range(d0 + 1, n + 1):
        dd = d - d0
        for m in range(m0 + 1, n + 1):
            dm = m - m0
            if (dd == 1) != (dm == 1) or (dd - dm) % 2:
                continue
            prefix.append((d, m))
            _extend(n, d, m, prefix, out)
            prefix.pop()


def enumerate_members(n: int) -> ElementSet:
    """All members, by backtracking over pair sequences that keep the gap conditions."""
    if n < 1:
        raise ValueError("n must be positive")
    out = [PartialInjection(n, ())]
    for d in range(1, n + 1):
        for m in range(1, n + 1):
            if (d - m) % 2 == 0:
                _extend(n, d, m, [(d, m)], out)
    return ElementSet.of(n, out)


def members_by_filter(n: int) -> ElementSet:
    """Reference enumeration: filter all of I_n with the direct definition."""
    return ElementSet.of(n, (a for a in all_partial_injections(n) if is_member_direct(a)))


def closure(n: int, gens) -> ElementSet:
    """Submonoid generated by ``gens``: breadth-first right multiplication."""
    gens = list(dict.fromkeys(gens))
    for g in gens:
        if g.n != n:
            raise ValueError(f"generator {g} is not a map on {n} points")
    one = identity(n)
    seen = {one}
    queue = deque([one])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = compose(a, g)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return ElementSet.of(n, seen)


def _generates(n, gens, target: frozenset) -> bool:
    return closure(n, gens).as_set() == target


def is_generating(n: int, gens, members: ElementSet | None = None) -> bool:
    members = members if members is not None else enumerate_members(n)
    return _generates(n, gens, members.as_set())


def classify_rank(n: int, k: int) -> ElementSet:
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} outside 0..{n}")
    return ElementSet.of(n, (a for a in enumerate_members(n) if a.rank == k))


def J(n: int, i: int) -> tuple[int, ...]:
    """The domain {1..i} u {i+4..n} of u_i."""
    return (*range(1, i + 1), *range(i + 4, n + 1))


def j_class_witnesses(n: int, members: ElementSet | None = None):
    """For each i <= n-4, the non-identity members with domain J_i and with image J_i."""
    members = members if members is not None else enumerate_members(n)
    out = {}
    for i in range(1, n - 3):
        Ji = J(n, i)
        doms = [a for a in members if not a.is_partial_identity() and a.domain == Ji]
        ims = [a for a in members if not a.is_partial_identity() and a.image == Ji]
        out[i] = (doms, ims)
    return out


def _raw_rank(n, members, max_size, forced=()):
    target = members.as_set()
    forced = list(forced)
    pool = [a for a in members if a != identity(n) and a not in forced]
    for k in range(len(forced), max_size + 1):
        if k - len(forced) > len(pool):
            break
        for subset in combinations(pool, k - len(forced)):
            if _generates(n, forced + list(subset), target):
                return k
    raise SearchBudgetExceeded(f"no generating set of size <= {max_size} for n={n}")


def _pruned_rank(n, members, max_size):
    target = members.as_set()
    # every generating set holds all v_i, u_{n-2}, x_{n-2} ...
    forced = [symbol_map(n, s) for s in (*[v(i) for i in range(1, n + 1)], u(n - 2), x(n - 2))]
    forced_set = set(forced)
    # ... and distinct elements with domain J_i and image J_i for each i <= n-4
    families = []
    for doms, ims in j_class_witnesses(n, members).values():
        families += [doms, ims]
    pool = [a for a in members if a != identity(n) and a not in forced_set]
    floor = len(forced) + len(families)
    for k in range(floor, max_size + 1):
        extra = k - len(forced)
        if extra > len(pool):
            break
        tried = set()
        for reps in product(*families):
            if len(set(reps)) != len(reps):
                continue
            rest = [a for a in pool if a not in reps]
            for more in combinations(rest, extra - len(reps)):
                chosen = frozenset(reps + more)
                if chosen in tried:
                    continue
                tried.add(chosen)
                if _generates(n, forced + list(chosen), target):
                    return k
    raise SearchBudgetExceeded(f"no generating set of size <= {max_size} for n={n}")


PRUNING = ("lemmas", "partial-identities", "none")


def brute_rank(n: int, max_subset_size: int | None = None, pruning: str | None = None) -> int:
    """Least size of a generating set of IOF_n^par (identity comes for free).

    ``pruning`` picks which necessary elements every candidate set must hold:
    ``"lemmas"`` (default for n >= 4) forces all v_i, u_{n-2}, x_{n-2} and
    distinct elements with domain and image J_i; ``"partial-identities"``
    forces only the v_i; ``"none"`` is the plain subset search (default for
    n <= 3).
    """
    members = enumerate_members(n)
    if max_subset_size is None:
        max_subset_size = len(members)
    if pruning is None:
        pruning = "lemmas" if n >= 4 else "none"
    if pruning not in PRUNING:
        raise ValueError(f"pruning must be one of {PRUNING}")
    if pruning == "lemmas":
        if n < 4:
            raise ValueError("lemma pruning needs n >= 4")
        return _pruned_rank(n, members, max_subset_size)
    forced = [symbol_map(n, v(i)) for i in range(1, n + 1)] if pruning != "none" else []
    return _raw_rank(n, members, max_subset_size, forced)


def check_minimality(n: int) -> bool:
    """No generator of the standard set can be dropped."""
    members = enumerate_members(n)
    gens = [g for _, g in standard_generating_set(n)]
    for k in range(len(gens)):
        if is_generating(n, gens[:k] + gens[k + 1:], members):
            return False
    return True


def word_search(n: int, target: PartialInjection, letters=None) -> tuple[Symbol, ...]:
    """Shortest word over ``letters`` (default: the whole alphabet) reaching ``target``."""
    if letters is None:
        letters = [v(i) for i in range(1, n + 1)]
        letters += [u(i) for i in range(1, n - 1)] + [x(i) for i in range(1, n - 1)]
    maps = [(s, symbol_map(n, s)) for s in letters]
    start = identity(n)
    parent = {start: None}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        if a == target:
            word = []
            while parent[a] is not None:
                a, s = parent[a]
                word.append(s)
            return tuple(reversed(word))
        for s, g in maps:
            b = compose(a, g)
            if b not in parent:
                parent[b] = (a, s)
                queue.append(b)
    raise ValueError(f"{target} is not generated by the given letters")
