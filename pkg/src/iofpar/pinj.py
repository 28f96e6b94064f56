"""Partial injections on {1, ..., n} as immutable values.

Maps act on the right and compose left to right: ``x(ab) = (xa)b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations


@dataclass(frozen=True, slots=True)
class PartialInjection:
    """Graph of a partial injection, stored as pairs sorted by domain point.

    Build instances with :func:`make`; the constructor assumes its input is
    already canonical.
    """

    n: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.pairs)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(m for _, m in self.pairs))

    @property
    def rank(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __call__(self, x: int) -> int | None:
        for d, m in self.pairs:
            if d == x:
                return m
        return None

    def __mul__(self, other: PartialInjection) -> PartialInjection:
        return compose(self, other)

    def __str__(self) -> str:
        return encode(self)

    def is_partial_identity(self) -> bool:
        return all(d == m for d, m in self.pairs)


def make(n: int, pairs=()) -> PartialInjection:
    """Validate ``pairs`` and return the canonical partial injection."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    pairs = tuple(sorted((int(d), int(m)) for d, m in pairs))
    seen_d, seen_m = set(), set()
    for d, m in pairs:
        if not (1 <= d <= n and 1 <= m <= n):
            raise ValueError(f"pair {d}>{m} has a point outside 1..{n}")
        if d in seen_d:
            raise ValueError(f"duplicate domain point {d}")
        if m in seen_m:
            raise ValueError(f"duplicate image point {m}")
        seen_d.add(d)
        seen_m.add(m)
    return PartialInjection(n, pairs)


def identity(n: int) -> PartialInjection:
    return make(n, ((i, i) for i in range(1, n + 1)))


def empty(n: int) -> PartialInjection:
    return make(n)


def partial_identity(n: int, domain) -> PartialInjection:
    return make(n, ((i, i) for i in domain))


def compose(alpha: PartialInjection, beta: PartialInjection) -> PartialInjection:
    """Left-to-right product: apply ``alpha`` first, then ``beta``."""
    if alpha.n != beta.n:
        raise ValueError(f"cannot compose maps on {alpha.n} and {beta.n} points")
    b = dict(beta.pairs)
    # alpha's pairs are already sorted by domain point, so the result is canonical
    return PartialInjection(
        alpha.n, tuple((d, b[m]) for d, m in alpha.pairs if m in b)
    )


def inverse(alpha: PartialInjection) -> PartialInjection:
    return PartialInjection(alpha.n, tuple(sorted((m, d) for d, m in alpha.pairs)))


def rank_of(alpha: PartialInjection) -> int:
    return len(alpha.pairs)


def encode(alpha: PartialInjection) -> str:
    """Text form ``n=<N>;d1>m1,d2>m2,...``; the empty map is ``n=<N>;``."""
    body = ",".join(f"{d}>{m}" for d, m in alpha.pairs)
    return f"n={alpha.n};{body}"


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """Parse a ``d>m`` comma list. Whitespace is ignored."""
    text = "".join(text.split())
    if not text:
        return []
    out = []
    for item in text.split(","):
        left, sep, right = item.partition(">")
        if not sep or not left.isdigit() or not right.isdigit():
            raise ValueError(f"malformed pair {item!r}; expected d>m")
        out.append((int(left), int(right)))
    return out


def decode(text: str, n: int | None = None) -> PartialInjection:
    """Inverse of :func:`encode`.

    A bare pair list (no ``n=`` prefix) is accepted when ``n`` is given.
    """
    text = text.strip()
    if text.startswith("n="):
        head, sep, body = text.partition(";")
        if not sep:
            raise ValueError(f"missing ';' in {text!r}")
        parsed_n = int(head[2:].strip())
        if n is not None and n != parsed_n:
            raise ValueError(f"encoded n={parsed_n} does not match n={n}")
        n = parsed_n
    else:
        body = text
    if n is None:
        raise ValueError("universe size n is required")
    return make(n, parse_pairs(body))


def all_partial_injections(n: int):
    """Yield every element of the symmetric inverse monoid on n points."""
    points = range(1, n + 1)
    for k in range(n + 1):
        for dom in combinations(points, k):
            for im in permutations(points, k):
                yield PartialInjection(n, tuple(zip(dom, im)))
