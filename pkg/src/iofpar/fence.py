"""Up-fence order 1 < 2 > 3 < ... on {1..n} and membership in IOF_n^par.

Two routes to membership are kept deliberately separate:
``is_member_direct`` checks the defining properties pointwise, while
``is_member_fast`` uses the four gap conditions on the sorted graph.
"""
from __future__ import annotations

from .pinj import PartialInjection, inverse


def _check_point(x: int, n: int) -> None:
    if not 1 <= x <= n:
        raise ValueError(f"point {x} outside 1..{n}")


def fence_below(x: int, y: int, n: int) -> bool:
    """True iff ``x`` is covered by ``y`` in the up-fence (odd points are minimal)."""
    _check_point(x, n)
    _check_point(y, n)
    return abs(x - y) == 1 and x % 2 == 1


def comparable(x: int, y: int) -> bool:
    return abs(x - y) <= 1


def is_order_preserving(alpha: PartialInjection) -> bool:
    # pairs are sorted by domain point, so adjacent images suffice
    images = [m for _, m in alpha.pairs]
    return all(a <= b for a, b in zip(images, images[1:]))


def is_parity_preserving(alpha: PartialInjection) -> bool:
    return all((d - m) % 2 == 0 for d, m in alpha.pairs)


def is_fence_preserving(alpha: PartialInjection) -> bool:
    n = alpha.n
    a = alpha.as_dict()
    for x in a:
        for y in a:
            if fence_below(x, y, n) and not fence_below(a[x], a[y], n):
                return False
    return True


def is_member_direct(alpha: PartialInjection) -> bool:
    """Membership straight from the definition (slow reference route)."""
    return (
        is_order_preserving(alpha)
        and is_parity_preserving(alpha)
        and is_fence_preserving(alpha)
        and is_fence_preserving(inverse(alpha))
    )


def failed_condition(alpha: PartialInjection) -> str | None:
    """Name the first of the four gap conditions that ``alpha`` violates.

    Returns ``None`` for members. Condition labels are ``"i"`` (images
    increase), ``"ii"`` (first pair has matching parity), ``"iii"`` (a gap
    is 1 on one side iff on the other) and ``"iv"`` (gap parities agree).
    """
    pairs = alpha.pairs
    if not pairs:
        return None
    for (_, m0), (_, m1) in zip(pairs, pairs[1:]):
        if m1 <= m0:
            return "i"
    d1, m1 = pairs[0]
    if (d1 - m1) % 2:
        return "ii"
    for (d0, m0), (d1, m1) in zip(pairs, pairs[1:]):
        dd, dm = d1 - d0, m1 - m0
        if (dd == 1) != (dm == 1):
            return "iii"
    for (d0, m0), (d1, m1) in zip(pairs, pairs[1:]):
        if (d1 - d0) % 2 != (m1 - m0) % 2:
            return "iv"
    return None


def is_member_fast(alpha: PartialInjection) -> bool:
    return failed_condition(alpha) is None


CONDITION_TEXT = {
    "i": "images are not strictly increasing",
    "ii": "first domain point and its image differ in parity",
    "iii": "a gap equals 1 on one side but not the other",
    "iv": "domain and image gaps differ in parity",
}
