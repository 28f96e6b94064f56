"""Normal-form words for members of IOF_n^par.

For a member alpha with graph d_1 < ... < d_p -> m_1 < ... < m_p, the word is
``v_A w*`` where ``w*`` lists the u-runs in order followed by the x-runs
inverted and in reverse order, and ``v_A`` deletes the points that survive
``w*`` but lie outside dom(alpha).

Indices below follow the 1-based positions of the graph; ``d[k]`` and
``m[k]`` are padded lists with a dummy at index 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .fence import failed_condition
from .generators import BlockWord, Word, eval_word, expand_to_An, format_word, v
from .pinj import PartialInjection, inverse


class NotAMember(ValueError):
    pass


class LemmaViolation(AssertionError):
    """An internal identity of the construction failed to hold."""


@dataclass(frozen=True)
class BreakpointData:
    """Breakpoint positions, runs w_1..w_{l+1} and their anchors.

    ``r`` holds r_1..r_l followed by r_{l+1} = p. ``blocks[k-1]`` is w_k and
    the last entry is ``None`` when d_p = m_p. ``anchors[k-1]`` is
    (k_u, k_x).
    """

    n: int
    d: tuple[int, ...]
    m: tuple[int, ...]
    r: tuple[int, ...]
    blocks: tuple[BlockWord | None, ...]
    anchors: tuple[tuple[int, int], ...]

    @property
    def l(self) -> int:
        return len(self.r) - 1

    @property
    def p(self) -> int:
        return len(self.d)

    def present(self):
        """(k, w_k) for every non-empty run, k 1-based."""
        return [(k, w) for k, w in enumerate(self.blocks, 1) if w is not None]

    def u_runs(self):
        return [(k, w) for k, w in self.present() if w.family == "u"]

    def x_runs(self):
        return [(k, w) for k, w in self.present() if w.family == "x"]

    def star_blocks(self) -> tuple[BlockWord, ...]:
        """Runs of w*: u-runs ascending, then x-runs descending and inverted."""
        ups = [w for _, w in self.u_runs()]
        downs = [w.inverse() for _, w in reversed(self.x_runs())]
        return tuple(ups + downs)

    def star_word(self) -> Word:
        return tuple(s for b in self.star_blocks() for s in b.symbols())


@dataclass(frozen=True)
class Factorization:
    n: int
    guard: frozenset[int] = frozenset()
    u_blocks: tuple[BlockWord, ...] = ()
    x_blocks: tuple[BlockWord, ...] = ()
    breakpoints: BreakpointData | None = field(default=None, compare=False)

    def trace(self) -> dict:
        bp = self.breakpoints
        blocks = []
        if bp is not None:
            blocks = [
                None if w is None else {"family": w.family, "i": w.i, "j": w.j}
                for w in bp.blocks
            ]
        return {
            "l": 0 if bp is None else bp.l,
            "r": [] if bp is None else list(bp.r[:-1]),
            "blocks": blocks,
            "guard": sorted(self.guard),
        }


def require_member(alpha: PartialInjection) -> None:
    cond = failed_condition(alpha)
    if cond is not None:
        raise NotAMember(f"{alpha} is not in IOF_{alpha.n}^par (condition {cond} fails)")


def _breakpoints(alpha: PartialInjection) -> BreakpointData:
    n, p = alpha.n, alpha.rank
    d = [0] + [a for a, _ in alpha.pairs]
    m = [0] + [b for _, b in alpha.pairs]

    r = [i for i in range(1, p) if d[i + 1] - d[i] != m[i + 1] - m[i]]
    blocks: list[BlockWord | None] = []
    for ri in r:
        dd, dm = d[ri + 1] - d[ri], m[ri + 1] - m[ri]
        if dm > dd:
            blocks.append(BlockWord("x", m[ri], (dm - dd) // 2))
        else:
            blocks.append(BlockWord("u", d[ri], (dd - dm) // 2))
    if p == 0 or d[p] == m[p]:
        blocks.append(None)
    elif d[p] > m[p]:
        blocks.append(BlockWord("x", m[p], (d[p] - m[p]) // 2))
    else:
        blocks.append(BlockWord("u", d[p], (m[p] - d[p]) // 2))
    r.append(p)
    for w in blocks:
        if w is not None:
            w.check(n)

    # anchors, computed backwards from w_{l+1}
    last = blocks[-1]
    if last is None:
        anchors = [(d[p], d[p])]
    elif last.family == "u":
        anchors = [(last.i, last.i + 2 * last.j)]
    else:
        anchors = [(last.i + 2 * last.j, last.i)]
    for w in reversed(blocks[:-1]):
        nxt_u, nxt_x = anchors[-1]
        if w.family == "u":
            a = nxt_u - w.i - 2 * w.j - 2
            anchors.append((w.i, nxt_x - a - 2))
        else:
            b = nxt_x - w.i - 2 * w.j - 2
            anchors.append((nxt_u - b - 2, w.i))
    anchors.reverse()

    bp = BreakpointData(
        n, tuple(d[1:]), tuple(m[1:]), tuple(r), tuple(blocks), tuple(anchors)
    )
    if p:
        for k, (ku, kx) in enumerate(anchors, 1):
            if (ku, kx) != (d[r[k - 1]], m[r[k - 1]]):
                raise LemmaViolation(
                    f"anchor {k} of {alpha}: got ({ku}, {kx}), "
                    f"expected ({d[r[k - 1]]}, {m[r[k - 1]]})"
                )
    return bp


def breakpoints(alpha: PartialInjection) -> BreakpointData:
    """Breakpoint data for a member that is not a partial identity."""
    if alpha.n < 4:
        raise ValueError("normal forms are defined for n >= 4")
    require_member(alpha)
    if alpha.is_partial_identity():
        raise ValueError(f"{alpha} is a partial identity; it has no breakpoints")
    return _breakpoints(alpha)


def _span(lo: int, hi: int) -> range:
    return range(lo, hi + 1)


def guard_set(alpha: PartialInjection, bp: BreakpointData | None = None) -> frozenset[int]:
    """Indices of the v-letters prepended to w*.

    Partial identities (including the empty map) get the complement of
    their domain directly.
    """
    n = alpha.n
    if alpha.is_partial_identity():
        return frozenset(set(range(1, n + 1)) - set(alpha.domain))
    if bp is None:
        bp = breakpoints(alpha)
    p = bp.p
    d = (0,) + bp.d
    m = (0,) + bp.m
    A: set[int] = set()

    # rules (1) and (2): points beyond the last run
    if d[p] <= n - 2:
        if m[p] < d[p]:
            A.update(_span(d[p] + 2, n))
        elif n - 1 > m[p] > d[p]:
            A.update(_span(m[p] + 2, n))
        elif m[p] == d[p]:
            A.update(_span(m[p] + 1, n))
    elif d[p] == m[p] == n - 1:
        A.add(n)

    # rule (3): gaps between consecutive domain points
    for k in range(2, p + 1):
        dd, dm = d[k] - d[k - 1], m[k] - m[k - 1]
        if 2 <= dm == dd:
            A.update(_span(d[k - 1] + 1, d[k] - 1))
        elif 2 < dm < dd:
            A.update(_span(d[k] - (dm - 2), d[k] - 1))
        elif dm > dd > 2:
            A.update(_span(d[k - 1] + 2, d[k] - 1))

    # rules (4)-(6): points below the first domain point
    if d[1] == 1 or m[1] == 1:
        pass
    elif d[1] <= m[1]:
        A.update(_span(1, d[1] - 1))
    else:
        A.update(_span(d[1] - m[1] + 1, d[1] - 1))
    return frozenset(A)


def factorize(alpha: PartialInjection, verify: bool = False) -> Factorization:
    """Normal form of a member; ``verify`` also checks the run lemmas."""
    n = alpha.n
    if n < 4:
        raise ValueError("normal forms are defined for n >= 4")
    require_member(alpha)
    if alpha.is_partial_identity():
        return Factorization(n, guard_set(alpha))
    bp = _breakpoints(alpha)
    if verify:
        verify_lemmas(bp)
    guard = guard_set(alpha, bp)
    if guard & set(bp.d):
        raise LemmaViolation(f"guard {sorted(guard)} meets dom of {alpha}")
    return Factorization(
        n,
        guard,
        tuple(w for _, w in bp.u_runs()),
        tuple(w for _, w in reversed(bp.x_runs())),
        bp,
    )


def render(f: Factorization) -> Word:
    """v_A, then the u-runs, then the inverted x-runs, over the full alphabet."""
    word = [v(a) for a in sorted(f.guard)]
    for b in f.u_blocks:
        word += b.symbols()
    for b in f.x_blocks:
        word += b.inverse().symbols()
    return tuple(word)


def render_over_An(f: Factorization) -> Word:
    return expand_to_An(f.n, render(f))


def factor_word(alpha: PartialInjection, alphabet: str = "xn") -> str:
    f = factorize(alpha)
    word = render_over_An(f) if alphabet == "an" else render(f)
    return format_word(word)


def star_word(alpha: PartialInjection) -> Word:
    """w* for any member (empty for partial identities)."""
    require_member(alpha)
    return _breakpoints(alpha).star_word()


def check_inverse_word(alpha: PartialInjection) -> bool:
    """The star word of the inverse evaluates to the inverse of the star word."""
    n = alpha.n
    lhs = eval_word(n, star_word(inverse(alpha)))
    rhs = inverse(eval_word(n, star_word(alpha)))
    return lhs == rhs


def verify_lemmas(bp: BreakpointData) -> None:
    """Check the separation and length identities of the runs.

    Raises :class:`LemmaViolation` naming the first identity that fails.
    """
    n = bp.n
    d = (0,) + bp.d
    m = (0,) + bp.m
    r = (0,) + bp.r
    runs = bp.present()
    anchors = (None,) + bp.anchors

    for fam in ("u", "x"):
        same = [(k, w) for k, w in runs if w.family == fam]
        for (k, w), (k2, w2) in zip(same, same[1:]):
            if not w.i + 2 * w.j + 1 < w2.i:
                raise LemmaViolation(f"separation: runs w_{k}, w_{k2} overlap")

    for k, w in runs:
        if k > bp.l:
            continue
        nxt_u, nxt_x = anchors[k + 1]
        bound = nxt_u if w.family == "u" else nxt_x
        if not w.i + 2 * w.j + 2 <= bound:
            raise LemmaViolation(f"run w_{k} reaches past anchor {k + 1}")

    # domain and image anchors recovered from run lengths alone
    for k, w in runs:
        xs = sum(w2.j for k2, w2 in runs if w2.family == "x" and k2 >= k)
        us = sum(w2.j for k2, w2 in runs if w2.family == "u" and k2 >= k)
        if w.family == "x":
            later_u = sum(w2.j for k2, w2 in runs if w2.family == "u" and k2 > k)
            if d[r[k]] != w.i + 2 * xs - 2 * later_u:
                raise LemmaViolation(f"domain anchor of x-run w_{k}")
        else:
            later_x = sum(w2.j for k2, w2 in runs if w2.family == "x" and k2 > k)
            if m[r[k]] != w.i + 2 * us - 2 * later_x:
                raise LemmaViolation(f"image anchor of u-run w_{k}")

    for k, w in runs:
        if k > bp.l:
            continue
        if w.family == "u":
            lhs = d[r[k + 1]] - (m[r[k + 1]] - m[r[k]] - 2)
            if lhs != w.i + 2 * w.j + 2:
                raise LemmaViolation(f"translation identity for u-run w_{k}")
        else:
            b = anchors[k + 1][1] - w.i - 2 * w.j - 2
            if d[r[k]] + 2 != anchors[k + 1][0] - b:
                raise LemmaViolation(f"translation identity for x-run w_{k}")
    for k, w in runs:
        w.check(n)


def evaluate(f: Factorization) -> PartialInjection:
    return eval_word(f.n, render(f))
