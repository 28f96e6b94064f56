"""Generator letters v_i, u_i, x_i, their runs, and word evaluation."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .pinj import PartialInjection, compose, identity, inverse, make

FAMILIES = ("v", "u", "x")


@dataclass(frozen=True, order=True)
class Symbol:
    family: str
    index: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown generator family {self.family!r}")

    def __str__(self):
        return f"{self.family}{self.index}"

    def check(self, n: int) -> None:
        top = n if self.family == "v" else n - 2
        if not 1 <= self.index <= top:
            raise ValueError(f"{self} is not a letter of the alphabet for n={n}")


def v(i: int) -> Symbol:
    return Symbol("v", i)


def u(i: int) -> Symbol:
    return Symbol("u", i)


def x(i: int) -> Symbol:
    return Symbol("x", i)


Word = tuple  # tuple[Symbol, ...]


def parse_word(text: str) -> Word:
    """Parse whitespace separated letters such as ``"v3 u4 x1"``."""
    out = []
    for tok in text.split():
        fam, digits = tok[:1].lower(), tok[1:]
        if fam not in FAMILIES or not digits.isdigit():
            raise ValueError(f"malformed letter {tok!r}")
        out.append(Symbol(fam, int(digits)))
    return tuple(out)


def format_word(word) -> str:
    return " ".join(str(s) for s in word)


@dataclass(frozen=True)
class BlockWord:
    """The run u_{i,j} = u_i u_{i+2} ... u_{i+2j-2}, or likewise x_{i,j}.

    With ``inverted`` set, the letters are read in reverse order
    (x_{i+2j-2} ... x_i), which is how X runs appear in normal forms.
    """

    family: str  # "u" or "x"
    i: int
    j: int
    inverted: bool = False

    def check(self, n: int) -> None:
        if self.family not in ("u", "x"):
            raise ValueError(f"block family must be u or x, got {self.family!r}")
        if not 1 <= self.i <= n - 2:
            raise ValueError(f"block start {self.i} outside 1..{n - 2}")
        if not 1 <= self.j <= (n - self.i) // 2:
            raise ValueError(
                f"block length {self.j} outside 1..{(n - self.i) // 2} for start {self.i}"
            )

    @property
    def end(self) -> int:
        """Index of the last letter, i + 2j - 2."""
        return self.i + 2 * self.j - 2

    def symbols(self) -> Word:
        idx = range(self.i, self.i + 2 * self.j, 2)
        if self.inverted:
            idx = reversed(idx)
        return tuple(Symbol(self.family, k) for k in idx)

    def inverse(self) -> BlockWord:
        return BlockWord(self.family, self.i, self.j, not self.inverted)

    def __str__(self):
        tag = "^-1" if self.inverted else ""
        return f"{self.family}[{self.i},{self.j}]{tag}"


def _check_index(n, i, top):
    if not 1 <= i <= top:
        raise ValueError(f"generator index {i} outside 1..{top} for n={n}")


@lru_cache(maxsize=None)
def gen_v(n: int, i: int) -> PartialInjection:
    """Partial identity missing the single point ``i``."""
    _check_index(n, i, n)
    return make(n, ((k, k) for k in range(1, n + 1) if k != i))


@lru_cache(maxsize=None)
def gen_u(n: int, i: int) -> PartialInjection:
    """Shift 1..i up by two, drop i+1..i+3, fix i+4..n."""
    _check_index(n, i, n - 2)
    low = ((k, k + 2) for k in range(1, i + 1))
    high = ((k, k) for k in range(i + 4, n + 1))
    return make(n, (*low, *high))


@lru_cache(maxsize=None)
def gen_x(n: int, i: int) -> PartialInjection:
    return inverse(gen_u(n, i))


_GEN = {"v": gen_v, "u": gen_u, "x": gen_x}


def symbol_map(n: int, s: Symbol) -> PartialInjection:
    return _GEN[s.family](n, s.index)


def eval_word(n: int, word) -> PartialInjection:
    """Left-to-right product of the letters; the empty word gives the identity."""
    return reduce(compose, (symbol_map(n, s) for s in word), identity(n))


def run_product(n: int, block: BlockWord) -> PartialInjection:
    block.check(n)
    return eval_word(n, block.symbols())


def run_formula(n: int, block: BlockWord) -> PartialInjection:
    """Closed form of a run's action, independent of letter-by-letter products.

    u_{i,j} shifts 1..i up by 2j and fixes i+2j+2..n; the inverted x run is
    its inverse. Non-inverted x runs have no closed form here.
    """
    block.check(n)
    i, j = block.i, block.j
    up = [(k, k + 2 * j) for k in range(1, i + 1)]
    up += [(k, k) for k in range(i + 2 * j + 2, n + 1)]
    if block.family == "u" and not block.inverted:
        return make(n, up)
    if block.family == "x" and block.inverted:
        return make(n, ((m, d) for d, m in up))
    raise ValueError(f"no closed form for {block}")


def standard_generating_set(n: int) -> list[tuple[Symbol, PartialInjection]]:
    """The 3n-6 generators: every v_i, and u_i, x_i for i in 1..n-4 and i = n-2."""
    if n < 4:
        raise ValueError(f"the standard generating set needs n >= 4, got {n}")
    idx = [*range(1, n - 3), n - 2]
    syms = [v(i) for i in range(1, n + 1)] + [u(i) for i in idx] + [x(i) for i in idx]
    return [(s, symbol_map(n, s)) for s in syms]


def in_standard_set(n: int, s: Symbol) -> bool:
    return s.family == "v" or s.index != n - 3


def expand_to_An(n: int, word) -> Word:
    """Rewrite u_{n-3} as v_{n-2} u_{n-2} and x_{n-3} as v_n x_{n-2}."""
    out = []
    for s in word:
        if s.family == "u" and s.index == n - 3:
            out += [v(n - 2), u(n - 2)]
        elif s.family == "x" and s.index == n - 3:
            out += [v(n), x(n - 2)]
        else:
            out.append(s)
    return tuple(out)
