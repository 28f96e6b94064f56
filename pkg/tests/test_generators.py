from functools import reduce

import pytest
from hypothesis import given, strategies as st

from iofpar.fence import is_member_fast
from iofpar.generators import (
    BlockWord,
    Symbol,
    eval_word,
    expand_to_An,
    format_word,
    gen_u,
    gen_v,
    gen_x,
    in_standard_set,
    parse_word,
    run_formula,
    run_product,
    standard_generating_set,
    u,
    v,
    x,
)
from iofpar.pinj import compose, empty, identity, inverse

from conftest import pi


def test_gen_v():
    assert gen_v(3, 2) == pi(3, (1, 1), (3, 3))
    for n in range(1, 7):
        for i in range(1, n + 1):
            assert gen_v(n, i).rank == n - 1
    assert compose(gen_v(4, 1), gen_v(4, 1)) == gen_v(4, 1)
    with pytest.raises(ValueError):
        gen_v(4, 5)


def test_gen_u_x():
    assert gen_u(4, 2) == pi(4, (1, 3), (2, 4))
    assert gen_u(6, 2) == pi(6, (1, 3), (2, 4), (6, 6))
    assert gen_x(4, 2) == pi(4, (3, 1), (4, 2))
    with pytest.raises(ValueError):
        gen_u(4, 3)
    with pytest.raises(ValueError):
        gen_x(4, 0)


@pytest.mark.parametrize("n", range(3, 11))
def test_single_letter_actions(n):
    # dom(u_i) = {1..i} u {i+4..n}, +2 below, fixed above; x_i is its inverse
    for i in range(1, n - 1):
        ui = gen_u(n, i).as_dict()
        assert sorted(ui) == [*range(1, i + 1), *range(i + 4, n + 1)]
        assert all(ui[r] == r + 2 for r in range(1, i + 1))
        assert all(ui[r] == r for r in range(i + 4, n + 1))
        xi = gen_x(n, i).as_dict()
        assert sorted(xi) == [*range(3, i + 3), *range(i + 4, n + 1)]
        assert all(xi[r] == r - 2 for r in range(3, i + 3))
        assert all(xi[r] == r for r in range(i + 4, n + 1))


def test_run_product_examples():
    assert run_product(6, BlockWord("u", 2, 2)) == compose(gen_u(6, 2), gen_u(6, 4))
    assert run_product(6, BlockWord("u", 2, 2)) == pi(6, (1, 5), (2, 6))
    for n in range(3, 8):
        for i in range(1, n - 1):
            assert run_product(n, BlockWord("u", i, 1)) == gen_u(n, i)
    xinv = run_product(6, BlockWord("x", 1, 1, inverted=True))
    assert xinv == gen_x(6, 1)
    assert xinv.domain == (3, 5, 6)
    with pytest.raises(ValueError):
        run_product(6, BlockWord("u", 2, 3))


@pytest.mark.parametrize("n", range(3, 11))
def test_runs_match_closed_form(n):
    for i in range(1, n - 1):
        for j in range(1, (n - i) // 2 + 1):
            ub = BlockWord("u", i, j)
            xb = BlockWord("x", i, j, inverted=True)
            up = run_product(n, ub)
            assert up == reduce(compose, (gen_u(n, k) for k in range(i, i + 2 * j, 2)))
            assert up == run_formula(n, ub)
            assert run_product(n, xb) == run_formula(n, xb)
            assert inverse(up) == run_product(n, xb)


def test_block_symbols():
    assert BlockWord("x", 1, 3).symbols() == (x(1), x(3), x(5))
    assert BlockWord("x", 1, 3, inverted=True).symbols() == (x(5), x(3), x(1))
    assert BlockWord("u", 2, 2).inverse().inverse() == BlockWord("u", 2, 2)


def test_standard_generating_set():
    names = [str(s) for s, _ in standard_generating_set(4)]
    assert names == ["v1", "v2", "v3", "v4", "u2", "x2"]
    names = [str(s) for s, _ in standard_generating_set(5)]
    assert names == ["v1", "v2", "v3", "v4", "v5", "u1", "u3", "x1", "x3"]
    assert len(standard_generating_set(7)) == 15
    for n in range(4, 13):
        gens = standard_generating_set(n)
        assert len(gens) == 3 * n - 6
        assert len({g for _, g in gens}) == 3 * n - 6
        assert all(is_member_fast(g) for _, g in gens)
    with pytest.raises(ValueError):
        standard_generating_set(3)


def test_eval_word():
    assert eval_word(4, (u(2),)) == gen_u(4, 2)
    assert eval_word(4, ()) == identity(4)
    for n in range(1, 7):
        assert eval_word(n, tuple(v(i) for i in range(1, n + 1))) == empty(n)
    assert eval_word(5, (v(3), u(3))) == gen_u(5, 2)
    assert eval_word(4, (v(2), u(2))) == pi(4, (1, 3))
    with pytest.raises(ValueError):
        eval_word(4, (u(3),))


def test_word_text():
    w = parse_word("v3 u4  x1")
    assert w == (v(3), u(4), x(1))
    assert format_word(w) == "v3 u4 x1"
    with pytest.raises(ValueError):
        parse_word("w3")
    with pytest.raises(ValueError):
        Symbol("y", 1)


def test_expand_examples():
    for n in range(4, 9):
        assert expand_to_An(n, (u(n - 3),)) == (v(n - 2), u(n - 2))
        assert expand_to_An(n, (x(n - 3),)) == (v(n), x(n - 2))
        assert eval_word(n, (u(n - 3),)) == eval_word(n, (v(n - 2), u(n - 2)))
        assert eval_word(n, (x(n - 3),)) == eval_word(n, (v(n), x(n - 2)))
    w = (v(1), u(1), x(2))
    assert expand_to_An(6, w) == w


@st.composite
def words(draw):
    n = draw(st.integers(4, 9))
    letters = [v(i) for i in range(1, n + 1)] + [u(i) for i in range(1, n - 1)] + [x(i) for i in range(1, n - 1)]
    return n, tuple(draw(st.lists(st.sampled_from(letters), max_size=12)))


@given(words())
def test_expand_preserves_value(nw):
    n, w = nw
    w2 = expand_to_An(n, w)
    assert eval_word(n, w2) == eval_word(n, w)
    assert all(in_standard_set(n, s) for s in w2)
    assert is_member_fast(eval_word(n, w))
