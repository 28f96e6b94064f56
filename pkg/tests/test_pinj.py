import random

import pytest
from hypothesis import given, strategies as st

from iofpar.generators import gen_u, gen_v, gen_x
from iofpar.pinj import (
    all_partial_injections,
    compose,
    decode,
    empty,
    encode,
    identity,
    inverse,
    make,
    partial_identity,
    rank_of,
)

from conftest import partial_injections, pi


def pointwise(alpha, beta):
    """Reference product: apply alpha then beta point by point."""
    a, b = alpha.as_dict(), beta.as_dict()
    return {x: b[a[x]] for x in range(1, alpha.n + 1) if x in a and a[x] in b}


def test_make_examples():
    assert make(3, [(1, 3)]).pairs == ((1, 3),)
    assert make(4, []).rank == 0
    assert make(4, [(2, 2), (1, 1)]).pairs == ((1, 1), (2, 2))


@pytest.mark.parametrize(
    "n, pairs",
    [(3, [(1, 1), (1, 2)]), (3, [(1, 2), (2, 2)]), (3, [(0, 1)]), (3, [(1, 4)]), (0, [])],
)
def test_make_rejects(n, pairs):
    with pytest.raises(ValueError):
        make(n, pairs)


def test_compose_examples():
    assert compose(gen_v(4, 1), gen_v(4, 2)) == partial_identity(4, [3, 4])
    # u_2 then x_2 on 4 points, evaluated by hand: 1->3->1, 2->4->2
    assert pointwise(gen_u(4, 2), gen_x(4, 2)) == {1: 1, 2: 2}
    assert compose(gen_u(4, 2), gen_x(4, 2)) == partial_identity(4, [1, 2])


def test_compose_mismatched_n():
    with pytest.raises(ValueError):
        compose(identity(3), identity(4))


def test_inverse_examples():
    assert inverse(gen_u(4, 2)) == pi(4, (3, 1), (4, 2))
    assert inverse(empty(4)) == empty(4)


def test_rank_examples():
    assert rank_of(identity(4)) == 4
    assert rank_of(empty(5)) == 0
    u = gen_u(6, 2)
    assert rank_of(u) == 3 and u.domain == (1, 2, 6)
    assert identity(1).pairs == ((1, 1),)


def test_encoding():
    assert encode(pi(6, (4, 6), (1, 1))) == "n=6;1>1,4>6"
    assert encode(empty(4)) == "n=4;"
    assert decode("n=6;1>1, 4>6") == pi(6, (1, 1), (4, 6))
    assert decode("1>1,4>6", n=6) == pi(6, (1, 1), (4, 6))
    assert decode("n=4;") == empty(4)
    with pytest.raises(ValueError):
        decode("1-1", n=4)
    with pytest.raises(ValueError):
        decode("n=5;1>1", n=4)


def test_symmetric_inverse_monoid_size():
    # |I_n| = sum_k C(n,k)^2 k!
    assert [sum(1 for _ in all_partial_injections(n)) for n in range(1, 6)] == [2, 7, 34, 209, 1546]


@given(partial_injections(), st.randoms())
def test_canonical_form_ignores_input_order(alpha, rnd):
    pairs = list(alpha.pairs)
    rnd.shuffle(pairs)
    assert make(alpha.n, pairs) == alpha


@given(partial_injections())
def test_encode_roundtrip(alpha):
    assert decode(encode(alpha)) == alpha


@given(partial_injections())
def test_inverse_involution_and_idempotents(alpha):
    assert inverse(inverse(alpha)) == alpha
    assert compose(alpha, inverse(alpha)) == partial_identity(alpha.n, alpha.domain)
    assert compose(inverse(alpha), alpha) == partial_identity(alpha.n, alpha.image)


@given(st.data())
def test_compose_matches_pointwise_and_rank_bound(data):
    n = data.draw(st.integers(1, 7))
    a = data.draw(partial_injections(n=n))
    b = data.draw(partial_injections(n=n))
    ab = compose(a, b)
    assert ab.as_dict() == pointwise(a, b)
    assert ab.rank <= min(a.rank, b.rank)
    assert compose(identity(n), a) == a == compose(a, identity(n))
    assert compose(a, empty(n)) == empty(n)


def test_associativity_sampled_I4():
    elems = list(all_partial_injections(4))
    rnd = random.Random(4)
    for _ in range(20000):
        a, b, c = rnd.choice(elems), rnd.choice(elems), rnd.choice(elems)
        assert compose(compose(a, b), c) == compose(a, compose(b, c))
