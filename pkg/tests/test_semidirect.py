from random import Random

import pytest
from hypothesis import given, strategies as st

from tropkex import (
    DimensionMismatchError,
    OpCounter,
    SemigroupOpKind,
    SemigroupPair,
    TropicalMatrix,
    build_square_cache,
    op_circ,
    op_star,
    pair_from_json,
    pair_to_json,
    power,
    power_from_cache,
)
from tropkex.semidirect import apply, op_kind_from_json, op_kind_to_json

from _oracles import chain_fold, fold_left, fold_right, naive_apply, random_pair

CIRC = SemigroupOpKind.CIRC
STAR = SemigroupOpKind.STAR


def m1(x):
    return TropicalMatrix([[x]])


def pair1(a, b):
    return SemigroupPair(m1(a), m1(b))


def test_op_circ_1x1_examples():
    # first = min(2, 1, 3, 2+3), second = min(5, 3, 5+3)
    r = op_circ(pair1(2, 5), pair1(1, 3))
    assert r == pair1(1, 3)
    # an idempotent instance: squaring changes nothing
    r = op_circ(pair1(0, 1), pair1(0, 1))
    assert r == pair1(0, 1)


def test_op_star_1x1_example():
    # first = min(3+2, 2+3, 1), second = 5+3
    r = op_star(pair1(2, 5), pair1(1, 3))
    assert r == pair1(1, 8)


def test_op_star_2x2_hand_example():
    # With the acting component zero, the products against M^T pick out
    # column and row minima of M^T; hand evaluation:
    #   H*M^T = [[1,2],[1,2]], M^T*H = [[1,1],[2,2]], then min with S.
    m = TropicalMatrix([[1, 2], [2, 5]])
    zero = TropicalMatrix([[0, 0], [0, 0]])
    s = TropicalMatrix([[9, 9], [9, 9]])
    r = op_star(SemigroupPair(m, zero), SemigroupPair(s, zero))
    assert r.first == TropicalMatrix([[1, 1], [1, 2]])
    assert r.second == TropicalMatrix([[0, 0], [0, 0]])


@pytest.mark.parametrize("op", [CIRC, STAR])
def test_first_component_ignores_second_of_left_operand(op):
    rng = Random(77)
    for _ in range(50):
        k = rng.randint(1, 4)
        p, q = random_pair(rng, k), random_pair(rng, k)
        replaced = SemigroupPair(p.first, random_pair(rng, k).second)
        assert apply(op, p, q).first == apply(op, replaced, q).first


@pytest.mark.parametrize("op", [CIRC, STAR])
def test_apply_dispatches_and_counts(op):
    rng = Random(3)
    p, q = random_pair(rng, 3), random_pair(rng, 3)
    counter = OpCounter()
    result = apply(op, p, q, counter)
    assert counter.count == 1
    expected = op_circ(p, q) if op is CIRC else op_star(p, q)
    assert result == expected
    apply(op, p, q, counter)
    assert counter.count == 2
    # counter is optional
    assert apply(op, p, q) == expected


def test_apply_matches_naive_oracle():
    rng = Random(13)
    for op in (CIRC, STAR):
        for _ in range(60):
            k = rng.randint(1, 4)
            p, q = random_pair(rng, k), random_pair(rng, k)
            assert apply(op, p, q) == naive_apply(op, p, q)


def test_pair_dimension_mismatch():
    p, q = pair1(1, 2), random_pair(Random(1), 2)
    with pytest.raises(DimensionMismatchError):
        op_circ(p, q)
    with pytest.raises(DimensionMismatchError):
        op_star(p, q)
    with pytest.raises(DimensionMismatchError):
        SemigroupPair(m1(1), TropicalMatrix([[1, 2], [3, 4]]))


@given(st.data())
def test_circ_is_associative(data):
    k = data.draw(st.integers(1, 5))
    entry = st.integers(-50, 50)

    def one():
        return SemigroupPair(
            TropicalMatrix([[data.draw(entry) for _ in range(k)] for _ in range(k)]),
            TropicalMatrix([[data.draw(entry) for _ in range(k)] for _ in range(k)]),
        )

    p, q, r = one(), one(), one()
    assert apply(CIRC, apply(CIRC, p, q), r) == apply(CIRC, p, apply(CIRC, q, r))


def test_star_is_associative_for_1x1():
    rng = Random(23)
    for _ in range(300):
        p, q, r = (pair1(rng.randint(-50, 50), rng.randint(-50, 50)) for _ in range(3))
        assert apply(STAR, apply(STAR, p, q), r) == apply(STAR, p, apply(STAR, q, r))


def test_star_is_not_associative_pinned_counterexample():
    """star fails associativity for k >= 2: its first component acts on the
    transposed first component of the left operand, and composing two such
    actions re-transposes it.  This pins a concrete counterexample so the
    behavior stays visible and deliberate."""
    p = SemigroupPair(
        TropicalMatrix([[0, 3], [10, 10]]), TropicalMatrix([[15, -14], [-1, 19]])
    )
    q = SemigroupPair(
        TropicalMatrix([[-14, -4], [-18, -13]]), TropicalMatrix([[14, -17], [-17, 16]])
    )
    r = SemigroupPair(
        TropicalMatrix([[-16, 9], [0, 10]]), TropicalMatrix([[13, 1], [10, -2]])
    )
    left = apply(STAR, apply(STAR, p, q), r)
    right = apply(STAR, p, apply(STAR, q, r))
    assert left != right
    assert left.first == TropicalMatrix([[-16, -20], [-19, -16]])
    assert right.first == TropicalMatrix([[-16, -20], [-13, -16]])


def test_power_basics():
    base = pair1(10, -3)
    assert power(CIRC, base, 1) == base
    assert power(CIRC, pair1(0, 1), 2) == pair1(0, 1)
    # iterating circ by hand: firsts go 10, -3, -6, -9
    assert power(CIRC, base, 4).first == m1(-9)
    with pytest.raises(ValueError):
        power(CIRC, base, 0)
    with pytest.raises(ValueError):
        power(CIRC, base, -2)


def test_power_op_count_bound():
    rng = Random(8)
    base = random_pair(rng, 3)
    for e in range(1, 200):
        counter = OpCounter()
        power(CIRC, base, e, counter)
        assert counter.count <= 2 * (e.bit_length() - 1) if e > 1 else counter.count == 0
        assert counter.count <= 2 * e.bit_length()


def test_power_matches_both_folds_for_circ():
    rng = Random(17)
    for _ in range(10):
        base = random_pair(rng, 3, 30)
        for e in range(1, 33):
            expected = fold_right(CIRC, base, e)
            assert power(CIRC, base, e) == expected
            assert fold_left(CIRC, base, e) == expected


def test_power_addition_rule_for_circ():
    rng = Random(19)
    for _ in range(20):
        base = random_pair(rng, 3, 30)
        a, b = rng.randint(1, 40), rng.randint(1, 40)
        whole = power(CIRC, base, a + b)
        assert whole == apply(CIRC, power(CIRC, base, a), power(CIRC, base, b))
        assert whole == apply(CIRC, power(CIRC, base, b), power(CIRC, base, a))


def test_star_powers_are_bracketing_dependent():
    """Pinned consequence of star's non-associativity: the two folds (and
    square-and-multiply) can disagree from exponent 3 on, for k >= 2."""
    rng = Random(42)
    diverged = False
    for _ in range(50):
        base = random_pair(rng, 3, 20)
        if fold_left(STAR, base, 3) != fold_right(STAR, base, 3):
            diverged = True
            break
    assert diverged


@pytest.mark.parametrize("op", [CIRC, STAR])
def test_monotone_chain(op):
    """First components of the chain fold are non-increasing; for star the
    chain is the left fold, the order its recursion is defined in."""
    rng = Random(29)
    for _ in range(40):
        k = rng.randint(1, 6)
        base = random_pair(rng, k, 50)
        previous = base
        for _ in range(2, 33):
            current = (
                naive_apply(op, previous, base)
                if op is CIRC
                else naive_apply(op, base, previous)
            )
            assert current.first.leq(previous.first)
            previous = current


def test_circ_chain_tail_recursion():
    # From the third element on, the bare M and H terms are already
    # absorbed, so each circ chain step reduces to M + (M * H_public).
    rng = Random(37)
    for _ in range(30):
        k = rng.randint(1, 5)
        base = random_pair(rng, k, 50)
        h = base.second
        chain = [base]
        for _ in range(2, 65):
            chain.append(apply(CIRC, chain[-1], base))
        for ell in range(2, 64):
            m_ell = chain[ell - 1].first
            m_next = chain[ell].first
            assert m_next == m_ell.oplus(m_ell.otimes(h))


def test_build_square_cache():
    base = pair1(10, -3)
    cache = build_square_cache(CIRC, base, 1)
    assert cache.levels == 1 and cache.squares == (base,)

    counter = OpCounter()
    cache = build_square_cache(CIRC, base, 3, counter)
    assert counter.count == 2
    assert [s.first.rows[0][0] for s in cache.squares] == [10, -3, -9]
    assert all(
        cache.squares[i + 1] == apply(CIRC, cache.squares[i], cache.squares[i])
        for i in range(cache.levels - 1)
    )
    with pytest.raises(ValueError):
        build_square_cache(CIRC, base, 0)


def test_power_from_cache():
    base = pair1(10, -3)
    cache = build_square_cache(CIRC, base, 4)
    # exact powers of two come straight from the ladder, zero applications
    for i in range(4):
        counter = OpCounter()
        assert power_from_cache(cache, 1 << i, counter) == cache.squares[i]
        assert counter.count == 0
    assert power_from_cache(cache, 3).first == m1(-6)
    for e in (0, 16, 17):
        with pytest.raises(ValueError):
            power_from_cache(cache, e)


def test_power_from_cache_matches_power_and_oracle():
    rng = Random(41)
    for _ in range(5):
        base = random_pair(rng, 3, 30)
        cache = build_square_cache(CIRC, base, 7)
        for e in range(1, 65):
            counter = OpCounter()
            via_cache = power_from_cache(cache, e, counter)
            assert counter.count == bin(e).count("1") - 1
            assert via_cache == power(CIRC, base, e)
            assert via_cache == fold_right(CIRC, base, e)


def test_pair_serialization_round_trip():
    rng = Random(53)
    p = random_pair(rng, 3, 10**40)
    obj = pair_to_json(p)
    assert pair_from_json(obj) == p
    assert op_kind_from_json(op_kind_to_json(CIRC)) is CIRC
    assert op_kind_from_json("star") is STAR
    from tropkex import FormatError

    with pytest.raises(FormatError):
        op_kind_from_json("plus")
    with pytest.raises(FormatError):
        pair_from_json({"first": obj["first"]})
