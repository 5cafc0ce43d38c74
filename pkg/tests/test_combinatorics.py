import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from algvote.combinatorics import (
    Permutation,
    Shape,
    Tabloid,
    apply_permutation,
    enumerate_tabloids,
    rankings_of_tabloid,
    tabloid_index,
    tabloid_of_ranking,
)


def test_full_rankings_in_lexicographic_order():
    keys = ["".join(map(str, t.key)) for t in enumerate_tabloids([1, 1, 1])]
    assert keys == ["123", "132", "213", "231", "312", "321"]


def test_top_choice_tabloids():
    tabs = enumerate_tabloids([1, 3])
    assert [t.rows[0] for t in tabs] == [(1,), (2,), (3,), (4,)]


@pytest.mark.parametrize("parts", [(2, 1, 1, 3), (1, 1, 1), (1, 3), (2, 2, 1), (3, 2), (1, 1, 2), (4,)])
def test_count_is_multinomial(parts):
    n = sum(parts)
    expected = math.factorial(n) // math.prod(math.factorial(p) for p in parts)
    assert len(enumerate_tabloids(parts)) == expected


def test_composition_of_seven_has_420():
    assert len(enumerate_tabloids((2, 1, 1, 3))) == 420


@pytest.mark.parametrize("parts", [(2, 1, 1, 3), (2, 2, 1), (1, 1, 1, 1), (1, 1, 3)])
def test_canonical_order_sorted_and_unique(parts):
    tabs = list(enumerate_tabloids(parts))
    assert tabs == sorted(tabs)
    assert len(set(tabs)) == len(tabs)


@pytest.mark.parametrize("bad", [(), (0, 2), (2, -1)])
def test_invalid_shape(bad):
    with pytest.raises(ValueError):
        Shape(bad)


def test_partition_flag():
    assert Shape((4, 2, 1, 1)).is_partition()
    assert not Shape((2, 1, 1, 3)).is_partition()


def test_index_examples():
    assert tabloid_index([1, 1, 1], Tabloid([[1], [2], [3]])) == 0
    assert tabloid_index([1, 1, 1], Tabloid([[3], [2], [1]])) == 5
    assert tabloid_index([1, 3], Tabloid([[3], [1, 2, 4]])) == 2


def test_index_round_trip():
    tabs = enumerate_tabloids((2, 1, 2))
    assert [tabloid_index((2, 1, 2), t) for t in tabs] == list(range(len(tabs)))


def test_index_shape_mismatch():
    with pytest.raises(ValueError):
        tabloid_index([1, 1, 1], Tabloid([[1, 2], [3]]))


def test_permutation_on_tabloid():
    sigma = Permutation.from_cycles(5, [(1, 3), (2, 5, 4)])
    t = Tabloid([[2, 3, 5], [1, 4]])
    assert apply_permutation(sigma, t) == Tabloid([[1, 4, 5], [2, 3]])


def test_identity_action():
    for t in enumerate_tabloids((2, 2, 1)):
        assert apply_permutation(Permutation.identity(5), t) == t


def test_inverse_undoes_action():
    rng = random.Random(3)
    for _ in range(10):
        imgs = list(range(1, 6))
        rng.shuffle(imgs)
        sigma = Permutation(imgs)
        for t in enumerate_tabloids((2, 2, 1)):
            assert apply_permutation(sigma.inverse(), apply_permutation(sigma, t)) == t


def test_size_mismatch():
    with pytest.raises(ValueError):
        apply_permutation(Permutation.identity(4), Tabloid([[1], [2], [3]]))


perm_st = st.integers(min_value=2, max_value=6).flatmap(
    lambda n: st.tuples(st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1)),
                        st.permutations(range(1, n + 1))))


@settings(max_examples=60)
@given(perm_st)
def test_left_action(triple):
    s, t, order = triple
    sigma, tau = Permutation(s), Permutation(t)
    n = len(s)
    shape = Shape([n // 2, n - n // 2])
    x = tabloid_of_ranking(shape, order)
    assert apply_permutation(sigma * tau, x) == apply_permutation(sigma, apply_permutation(tau, x))


def test_rankings_of_tabloid_example():
    t = Tabloid([[2, 5], [1, 3], [4]])
    got = ["".join(map(str, r)) for r in rankings_of_tabloid(t)]
    assert got == ["25134", "25314", "52134", "52314"]


def test_rankings_of_full_tabloid():
    t = Tabloid([[3], [1], [2]])
    assert rankings_of_tabloid(t) == [(3, 1, 2)]


def test_rankings_of_top_choice():
    t = Tabloid([[1], [2, 3, 4]])
    got = rankings_of_tabloid(t)
    assert len(got) == 6
    assert all(r[0] == 1 for r in got)
    assert sorted(r[1:] for r in got) == sorted(itertools.permutations((2, 3, 4)))


def test_tabloid_of_ranking():
    assert tabloid_of_ranking((2, 2, 1), (2, 5, 1, 3, 4)) == Tabloid([[2, 5], [1, 3], [4]])
    assert tabloid_of_ranking((1, 1, 1), (3, 1, 2)) == Tabloid([[3], [1], [2]])
    assert tabloid_of_ranking((1, 2), (3, 1, 2)) == Tabloid([[3], [1, 2]])
    with pytest.raises(ValueError):
        tabloid_of_ranking((1, 2), (1, 2))


@pytest.mark.parametrize("parts", [(2, 2, 1), (1, 1, 2), (3, 1), (1, 1, 1, 1)])
def test_rankings_map_back(parts):
    f = math.prod(math.factorial(p) for p in parts)
    for t in enumerate_tabloids(parts):
        rs = rankings_of_tabloid(t)
        assert len(rs) == f
        assert all(tabloid_of_ranking(parts, r) == t for r in rs)


def test_text_form():
    t = Tabloid.parse("2 5|1 3|4")
    assert t.rows == ((2, 5), (1, 3), (4,))
    assert str(t) == "2 5|1 3|4"
    with pytest.raises(ValueError):
        Tabloid.parse("1 2|2")
