import math

import pytest

from diagcomp import RATIONALS, InvalidArgument, PrimeField, h_eval, h_table
from bruteforce import h_enumerate

Q = RATIONALS


def test_h0_is_one(field, rng):
    d = [field.random_element(rng) for _ in range(5)]
    for k in range(6):
        assert h_eval(field, d, k, 0) == field.one()


def test_empty_prefix_vanishes_in_positive_degree():
    d = [Q(3), Q(4)]
    for r in range(1, 5):
        assert h_eval(Q, d, 0, r) == Q(0)


def test_all_ones_degree_two():
    # d_1^2 + d_2^2 + d_3^2 + d_1 d_2 + d_1 d_3 + d_2 d_3 at all-ones: six monomials
    d = [Q(1), Q(1), Q(1)]
    assert h_eval(Q, d, 3, 2) == Q(6)


def test_h2_of_1_2():
    # 1 + 1*2 + 4
    assert h_eval(Q, [Q(1), Q(2)], 2, 2) == Q(7)


def test_recurrence_consistency(field, rng):
    for _ in range(10):
        d = [field.random_element(rng) for _ in range(5)]
        for k in range(1, 6):
            for r in range(1, 6):
                lhs = h_eval(field, d, k, r)
                rhs = h_eval(field, d, k - 1, r) + d[k - 1] * h_eval(field, d, k, r - 1)
                assert lhs == rhs


@pytest.mark.parametrize("field_small", [Q, PrimeField(7)], ids=["Q", "GF7"])
def test_matches_monomial_enumeration(field_small, rng):
    for _ in range(5):
        d = [field_small.random_element(rng) for _ in range(4)]
        for k in range(5):
            for r in range(5):
                assert h_eval(field_small, d, k, r) == h_enumerate(field_small, d, k, r)


def test_all_ones_counts_multisets(field):
    # h_r(k ones) counts multisets of size r from k symbols
    d = [field.one()] * 6
    for k in range(7):
        for r in range(7):
            if r == 0:
                count = 1
            elif k == 0:
                count = 0
            else:
                count = math.comb(k + r - 1, r)
            assert h_eval(field, d, k, r) == field.element(count)


def test_table_layout():
    table = h_table(Q, [Q(1), Q(2)], 2, 3)
    assert table[0] == [Q(1), Q(0), Q(0), Q(0)]
    assert [row[0] for row in table] == [Q(1), Q(1), Q(1)]
    assert table[2][2] == Q(7)


def test_table_matches_pointwise(field, rng):
    d = [field.random_element(rng) for _ in range(4)]
    table = h_table(field, d, 4, 4)
    for k in range(5):
        for r in range(5):
            assert table[k][r] == h_eval(field, d, k, r)


def test_argument_validation():
    d = [Q(1), Q(2)]
    with pytest.raises(InvalidArgument):
        h_eval(Q, d, 3, 1)
    with pytest.raises(InvalidArgument):
        h_eval(Q, d, -1, 1)
    with pytest.raises(InvalidArgument):
        h_eval(Q, d, 1, -1)
    with pytest.raises(InvalidArgument):
        h_table(Q, d, 3, 1)
    with pytest.raises(InvalidArgument):
        h_table(Q, d, 1, -1)
