import random

import pytest

from diagcomp import (
    RATIONALS,
    BudgetExceeded,
    DenseMatrix,
    DiagonalSpec,
    DimensionMismatch,
    InvalidArgument,
    MonicPoly,
    PrimeField,
    StructuredMatrix,
    WrongField,
    assemble,
    charpoly_generic,
    charpoly_structured,
    check_minor_system,
    companion,
    construct_b,
    construct_full,
    derive_last_diagonal,
    occurrence_pattern,
    principal_minor_sum,
    solve_b_backsub,
    uniqueness_exhaustive,
)
from diagcomp.oracles import _berkowitz_generic
from bruteforce import charpoly_leibniz, det_leibniz, random_head, random_monic

Q = RATIONALS


def random_dense(field, n, rng):
    return DenseMatrix(field, [[field.random_element(rng) for _ in range(n)] for _ in range(n)])


# --- structured characteristic polynomial -----------------------------------

def test_structured_charpoly_worked_example():
    A = StructuredMatrix(Q, [2, -2], [-3])
    assert charpoly_structured(A) == MonicPoly(Q, [-1, 0])


def test_structured_charpoly_of_companion():
    f = MonicPoly(Q, [7, 2, 0])  # t^3 + 2t + 7
    A = StructuredMatrix(Q, [0, 0, 0], [-7, -2])
    assert charpoly_structured(A) == f
    assert charpoly_generic(companion(f)) == f


def test_structured_charpoly_degree_one():
    A = StructuredMatrix(Q, [4], [])
    assert charpoly_structured(A) == MonicPoly(Q, [-4])


def test_structured_agrees_with_generic_on_random_matrices(field, rng):
    # random structured matrices, not only constructed ones
    for _ in range(12):
        n = rng.randint(1, 12)
        A = StructuredMatrix(
            field,
            [field.random_element(rng) for _ in range(n)],
            [field.random_element(rng) for _ in range(n - 1)],
        )
        assert charpoly_structured(A) == charpoly_generic(A.to_dense())


# --- generic characteristic polynomial --------------------------------------

def test_generic_charpoly_identity():
    assert charpoly_generic(DenseMatrix.identity(Q, 2)) == MonicPoly(Q, [1, -2])


def test_generic_charpoly_zero_matrix():
    Z = DenseMatrix(Q, [[0] * 3 for _ in range(3)])
    assert charpoly_generic(Z) == MonicPoly(Q, [0, 0, 0])


def test_generic_charpoly_companion_two():
    M = DenseMatrix(Q, [[0, -2], [1, -3]])
    assert charpoly_generic(M) == MonicPoly(Q, [2, 3])


def test_generic_charpoly_singular_leading_minors():
    # leading 1x1 minor is zero; division-free route must not care
    F = PrimeField(2)
    M = DenseMatrix(F, [[0, 1], [1, 0]])
    assert charpoly_generic(M) == MonicPoly(F, [1, 0])  # t^2 - 1 = t^2 + 1


def test_generic_charpoly_matches_leibniz(field, rng):
    for _ in range(8):
        n = rng.randint(1, 5)
        M = random_dense(field, n, rng)
        assert charpoly_generic(M) == charpoly_leibniz(M)


def test_berkowitz_generic_layer_matches_kernel_route(rng):
    # the FieldElement implementation vs whatever charpoly_generic dispatches to
    for p in (2, 7, 101):
        F = PrimeField(p)
        for _ in range(5):
            n = rng.randint(1, 6)
            M = random_dense(F, n, rng)
            assert _berkowitz_generic(M) == charpoly_generic(M)


# --- principal minor sums ----------------------------------------------------

def test_minor_sum_size_one_is_trace(field, rng):
    n = 5
    M = random_dense(field, n, rng)
    trace = field.zero()
    for i in range(1, n + 1):
        trace = trace + M.entry(i, i)
    assert principal_minor_sum(M, 1) == trace


def test_minor_sum_full_size_is_determinant(field, rng):
    n = 4
    M = random_dense(field, n, rng)
    assert principal_minor_sum(M, n) == det_leibniz(M)


def test_minor_sum_coefficient_identity_gf7(rng):
    F = PrimeField(7)
    for _ in range(6):
        M = random_dense(F, 5, rng)
        f = charpoly_generic(M)
        for m in range(1, 6):
            c = f.coeff(5 - m)
            expected = c if m % 2 == 0 else -c
            assert principal_minor_sum(M, m) == expected


def test_minor_sum_range_checked():
    M = DenseMatrix(Q, [[1]])
    with pytest.raises(InvalidArgument):
        principal_minor_sum(M, 0)
    with pytest.raises(InvalidArgument):
        principal_minor_sum(M, 2)


# --- the minor system ---------------------------------------------------------

def test_minor_system_satisfied_on_construction(field, rng):
    for _ in range(4):
        n = rng.randint(1, 6)
        f = random_monic(field, n, rng)
        res = construct_full(f, diag_head=random_head(field, n, rng))
        report = check_minor_system(res.A, f)
        assert report.all_satisfied
        assert len(report.equations) == n - 1
        assert report.failing() == []


def test_minor_system_perturbation_hits_only_first_equation():
    F = PrimeField(5)
    f = MonicPoly(F, [1, 2, 3])
    res = construct_full(f, diag_head=[F(1), F(4)])
    bad = assemble(res.d, (res.b[0] + F(1),) + res.b[1:])
    report = check_minor_system(bad, f)
    by_k = {eq.k: eq.satisfied for eq in report.equations}
    assert by_k == {1: False, 2: True}


def test_minor_system_vacuous_for_degree_one():
    f = MonicPoly(Q, [3])
    A = StructuredMatrix(Q, [-3], [])
    report = check_minor_system(A, f)
    assert report.equations == ()
    assert report.all_satisfied


def test_minor_system_checks_dimensions():
    f = MonicPoly(Q, [3, 0])
    A = StructuredMatrix(Q, [-3], [])
    with pytest.raises(DimensionMismatch):
        check_minor_system(A, f)


def test_minor_system_sign_convention(field, rng):
    # rhs of equation k must equal the minor sum of any matrix whose
    # charpoly is f, at size n-k+1; cross-checked through the companion matrix
    for _ in range(3):
        n = rng.randint(2, 6)
        f = random_monic(field, n, rng)
        C = companion(f)
        for k in range(1, n):
            m = n - k + 1
            c = f.coeffs[k - 1]
            rhs = c if m % 2 == 0 else -c
            assert principal_minor_sum(C, m) == rhs


# --- back-substitution solver --------------------------------------------------

def test_backsub_worked_example():
    f = MonicPoly(Q, [-1, 0])
    assert solve_b_backsub(f, DiagonalSpec(Q, [2, -2])) == (Q(-3),)


def test_backsub_equals_closed_form_gf7(rng):
    F = PrimeField(7)
    for _ in range(6):
        f = random_monic(F, 5, rng)
        d = derive_last_diagonal(f, random_head(F, 5, rng))
        assert solve_b_backsub(f, d) == construct_b(f, d)


def test_backsub_equals_closed_form_all_fields(field, rng):
    for _ in range(4):
        n = rng.randint(1, 6)
        f = random_monic(field, n, rng)
        d = derive_last_diagonal(f, random_head(field, n, rng))
        assert solve_b_backsub(f, d) == construct_b(f, d)


def test_backsub_degree_one_is_empty():
    f = MonicPoly(Q, [2])
    assert solve_b_backsub(f, DiagonalSpec(Q, [-2])) == ()


def test_backsub_requires_trace():
    from diagcomp import TraceMismatch

    f = MonicPoly(Q, [-1, 0])
    with pytest.raises(TraceMismatch):
        solve_b_backsub(f, DiagonalSpec(Q, [1, 1]))


# --- exhaustive uniqueness ------------------------------------------------------

def test_uniqueness_gf2_n3(rng):
    F = PrimeField(2)
    for _ in range(4):
        f = random_monic(F, 3, rng)
        d = derive_last_diagonal(f, random_head(F, 3, rng))
        assert uniqueness_exhaustive(f, d) == 1


def test_uniqueness_gf3_n4(rng):
    F = PrimeField(3)
    for _ in range(3):
        f = random_monic(F, 4, rng)
        d = derive_last_diagonal(f, random_head(F, 4, rng))
        assert uniqueness_exhaustive(f, d) == 1


def test_uniqueness_hand_checked_case():
    # t^2 over GF(2) with d = (1, 1): A = [[1, b], [1, 1]] has
    # det(tI - A) = t^2 + b + 1, so b = 1 is the only solution
    F = PrimeField(2)
    f = MonicPoly(F, [0, 0])
    d = DiagonalSpec(F, [1, 1])
    assert uniqueness_exhaustive(f, d) == 1
    assert construct_b(f, d) == (F(1),)


def test_uniqueness_invalid_trace_counts_zero():
    F = PrimeField(3)
    f = MonicPoly(F, [0, 0])  # t^2, needs d_1 + d_2 = 0
    d = DiagonalSpec(F, [1, 1])
    assert uniqueness_exhaustive(f, d) == 0


def test_uniqueness_budget_enforced_before_work():
    F = PrimeField(5)
    f = MonicPoly(F, [1, 0, 0, 0, 1, 0, 0, 0])
    d = derive_last_diagonal(f, [F(0)] * 7)
    with pytest.raises(BudgetExceeded) as exc:
        uniqueness_exhaustive(f, d, budget=1000)
    assert exc.value.required == 5**7
    assert exc.value.budget == 1000


def test_uniqueness_rejects_rationals():
    f = MonicPoly(Q, [-1, 0])
    with pytest.raises(WrongField):
        uniqueness_exhaustive(f, DiagonalSpec(Q, [2, -2]))


def test_uniqueness_degree_one():
    F = PrimeField(5)
    f = MonicPoly(F, [2])  # t + 2
    assert uniqueness_exhaustive(f, DiagonalSpec(F, [3])) == 1  # d_1 = -2 = 3
    assert uniqueness_exhaustive(f, DiagonalSpec(F, [1])) == 0


# --- occurrence probing -----------------------------------------------------------

def test_occurrence_pattern_n3():
    occ = occurrence_pattern(3, rng=random.Random(99))
    assert occ.sensitive_sets(1) == [(1, 2, 3)]
    assert occ.sensitive_sets(2) == [(2, 3)]
    assert occ.matches_claim()


def test_occurrence_pattern_subsets_without_last_index_are_insensitive():
    occ = occurrence_pattern(4, rng=random.Random(7))
    for (k, S), hit in occ.table.items():
        if 4 not in S:
            assert not hit


def test_occurrence_pattern_matches_claim_small():
    for n in (2, 3, 4, 5):
        assert occurrence_pattern(n, rng=random.Random(n)).matches_claim()


def test_occurrence_pattern_range_checked():
    with pytest.raises(InvalidArgument):
        occurrence_pattern(11)
    with pytest.raises(InvalidArgument):
        occurrence_pattern(0)
