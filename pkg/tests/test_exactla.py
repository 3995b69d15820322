import numpy as np
import pytest

from src.errors import DimensionError, TaucheckError
from src.exactla import (
    MAX_PRIME,
    FieldSpec,
    Subspace,
    all_vectors,
    batch_invertible,
    batch_rank,
    image,
    inverse,
    is_invertible,
    kernel,
    mat_power,
    matrix_rank,
    mul,
    rref,
    solve,
    stack_rows,
)


def test_field_rejects_non_primes():
    for bad in (0, 1, 4, 9, MAX_PRIME + 2):
        with pytest.raises(TaucheckError):
            FieldSpec(bad)


def test_field_inverse():
    f = FieldSpec(7)
    for x in range(1, 7):
        assert (x * f.inv(x)) % 7 == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_rref_over_f3():
    m = [[2, 1, 0], [1, 2, 0], [0, 0, 1]]
    reduced, rank, pivots = rref(m, 3)
    # first two rows are dependent mod 3 (row2 = 2 * row1)
    assert rank == 2
    assert pivots == [0, 2]
    assert reduced[0].tolist() == [1, 2, 0]
    assert reduced[1].tolist() == [0, 0, 1]


def test_kernel_and_image_dimensions():
    m = np.array([[1, 1, 0], [0, 1, 1]])
    ker = kernel(m, 2)
    assert ker.dim == 1
    assert not mul(m, ker.basis.T, 2).any()
    assert image(m, 2).dim == 2
    assert matrix_rank(m, 2) + ker.dim == 3


def test_solve_consistent_and_inconsistent():
    m = np.array([[1, 1], [0, 1]])
    x = solve(m, [1, 0], 2)
    assert mul(m, x.reshape(2, 1), 2).ravel().tolist() == [1, 0]
    assert solve(np.array([[1, 1], [1, 1]]), [0, 1], 2) is None
    with pytest.raises(DimensionError):
        solve(m, [1, 0, 1], 2)


def test_inverse_round_trip():
    m = np.array([[1, 2], [3, 4]])
    inv = inverse(m, 5)
    assert mul(m, inv, 5).tolist() == [[1, 0], [0, 1]]
    assert is_invertible(m, 5)
    with pytest.raises(DimensionError):
        inverse(np.array([[1, 1], [1, 1]]), 2)


def test_batch_rank_matches_single_rank():
    rng = np.random.default_rng(3)
    stack = rng.integers(0, 3, size=(20, 4, 4))
    expected = [matrix_rank(m, 3) for m in stack]
    assert batch_rank(stack, 3).tolist() == expected
    assert batch_invertible(stack, 3).tolist() == [r == 4 for r in expected]


def test_mat_power_nilpotent():
    jordan = np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert mat_power(jordan, 2, 2).any()
    assert not mat_power(jordan, 3, 2).any()
    assert mat_power(jordan, 0, 2).tolist() == np.eye(3, dtype=int).tolist()


def test_all_vectors_counts():
    blocks = list(all_vectors(3, 3, chunk=10))
    rows = np.vstack(blocks)
    assert rows.shape == (27, 3)
    assert len({tuple(r) for r in rows}) == 27


def test_subspace_sum_and_intersection():
    p = 2
    u = Subspace.span([[1, 0, 0], [0, 1, 0]], 3, p)
    w = Subspace.span([[0, 1, 0], [0, 0, 1]], 3, p)
    assert u.sum(w).dim == 3
    meet = u.intersection(w)
    assert meet.dim == 1
    assert meet.contains([0, 1, 0])
    assert u.contains_space(meet)
    assert u.complement_indices == [2]


def test_subspace_canonical_equality():
    a = Subspace.span([[1, 1], [0, 1]], 2, 2)
    b = Subspace.full(2, 2)
    assert a == b
    assert hash(a) == hash(b)
    assert Subspace.span([], 3, 5) == Subspace.zero(3, 5)


def test_subspace_in_zero_ambient():
    s = Subspace.span(np.zeros((4, 0)), 0, 2)
    assert s.dim == 0
    assert s.ambient_dim == 0


def test_reduce_gives_normal_form():
    s = Subspace.span([[1, 1, 0]], 3, 2)
    assert s.reduce([1, 1, 1]).tolist() == [0, 0, 1]
    assert s.coordinates([1, 1, 0]).tolist() == [1]
    with pytest.raises(DimensionError):
        s.reduce([1, 0])


def test_stack_rows_with_zero_width():
    assert stack_rows([np.zeros((0, 0), dtype=np.int64)], 0).shape == (0, 0)
    assert stack_rows([np.zeros((2, 0)), np.zeros((1, 0))], 0).shape == (3, 0)
    assert stack_rows([], 0).shape == (0, 0)
    assert stack_rows([[1, 0], [[0, 1]]], 2).tolist() == [[1, 0], [0, 1]]
