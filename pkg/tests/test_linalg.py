from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihomega.errors import ShapeMismatch, Singular
from bihomega.linalg import (Matrix, basis_vector, mat_inverse, mat_mul,
                             mats_commute, vec, vec_add, vec_scale)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=5)


def square(n):
    return st.lists(rationals, min_size=n * n, max_size=n * n).map(
        lambda vals: Matrix(n, n, tuple(vals)))


def test_identity_times_matrix():
    m = Matrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert mat_mul(Matrix.identity(3), m) == m
    assert mat_mul(m, Matrix.identity(3)) == m


def test_zero_annihilates():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert mat_mul(m, Matrix.zero(2, 2)) == Matrix.zero(2, 2)


def test_column_swap_product():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert mat_mul(a, b) == Matrix.from_rows([[2, 1], [4, 3]])


def test_mul_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        mat_mul(Matrix.identity(2), Matrix.identity(3))


def test_inverse_identity():
    assert mat_inverse(Matrix.identity(4)) == Matrix.identity(4)


def test_inverse_diagonal():
    m = Matrix.diagonal([2, 3])
    assert mat_inverse(m) == Matrix.diagonal([Fraction(1, 2), Fraction(1, 3)])


def test_inverse_unipotent():
    m = Matrix.from_rows([[1, 1], [0, 1]])
    assert mat_inverse(m) == Matrix.from_rows([[1, -1], [0, 1]])


def test_inverse_singular():
    with pytest.raises(Singular):
        mat_inverse(Matrix.from_rows([[1, 2], [2, 4]]))


def test_inverse_needs_square():
    with pytest.raises(ShapeMismatch):
        mat_inverse(Matrix.zero(2, 3))


def test_commute_with_identity():
    m = Matrix.from_rows([[5, -1], [2, 7]])
    assert mats_commute(m, Matrix.identity(2))


def test_diagonals_commute():
    assert mats_commute(Matrix.diagonal([1, 2]), Matrix.diagonal([3, 4]))


def test_nilpotent_pair_does_not_commute():
    a = Matrix.from_rows([[0, 1], [0, 0]])
    b = Matrix.from_rows([[0, 0], [1, 0]])
    assert not mats_commute(a, b)


@given(square(3), square(3), square(3))
@settings(max_examples=40, deadline=None)
def test_mat_mul_associative(a, b, c):
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@given(square(3))
@settings(max_examples=40, deadline=None)
def test_inverse_round_trip(m):
    try:
        inv = mat_inverse(m)
    except Singular:
        return
    assert mat_mul(m, inv) == Matrix.identity(3)
    assert mat_mul(inv, m) == Matrix.identity(3)


@given(square(2), st.lists(rationals, min_size=2, max_size=2))
@settings(max_examples=40, deadline=None)
def test_apply_is_linear(m, raw):
    x = vec(raw)
    e0, e1 = basis_vector(2, 0), basis_vector(2, 1)
    combined = vec_add(vec_scale(x[0], m.apply(e0)), vec_scale(x[1], m.apply(e1)))
    assert m.apply(x) == combined
