from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arbor.errors import IndexOutOfRange, NotSquare, ShapeMismatch, UnsortedSelector
from arbor.linalg import (
    Matrix,
    cofactor,
    delete_row_col,
    det,
    multiply,
    power_is_zero,
    select,
    transpose,
)

from oracles import leibniz_det, minor_rows

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def square(n_max=4):
    return st.integers(0, n_max).flatmap(
        lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_det_examples():
    assert det(Matrix([[1, -1], [0, 2]])) == 2
    assert det(Matrix([[2, -1], [-1, 2]])) == 3
    for n in range(6):
        assert det(Matrix.identity(n)) == 1


def test_det_empty_matrix_is_one():
    assert det(Matrix([], cols=0)) == 1


def test_det_not_square():
    with pytest.raises(NotSquare):
        det(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_det_needs_row_swap():
    assert det(Matrix([[0, 1], [1, 0]])) == -1
    assert det(Matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])) == -1
    assert det(Matrix([[0, 2], [0, 3]])) == 0


def test_det_rational_entries():
    m = Matrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]])
    assert det(m) == Fraction(1, 10) - Fraction(1, 12)


@given(square())
def test_det_matches_leibniz(rows):
    assert det(Matrix(rows, cols=len(rows))) == leibniz_det(rows)


@given(square())
def test_det_transpose_invariant(rows):
    m = Matrix(rows, cols=len(rows))
    assert det(m.T) == det(m)


@given(st.integers(0, 3).flatmap(lambda n: st.tuples(*[st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)] * 2)))
def test_det_multiplicative(pair):
    a, b = pair
    n = len(a)
    A, B = Matrix(a, cols=n), Matrix(b, cols=n)
    assert det(A @ B) == det(A) * det(B)


@given(rationals, rationals)
def test_exact_arithmetic(x, y):
    assert (x + y) - y == x
    m = Matrix([[x]]) + Matrix([[y]]) - Matrix([[y]])
    assert m == Matrix([[x]])


def test_delete_row_col_running_example():
    L1 = Matrix([[1, -1, -1], [0, 2, -1], [-1, -1, 2]])
    L2 = Matrix([[2, 0, -1], [-1, 1, -1], [-1, -1, 2]])
    assert delete_row_col(L1, 2) == Matrix([[1, -1], [0, 2]])
    assert delete_row_col(L2, 2) == Matrix([[2, 0], [-1, 1]])


def test_delete_row_col_to_empty():
    m = delete_row_col(Matrix([[5]]), 0)
    assert m.shape == (0, 0)
    with pytest.raises(IndexOutOfRange):
        delete_row_col(Matrix([[5]]), 1)


def test_cofactor_examples():
    L1 = Matrix([[1, -1, -1], [0, 2, -1], [-1, -1, 2]])
    L2 = Matrix([[2, 0, -1], [-1, 1, -1], [-1, -1, 2]])
    assert cofactor(L2, 2, 2) == 2
    assert cofactor(Matrix.identity(2), 0, 1) == 0
    assert cofactor(L1, 0, 0) == 3
    with pytest.raises(IndexOutOfRange):
        cofactor(L1, 3, 0)


@settings(max_examples=50)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_cofactor_sign_convention(rows):
    n = len(rows)
    m = Matrix(rows, cols=n)
    for i in range(n):
        for j in range(n):
            assert cofactor(m, i, j) == (-1) ** (i + j) * leibniz_det(minor_rows(rows, i, j))


def test_select_running_example():
    N_in = Matrix([[0, 1, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0], [0, 0, 1]])
    M_out = Matrix([[1, 0, 0, 0, 1], [0, 1, 0, 0, 0], [0, 0, 1, 1, 0]])
    # e1, e4 are rows/columns 0 and 3
    assert select(N_in, rows=[0, 3]) == Matrix([[0, 1, 0], [1, 0, 0]])
    assert select(M_out, cols=[0, 3]) == Matrix([[1, 0], [0, 0], [0, 1]])
    assert select(N_in) == N_in
    assert select(N_in, rows=range(5), cols=range(3)) == N_in


def test_select_errors():
    m = Matrix.identity(3)
    with pytest.raises(UnsortedSelector):
        select(m, rows=[2, 1])
    with pytest.raises(UnsortedSelector):
        select(m, cols=[1, 1])
    with pytest.raises(IndexOutOfRange):
        select(m, rows=[0, 3])


def test_products_running_example():
    N_in = Matrix([[0, 1, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0], [0, 0, 1]])
    M_out = Matrix([[1, 0, 0, 0, 1], [0, 1, 0, 0, 0], [0, 0, 1, 1, 0]])
    assert multiply(M_out, N_in) == Matrix([[0, 1, 1], [0, 0, 1], [1, 1, 0]])
    assert multiply(transpose(N_in), N_in) == Matrix.diag([1, 2, 2])
    assert transpose(transpose(N_in)) == N_in


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(ShapeMismatch):
        Matrix.identity(2) + Matrix.identity(3)
    with pytest.raises(ShapeMismatch):
        Matrix([[1, 2], [3]])


def test_zero_width_products():
    a = Matrix([], cols=0)
    assert a.shape == (0, 0)
    b = Matrix([[], [], []])
    assert b.shape == (3, 0)
    assert (b @ b.T) == Matrix.zeros(3, 3)


def test_floats_rejected():
    with pytest.raises(TypeError):
        Matrix([[0.5]])


def test_power_is_zero():
    assert power_is_zero(Matrix([[0, 1], [0, 0]]), 2)
    assert not power_is_zero(Matrix([[0, 1], [0, 0]]), 1)
    for k in (1, 2, 5):
        assert not power_is_zero(Matrix.identity(3), k)
    # running example tree {e1, e4} at v3: single edge v1 -> v2 among non-root vertices
    assert power_is_zero(Matrix([[0, 1], [0, 0]]), 2)
    with pytest.raises(NotSquare):
        power_is_zero(Matrix([[0, 1]]), 2)


def test_apply():
    L1 = Matrix([[1, -1, -1], [0, 2, -1], [-1, -1, 2]])
    assert L1.apply([3, 1, 2]) == (0, 0, 0)
