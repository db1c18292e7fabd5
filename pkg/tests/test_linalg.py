from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tqa.linalg import (
    ColumnSpace, RationalMatrix, format_rational, image_basis, in_image, kernel_basis, parse_rational,
    quotient_reps, rank, rref,
)

D00 = RationalMatrix.from_dense([[-1, 1, 0], [0, 0, 0], [0, -1, 1]])


def bareiss_rank(rows):
    """Independent rank by fraction-free elimination with column-major pivot search."""
    m = [[int(x) for x in r] for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def test_rank_examples():
    assert rank(D00) == 2
    assert rank(RationalMatrix(4, 4)) == 0
    assert rank(RationalMatrix.from_dense([[2], [3], [2], [1]])) == 1


def test_kernel_examples():
    assert kernel_basis(D00) == [[1, 1, 1]]
    assert kernel_basis(RationalMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == []
    assert len(kernel_basis(RationalMatrix.from_dense([[2, 3, 2, 1]]))) == 3


def test_in_image_examples():
    assert in_image(D00, [-2, 0, 0]) == [2, 0, 0]
    assert in_image(D00, [1, 1, 1]) is None
    with pytest.raises(ValueError):
        in_image(D00, [1, 2])


def test_quotient_reps_example():
    reps = quotient_reps(4, [[2, 3, 2, 1]])
    assert reps == [1, 2, 3]


def test_image_basis_is_rref_of_columns():
    basis = image_basis(D00)
    assert len(basis) == 2
    assert all(in_image(D00, v) is not None for v in basis)


def test_rational_format():
    assert format_rational(Fraction(3, 1)) == "3"
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert parse_rational("-1/2") == Fraction(-1, 2)


def test_rref_shape_and_pivots():
    R = rref(RationalMatrix.from_dense([[0, 2, 4], [1, 1, 1]]))
    assert R.to_dense() == [[1, 0, -1], [0, 1, 2]]


def test_matrix_rejects_out_of_range_entry():
    with pytest.raises(IndexError):
        RationalMatrix(2, 2, {(2, 0): 1})


def test_column_space_solve_and_dependencies():
    space = ColumnSpace()
    assert space.add({0: 1, 1: 1}, "u")
    assert space.add({1: 1}, "w")
    assert not space.add({0: 2, 1: 5}, "z")
    assert space.solve({0: 2, 1: 5}) == {"u": 2, "w": 3}
    assert space.dependencies == [{"u": -2, "w": -3, "z": 1}]
    assert space.solve({2: 1}) is None


small = st.integers(-3, 3)


@st.composite
def matrices(draw):
    r = draw(st.integers(1, 5))
    c = draw(st.integers(1, 5))
    return draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(rows):
    M = RationalMatrix.from_dense(rows)
    assert rank(M) == bareiss_rank(rows)
    ker = kernel_basis(M)
    assert rank(M) + len(ker) == M.ncols
    for v in ker:
        assert not M.apply(v)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_in_image_reproduces_vector(rows, data):
    M = RationalMatrix.from_dense(rows)
    x = data.draw(st.lists(small, min_size=M.ncols, max_size=M.ncols))
    v = [sum(Fraction(rows[i][j]) * x[j] for j in range(M.ncols)) for i in range(M.nrows)]
    c = in_image(M, v)
    assert c is not None
    assert [sum(Fraction(rows[i][j]) * c[j] for j in range(M.ncols)) for i in range(M.nrows)] == v


@settings(max_examples=100, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_results_independent_of_insertion_order(rows, rnd):
    items = [((i, j), v) for i, r in enumerate(rows) for j, v in enumerate(r) if v]
    shuffled = list(items)
    rnd.shuffle(shuffled)
    A = RationalMatrix(len(rows), len(rows[0]), dict(items))
    B = RationalMatrix(len(rows), len(rows[0]), dict(shuffled))
    assert A == B
    assert kernel_basis(A) == kernel_basis(B)
    assert image_basis(A) == image_basis(B)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_quotient_reps_complement_image(rows):
    M = RationalMatrix.from_dense(rows)
    image = image_basis(M)
    reps = quotient_reps(M.nrows, image)
    assert len(reps) + len(image) == M.nrows
    space = ColumnSpace(image)
    for r in reps:
        assert space.add({r: 1})
