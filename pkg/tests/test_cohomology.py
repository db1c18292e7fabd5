import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_algebra
from tqa import example83
from tqa.checks import verify_cohomology
from tqa.cohomology import (
    DualCochain, center_brute_force, coboundary, cochain_basis, coboundary_block, cohomology, degree_of_length,
    dual_diff_matrix, medal_classes,
)
from tqa.errors import NotACocycleError
from tqa.linalg import ColumnSpace, RationalMatrix
from tqa.quiver import ParallelPair


def test_even_block_example():
    A = example83.algebra(3)
    expected = RationalMatrix.from_dense([[-1, 1, 0], [0, 0, 0], [0, -1, 1], [-1, 0, 1]])
    assert example83.display_block(A, 2, 1) == expected


@pytest.mark.parametrize("N", [3, 4, 5])
def test_odd_column(N):
    A = example83.algebra(N)
    assert example83.display_block(A, 3, 0) == RationalMatrix.from_dense([[N - 1], [N], [N - 1], [N - 2]])


@pytest.mark.parametrize("N", [2, 3, 4])
def test_loop_even_blocks_vanish(N):
    A = make_algebra("loop", N)
    for n in (0, 2, 4):
        for j in range(N - 1):
            blk = coboundary_block(A, n, j)
            assert blk is None or blk.is_zero()


@pytest.mark.parametrize("N,dims", [(3, [2, 3, 4, 4, 4]), (4, [2, 5, 6, 6, 6])])
def test_three_vertex_dims(N, dims):
    A = example83.algebra(N)
    assert [cohomology(A, n).dim for n in range(5)] == dims


@pytest.mark.parametrize("N", [2, 3, 5])
def test_loop_dims(N):
    A = make_algebra("loop", N)
    assert [cohomology(A, n).dim for n in range(7)] == [N] + [N - 1] * 6


def test_single_arrow_has_no_higher_cohomology():
    A = make_algebra("a2", 2)
    assert cohomology(A, 0).dim == 1
    assert all(cohomology(A, n).dim == 0 for n in range(1, 7))


@pytest.mark.parametrize("name,N", [("example83", 3), ("loop", 3), ("tensor2", 2), ("cycle3", 2),
                                    ("diamond", 3), ("example7-2", 3)])
def test_formula_matches_dualized_differential(name, N):
    report = verify_cohomology(make_algebra(name, N), 4)
    assert report.passed, report.to_text()


@pytest.mark.parametrize("name,N", [("example83", 3), ("loop", 4), ("tensor2", 3), ("cycle4", 2),
                                    ("diamond", 2), ("a3", 3)])
def test_H0_is_center(name, N):
    A = make_algebra(name, N)
    assert cohomology(A, 0).dim == center_brute_force(A)[0]


def test_medal_on_oriented_cycle():
    A = make_algebra("example7-1", 3)
    q = A.quiver
    pair = ParallelPair(q.parse_path("v1v2"), q.parse_path("v1v2v3v4v1v2"))
    cls, = [c for c in medal_classes(A, 2, 6) if pair in c.members]
    assert cls.is_medal
    assert not cls.plus_extremes and not cls.minus_extremes


def test_non_medal_has_extreme_away_from_sink():
    A = make_algebra("example7-2", 3)
    q = A.quiver
    pair = ParallelPair(q.parse_path("v1v2"), q.parse_path("v1v2v3v4v1v2"))
    cls, = [c for c in medal_classes(A, 2, 6) if pair in c.members]
    assert not cls.is_medal
    assert any(p.first.tgt not in q.sinks for p in cls.plus_extremes)


@pytest.mark.parametrize("i,m", [(1, 3), (1, 4), (2, 4), (1, 6), (2, 6)])
def test_two_loops_have_no_medals(i, m):
    A = make_algebra("tensor2", 3)
    classes = medal_classes(A, i, m)
    assert classes
    assert not any(c.is_medal for c in classes)


def test_medal_classes_partition_pairs():
    A = example83.algebra(4)
    classes = medal_classes(A, 2, 8)
    members = [p for c in classes for p in c.members]
    assert len(members) == len(set(members))
    assert sum(1 for c in classes if c.is_medal) == 2


def test_non_cocycle_rejected():
    A = example83.algebra(3)
    q = A.quiver
    bad = DualCochain(2, {ParallelPair(q.parse_path("x"), q.parse_path("x^3")): 1})
    with pytest.raises(NotACocycleError):
        cohomology(A, 2).class_of(bad)


def test_wrong_degree_rejected():
    A = example83.algebra(3)
    with pytest.raises(ValueError):
        cohomology(A, 2).coordinates(DualCochain(3))


def test_json_shape():
    A = example83.algebra(3)
    data = json.loads(json.dumps(cohomology(A, 2).to_dict()))
    assert data["degree"] == 2 and data["total"] == 4
    assert data["rows"] == {"0": 0, "1": 1, "2": 3}
    assert len(data["representatives"]) == 4
    assert set(data["representatives"][0][0]) == {"alpha", "pi", "coeff"}


def test_degree_of_length():
    assert [degree_of_length(m, 3) for m in range(8)] == [0, 1, None, 2, 3, None, 4, 5]


CASES = [("example83", 3), ("example83", 4), ("loop", 3), ("tensor2", 2), ("cycle3", 3), ("diamond", 2),
         ("example7-2", 3)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CASES), st.integers(0, 4))
def test_representatives_are_independent_cocycles(case, n):
    A = make_algebra(*case)
    H = cohomology(A, n)
    assert sum(H.row_dimensions) == H.dim
    for k, cls in enumerate(H.basis_classes()):
        rep = H.representative(k)
        assert H.is_cocycle(rep) and not H.is_coboundary(rep)
        assert H.class_of(rep) == cls
    space = ColumnSpace()
    assert all(space.add(dict(enumerate(H.coordinates(H.representative(k))))) for k in range(H.dim))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CASES), st.integers(0, 4), st.data())
def test_coboundaries_reduce_to_zero(case, n, data):
    A = make_algebra(*case)
    basis = cochain_basis(A, n)
    if not basis:
        return
    chosen = data.draw(st.lists(st.sampled_from(basis), min_size=1, max_size=4))
    f = DualCochain(n, {p: data.draw(st.integers(-2, 2)) for p in chosen})
    df = coboundary(A, f)
    assert not coboundary(A, df)
    H = cohomology(A, n + 1)
    assert H.is_coboundary(df)
    assert H.class_of(df).is_zero()


@pytest.mark.parametrize("name,N", [("example83", 3), ("cycle3", 2)])
def test_square_of_coboundary_matrix_is_zero(name, N):
    A = make_algebra(name, N)
    for n in range(4):
        assert (dual_diff_matrix(A, n + 1) @ dual_diff_matrix(A, n)).is_zero()
