import pytest

from conftest import make_algebra
from tqa import example83
from tqa.checks import is_medal_combination, medal_kernel, ring_checks, verify_all, verify_medals
from tqa.cohomology import cohomology
from tqa.products import cup, loop_pair


def names(report):
    return {r.name: r for r in report.results}


@pytest.mark.parametrize("name,N", [("diamond", 3), ("tensor2", 3)])
def test_products_vanish_without_medals(name, N):
    report = ring_checks(make_algebra(name, N), 4, cross_degree=2)
    assert names(report)["positive products vanish"].checked > 0
    assert report.passed, report.to_text()


def test_linear_quiver_has_no_positive_cohomology():
    A = make_algebra("a3", 2)
    assert [cohomology(A, n).dim for n in range(5)] == [1, 0, 0, 0, 0]
    assert ring_checks(A, 4).passed


def test_three_vertex_ring_is_nontrivial():
    A = example83.algebra(4)
    w = cohomology(A, 2).class_of(example83.omega(A, 2, 1))
    square = cup(A, w, w)
    assert square and square == cohomology(A, 4).class_of(example83.omega(A, 4, 2))
    report = ring_checks(A, 4, cross_degree=2)
    assert "positive products vanish" not in names(report)
    assert report.passed, report.to_text()


def test_medal_factor_of_nonzero_product():
    A = example83.algebra(4)
    w = cohomology(A, 2).class_of(example83.omega(A, 2, 1))
    assert is_medal_combination(A, w)
    odd = cohomology(A, 1).class_of(example83.omega(A, 1, 1))
    assert not is_medal_combination(A, odd)


def test_row_zero_classes_on_a_cycle_are_not_nilpotent():
    # on the one-loop quiver (v, x^N) generates a polynomial ring, so powers never vanish
    A = make_algebra("loop", 3)
    f20 = cohomology(A, 2).class_of(loop_pair(A, 2, 0))
    power = f20
    for _ in range(A.N - 1):
        power = cup(A, power, f20)
    assert power
    f11 = cohomology(A, 1).class_of(loop_pair(A, 1, 1))
    assert cup(A, f11, f20) and not is_medal_combination(A, f20)
    report = ring_checks(A, 4, cross_degree=2)
    assert report.passed, report.to_text()


def test_medal_kernel_counts():
    A = example83.algebra(4)
    for k in (1, 2):
        for j, medals in ((1, 1), (2, 2)):
            assert medal_kernel(A, k, j) == (medals, medals, True)
    assert verify_medals(make_algebra("cycle4", 3)).passed


def test_verify_all_small():
    report = verify_all(make_algebra("loop", 2), 3)
    assert report.passed, report.to_text()
    assert {"b^2=0", "GF=id", "formula = dualized d", "odd * odd = 0"} <= set(names(report))
