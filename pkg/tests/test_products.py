from itertools import product

import pytest

from conftest import make_algebra
from tqa import example83
from tqa.cohomology import DualCochain, cochain_basis, cohomology
from tqa.errors import NotACocycleError
from tqa.products import (
    bar_cocycle_from_pair, bar_evaluator, cup, cup_bar_route, cup_cochain_full, loop_pair, poly_cochain, vee,
)
from tqa.quiver import ParallelPair
from tqa.resolutions import q_basis


def pair(q, alpha, pi):
    return ParallelPair(q.parse_path(alpha), q.parse_path(pi))


def cochain(q, degree, *pairs):
    return DualCochain(degree, {pair(q, a, p): 1 for a, p in pairs})


def test_odd_times_odd_full_product_vanishes():
    A = make_algebra("loop", 2)
    q = A.quiver
    f = cochain(q, 1, ("x", "x"))
    assert not cup_cochain_full(A, f, f)
    assert not cup_bar_route(A, f, f)


def test_even_times_even_concatenates():
    A = make_algebra("loop", 3)
    q = A.quiver
    f = cochain(q, 2, ("x", "x^3"))
    expected = cochain(q, 4, ("x^2", "x^6"))
    assert cup_cochain_full(A, f, f) == expected
    assert cup_bar_route(A, f, f) == expected
    assert vee(A, f, f) == expected


def test_endpoint_mismatch_vanishes():
    A = example83.algebra(3)
    q = A.quiver
    f = cochain(q, 0, ("v1", "v1"))
    g = cochain(q, 1, ("b", "b"))
    for impl in (vee, cup_cochain_full, cup_bar_route):
        assert not impl(A, f, g)


@pytest.mark.parametrize("name,N", [("example83", 3), ("loop", 3), ("cycle3", 2)])
def test_unit_on_both_sides(name, N):
    A = make_algebra(name, N)
    q = A.quiver
    one = DualCochain(0, {ParallelPair(q.vertex(v), q.vertex(v)): 1 for v in range(q.num_vertices)})
    for n in range(4):
        for rep in (cohomology(A, n).representative(k) for k in range(cohomology(A, n).dim)):
            assert cup_bar_route(A, one, rep) == rep
            assert cup_bar_route(A, rep, one) == rep
            assert cup(A, one, rep) == cohomology(A, n).class_of(rep)


@pytest.mark.parametrize("N", [2, 3])
def test_full_and_bar_agree_on_all_basis_cochains(N):
    A = make_algebra("loop", N)
    for n1 in range(5):
        for n2 in range(5 - n1):
            for p in cochain_basis(A, n1):
                for r in cochain_basis(A, n2):
                    f, g = DualCochain(n1, {p: 1}), DualCochain(n2, {r: 1})
                    assert cup_cochain_full(A, f, g) == cup_bar_route(A, f, g), (p, r)


def test_omega_product_example():
    A = example83.algebra(4)
    left = cohomology(A, 1).class_of(example83.omega(A, 1, 1))
    right = cohomology(A, 2).class_of(example83.omega(A, 2, 1))
    assert cup(A, left, right) == cohomology(A, 3).class_of(example83.omega(A, 3, 2))
    square = cup(A, right, right)
    assert square and square == cohomology(A, 4).class_of(example83.omega(A, 4, 2))


@pytest.mark.parametrize("method", ["vee", "full", "bar"])
def test_odd_classes_multiply_to_zero(method):
    A = example83.algebra(3)
    for x in cohomology(A, 1).basis_classes():
        for y in cohomology(A, 3).basis_classes():
            assert cup(A, x, y, method=method).is_zero()


def test_loop_generator_product():
    A = make_algebra("loop", 3)
    f20 = loop_pair(A, 2, 0)
    f11 = loop_pair(A, 1, 1)
    assert cup(A, f20, f11) == cohomology(A, 3).class_of(loop_pair(A, 3, 1))


def test_cup_rejects_non_cocycle():
    A = example83.algebra(3)
    q = A.quiver
    with pytest.raises(NotACocycleError):
        cup(A, cochain(q, 2, ("x", "x^3")), cochain(q, 0, ("v1", "v1")))


def _bar_words(A, n):
    return [w.inner for w in q_basis(A, n)]


@pytest.mark.parametrize("name,N,beta,tau,k", [
    ("tensor2", 3, "x1x1", "x2x2x2", 1),
    ("tensor2", 3, "x1x2", "x2x2x1", 1),
    ("diamond", 2, "e", "ab", 1),
    ("diamond", 2, "e", "cd", 1),
])
def test_bar_cocycle_matches_pullback(name, N, beta, tau, k):
    A = make_algebra(name, N)
    q = A.quiver
    p = pair(q, beta, tau)
    explicit = bar_cocycle_from_pair(A, p, k)
    pulled = bar_evaluator(A, DualCochain(2 * k, {p: 1}))
    for inner in _bar_words(A, 2 * k):
        assert explicit(inner) == pulled(inner), inner
    H = cohomology(A, 2 * k)
    c = DualCochain(2 * k, {p: 1})
    assert H.is_cocycle(c) and not H.is_coboundary(c)


def test_bar_cocycle_zero_when_adjacent_product_survives():
    A = make_algebra("tensor2", 3)
    q = A.quiver
    explicit = bar_cocycle_from_pair(A, pair(q, "x1x1", "x2x2x2x2x2x2"), 2)
    x2, x22 = q.parse_path("x2"), q.parse_path("x2x2")
    assert explicit((x2, x2, x22, x22)) == {}
    assert explicit((x22, x2, x2, x22)) == {q.parse_path("x1x1"): 1}
    with pytest.raises(ValueError):
        explicit((x2,))


def test_bar_cocycle_rejects_pairs_starting_together():
    A = make_algebra("tensor2", 3)
    q = A.quiver
    with pytest.raises(ValueError):
        bar_cocycle_from_pair(A, pair(q, "x1x1", "x1x2x2"), 1)
    with pytest.raises(ValueError):
        bar_cocycle_from_pair(A, pair(q, "x1", "x2x2x2"), 1)


def test_poly_cochain_examples():
    f = poly_cochain(2, 0, 3)
    assert f((2, 1)) == (1, 0)
    assert f((1, 1)) is None
    with pytest.raises(ValueError):
        poly_cochain(2, 2, 3)
    with pytest.raises(ValueError):
        poly_cochain(1, 0, 3)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_poly_cochain_matches_pullback(N):
    A = make_algebra("loop", N)
    q = A.quiver
    for n in range(1, 6):
        valid = range(N - 1) if n % 2 == 0 else range(1, N)
        for i in valid:
            closed = poly_cochain(n, i, N)
            pulled = bar_evaluator(A, loop_pair(A, n, i))
            for r in product(range(1, N), repeat=n):
                inner = tuple(q.path((0,) * e, 0) for e in r)
                value = closed(r)
                expected = {} if value is None else {q.path((0,) * value[1], 0): value[0]}
                assert pulled(inner) == expected, (n, i, r)
