import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_algebra
from tqa.resolutions import (
    Chain, PWord, QWord, augment, bar_diff, contraction_r, contraction_s, min_diff, p_basis, q_basis,
    verify_resolutions,
)


def qword(q, left, inner, right):
    p = q.parse_path
    return QWord(p(left), tuple(p(s) for s in inner), p(right))


def pword(q, left, middle, right):
    p = q.parse_path
    return PWord(p(left), p(middle), p(right))


def fmt(A, chain):
    return chain.format(A.quiver)


def test_b1_on_arrow():
    A = make_algebra("example83", 3)
    q = A.quiver
    c = Chain.of(qword(q, "v1", ["a"], "v2"))
    expected = Chain(0, {qword(q, "a", [], "v2"): 1, qword(q, "v1", [], "a"): -1})
    assert bar_diff(A, c) == expected
    assert fmt(A, bar_diff(A, c)) == "-1[]a + a[]1"


@pytest.mark.parametrize("N", [2, 3, 4])
def test_b2_truncated_middle(N):
    A = make_algebra("loop", N)
    q = A.quiver
    top = "x^2" if N == 3 else "x" if N == 2 else f"x^{N - 1}"
    c = Chain.of(qword(q, "v", [top, "x"], "v"))
    expected = Chain(1, {qword(q, top, ["x"], "v"): 1, qword(q, "v", [top], "x"): 1})
    assert bar_diff(A, c) == expected


def test_d1():
    A = make_algebra("example83", 3)
    q = A.quiver
    c = Chain(1, {pword(q, "v2", "x", "v2"): 1})
    expected = Chain(0, {pword(q, "x", "v2", "v2"): 1, pword(q, "v2", "v2", "x"): -1})
    assert min_diff(A, c) == expected


def test_d2_and_d3_one_loop():
    A = make_algebra("loop", 2)
    q = A.quiver
    assert fmt(A, min_diff(A, Chain(2, {pword(q, "v", "x^2", "v"): 1}))) == "1⊗x⊗x + x⊗x⊗1"
    expected = Chain(2, {pword(q, "x", "x^2", "v"): 1, pword(q, "v", "x^2", "x"): -1})
    assert min_diff(A, Chain(3, {pword(q, "v", "x^3", "v"): 1})) == expected


def test_s_vanishes_on_vertex_left():
    A = make_algebra("loop", 3)
    q = A.quiver
    assert not contraction_s(A, Chain.of(qword(q, "v", ["x"], "x")))
    moved = contraction_s(A, Chain.of(qword(q, "x", ["x"], "v")))
    assert fmt(A, moved) == "1[x|x]1"


def test_r_odd_vanishes_below_top_length():
    A = make_algebra("loop", 3)
    q = A.quiver
    assert not contraction_r(A, Chain(1, {pword(q, "x", "x", "v"): 1}))
    assert contraction_r(A, Chain(1, {pword(q, "x^2", "x", "v"): 1}))


@pytest.mark.parametrize("N", [3, 4])
def test_r0_on_square(N):
    A = make_algebra("loop", N)
    q = A.quiver
    got = contraction_r(A, Chain(0, {pword(q, "x^2", "v", "v"): 1}))
    assert fmt(A, got) == "1⊗x⊗x + x⊗x⊗1"


def test_augment():
    A = make_algebra("loop", 3)
    q = A.quiver
    x = q.parse_path("x")
    assert augment(A, Chain(0, {QWord(x, (), x): 1})) == A.path_element(q.parse_path("x^2"))
    assert not augment(A, Chain(0, {QWord(x, (), q.parse_path("x^2")): 1}))
    with pytest.raises(ValueError):
        augment(A, Chain.of(qword(q, "v", ["x"], "v")))


def test_differentials_reject_degree_zero():
    A = make_algebra("loop", 2)
    with pytest.raises(ValueError):
        bar_diff(A, Chain(0))
    with pytest.raises(ValueError):
        min_diff(A, Chain(0))


@pytest.mark.parametrize("name,N,degree", [("loop", 2, 6), ("example83", 3, 5), ("tensor2", 2, 3),
                                           ("cycle3", 3, 4)])
def test_verify_resolutions(name, N, degree):
    report = verify_resolutions(make_algebra(name, N), degree)
    assert report.passed, report.to_text()
    assert {"b^2=0", "d^2=0", "sb+bs=id", "rd+dr=id", "d1r0=id-1(x)eps", "eps*b1=0"} <= {
        r.name for r in report.results}


def test_sign_flipped_differential_is_caught():
    A = make_algebra("loop", 3)

    def flipped(A, chain):
        # the odd differential with both summands positive
        out = min_diff(A, chain)
        if chain.degree % 2:
            out = Chain(out.degree, {w: abs(c) for w, c in out})
        return out

    report = verify_resolutions(A, 4, min_diff_impl=flipped)
    failed = {r.name for r in report.failures()}
    assert "d^2=0" in failed
    witness = next(r.witness for r in report.failures() if r.name == "d^2=0")
    assert "⊗" in witness


def test_reduced_bases():
    A = make_algebra("example83", 3)
    assert all(w.is_reduced_basis() for w in q_basis(A, 2))
    assert len(p_basis(A, 2)) == 4  # pairs of vertices joined by a path of length 3
    assert all(len(w.middle) == 4 for w in p_basis(A, 3))


def _act(A, left, chain, right):
    """left . chain . right for basis paths ``left``, ``right``."""
    out = Chain(chain.degree)
    for w, c in chain:
        lw = A.mul(left, w.left)
        rw = A.mul(w.right, right)
        if lw is not None and rw is not None:
            out.add(type(w)(lw, w[1], rw), c)
    return out


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("loop", 3), ("example83", 3), ("tensor2", 2), ("cycle3", 2)]),
       st.integers(1, 4), st.data())
def test_differentials_are_bimodule_maps(case, n, data):
    A = make_algebra(*case)
    gamma = data.draw(st.sampled_from(A.basis))
    delta = data.draw(st.sampled_from(A.basis))
    for basis_fn, diff in ((q_basis, bar_diff), (p_basis, min_diff)):
        words = basis_fn(A, n)
        if not words:
            continue
        w = data.draw(st.sampled_from(words))
        c = Chain(n, {w: 1})
        assert diff(A, _act(A, gamma, c, delta)) == _act(A, gamma, diff(A, c), delta)
