import pytest

from tqa import example83
from tqa.cohomology import DualCochain, cohomology


@pytest.mark.parametrize("N", [3, 4, 5])
def test_table_dims_match_computation(N):
    A = example83.algebra(N)
    for n in range(6):
        key = n if n < 2 else 2 + n % 2
        assert example83.expected_dims(N, key) == cohomology(A, n).dim


def test_display_order_of_vertex_pairs():
    A = example83.algebra(3)
    pairs = example83.display_order(A, 0, 0)
    assert [A.quiver.format_path(p.first) for p in pairs] == ["v1", "v2", "v3"]


def test_display_order_shapes():
    A = example83.algebra(4)
    q = A.quiver
    pairs = example83.display_order(A, 2, 4)
    assert [q.format_path(p.first) for p in pairs] == ["ax", "x^2", "xb", "ab"]


def test_printed_matrix_names():
    names = set(example83.printed_matrices(5, 1))
    assert names == {"D_0^2", "D_1^2", "D_2^2", "D_3^2", "D_0^3"}
    assert set(example83.printed_matrices(4, 0)) == {"D_0^0", "D_1^0", "D_2^0", "D_0^1"}


def test_name_class():
    A = example83.algebra(4)
    H = cohomology(A, 2)
    assert example83.name_class(A, H.class_of(example83.omega(A, 2, 1))) == "omega_{2,1}"
    assert example83.name_class(A, H.class_of(example83.omega(A, 2, 2).scale(-2))) == "-2*omega_{2,2}"
    assert example83.name_class(A, H.class_of(DualCochain(2))) == "0"


def test_format_alpha():
    A = example83.algebra(4)
    assert example83.format_alpha(A, example83.omega(A, 2, 1)) == "a + x + b"


def test_text_table_layout():
    text = example83.format_table(4)
    lines = text.splitlines()
    assert lines[0].startswith("cohomology basis")
    assert "Delta_j, 2<=j<=N-2" in lines[1]
    assert [ln.split()[0] for ln in lines if ln.startswith("H^")] == ["H^0", "H^1", "H^2k", "H^2k+1"]
    assert "dim = 2" in lines and "dim = 5" in lines and lines.count("dim = 6") == 2
    assert text == example83.format_table(4)
