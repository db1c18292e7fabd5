"""The three-vertex quiver v1 -a-> v2 -b-> v3 with a loop x at v2.

For this quiver a pair (alpha, pi) is determined by alpha, so the pairs of
row j and path length M are listed by the shape of alpha:
``a x^{j-1}``, ``x^j``, ``x^{j-1} b``, ``a x^{j-2} b`` (shapes needing a
negative exponent are absent; row 0 of length 0 is ``v1, v2, v3``).  This
module fixes that display order, the printed coboundary matrices, the
cohomology basis table and the classes omega_{n,j}.
"""

from __future__ import annotations

from .algebra import TruncatedAlgebra
from .catalog import example83 as _quiver
from .cohomology import DualCochain, coboundary_block, pair_index, target_row
from .linalg import RationalMatrix
from .quiver import ParallelPair
from .resolutions import middle_length

SHAPES = ("a", "x", "b", "ab")


def algebra(N):
    return TruncatedAlgebra(_quiver(), N)


def _path(A, shape, e):
    """``a x^e``, ``x^e``, ``x^e b`` or ``a x^e b`` (None when e < 0)."""
    if e < 0:
        return None
    q = A.quiver
    a, x, b = (q.arrow_index[s] for s in "axb")
    arrows = {"a": (a,) + (x,) * e, "x": (x,) * e, "b": (x,) * e + (b,), "ab": (a,) + (x,) * e + (b,)}[shape]
    return q.path(arrows, vertex=q.vertex_index["v2"])


def shape_pair(A, shape, j, M):
    """The pair of the given shape in row j over paths of length M, or None."""
    offset = {"a": 1, "x": 0, "b": 1, "ab": 2}[shape]
    alpha = _path(A, shape, j - offset)
    pi = _path(A, shape, M - offset)
    if alpha is None or pi is None:
        return None
    return ParallelPair(alpha, pi)


def display_order(A, j, M):
    """Pairs of row j over length M in the display order (shape, or v1 v2 v3)."""
    if j == 0 and M == 0:
        q = A.quiver
        return [ParallelPair(q.vertex(v), q.vertex(v)) for v in range(3)]
    return [p for p in (shape_pair(A, s, j, M) for s in SHAPES) if p is not None]


def display_block(A, n, j):
    """Coboundary block out of row j of degree n, rows and columns in display order."""
    blk = coboundary_block(A, n, j)
    if blk is None:
        return None
    t = target_row(A, n, j)
    src = display_order(A, j, middle_length(n, A.N))
    tgt = display_order(A, t, middle_length(n + 1, A.N))
    sidx = pair_index(A, n, j)
    tidx = pair_index(A, n + 1, t)
    if sorted(sidx) != sorted(src) or sorted(tidx) != sorted(tgt):
        raise AssertionError("display order is not a permutation of the pair basis")
    return RationalMatrix.from_dense([[blk[tidx[r], sidx[c]] for c in src] for r in tgt])


def printed_matrices(N, k):
    """The coboundary blocks as printed for this quiver: name -> (degree, row, matrix).

    ``k = 0`` gives the first column of the complex, ``k >= 1`` the generic one.
    """
    col = RationalMatrix.from_dense([[1], [0], [-1]])
    odd = RationalMatrix.from_dense([[N - 1], [N], [N - 1], [N - 2]])
    out = {}
    if k == 0:
        out["D_0^0"] = (0, 0, RationalMatrix.from_dense([[-1, 1, 0], [0, 0, 0], [0, -1, 1]]))
        for j in range(1, N - 1):
            out[f"D_{j}^0"] = (0, j, col)
        out["D_0^1"] = (1, 0, odd)
        return out
    out[f"D_0^{2 * k}"] = (2 * k, 0, col)
    out[f"D_1^{2 * k}"] = (2 * k, 1, RationalMatrix.from_dense(
        [[-1, 1, 0], [0, 0, 0], [0, -1, 1], [-1, 0, 1]]))
    for j in range(2, N - 1):
        out[f"D_{j}^{2 * k}"] = (2 * k, j, RationalMatrix.from_dense(
            [[-1, 1, 0, 0], [0, 0, 0, 0], [0, -1, 1, 0], [-1, 0, 1, 0]]))
    out[f"D_0^{2 * k + 1}"] = (2 * k + 1, 0, odd)
    return out


# --- table of cohomology bases ----------------------------------------------------------


def _combo(A, n, j, coeffs):
    """Cochain sum of shape pairs in row j of degree n; coeffs maps shape -> coefficient."""
    M = middle_length(n, A.N)
    out = DualCochain(n)
    for shape, c in coeffs.items():
        p = shape_pair(A, shape, j, M)
        if p is not None:
            out.add(p, c)
    return out


def omega(A, n, j):
    """omega_{n,j}: x^j + a x^{j-1} for odd n, the sum of all four shapes for even n."""
    if n < 1 or not 1 <= j <= A.N - 1:
        raise ValueError("omega_{n,j} needs n >= 1 and 1 <= j <= N-1")
    if n % 2:
        return _combo(A, n, j, {"x": 1, "a": 1})
    return _combo(A, n, j, {"a": 1, "x": 1, "b": 1, "ab": 1})


def table_basis(A, n):
    """Listed cohomology basis of H^n as [(row, label, cochain)]."""
    N = A.N
    out = []

    def add(j, label, coeffs):
        out.append((j, label, _combo(A, n, j, coeffs)))

    if n == 0:
        q = A.quiver
        out.append((0, "1", DualCochain(0, {ParallelPair(q.vertex(v), q.vertex(v)): 1 for v in range(3)})))
        add(N - 1, "x^{N-1}", {"x": 1})
    elif n == 1:
        add(1, "x+a", {"x": 1, "a": 1})
        for j in range(2, N):
            add(j, f"x^{j}+ax^{j - 1}", {"x": 1, "a": 1})
            add(j, f"ax^{j - 1}", {"a": 1})
    elif n % 2 == 0:
        add(1, "a+x+b", {"a": 1, "x": 1, "b": 1})
        for j in range(2, N):
            add(j, f"omega_{n},{j}", {"a": 1, "x": 1, "b": 1, "ab": 1})
            add(j, f"ax^{j - 2}b", {"ab": 1})
        add(N - 1, f"x^{N - 1}", {"x": 1})
    else:
        add(1, "x+a", {"x": 1, "a": 1})
        add(1, "a", {"a": 1})
        for j in range(2, N):
            add(j, f"x^{j}+ax^{j - 1}", {"x": 1, "a": 1})
            add(j, f"ax^{j - 1}", {"a": 1})
    return out


def table_coboundaries(A, n):
    """Listed coboundaries in degree n as [(row, label, cochain)]."""
    N = A.N
    out = []

    def add(j, label, coeffs):
        out.append((j, label, _combo(A, n, j, coeffs)))

    if n == 1:
        add(1, "a", {"a": 1})
        add(1, "b", {"b": 1})
        for j in range(2, N):
            add(j, f"ax^{j - 1}-x^{j - 1}b", {"a": 1, "b": -1})
    elif n >= 2 and n % 2 == 0:
        add(N - 1, "D_0 image", {"a": N - 1, "x": N, "b": N - 1, "ab": N - 2})
    elif n >= 3:
        add(1, "a-b", {"a": 1, "b": -1})
        for j in range(2, N):
            add(j, f"ax^{j - 1}+ax^{j - 2}b", {"a": 1, "ab": 1})
            add(j, f"x^{j - 1}b+ax^{j - 2}b", {"b": 1, "ab": 1})
    return out


def expected_dims(N, n):
    if n == 0:
        return 2
    if n == 1:
        return 2 * N - 3
    return 2 * N - 2


def name_class(A, cls):
    """``c*omega_{n,j}`` when the class is a multiple of one omega class, else None."""
    from .cohomology import cohomology

    n = cls.degree
    if cls.is_zero():
        return "0"
    if n < 1:
        return None
    space = cohomology(A, n)
    for j in range(1, A.N):
        w = space.class_of(omega(A, n, j))
        if w.is_zero():
            continue
        k, c = next(iter(w.terms.items()))
        ratio = cls.terms.get(k, 0) / c
        if ratio and w.scale(ratio) == cls:
            return f"omega_{{{n},{j}}}" if ratio == 1 else f"{ratio}*omega_{{{n},{j}}}"
    return None


def format_alpha(A, cochain):
    """A cochain written through its first paths only (pi is determined by alpha)."""
    from .linalg import format_rational

    q = A.quiver
    terms = []
    for j, part in sorted(cochain.rows().items()):
        order = display_order(A, j, middle_length(cochain.degree, A.N))
        for p in sorted(part, key=order.index):
            c = part[p]
            name = q.format_path(p.first)
            coeff = "" if c == 1 else "-" if c == -1 else f"{format_rational(c)}"
            terms.append(f"{coeff}{name}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def format_table(N):
    """Text rendering of the cohomology basis table for truncation N."""
    A = algebra(N)
    cols = ["Delta_0", "Delta_1", "Delta_j, 2<=j<=N-2", f"Delta_{N - 1}"]

    def column(j):
        if j <= 1:
            return j
        return 3 if j == N - 1 else 2

    blocks = []
    for n, title in ((0, "H^0"), (1, "H^1"), (2, "H^2k (k>=1)"), (3, "H^2k+1 (k>=1)")):
        for heading, items in ((title, table_basis(A, n)), ("coboundaries", table_coboundaries(A, n))):
            cells = [[] for _ in cols]
            for j, _, c in items:
                # the middle column shows the generic row j = 2 only
                if column(j) == 2 and j != 2:
                    continue
                cells[column(j)].append(format_alpha(A, c))
            if heading == "coboundaries" and not any(cells):
                continue
            blocks.append((heading, cells))
        blocks.append((f"dim = {expected_dims(N, n)}", [[] for _ in cols]))
    width = [max([len(cols[k])] + [len(x) for _, cells in blocks for x in cells[k]]) + 3 for k in range(4)]
    head = 15
    lines = [f"cohomology basis, three-vertex quiver with a loop, N={N} (pairs named by alpha)",
             " " * head + "".join(c.ljust(w) for c, w in zip(cols, width))]
    for heading, cells in blocks:
        depth = max(1, max(len(c) for c in cells))
        for r in range(depth):
            label = heading if r == 0 else ""
            row = "".join((c[r] if r < len(c) else "").ljust(w) for c, w in zip(cells, width))
            lines.append((label.ljust(head) + row).rstrip())
    return "\n".join(lines)
