"""Independent cohomology dimensions from the reduced bar complex.

Cochains of degree n are maps from composable words of n positive-length
basis paths to A, compatible with endpoints; a basis is the set of pairs
(word, gamma) with gamma a basis path parallel to the concatenated word.
Nothing here uses the minimal resolution or the comparison morphisms.
"""

from __future__ import annotations

from .errors import ResourceLimitError
from .linalg import RationalMatrix, rank
from .quiver import DEFAULT_CAP


def _words(A, n, cap):
    """Composable words of n positive-length basis paths, keyed by their endpoints."""
    q = A.quiver
    by_src = {}
    for p in A.positive_basis:
        by_src.setdefault(p.src, []).append(p)
    words = [((), v) for v in range(q.num_vertices)]
    for _ in range(n):
        nxt = []
        for inner, end in words:
            for p in by_src.get(end, ()):
                nxt.append((inner + (p,), p.tgt))
        if len(nxt) > cap:
            raise ResourceLimitError(f"more than {cap} bar words of degree {n}")
        words = nxt
    return [(inner, inner[0].src if inner else end, end) for inner, end in words]


def cochain_basis(A, n, cap=DEFAULT_CAP):
    """Basis pairs (word, gamma) of the degree-n bar cochains."""
    between = {}
    for g in A.basis:
        between.setdefault((g.src, g.tgt), []).append(g)
    out = []
    for inner, s, t in _words(A, n, cap):
        for g in between.get((s, t), ()):
            out.append((inner, g))
            if len(out) > cap:
                raise ResourceLimitError(f"more than {cap} bar cochains of degree {n}")
    return out


def _weight(inner, gamma):
    return sum(len(p) for p in inner) - len(gamma)


def coboundary_images(A, inner, gamma, vertex=None):
    """delta of the indicator cochain (inner -> gamma), as {(word, value): coeff}.

    (delta f)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(..a_i a_{i+1}..)
    + (-1)^{n+1} f(a_1..a_n) a_{n+1}.
    """
    q = A.quiver
    n = len(inner)
    start = inner[0].src if inner else vertex
    end = inner[-1].tgt if inner else vertex
    out = {}

    def put(key, c):
        out[key] = out.get(key, 0) + c

    for a in A.positive_basis:
        if a.tgt == start:
            val = A.mul(a, gamma)
            if val is not None:
                put(((a,) + inner, val), 1)
        if a.src == end:
            val = A.mul(gamma, a)
            if val is not None:
                put((inner + (a,), val), (-1) ** (n + 1))
    for i, p in enumerate(inner, 1):
        for cut in range(1, len(p)):
            left = q.subpath(p, 0, cut)
            right = q.subpath(p, cut, len(p))
            put((inner[:i - 1] + (left, right) + inner[i:], gamma), (-1) ** i)
    return {k: v for k, v in out.items() if v}


def _rank_of_coboundary(A, n, cap):
    """Rank of delta: C^n -> C^{n+1}, computed block by block.

    delta preserves the weight sum|a_i| - |gamma| (endpoints do change), so
    the matrix splits into one block per weight.
    """
    q = A.quiver
    blocks = {}
    if n == 0:
        for v in range(q.num_vertices):
            for g in A.basis:
                if g.src == v and g.tgt == v:
                    key = -len(g)
                    blocks.setdefault(key, []).append(coboundary_images(A, (), g, vertex=v))
    else:
        for inner, g in cochain_basis(A, n, cap):
            key = _weight(inner, g)
            blocks.setdefault(key, []).append(coboundary_images(A, inner, g))
    total = 0
    for cols in blocks.values():
        index = {}
        entries = {}
        for c, img in enumerate(cols):
            for key, v in img.items():
                r = index.setdefault(key, len(index))
                entries[(r, c)] = v
        if entries:
            total += rank(RationalMatrix(len(index), len(cols), entries))
    return total


def _dim_cochains(A, n, cap):
    if n == 0:
        return sum(1 for g in A.basis if g.src == g.tgt)
    return len(cochain_basis(A, n, cap))


def bar_cohomology_oracle(A, n, cap=DEFAULT_CAP):
    """dim H^n(A, A) = dim C^n - rank delta^n - rank delta^{n-1}."""
    dim = _dim_cochains(A, n, cap)
    r_out = _rank_of_coboundary(A, n, cap)
    r_in = _rank_of_coboundary(A, n - 1, cap) if n >= 1 else 0
    return dim - r_out - r_in
