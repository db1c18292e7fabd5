"""The bigraded cochain complex on parallel pairs, its cohomology, and medals.

A pair ``(alpha, pi)`` with ``|pi| = m(n)`` stands for the cochain of degree
n sending the path ``pi`` to ``alpha`` and every other path to 0.  Row i of
degree n is spanned by the pairs with ``|alpha| = i``.  Matrices use target
pairs as rows and source pairs as columns.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotACocycleError
from .linalg import (ColumnSpace, RationalMatrix, axpy, image_basis_sparse, kernel_basis_sparse,
                     quotient_reps, rref_rows)
from .quiver import DEFAULT_CAP, ParallelPair, concat, parallel_pairs, paths
from .resolutions import Chain, PWord, middle_length, min_diff


def degree_of_length(m, N):
    """Homological degree whose cochains live on paths of length m, or None."""
    if m % N == 0:
        return 2 * (m // N)
    if m % N == 1:
        return 2 * (m // N) + 1
    return None


# --- cochains ------------------------------------------------------------------------


class DualCochain:
    """Rational combination of parallel pairs in one homological degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        self.terms = {}
        for p, c in (terms or {}).items():
            self.add(p, c)

    def add(self, pair, coeff):
        if not coeff:
            return
        pair = ParallelPair(*pair)
        v = self.terms.get(pair, 0) + Fraction(coeff)
        if v:
            self.terms[pair] = v
        else:
            del self.terms[pair]

    def __add__(self, other):
        self._check(other)
        out = DualCochain(self.degree, self.terms)
        for p, c in other.terms.items():
            out.add(p, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return DualCochain(self.degree, {p: v * c for p, v in self.terms.items()})

    def _check(self, other):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def rows(self):
        out = {}
        for p, c in self.terms.items():
            out.setdefault(len(p.first), {})[p] = c
        return out

    def value(self, u):
        """Evaluate on the path ``u``: the combination of first paths paired with u."""
        return {p.first: c for p, c in self.terms.items() if p.second == u}

    def __eq__(self, other):
        if not isinstance(other, DualCochain):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __repr__(self):
        return f"DualCochain(degree={self.degree}, terms={len(self.terms)})"

    def format(self, quiver):
        if not self.terms:
            return "0"
        out = []
        for p, c in sorted(self.terms.items()):
            coeff = "" if c == 1 else "-" if c == -1 else f"{c}*"
            out.append(f"{coeff}({quiver.format_path(p.first)},{quiver.format_path(p.second)})")
        return " + ".join(out).replace("+ -", "- ")


# --- bases and blocks ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def pair_basis(A, n, i, cap=DEFAULT_CAP):
    """Pairs spanning row i of degree n, in canonical order."""
    if not 0 <= i < A.N:
        return ()
    return tuple(parallel_pairs(A.quiver, i, middle_length(n, A.N), cap))


@lru_cache(maxsize=None)
def pair_index(A, n, i, cap=DEFAULT_CAP):
    return {p: k for k, p in enumerate(pair_basis(A, n, i, cap))}


def cochain_basis(A, n, cap=DEFAULT_CAP):
    """All pairs of degree n, row by row."""
    return tuple(p for i in range(A.N) for p in pair_basis(A, n, i, cap))


def target_row(A, n, i):
    """Row reached by the coboundary out of row i of degree n, or None when it is zero."""
    if n % 2 == 0:
        return i + 1 if i <= A.N - 2 else None
    return A.N - 1 if i == 0 else None


def source_row(A, n, i):
    """Row of degree n-1 whose coboundary lands in row i of degree n, or None."""
    if n == 0:
        return None
    if n % 2 == 1:
        return i - 1 if i >= 1 else None
    return 0 if i == A.N - 1 else None


@lru_cache(maxsize=None)
def coboundary_block(A, n, i, cap=DEFAULT_CAP):
    """Matrix of the coboundary from row i of degree n, via the closed formulas.

    Returns None when the block is zero by shape (no target row).
    """
    t = target_row(A, n, i)
    if t is None:
        return None
    q = A.quiver
    N = A.N
    src = pair_basis(A, n, i, cap)
    tgt = pair_index(A, n + 1, t, cap)
    entries = {}

    def put(r, c, v):
        key = (tgt[r], c)
        val = entries.get(key, 0) + v
        if val:
            entries[key] = val
        else:
            entries.pop(key, None)

    if n % 2 == 0:
        for c, (alpha, pi) in enumerate(src):
            for a in q.in_arrows[alpha.src]:
                arr = q.arrow(a)
                put(ParallelPair(concat(arr, alpha), concat(arr, pi)), c, 1)
            for b in q.out_arrows[alpha.tgt]:
                arr = q.arrow(b)
                put(ParallelPair(concat(alpha, arr), concat(pi, arr)), c, -1)
    else:
        splits = {}
        for p in paths(q, N - 1, cap):
            for s in range(N):
                splits.setdefault(q.vertex_at(p, s), []).append((p, q.subpath(p, 0, s), q.subpath(p, s, N - 1)))
        for c, (v, pi) in enumerate(src):
            for p, a, b in splits.get(v.src, ()):
                put(ParallelPair(p, concat(concat(a, pi), b)), c, 1)
    return RationalMatrix(len(tgt), len(src), entries)


def dual_diff_matrix(A, n, method="formula", cap=DEFAULT_CAP):
    """Coboundary from degree n to n+1 on the full pair bases (rows concatenated).

    ``method="formula"`` assembles the closed-form blocks; ``method="dualize"``
    evaluates cochains on the minimal-resolution differential directly.
    """
    src = cochain_basis(A, n, cap)
    tgt = cochain_basis(A, n + 1, cap)
    if method == "dualize":
        return _dualized(A, n, src, tgt, cap)
    if method != "formula":
        raise ValueError(f"unknown method {method!r}")
    col_off = _offsets(A, n, cap)
    row_off = _offsets(A, n + 1, cap)
    entries = {}
    for i in range(A.N):
        blk = coboundary_block(A, n, i, cap)
        if blk is None:
            continue
        t = target_row(A, n, i)
        for (r, c), v in blk.items():
            entries[(row_off[t] + r, col_off[i] + c)] = v
    return RationalMatrix(len(tgt), len(src), entries)


def _offsets(A, n, cap):
    out = []
    acc = 0
    for i in range(A.N):
        out.append(acc)
        acc += len(pair_basis(A, n, i, cap))
    return out


def _dualized(A, n, src, tgt, cap):
    q = A.quiver
    src_by_pi = {}
    for c, (alpha, pi) in enumerate(src):
        src_by_pi.setdefault(pi, []).append((c, alpha))
    tindex = {p: k for k, p in enumerate(tgt)}
    entries = {}
    for u in paths(q, middle_length(n + 1, A.N), cap):
        image = min_diff(A, Chain(n + 1, {PWord(q.vertex(u.src), u, q.vertex(u.tgt)): 1}))
        for (left, w, right), coeff in image:
            for c, alpha in src_by_pi.get(w, ()):
                val = A.mul_many(left, alpha, right)
                if val is None:
                    continue
                key = (tindex[ParallelPair(val, u)], c)
                entries[key] = entries.get(key, 0) + coeff
    return RationalMatrix(len(tgt), len(src), {k: v for k, v in entries.items() if v})


def coboundary(A, cochain, cap=DEFAULT_CAP):
    """Apply the coboundary to a DualCochain."""
    n = cochain.degree
    out = DualCochain(n + 1)
    for i, part in cochain.rows().items():
        blk = coboundary_block(A, n, i, cap)
        if blk is None:
            continue
        idx = pair_index(A, n, i, cap)
        tb = pair_basis(A, n + 1, target_row(A, n, i), cap)
        vec = {idx[p]: c for p, c in part.items()}
        for r, v in blk.apply(vec).items():
            out.add(tb[r], v)
    return out


# --- medals --------------------------------------------------------------------------------


@dataclass(frozen=True)
class MedalClass:
    members: tuple
    plus_extremes: tuple
    minus_extremes: tuple
    is_medal: bool

    def bar(self, degree):
        """The class sum, as a cochain of the given degree."""
        return DualCochain(degree, {p: 1 for p in self.members})


def plus_movements(q, pair):
    alpha, pi = pair
    if not alpha.arrows or not pi.arrows or alpha.arrows[0] != pi.arrows[0]:
        return []
    g = q.subpath(alpha, 1, len(alpha))
    d = q.subpath(pi, 1, len(pi))
    out = []
    for w in q.out_arrows[alpha.tgt]:
        arr = q.arrow(w)
        out.append(ParallelPair(concat(g, arr), concat(d, arr)))
    return out


def minus_movements(q, pair):
    alpha, pi = pair
    if not alpha.arrows or not pi.arrows or alpha.arrows[-1] != pi.arrows[-1]:
        return []
    g = q.subpath(alpha, 0, len(alpha) - 1)
    d = q.subpath(pi, 0, len(pi) - 1)
    out = []
    for w in q.in_arrows[alpha.src]:
        arr = q.arrow(w)
        out.append(ParallelPair(concat(arr, g), concat(arr, d)))
    return out


@lru_cache(maxsize=None)
def medal_classes(A, i, m, cap=DEFAULT_CAP):
    """Partition of the pairs (|alpha| = i, |pi| = m) into movement classes.

    A +movement is undone by a -movement of its result, so breadth-first
    search along both kinds of movement finds each class.
    """
    q = A.quiver
    pairs = parallel_pairs(q, i, m, cap)
    seen = set()
    out = []
    sinks = set(q.sinks)
    sources = set(q.sources)
    for start in pairs:
        if start in seen:
            continue
        comp = {start}
        todo = deque([start])
        while todo:
            p = todo.popleft()
            for nb in plus_movements(q, p) + minus_movements(q, p):
                if nb not in comp:
                    comp.add(nb)
                    todo.append(nb)
        seen |= comp
        members = tuple(sorted(comp))
        plus = tuple(p for p in members if not plus_movements(q, p))
        minus = tuple(p for p in members if not minus_movements(q, p))
        medal = all(p.first.tgt in sinks for p in plus) and all(p.first.src in sources for p in minus)
        out.append(MedalClass(members, plus, minus, medal))
    return tuple(out)


# --- cohomology ----------------------------------------------------------------------------


class CohomologySpace:
    """H^n computed row by row, with representatives and a reduction map."""

    def __init__(self, A, n, cap=DEFAULT_CAP):
        self.algebra = A
        self.degree = n
        self.cap = cap
        self.row_dims = {}
        self.representatives = []   # list of (row, DualCochain)
        self._rows = {}
        for i in range(A.N):
            self._build_row(i)

    def _build_row(self, i):
        A, n, cap = self.algebra, self.degree, self.cap
        basis = pair_basis(A, n, i, cap)
        dim = len(basis)
        out_blk = coboundary_block(A, n, i, cap)
        s = source_row(A, n, i)
        in_blk = coboundary_block(A, n - 1, s, cap) if s is not None else None
        image = image_basis_sparse(in_blk) if in_blk is not None else []
        reps = None
        if out_blk is None:
            if image:
                reps = [{c: Fraction(1)} for c in quotient_reps(dim, image)]
            else:
                reps = [{c: Fraction(1)} for c in range(dim)]
        else:
            kernel = kernel_basis_sparse(out_blk)
            if n >= 2 and n % 2 == 0 and 1 <= i <= A.N - 2 and not image:
                reps = self._medal_reps(i, kernel, out_blk)
            if reps is None:
                if image:
                    reps = _complement(kernel, image)
                else:
                    reps = kernel
        space = ColumnSpace()
        for k, v in enumerate(image):
            space.add(v, ("im", k))
        for k, v in enumerate(reps):
            if not space.add(v, ("rep", k)):
                raise AssertionError("representatives are dependent modulo the image")
        self._rows[i] = (basis, out_blk, space, len(self.representatives), len(reps))
        self.row_dims[i] = len(reps)
        for v in reps:
            self.representatives.append((i, DualCochain(n, {basis[c]: x for c, x in v.items()})))

    def _medal_reps(self, i, kernel, out_blk):
        A = self.algebra
        idx = pair_index(A, self.degree, i, self.cap)
        medals = [c for c in medal_classes(A, i, middle_length(self.degree, A.N), self.cap) if c.is_medal]
        if len(medals) != len(kernel):
            return None
        vecs = [{idx[p]: Fraction(1) for p in c.members} for c in medals]
        if any(out_blk.apply(v) for v in vecs):
            return None
        return vecs

    @property
    def dim(self):
        return len(self.representatives)

    @property
    def row_dimensions(self):
        return tuple(self.row_dims[i] for i in range(self.algebra.N))

    def representative(self, k):
        return self.representatives[k][1]

    def _row_vector(self, i, part):
        basis, _, _, _, _ = self._rows[i]
        idx = pair_index(self.algebra, self.degree, i, self.cap)
        vec = {}
        for p, c in part.items():
            if p not in idx:
                raise ValueError(f"pair {p} does not belong to degree {self.degree}")
            vec[idx[p]] = c
        return vec

    def is_cocycle(self, cochain):
        return not coboundary(self.algebra, cochain, self.cap)

    def is_coboundary(self, cochain):
        """True when the cochain lies in the image of the incoming coboundary."""
        for i, part in cochain.rows().items():
            coords = self._solve(i, part)
            if coords is None or any(k[0] == "rep" for k in coords):
                return False
        return True

    def _solve(self, i, part):
        if i not in self._rows:
            raise ValueError(f"row {i} out of range")
        _, _, space, _, _ = self._rows[i]
        return space.solve(self._row_vector(i, part))

    def coordinates(self, cochain):
        """Coordinates of the class of a cocycle in the representative basis."""
        sparse = self._sparse_coordinates(cochain)
        return tuple(sparse.get(k, Fraction(0)) for k in range(self.dim))

    def _sparse_coordinates(self, cochain):
        if cochain.degree != self.degree:
            raise ValueError(f"expected degree {self.degree}, got {cochain.degree}")
        if not self.is_cocycle(cochain):
            raise NotACocycleError(f"cochain of degree {self.degree} is not a cocycle")
        coords = {}
        for i, part in cochain.rows().items():
            sol = self._solve(i, part)
            if sol is None:
                raise AssertionError("cocycle outside kernel span")
            offset = self._rows[i][3]
            for (kind, k), v in sol.items():
                if kind == "rep" and v:
                    coords[offset + k] = v
        return coords

    def class_of(self, cochain):
        return CohomologyClass(self, self._sparse_coordinates(cochain))

    def from_coordinates(self, coords):
        if not isinstance(coords, dict):
            coords = dict(enumerate(coords))
        out = DualCochain(self.degree)
        for k, c in sorted(coords.items()):
            if c:
                out = out + self.representatives[k][1].scale(c)
        return out

    def basis_classes(self):
        return [CohomologyClass(self, {k: Fraction(1)}) for k in range(self.dim)]

    def to_dict(self):
        from .linalg import format_rational

        q = self.algebra.quiver
        return {
            "degree": self.degree,
            "rows": {str(i): self.row_dims[i] for i in range(self.algebra.N)},
            "total": self.dim,
            "representatives": [
                [{"alpha": q.format_path(p.first, powers=False), "pi": q.format_path(p.second, powers=False),
                  "coeff": format_rational(c)} for p, c in rep]
                for _, rep in self.representatives
            ],
        }


def _complement(kernel, image):
    """Canonical complement of span(image) inside span(kernel)."""
    order, img = rref_rows(image)
    reduced = []
    for v in kernel:
        v = dict(v)
        for p in order:
            c = v.get(p)
            if c:
                axpy(v, -c, img[p])
        if v:
            reduced.append(v)
    order2, basis = rref_rows(reduced)
    return [basis[p] for p in order2]


class CohomologyClass:
    """A class in H^n given by coordinates in the space's representative basis.

    Coordinates are stored sparsely; ``coords`` is the dense tuple.
    """

    __slots__ = ("space", "terms")

    def __init__(self, space, coords):
        self.space = space
        items = coords.items() if isinstance(coords, dict) else enumerate(coords)
        self.terms = {k: Fraction(c) for k, c in items if c}

    @property
    def degree(self):
        return self.space.degree

    @property
    def coords(self):
        return tuple(self.terms.get(k, Fraction(0)) for k in range(self.space.dim))

    def representative(self):
        return self.space.from_coordinates(self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return CohomologyClass(self.space, out)

    def scale(self, c):
        return CohomologyClass(self.space, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return f"CohomologyClass(degree={self.degree}, coords={[str(c) for c in self.coords]})"


_space_cache = {}


def cohomology(A, n, cap=DEFAULT_CAP):
    """H^n(A, A) as a CohomologySpace (cached per algebra and degree)."""
    key = (A, n, cap)
    if key not in _space_cache:
        _space_cache[key] = CohomologySpace(A, n, cap)
    return _space_cache[key]


def center_brute_force(A):
    """Dimension of the centre by solving [z, generator] = 0 on the whole basis of A."""
    q = A.quiver
    basis = A.basis
    index = {p: k for k, p in enumerate(basis)}
    gens = [q.vertex(v) for v in range(q.num_vertices)] + [q.arrow(a) for a in range(q.num_arrows)]
    rows = {}
    for c, z in enumerate(basis):
        for g_idx, g in enumerate(gens):
            for prod, sign in ((A.mul(z, g), 1), (A.mul(g, z), -1)):
                if prod is None:
                    continue
                key = (g_idx, index[prod])
                rows.setdefault(key, {})
                rows[key][c] = rows[key].get(c, 0) + sign
    M = RationalMatrix(len(rows), len(basis),
                       {(r, c): v for r, (k, row) in enumerate(sorted(rows.items())) for c, v in row.items() if v})
    return len(kernel_basis_sparse(M)), M


def path_algebra_element_to_pairs(element, pi, degree):
    """Cochain sending ``pi`` to an algebra element."""
    return DualCochain(degree, {ParallelPair(p, pi): c for p, c in element.terms.items()})


__all__ = [
    "DualCochain", "MedalClass", "CohomologySpace", "CohomologyClass", "pair_basis", "cochain_basis",
    "coboundary_block", "dual_diff_matrix", "coboundary", "medal_classes", "cohomology",
    "center_brute_force", "degree_of_length", "target_row", "source_row", "clear_caches",
]


def clear_caches():
    """Forget cached spaces, pair bases, blocks and medal classes (for timing)."""
    from .quiver import _path_cache

    _space_cache.clear()
    _path_cache.clear()
    for fn in (pair_basis, pair_index, coboundary_block, medal_classes):
        fn.cache_clear()
