"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts ``{index: Fraction}`` internally; the public
functions also accept and return dense sequences where that is handier.
All eliminations visit rows in order and pivot on the first nonzero
column, so results never depend on how entries were inserted.
"""

from __future__ import annotations

from fractions import Fraction


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text):
    return Fraction(str(text).strip())


def sparse(vec):
    """Dense sequence (or dict) to a sparse dict with no zero entries."""
    if isinstance(vec, dict):
        return {i: Fraction(c) for i, c in vec.items() if c}
    return {i: Fraction(c) for i, c in enumerate(vec) if c}


def dense(vec, n):
    out = [Fraction(0)] * n
    for i, c in vec.items():
        out[i] = c
    return out


def axpy(y, a, x):
    """In place ``y += a*x`` on sparse dicts, dropping cancelled entries."""
    for i, c in x.items():
        v = y.get(i, 0) + a * c
        if v:
            y[i] = v
        else:
            y.pop(i, None)


class RationalMatrix:
    """Immutable sparse matrix with Fraction entries."""

    __slots__ = ("nrows", "ncols", "_entries")

    def __init__(self, nrows, ncols, entries=()):
        self.nrows = nrows
        self.ncols = ncols
        items = entries.items() if isinstance(entries, dict) else (((r, c), v) for r, c, v in entries)
        store = {}
        for (r, c), v in items:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r}, {c}) outside a {nrows}x{ncols} matrix")
            v = store.get((r, c), 0) + Fraction(v)
            if v:
                store[(r, c)] = v
            else:
                store.pop((r, c), None)
        self._entries = store

    @classmethod
    def from_dense(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def from_columns(cls, nrows, columns):
        columns = list(columns)
        entries = {}
        for j, col in enumerate(columns):
            for i, v in (col.items() if isinstance(col, dict) else enumerate(col)):
                if v:
                    entries[(i, j)] = v
        return cls(nrows, len(columns), entries)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, key):
        return self._entries.get(key, Fraction(0))

    def items(self):
        return sorted(self._entries.items())

    @property
    def nnz(self):
        return len(self._entries)

    def to_dense(self):
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def rows(self):
        out = [{} for _ in range(self.nrows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def columns(self):
        out = [{} for _ in range(self.ncols)]
        for (r, c), v in self._entries.items():
            out[c][r] = v
        return out

    def transpose(self):
        return RationalMatrix(self.ncols, self.nrows, {(c, r): v for (r, c), v in self._entries.items()})

    def apply(self, vec):
        """Matrix times vector; returns a sparse dict."""
        vec = sparse(vec)
        out = {}
        for (r, c), v in self._entries.items():
            x = vec.get(c)
            if x:
                out[r] = out.get(r, 0) + v * x
        return {r: v for r, v in out.items() if v}

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        left = self.rows()
        right = other.rows()
        entries = {}
        for i, row in enumerate(left):
            acc = {}
            for k, v in row.items():
                axpy(acc, v, right[k])
            for j, v in acc.items():
                entries[(i, j)] = v
        return RationalMatrix(self.nrows, other.ncols, entries)

    def is_zero(self):
        return not self._entries

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.shape, frozenset(self._entries.items())))

    def __repr__(self):
        return f"RationalMatrix({self.nrows}, {self.ncols}, nnz={self.nnz})"

    def to_json(self):
        return [[format_rational(v) for v in row] for row in self.to_dense()]


# --- elimination -------------------------------------------------------------


def rref_rows(rows):
    """Reduced row echelon form of a list of sparse rows.

    Returns ``(pivots, basis)`` where ``pivots`` is the sorted list of pivot
    columns and ``basis[p]`` is the reduced row with leading 1 at column p.
    """
    pivots = {}
    for row in rows:
        row = {i: Fraction(v) for i, v in row.items() if v}
        for c in [c for c in row if c in pivots]:
            coef = row.get(c)
            if coef:
                axpy(row, -coef, pivots[c])
        if not row:
            continue
        p = min(row)
        lead = row[p]
        if lead != 1:
            row = {i: v / lead for i, v in row.items()}
        for other in pivots.values():
            coef = other.get(p)
            if coef:
                axpy(other, -coef, row)
        pivots[p] = row
    order = sorted(pivots)
    return order, pivots


def rref(M):
    """RREF of ``M`` as a new RationalMatrix (zero rows at the bottom)."""
    order, basis = rref_rows(M.rows())
    entries = {(i, c): v for i, p in enumerate(order) for c, v in basis[p].items()}
    return RationalMatrix(M.nrows, M.ncols, entries)


def rank(M):
    return len(rref_rows(M.rows() if M.nrows <= M.ncols else M.columns())[0])


def kernel_basis_sparse(M):
    order, basis = rref_rows(M.rows())
    pivset = set(order)
    out = []
    for f in range(M.ncols):
        if f in pivset:
            continue
        vec = {f: Fraction(1)}
        for p in order:
            c = basis[p].get(f)
            if c:
                vec[p] = -c
        out.append(vec)
    return out


def kernel_basis(M):
    """Kernel basis read off the RREF: one vector per free column."""
    return [dense(v, M.ncols) for v in kernel_basis_sparse(M)]


def image_basis_sparse(M):
    order, basis = rref_rows(M.columns())
    return [basis[p] for p in order]


def image_basis(M):
    """Canonical column-space basis: rows of the RREF of the transpose."""
    return [dense(v, M.nrows) for v in image_basis_sparse(M)]


def quotient_reps(dim, image):
    """Coordinates not used as pivots by the reduced echelon form of ``image``.

    The unit vectors at these coordinates project to a basis of the quotient
    of the ``dim``-dimensional space by the span of ``image``.
    """
    vecs = [sparse(v) for v in image]
    for v in vecs:
        if v and max(v) >= dim:
            raise ValueError("image vector longer than the ambient dimension")
    order, _ = rref_rows(vecs)
    used = set(order)
    return [i for i in range(dim) if i not in used]


class ColumnSpace:
    """Incrementally built span of labelled vectors supporting exact solves.

    Each accepted vector is stored reduced against the earlier ones together
    with its expression in the original labelled vectors.
    """

    def __init__(self, vectors=(), labels=None):
        self._basis = []
        self.dependencies = []
        labels = range(len(vectors)) if labels is None else labels
        for lab, v in zip(labels, vectors):
            self.add(v, lab)

    def __len__(self):
        return len(self._basis)

    def _reduce(self, vec):
        vec = dict(vec)
        combo = {}
        for p, b, bc in self._basis:
            c = vec.get(p)
            if c:
                axpy(vec, -c, b)
                axpy(combo, c, bc)
        return vec, combo

    def add(self, vec, label=None):
        """Add a vector; returns True when it enlarged the span."""
        vec, combo = self._reduce(sparse(vec))
        if not vec:
            dep = {k: -v for k, v in combo.items()}
            dep[label] = dep.get(label, 0) + 1
            self.dependencies.append({k: v for k, v in dep.items() if v})
            return False
        p = min(vec)
        lead = vec[p]
        own = {k: -v / lead for k, v in combo.items()}
        own[label] = own.get(label, 0) + 1 / lead
        self._basis.append((p, {i: v / lead for i, v in vec.items()}, {k: v for k, v in own.items() if v}))
        return True

    def contains(self, vec):
        return not self._reduce(sparse(vec))[0]

    def solve(self, vec):
        """Label coefficients reproducing ``vec``, or None when outside the span."""
        rest, combo = self._reduce(sparse(vec))
        if rest:
            return None
        return combo


def in_image(M, v):
    """Coordinates ``c`` with ``M c = v`` (dense list), or None."""
    if not isinstance(v, dict) and len(v) != M.nrows:
        raise ValueError(f"vector of length {len(v)} against {M.nrows} rows")
    v = sparse(v)
    if v and max(v) >= M.nrows:
        raise ValueError("vector length does not match the matrix")
    combo = ColumnSpace(M.columns()).solve(v)
    if combo is None:
        return None
    return dense(combo, M.ncols)


def matmul(A, B):
    return A @ B
