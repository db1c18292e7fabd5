"""Reduced bar resolution (Q, b, s) and minimal resolution (P, d, r).

A basis word of Q_n is ``left[inner_1|...|inner_n]right`` with every inner
path of length 1..N-1.  A basis word of P_n is ``left (x) middle (x) right``
where the middle path has length ``m(n)`` (kN for n = 2k, kN + 1 for
n = 2k + 1).  Outer components are paths of length < N.  Composability of
neighbouring components encodes the tensor products over the vertex algebra.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import ResourceLimitError
from .quiver import DEFAULT_CAP, Path, paths


def middle_length(n, N):
    """Length of the middle path of a degree-n word of P."""
    return (n // 2) * N + (n % 2)


class QWord(NamedTuple):
    left: Path
    inner: tuple
    right: Path

    @property
    def degree(self):
        return len(self.inner)

    def is_reduced_basis(self):
        return self.left.is_vertex and self.right.is_vertex


class PWord(NamedTuple):
    left: Path
    middle: Path
    right: Path

    def is_reduced_basis(self):
        return self.left.is_vertex and self.right.is_vertex


class Chain:
    """Finite rational combination of QWords or PWords of one degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        self.terms = {}
        if terms:
            for w, c in terms.items():
                self.add(w, c)

    @classmethod
    def of(cls, word, coeff=1, degree=None):
        if degree is None:
            degree = word.degree if isinstance(word, QWord) else None
        if degree is None:
            raise ValueError("degree required for PWord chains")
        return cls(degree, {word: coeff})

    def add(self, word, coeff):
        if not coeff:
            return
        v = self.terms.get(word, 0) + Fraction(coeff)
        if v:
            self.terms[word] = v
        else:
            del self.terms[word]

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        self._same_degree(other)
        out = Chain(self.degree, self.terms)
        for w, c in other.terms.items():
            out.add(w, c)
        return out

    def __sub__(self, other):
        self._same_degree(other)
        out = Chain(self.degree, self.terms)
        for w, c in other.terms.items():
            out.add(w, -c)
        return out

    def scale(self, c):
        return Chain(self.degree, {w: v * c for w, v in self.terms.items()})

    def _same_degree(self, other):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __repr__(self):
        return f"Chain(degree={self.degree}, terms={len(self.terms)})"

    def format(self, quiver):
        if not self.terms:
            return "0"
        out = []
        for w in sorted(self.terms):
            c = self.terms[w]
            coeff = "" if c == 1 else "-" if c == -1 else f"{c}*"
            out.append(coeff + format_word(quiver, w))
        return " + ".join(out).replace("+ -", "- ")


def _outer(quiver, p):
    return "1" if p.is_vertex else quiver.format_path(p)


def format_word(quiver, w):
    if isinstance(w, QWord):
        inner = "|".join(quiver.format_path(p) for p in w.inner)
        return f"{_outer(quiver, w.left)}[{inner}]{_outer(quiver, w.right)}"
    return "⊗".join([_outer(quiver, w.left), quiver.format_path(w.middle), _outer(quiver, w.right)])


# --- basis enumeration -----------------------------------------------------


def q_basis(A, n, reduced=True, cap=DEFAULT_CAP):
    """Basis words of Q_n; ``reduced`` keeps only words with vertex outer parts."""
    q = A.quiver
    pos = A.positive_basis
    by_src = {}
    for p in pos:
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
    out = []
    for inner, end in words:
        start = inner[0].src if inner else end
        if reduced:
            out.append(QWord(q.vertex(start), inner, q.vertex(end)))
            continue
        for left in A.basis:
            if left.tgt != start:
                continue
            for right in A.basis:
                if right.src == end:
                    out.append(QWord(left, inner, right))
                    if len(out) > cap:
                        raise ResourceLimitError(f"more than {cap} bar words of degree {n}")
    out.sort()
    return out


def p_basis(A, n, reduced=True, cap=DEFAULT_CAP):
    """Basis words of P_n; ``reduced`` keeps only ``1 (x) v (x) 1`` words."""
    q = A.quiver
    mids = paths(q, middle_length(n, A.N), cap)
    if reduced:
        return [PWord(q.vertex(v.src), v, q.vertex(v.tgt)) for v in mids]
    out = []
    for v in mids:
        for left in A.basis:
            if left.tgt != v.src:
                continue
            for right in A.basis:
                if right.src == v.tgt:
                    out.append(PWord(left, v, right))
                    if len(out) > cap:
                        raise ResourceLimitError(f"more than {cap} words of degree {n}")
    out.sort()
    return out


# --- bar resolution -------------------------------------------------------------


def bar_diff(A, chain):
    """The bar differential b_n : Q_n -> Q_{n-1}."""
    n = chain.degree
    if n < 1:
        raise ValueError("the bar differential starts in degree 1")
    out = Chain(n - 1)
    for w, c in chain:
        a0, inner, a_last = w
        first = A.mul(a0, inner[0])
        if first is not None:
            out.add(QWord(first, inner[1:], a_last), c)
        for i in range(1, n):
            merged = A.mul(inner[i - 1], inner[i])
            if merged is not None:
                out.add(QWord(a0, inner[:i - 1] + (merged,) + inner[i + 1:], a_last), c * (-1) ** i)
        last = A.mul(inner[-1], a_last)
        if last is not None:
            out.add(QWord(a0, inner[:-1], last), c * (-1) ** n)
    return out


def contraction_s(A, chain):
    """k-linear contraction Q_n -> Q_{n+1}: moves a nontrivial left part into the bar."""
    q = A.quiver
    out = Chain(chain.degree + 1)
    for w, c in chain:
        if w.left.is_vertex:
            continue
        out.add(QWord(q.vertex(w.left.src), (w.left,) + w.inner, w.right), c)
    return out


def augment(A, chain):
    """epsilon(alpha (x) beta) = alpha beta, for chains of degree 0 of Q or P."""
    if chain.degree != 0:
        raise ValueError("augmentation is defined on degree 0")
    out = {}
    for w, c in chain:
        left, right = w.left, w.right
        pr = A.mul(left, right)
        if pr is not None:
            out[pr] = out.get(pr, 0) + c
    return A.element(out)


# --- minimal resolution -----------------------------------------------------------


def _tensor(A, left, mid, right):
    """``left (x) mid (x) right`` with left/right products taken in A, or None."""
    if left is None or right is None or len(left) >= A.N or len(right) >= A.N:
        return None
    return PWord(left, mid, right)


def min_diff(A, chain):
    """The minimal-resolution differential d_n : P_n -> P_{n-1}."""
    n = chain.degree
    if n < 1:
        raise ValueError("the differential starts in degree 1")
    q = A.quiver
    N = A.N
    out = Chain(n - 1)
    k = n // 2
    for (left, w, right), c in chain:
        if n % 2:
            t = _tensor(A, A.mul(left, q.subpath(w, 0, 1)), q.subpath(w, 1, len(w)), right)
            if t:
                out.add(t, c)
            t = _tensor(A, left, q.subpath(w, 0, len(w) - 1), A.mul(q.subpath(w, len(w) - 1, len(w)), right))
            if t:
                out.add(t, -c)
        else:
            span = (k - 1) * N + 1
            for j in range(N):
                t = _tensor(A, A.mul(left, q.subpath(w, 0, j)), q.subpath(w, j, j + span),
                            A.mul(q.subpath(w, j + span, len(w)), right))
                if t:
                    out.add(t, c)
    return out


def contraction_r(A, chain):
    """k-linear contraction P_n -> P_{n+1}."""
    n = chain.degree
    q = A.quiver
    N = A.N
    k = n // 2
    out = Chain(n + 1)
    for (left, v, right), c in chain:
        if n % 2:
            if len(left) == N - 1:
                whole = Path(left.arrows + v.arrows, left.src, v.tgt)
                out.add(PWord(q.vertex(left.src), whole, right), c)
            continue
        whole = Path(left.arrows + v.arrows, left.src, v.tgt)
        for j in range(1, len(left) + 1):
            r = A.mul(q.subpath(whole, j + k * N, len(whole)), right)
            if r is None:
                continue
            out.add(PWord(q.subpath(whole, 0, j - 1), q.subpath(whole, j - 1, j + k * N), r), c)
    return out


# --- verification ---------------------------------------------------------------------


def _first_failure(words, check):
    for w in words:
        bad = check(w)
        if bad is not None:
            return w, bad
    return None


def verify_resolutions(A, max_degree, min_diff_impl=None, cap=DEFAULT_CAP):
    """Exhaustively check b^2 = 0, d^2 = 0 and the two contraction identities.

    ``min_diff_impl`` replaces the minimal differential (used for negative
    controls).  Returns a :class:`Report`.
    """
    from .report import Report

    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    d = min_diff_impl or min_diff
    q = A.quiver
    rep = Report("resolutions")
    for n in range(1, max_degree + 1):
        qwords = q_basis(A, n, reduced=False, cap=cap)
        pwords = p_basis(A, n, reduced=False, cap=cap)

        def qchain(w, n=n):
            return Chain(n, {w: 1})

        if n >= 2:
            fail = _first_failure(qwords, lambda w: _nonzero(bar_diff(A, bar_diff(A, qchain(w)))))
            rep.add("b^2=0", n, fail, len(qwords), q)
            fail = _first_failure(pwords, lambda w: _nonzero(d(A, d(A, Chain(n, {w: 1})))))
            rep.add("d^2=0", n, fail, len(pwords), q)

        def sb_bs(w, n=n):
            c = qchain(w)
            total = contraction_s(A, bar_diff(A, c)) + bar_diff(A, contraction_s(A, c))
            return _nonzero(total - c)

        fail = _first_failure(qwords, sb_bs)
        rep.add("sb+bs=id", n, fail, len(qwords), q)

        def rd_dr(w, n=n):
            c = Chain(n, {w: 1})
            total = contraction_r(A, d(A, c)) + d(A, contraction_r(A, c))
            return _nonzero(total - c)

        fail = _first_failure(pwords, rd_dr)
        rep.add("rd+dr=id", n, fail, len(pwords), q)

    words0 = p_basis(A, 0, reduced=False, cap=cap)

    def degree0(w):
        c = Chain(0, {w: 1})
        expected = c - Chain(0, {PWord(q.vertex(w.left.src), q.vertex(w.left.src), p): v
                                 for p, v in augment(A, c).terms.items()})
        return _nonzero(d(A, contraction_r(A, c)) - expected)

    rep.add("d1r0=id-1(x)eps", 0, _first_failure(words0, degree0), len(words0), q)
    qwords1 = q_basis(A, 1, reduced=False, cap=cap)
    fail = _first_failure(qwords1, lambda w: augment(A, bar_diff(A, Chain(1, {w: 1}))) or None)
    rep.add("eps*b1=0", 1, fail, len(qwords1), q)
    return rep


def _nonzero(chain):
    return chain if chain else None


__all__ = [
    "QWord", "PWord", "Chain", "middle_length", "q_basis", "p_basis", "bar_diff", "min_diff",
    "contraction_s", "contraction_r", "augment", "verify_resolutions", "format_word",
]
