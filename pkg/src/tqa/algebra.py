"""The truncated quiver algebra kQ/(paths of length N)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .quiver import Path, Quiver, concat, paths


@dataclass(frozen=True)
class TruncatedAlgebra:
    quiver: Quiver
    N: int

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"truncation length must be at least 2, got {self.N}")

    @cached_property
    def basis(self):
        """Paths of length < N, shortest first, each length in path order."""
        return tuple(p for n in range(self.N) for p in paths(self.quiver, n))

    @property
    def dim(self):
        return len(self.basis)

    @cached_property
    def positive_basis(self):
        """Basis of the ideal spanned by paths of positive length."""
        return tuple(p for p in self.basis if p.arrows)

    def mul(self, p, r):
        """Product of two basis paths, or None when it vanishes."""
        if p.tgt != r.src or len(p) + len(r) >= self.N:
            return None
        return Path(p.arrows + r.arrows, p.src, r.tgt)

    def mul_many(self, *ps):
        out = ps[0]
        for r in ps[1:]:
            out = self.mul(out, r)
            if out is None:
                return None
        return out

    def element(self, terms=None):
        return AlgebraElement(self, terms or {})

    def path_element(self, p, coeff=1):
        if len(p) >= self.N:
            return AlgebraElement(self, {})
        return AlgebraElement(self, {p: coeff})

    def unit(self):
        return AlgebraElement(self, {self.quiver.vertex(v): 1 for v in range(self.quiver.num_vertices)})

    def multiply(self, u, v):
        return u * v

    def format_path(self, p):
        return self.quiver.format_path(p)


class AlgebraElement:
    """Rational combination of basis paths; zero coefficients are never stored."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        clean = {}
        for p, c in terms.items():
            if len(p) >= algebra.N:
                raise ValueError("path too long for this truncation")
            c = Fraction(c)
            if c:
                clean[p] = c
        self.terms = clean

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.algebra != self.algebra:
            raise ValueError("operands belong to different algebras")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return AlgebraElement(self.algebra, out)

    def __neg__(self):
        return AlgebraElement(self.algebra, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.algebra, {p: c * other for p, c in self.terms.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = {}
        A = self.algebra
        for p, c in self.terms.items():
            for r, d in other.terms.items():
                pr = A.mul(p, r)
                if pr is not None:
                    out[pr] = out.get(pr, 0) + c * d
        return AlgebraElement(A, out)

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self * scalar
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra == other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"AlgebraElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        q = self.algebra.quiver
        parts = []
        for p in sorted(self.terms, key=lambda p: (len(p), p)):
            c = self.terms[p]
            parts.append(f"{c}*{q.format_path(p)}")
        return " + ".join(parts)


def unit(A):
    return A.unit()


def basis(A):
    return A.basis


def multiply(A, u, v):
    if u.algebra != A or v.algebra != A:
        raise ValueError("operands belong to a different algebra")
    return u * v


__all__ = ["TruncatedAlgebra", "AlgebraElement", "unit", "basis", "multiply", "concat"]
