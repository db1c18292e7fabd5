"""Comparison morphisms F: P -> Q and G: Q -> P, and the composition complex.

F is implemented twice: directly as the bracketing sum over tuples in
{1..N-1}^k, and as phi applied to the composition sums A~ / B~.  Their
agreement is a standing test.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .quiver import DEFAULT_CAP, Path
from .resolutions import Chain, PWord, QWord, bar_diff, min_diff, p_basis, q_basis


# --- helpers -----------------------------------------------------------------------


def _extend(A, chain, degree, on_generator):
    """Extend a map defined on ``1 (x) v (x) 1`` style words as a bimodule map."""
    out = Chain(degree)
    for w, c in chain:
        for img, coeff in on_generator(w).items():
            left = A.mul(w.left, img.left)
            if left is None:
                continue
            right = A.mul(img.right, w.right)
            if right is None:
                continue
            out.add(type(img)(left, img[1], right), c * coeff)
    return out


def _cut(q, w, lengths):
    """Split path ``w`` into consecutive pieces of the given lengths."""
    pieces = []
    pos = 0
    for n in lengths:
        pieces.append(q.subpath(w, pos, pos + n))
        pos += n
    return pieces


# --- F: P -> Q --------------------------------------------------------------------


def F_generator(A, n, v):
    """F_n(1 (x) v (x) 1) as a dict ``{QWord: coeff}``."""
    q = A.quiver
    N = A.N
    if n == 0:
        return {QWord(q.vertex(v.src), (), q.vertex(v.tgt)): Fraction(1)}
    k = n // 2
    out = {}
    for xs in product(range(1, N), repeat=k):
        if n % 2:
            parts = [1]
            for x in xs:
                parts += [x, 1]
        else:
            parts = []
            for x in xs:
                parts += [x, 1]
        rest = len(v) - sum(parts)
        if rest < 0 or rest >= N:
            continue
        pieces = _cut(q, v, parts + [rest])
        word = QWord(q.vertex(v.src), tuple(pieces[:-1]), pieces[-1])
        out[word] = out.get(word, 0) + 1
    return out


def F(A, n, chain):
    """Comparison morphism F_n : P_n -> Q_n, extended as a bimodule map."""
    return _extend(A, chain, n, lambda w: F_generator(A, n, w.middle))


# --- G: Q -> P -------------------------------------------------------------------


def G_generator(A, n, inner):
    """G_n(1[inner]1) as a dict ``{PWord: coeff}``."""
    q = A.quiver
    N = A.N
    if n == 0:
        raise ValueError("use the identity in degree 0")
    k = n // 2
    start = 1 if n % 2 else 0
    for i in range(start, n - 1, 2):
        if A.mul(inner[i], inner[i + 1]) is not None:
            return {}
    arrows = tuple(a for p in inner for a in p.arrows)
    v = Path(arrows, inner[0].src, inner[-1].tgt)
    out = {}
    if n % 2 == 0:
        if len(v) - k * N >= N:
            return {}
        word = PWord(q.vertex(v.src), q.subpath(v, 0, k * N), q.subpath(v, k * N, len(v)))
        return {word: Fraction(1)}
    for j in range(1, len(inner[0]) + 1):
        if len(v) - k * N - j >= N:
            continue
        word = PWord(q.subpath(v, 0, j - 1), q.subpath(v, j - 1, k * N + j), q.subpath(v, k * N + j, len(v)))
        out[word] = out.get(word, 0) + 1
    return out


def G(A, n, chain):
    """Comparison morphism G_n : Q_n -> P_n, extended as a bimodule map."""
    if n == 0:
        out = Chain(0)
        for w, c in chain:
            out.add(PWord(w.left, A.quiver.vertex(w.left.tgt), w.right), c)
        return out
    return _extend(A, chain, n, lambda w: G_generator(A, n, w.inner))


# --- compositions -------------------------------------------------------------------


def is_composition(parts):
    return len(parts) >= 1 and all(p >= 0 for p in parts) and all(p > 0 for p in parts[1:-1])


def reduce_mod(parts, N):
    """True when the composition survives in the quotient by parts >= N."""
    return all(p < N for p in parts)


class CompositionSum:
    """Rational combination of compositions with all parts < N."""

    __slots__ = ("N", "terms")

    def __init__(self, N, terms=None):
        self.N = N
        self.terms = {}
        for c, v in (terms or {}).items():
            self.add(c, v)

    def add(self, parts, coeff):
        parts = tuple(parts)
        if not coeff or not reduce_mod(parts, self.N):
            return
        if not is_composition(parts):
            raise ValueError(f"{list(parts)} is not a composition")
        v = self.terms.get(parts, 0) + Fraction(coeff)
        if v:
            self.terms[parts] = v
        else:
            del self.terms[parts]

    def __add__(self, other):
        out = CompositionSum(self.N, self.terms)
        for c, v in other.terms.items():
            out.add(c, v)
        return out

    def __neg__(self):
        return CompositionSum(self.N, {c: -v for c, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def prepend(self, first):
        """``[first, s]``: prefix every composition with one part."""
        return CompositionSum(self.N, {(first,) + c: v for c, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, CompositionSum):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __repr__(self):
        return f"CompositionSum(N={self.N}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for c, v in sorted(self.terms.items()):
            coeff = "" if v == 1 else "-" if v == -1 else f"{v}*"
            out.append(coeff + "[" + ",".join(map(str, c)) + "]")
        return " + ".join(out).replace("+ -", "- ")


def comp_diff(s):
    """D_N: alternating merges of adjacent parts, reduced modulo parts >= N."""
    out = CompositionSum(s.N)
    for parts, v in s.terms.items():
        n = len(parts)
        if n < 2:
            raise ValueError("the composition differential needs at least two parts")
        for j in range(1, n):
            merged = parts[:j - 1] + (parts[j - 1] + parts[j],) + parts[j + 1:]
            out.add(merged, v * (-1) ** (j + 1))
    return out


def _tuples(k, M, N, lead):
    s = CompositionSum(N)
    for xs in product(range(1, N), repeat=k):
        rest = M - sum(xs)
        if rest < 0:
            continue
        parts = list(lead)
        for x in xs:
            parts += [x, 1]
        s.add(parts + [rest], 1)
    return s


def build_A(k, M, N, strict=True):
    """A_M^k = sum over x in {1..N-1}^k of [x_1,1,...,x_k,1,M-sum x]."""
    if strict and (k < 1 or M < k * (N - 1)):
        raise ValueError("need k >= 1 and M >= k(N-1)")
    return _tuples(k, M, N, [])


def build_B(k, M, N, strict=True):
    """B_M^k = sum over x in {1..N-1}^k of [1,x_1,1,...,x_k,1,M-sum x]."""
    if strict and (k < 0 or M < k * (N - 1)):
        raise ValueError("need k >= 0 and M >= k(N-1)")
    return _tuples(k, M, N, [1])


def build_A_tilde(k, M, N):
    return build_A(k, M, N).prepend(0)


def build_B_tilde(k, M, N):
    return build_B(k, M, N).prepend(0)


def phi_generator(A, parts, v):
    """phi_parts(1 (x) v (x) 1): first/last parts become outer components."""
    if sum(parts) != len(v):
        raise ValueError(f"composition total {sum(parts)} differs from path length {len(v)}")
    if any(p >= A.N for p in parts):
        return None
    pieces = _cut(A.quiver, v, parts)
    return QWord(pieces[0], tuple(pieces[1:-1]), pieces[-1])


def phi(A, s, chain):
    """phi of a CompositionSum applied to a chain of PWords, as a bimodule map."""
    degree = None
    for parts in s.terms:
        degree = len(parts) - 2
        break
    out_deg = degree if degree is not None else 0

    def on_generator(w):
        img = {}
        for parts, v in s.terms.items():
            word = phi_generator(A, parts, w.middle)
            if word is not None:
                img[word] = img.get(word, 0) + v
        return img

    return _extend(A, chain, out_deg, on_generator)


def F_via_phi(A, n, chain):
    """F_n computed as phi of A~ (even n) or B~ (odd n)."""
    N = A.N
    k = n // 2
    if n == 0:
        s = CompositionSum(N, {(0, 0): 1})
    elif n % 2:
        s = build_B_tilde(k, k * (N - 1), N)
    else:
        s = build_A_tilde(k, k * (N - 1), N)
    out = phi(A, s, chain)
    out.degree = n
    return out


# --- verification ------------------------------------------------------------------------


def verify_comparison(A, max_degree, cap=DEFAULT_CAP):
    """Commuting squares for F and G, G F = id, and F = phi(A~/B~) on basis words."""
    from .report import Report

    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    q = A.quiver
    rep = Report("comparison")
    for n in range(0, max_degree + 1):
        pwords = p_basis(A, n, reduced=False, cap=cap)
        qwords = q_basis(A, n, reduced=False, cap=cap)
        if n >= 1:
            rep.add("bF=Fd", n, _first(pwords, lambda w: bar_diff(A, F(A, n, _c(n, w))) - F(A, n - 1, min_diff(A, _c(n, w)))),
                    len(pwords), q)
            rep.add("dG=Gb", n, _first(qwords, lambda w: min_diff(A, G(A, n, _c(n, w))) - G(A, n - 1, bar_diff(A, _c(n, w)))),
                    len(qwords), q)
        rep.add("GF=id", n, _first(pwords, lambda w: G(A, n, F(A, n, _c(n, w))) - _c(n, w)), len(pwords), q)
        rep.add("F=phi(A~/B~)", n, _first(pwords, lambda w: F(A, n, _c(n, w)) - F_via_phi(A, n, _c(n, w))),
                len(pwords), q)
    return rep


def _c(n, w):
    return Chain(n, {w: 1})


def _first(words, residual):
    for w in words:
        r = residual(w)
        if r:
            return w, r
    return None


def verify_composition_identities(N, max_k=3, max_M=12):
    """Lemma-level identities of the composition complex, exhaustively."""
    from .report import Report

    rep = Report(f"compositions N={N}")

    def check(name, cases):
        bad = None
        count = 0
        for label, lhs, rhs in cases:
            count += 1
            if lhs != rhs:
                bad = f"{label}: {lhs} != {rhs}"
                break
        rep.record(name, "-", bad is None, count, bad)

    def A_cases():
        for k in range(1, max_k + 1):
            for M in range(k * (N - 1), max_M + 1):
                yield k, M

    def B_cases():
        for k in range(0, max_k + 1):
            for M in range(k * (N - 1), max_M + 1):
                yield k, M

    check("D_N(A)=-B", ((f"k={k} M={M}", comp_diff(build_A(k, M, N)), -build_B(k - 1, M, N))
                        for k, M in A_cases()))
    check("D_N(B)=A", ((f"k={k} M={M}", comp_diff(build_B(k, M, N)), build_A(k, M + 1, N))
                       for k, M in B_cases() if k >= 1))
    check("B=[1,A]", ((f"k={k} M={M}", build_B(k, M, N), build_A(k, M, N).prepend(1))
                      for k, M in A_cases()))
    check("A=sum[j,B]", ((f"k={k} M={M}", build_A(k, M, N),
                          _sum(N, (build_B(k - 1, M - j, N).prepend(j) for j in range(1, N))))
                         for k, M in A_cases()))
    check("A=0 iff M>(k+1)(N-1)", ((f"k={k} M={M}", bool(build_A(k, M, N)), M <= (k + 1) * (N - 1))
                                    for k, M in A_cases()))
    # the shift M+1 in the second term is forced by homogeneity of D_N
    check("D_N(B~)=[1,A_M]-[0,A_M+1]", ((f"k={k} M={M}", comp_diff(build_B_tilde(k, M, N)),
                                         build_A(k, M, N).prepend(1) - build_A(k, M + 1, N).prepend(0))
                                  for k, M in A_cases()))
    check("D_N(A~)=sum[j,B]", ((f"k={k} M={M}", comp_diff(build_A_tilde(k, M, N)),
                                _sum(N, (build_B(k - 1, M - j, N, strict=False).prepend(j) for j in range(N))))
                               for k, M in A_cases()))
    squares = []
    for k, M in B_cases():
        for s in ([build_B(k, M, N)] + ([build_A(k, M, N)] if k >= 1 else [])):
            if s and len(next(iter(s.terms))) >= 3:
                squares.append((f"k={k} M={M}", comp_diff(comp_diff(s)), CompositionSum(N)))
    check("D_N^2=0 on A,B", squares)
    check("D_N^2=0 on all compositions", _all_square_cases(N, max_M))
    return rep


def _all_square_cases(N, max_M, max_parts=6):
    for n in range(3, max_parts + 1):
        for parts in compositions(n, N):
            if sum(parts) <= max_M:
                s = CompositionSum(N, {parts: 1})
                yield str(list(parts)), comp_diff(comp_diff(s)), CompositionSum(N)


def compositions(n, N):
    """All n-part compositions with parts < N (interior parts positive)."""
    if n == 1:
        for x in range(N):
            yield (x,)
        return
    for first in range(N):
        for mid in product(range(1, N), repeat=n - 2):
            for last in range(N):
                yield (first,) + mid + (last,)


def _sum(N, sums):
    out = CompositionSum(N)
    for s in sums:
        out = out + s
    return out


def verify_phi(A, max_parts=6, max_total=12):
    """b o phi_alpha = phi_{D_N alpha} on every path for all small compositions."""
    from .quiver import paths
    from .report import Report

    rep = Report("phi")
    q = A.quiver
    bad = None
    count = 0
    for n in range(3, max_parts + 1):
        for parts in compositions(n, A.N):
            m = sum(parts)
            if m > max_total:
                continue
            s = CompositionSum(A.N, {parts: 1})
            ds = comp_diff(s)
            for v in paths(q, m):
                w = Chain(0, {PWord(q.vertex(v.src), v, q.vertex(v.tgt)): 1})
                lhs = bar_diff(A, phi(A, s, w))
                rhs = phi(A, ds, w)
                rhs.degree = lhs.degree
                count += 1
                if lhs != rhs:
                    bad = f"{list(parts)} on {q.format_path(v)}"
                    break
            if bad:
                break
        if bad:
            break
    rep.record("b phi=phi D_N", "-", bad is None, count, bad)
    return rep
