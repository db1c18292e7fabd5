"""Cup (Yoneda) products on the parallel-pair complex, three ways.

* :func:`vee` concatenates pairs (zero when both degrees are odd);
* :func:`cup_cochain_full` is the cochain-level product on the minimal
  resolution, including the odd-times-odd sum over ambient paths;
* :func:`cup_bar_route` pulls both cochains back to the reduced bar
  resolution along G, multiplies there by juxtaposition and pushes forward
  along F.
"""

from __future__ import annotations

from fractions import Fraction

from .cohomology import CohomologyClass, DualCochain, cohomology
from .comparison import F_generator, G_generator
from .errors import NotACocycleError
from .quiver import DEFAULT_CAP, ParallelPair, concat, paths
from .resolutions import middle_length


def _both_odd(n1, n2):
    return n1 % 2 == 1 and n2 % 2 == 1


def vee(A, f, g):
    """(alpha, pi) v (beta, tau) = (alpha beta, pi tau) unless both degrees are odd."""
    n = f.degree + g.degree
    out = DualCochain(n)
    if _both_odd(f.degree, g.degree):
        return out
    for (alpha, pi), c in f.terms.items():
        for (beta, tau), d in g.terms.items():
            ab = A.mul(alpha, beta)
            if ab is None:
                continue
            out.add(ParallelPair(ab, concat(pi, tau)), c * d)
    return out


def cup_cochain_full(A, f, g):
    """Cochain-level product of two minimal-resolution cochains.

    When one degree is even the value on ``u`` is ``f(prefix) g(suffix)``,
    which is exactly :func:`vee`.  For two odd degrees 2h+1 and 2k+1 the
    value on ``u`` of length (h+k+1)N sums ``mu1 f(pi) mu2 g(tau) mu3`` over
    every way of writing ``u = mu1 pi mu2 tau mu3`` with
    ``|mu1| + |mu2| + |mu3| = N - 2``.  This is what pulling back along G,
    juxtaposing and pushing forward along F produces; it vanishes on
    cocycles because their rows satisfy i + j >= 2.
    """
    n1, n2 = f.degree, g.degree
    if not _both_odd(n1, n2):
        return vee(A, f, g)
    q = A.quiver
    N = A.N
    out = DualCochain(n1 + n2)
    m1 = middle_length(n1, N)
    m2 = middle_length(n2, N)
    fs = {}
    for (alpha, pi), c in f.terms.items():
        fs.setdefault(pi, []).append((alpha, c))
    gs = {}
    for (beta, tau), d in g.terms.items():
        gs.setdefault(tau, []).append((beta, d))
    for u in paths(q, middle_length(n1 + n2, N)):
        for l1 in range(N - 1):
            left_f = fs.get(q.subpath(u, l1, l1 + m1))
            if not left_f:
                continue
            for l2 in range(N - 1 - l1):
                b_start = l1 + m1 + l2
                right_g = gs.get(q.subpath(u, b_start, b_start + m2))
                if not right_g:
                    continue
                mu1 = q.subpath(u, 0, l1)
                mu2 = q.subpath(u, l1 + m1, b_start)
                mu3 = q.subpath(u, b_start + m2, len(u))
                for alpha, c in left_f:
                    for beta, d in right_g:
                        val = A.mul_many(mu1, alpha, mu2, beta, mu3)
                        if val is not None:
                            out.add(ParallelPair(val, u), c * d)
    return out


# --- bar-level cochains --------------------------------------------------------------


def bar_evaluator(A, f):
    """The reduced-bar cochain f o G, as a function of the inner bar components.

    Degree 0 cochains take the vertex as argument (an empty bar word at it).
    Values are dicts ``{path: coeff}`` in A.
    """
    n = f.degree
    by_pi = {}
    for (alpha, pi), c in f.terms.items():
        by_pi.setdefault(pi, []).append((alpha, c))

    def evaluate(inner, vertex=None):
        if n == 0:
            return {alpha: c for alpha, c in by_pi.get(A.quiver.vertex(vertex), ())}
        out = {}
        for (left, w, right), coeff in G_generator(A, n, tuple(inner)).items():
            for alpha, c in by_pi.get(w, ()):
                val = A.mul_many(left, alpha, right)
                if val is not None:
                    out[val] = out.get(val, 0) + coeff * c
        return {p: c for p, c in out.items() if c}

    return evaluate


def _mul_values(A, x, y):
    out = {}
    for p, c in x.items():
        for r, d in y.items():
            pr = A.mul(p, r)
            if pr is not None:
                out[pr] = out.get(pr, 0) + c * d
    return out


def cup_bar_route(A, f, g):
    """((f o G) cup (g o G)) o F, read back in the parallel-pair basis."""
    n1, n2 = f.degree, g.degree
    n = n1 + n2
    q = A.quiver
    fe = bar_evaluator(A, f)
    ge = bar_evaluator(A, g)
    out = DualCochain(n)
    for u in paths(q, middle_length(n, A.N)):
        total = {}
        for word, coeff in F_generator(A, n, u).items():
            inner = word.inner
            # vertex between the two halves, used by degree-0 factors
            split_vertex = inner[n1].src if n1 < n else (inner[-1].tgt if inner else u.src)
            left_val = fe((), split_vertex) if n1 == 0 else fe(inner[:n1])
            if not left_val:
                continue
            right_val = ge((), split_vertex) if n2 == 0 else ge(inner[n1:])
            if not right_val:
                continue
            prod = _mul_values(A, _mul_values(A, left_val, right_val), {word.right: Fraction(1)})
            for p, c in prod.items():
                total[p] = total.get(p, 0) + coeff * c
        for p, c in total.items():
            out.add(ParallelPair(p, u), c)
    return out


# --- cohomology classes -----------------------------------------------------------------------


def as_cocycle(A, x, cap=DEFAULT_CAP):
    """Accept a CohomologyClass or a DualCochain; return a validated cocycle."""
    if isinstance(x, CohomologyClass):
        return x.representative()
    space = cohomology(A, x.degree, cap)
    if not space.is_cocycle(x):
        raise NotACocycleError(f"operand of degree {x.degree} is not a cocycle")
    return x


def cup(A, x, y, method="vee", cap=DEFAULT_CAP):
    """Product of two classes, reduced into the representative basis of H^{n1+n2}."""
    f = as_cocycle(A, x, cap)
    g = as_cocycle(A, y, cap)
    impl = {"vee": vee, "full": cup_cochain_full, "bar": cup_bar_route}[method]
    product = impl(A, f, g)
    return cohomology(A, f.degree + g.degree, cap).class_of(product)


# --- explicit bar cocycles -------------------------------------------------------------------


def bar_cocycle_from_pair(A, pair, k):
    """Bar cochain attached to a pair (beta, tau) with |beta| = N-1, |tau| = kN.

    Returns a function of the inner components of ``1[a_1|...|a_2k]1``.
    """
    beta, tau = pair
    N = A.N
    if len(beta) != N - 1 or len(tau) != k * N:
        raise ValueError("need |beta| = N-1 and |tau| = kN")
    if beta.src != tau.src or beta.tgt != tau.tgt:
        raise ValueError("paths are not parallel")
    together = beta.arrows and tau.arrows and (beta.arrows[0] == tau.arrows[0] or beta.arrows[-1] == tau.arrows[-1])
    if together:
        raise ValueError("the pair starts or ends together")

    def evaluate(inner):
        inner = tuple(inner)
        if len(inner) != 2 * k:
            raise ValueError(f"expected {2 * k} components")
        for i in range(0, 2 * k, 2):
            if A.mul(inner[i], inner[i + 1]) is not None:
                return {}
        arrows = tuple(a for p in inner for a in p.arrows)
        if arrows != tau.arrows or inner[0].src != tau.src:
            return {}
        return {beta: Fraction(1)}

    return evaluate


def poly_cochain(n, i, N):
    """Closed-form bar cochain f_{n,i} for k[x]/(x^N), on exponent tuples r.

    Returns a function ``r -> (coefficient, exponent)`` or ``None`` for zero.
    Odd degrees carry the factor r_1: that is what G produces and what makes
    the cochain closed.
    """
    k = n // 2
    if n == 0:
        valid = range(N)
    elif n % 2 == 0:
        valid = range(N - 1)
    else:
        valid = range(1, N)
    if n < 0 or i not in valid:
        raise ValueError(f"f_{n},{i} is not one of the basis classes for N={N}")

    def evaluate(r):
        r = tuple(r)
        if len(r) != n or any(x < 1 or x >= N for x in r):
            raise ValueError(f"expected {n} exponents in 1..{N - 1}")
        start = 1 if n % 2 else 0
        for j in range(start, n - 1, 2):
            if r[j] + r[j + 1] < N:
                return None
        exp = i + sum(r) - k * N - (n % 2)
        if exp >= N:
            return None
        coeff = r[0] if n % 2 else 1
        return coeff, exp

    return evaluate


def loop_pair(A, n, i):
    """The pair (x^i, x^{m(n)}) of the one-loop algebra as a cochain."""
    q = A.quiver
    m = middle_length(n, A.N)
    return DualCochain(n, {ParallelPair(q.path((0,) * i, 0), q.path((0,) * m, 0)): 1})


__all__ = [
    "vee", "cup", "cup_cochain_full", "cup_bar_route", "bar_evaluator", "bar_cocycle_from_pair",
    "poly_cochain", "loop_pair",
]
