"""Verification suites over the cohomology ring."""

from __future__ import annotations

from fractions import Fraction

from .cohomology import (
    CohomologyClass, center_brute_force, coboundary_block, cohomology, dual_diff_matrix,
    medal_classes, pair_index,
)
from .linalg import ColumnSpace, kernel_basis_sparse, rank
from .products import cup_bar_route, cup_cochain_full, vee
from .quiver import DEFAULT_CAP, structure_flags
from .report import Report
from .resolutions import middle_length


def _basis(A, n, cap):
    """Representatives of H^n as (row, cocycle, class)."""
    space = cohomology(A, n, cap)
    return [(row, rep, cls) for (row, rep), cls in zip(space.representatives, space.basis_classes())]


def _reduce(A, cochain, cap):
    space = cohomology(A, cochain.degree, cap)
    if not cochain:
        return CohomologyClass(space, {})
    return space.class_of(cochain)


def is_medal_combination(A, cls, cap=DEFAULT_CAP):
    """True when the class is a combination of medal cohomology classes."""
    n = cls.degree
    if cls.is_zero():
        return True
    if n < 2 or n % 2:
        return False
    m = middle_length(n, A.N)
    for i, part in cls.representative().rows().items():
        if not 1 <= i <= A.N - 2:
            return False
        idx = pair_index(A, n, i, cap)
        space = ColumnSpace()
        for c in medal_classes(A, i, m, cap):
            if c.is_medal:
                space.add({idx[p]: Fraction(1) for p in c.members})
        if not space.contains({idx[p]: c for p, c in part.items()}):
            return False
    return True


def medal_kernel(A, k, j, cap=DEFAULT_CAP):
    """(dim ker D_j^{2k}, medal count, medal sums span the kernel) for one block."""
    n = 2 * k
    blk = coboundary_block(A, n, j, cap)
    idx = pair_index(A, n, j, cap)
    medals = [c for c in medal_classes(A, j, middle_length(n, A.N), cap) if c.is_medal]
    kernel = kernel_basis_sparse(blk) if blk is not None else [{c: Fraction(1)} for c in range(len(idx))]
    space = ColumnSpace()
    in_kernel = True
    for c in medals:
        v = {idx[p]: Fraction(1) for p in c.members}
        space.add(v)
        if blk is not None and blk.apply(v):
            in_kernel = False
    spans = in_kernel and len(space) == len(kernel) and all(space.contains(v) for v in kernel)
    return len(kernel), len(medals), spans


def verify_medals(A, max_k=2, cap=DEFAULT_CAP):
    report = Report(f"medal kernel law N={A.N}")
    for k in range(1, max_k + 1):
        for j in range(1, A.N - 1):
            dim, count, spans = medal_kernel(A, k, j, cap)
            witness = None if dim == count and spans else f"dim ker={dim}, medals={count}, spans={spans}"
            report.record(f"ker D_{j}^{2 * k} = medal span", 2 * k, witness is None, 1, witness)
    return report


def _products(A, basis_by_degree, max_degree):
    """Pairs of positive-degree basis representatives with n1 + n2 <= max_degree."""
    for n1 in range(1, max_degree):
        for n2 in range(1, max_degree - n1 + 1):
            for x in basis_by_degree[n1]:
                for y in basis_by_degree[n2]:
                    yield n1, n2, x, y


def ring_checks(A, max_degree, cap=DEFAULT_CAP, cross_degree=None):
    """Check the structural statements about the cup product on computed classes.

    ``cross_degree`` bounds the total degree of the three-way product
    comparison (the bar route is the expensive one); it defaults to
    ``min(max_degree, 4)``.
    """
    q = A.quiver
    N = A.N
    flags = structure_flags(q)
    cycle = flags["is_oriented_cycle"]
    trivial = flags["is_acyclic"] or (not flags["has_sink"] and not flags["has_source"] and not cycle)
    if cross_degree is None:
        cross_degree = min(max_degree, 4)
    report = Report(f"ring checks N={N}")
    basis = {n: _basis(A, n, cap) for n in range(max_degree + 1)}

    # H^0 against the centre
    dim_center, _ = center_brute_force(A)
    report.record("dim H^0 = dim Z(A)", 0, dim_center == len(basis[0]), 1,
                  None if dim_center == len(basis[0]) else f"{len(basis[0])} vs {dim_center}")

    if not cycle:
        for n in range(1, max_degree + 1):
            bad = [rep for row, rep, _ in basis[n] if row == 0]
            report.record("H^n_0 = 0", n, not bad, len(basis[n]),
                          bad[0].format(q) if bad else None)

    odd_checked = comm_checked = cross_checked = triv_checked = medal_checked = 0
    odd_fail = comm_fail = cross_fail = triv_fail = medal_fail = None
    for n1, n2, (r1, f, cf), (r2, g, cg) in _products(A, basis, max_degree):
        fg = _reduce(A, vee(A, f, g), cap)
        if n1 % 2 and n2 % 2:
            odd_checked += 1
            if fg and odd_fail is None:
                odd_fail = f"{f.format(q)} * {g.format(q)}"
        if n1 <= n2:
            comm_checked += 1
            gf = _reduce(A, vee(A, g, f), cap)
            if fg != gf.scale((-1) ** (n1 * n2)) and comm_fail is None:
                comm_fail = f"{f.format(q)} * {g.format(q)}"
        if r1 >= 1 and r2 >= 1 and n1 + n2 <= cross_degree:
            cross_checked += 1
            v = vee(A, f, g)
            if (cup_cochain_full(A, f, g) != v or cup_bar_route(A, f, g) != v) and cross_fail is None:
                cross_fail = f"{f.format(q)} * {g.format(q)}"
        if trivial:
            triv_checked += 1
            if fg and triv_fail is None:
                triv_fail = f"{f.format(q)} * {g.format(q)}"
        if fg and (not cycle or (r1 >= 1 and r2 >= 1)):
            medal_checked += 1
            if not (is_medal_combination(A, cf, cap) or is_medal_combination(A, cg, cap)) and medal_fail is None:
                medal_fail = f"{f.format(q)} * {g.format(q)}"

    report.record("odd * odd = 0", "all", odd_fail is None, odd_checked, odd_fail)
    report.record("graded commutativity", "all", comm_fail is None, comm_checked, comm_fail)
    report.record("vee = full = bar route (rows >= 1)", f"<= {cross_degree}", cross_fail is None,
                  cross_checked, cross_fail)
    if trivial:
        report.record("positive products vanish", "all", triv_fail is None, triv_checked, triv_fail)
    report.record("nonzero product has a medal factor", "all", medal_fail is None, medal_checked, medal_fail)

    _nilpotency(A, basis, max_degree, cycle, report, cap)
    return report


def _nilpotency(A, basis, max_degree, cycle, report, cap):
    """N-fold products and N-th powers of positive-degree classes vanish.

    On an oriented cycle, classes with a row-0 component are excluded: there
    the even row-0 classes are not nilpotent.
    """
    N = A.N
    q = A.quiver

    def eligible(row):
        return not cycle or row >= 1

    # N-th powers of every basis class, computed at cochain level
    checked, fail = 0, None
    for n in range(1, max_degree + 1):
        for row, rep, _ in basis[n]:
            if not eligible(row):
                continue
            checked += 1
            power = rep
            for _ in range(N - 1):
                power = vee(A, power, rep)
                if not power:
                    break
            if power and _reduce(A, power, cap) and fail is None:
                fail = rep.format(q)
    report.record("class^N = 0", "all", fail is None, checked, fail)

    # every N-fold product with total degree <= max_degree
    counter = [0]
    found = []

    def extend(prefix, depth):
        if found:
            return
        if depth == N:
            counter[0] += 1
            if _reduce(A, prefix, cap):
                found.append(prefix.format(q))
            return
        for n in range(1, max_degree - prefix.degree - (N - depth - 1) + 1):
            for row, rep, _ in basis[n]:
                if not eligible(row):
                    continue
                nxt = vee(A, prefix, rep)
                if nxt:
                    extend(nxt, depth + 1)
                else:
                    counter[0] += 1

    if N <= max_degree:
        for n in range(1, max_degree - (N - 1) + 1):
            for row, rep, _ in basis[n]:
                if eligible(row):
                    extend(rep, 1)
    report.record("N-fold products = 0", f"<= {max_degree}", not found, counter[0],
                  found[0] if found else None)


def verify_cohomology(A, max_degree, cap=DEFAULT_CAP):
    """Coboundary matrices: formula = dualized differential, square zero, rank laws."""
    q = A.quiver
    cycle = structure_flags(q)["is_oriented_cycle"]
    report = Report(f"dual complex N={A.N}")
    prev = None
    for n in range(max_degree + 1):
        fast = dual_diff_matrix(A, n, "formula", cap)
        slow = dual_diff_matrix(A, n, "dualize", cap)
        report.record("formula = dualized d", n, fast == slow, fast.nnz)
        if prev is not None:
            report.record("delta o delta = 0", n, (fast @ prev).is_zero(), 1)
        prev = fast
        blk = coboundary_block(A, n, 0, cap)
        if blk is not None and (n % 2 or (n > 0 and not cycle)):
            report.record("D_0 injective", n, rank(blk) == blk.ncols, 1)
    return report


def verify_all(A, max_degree, cap=DEFAULT_CAP):
    """Every suite at the given degree bound (used by the ``verify`` command)."""
    from .comparison import verify_comparison
    from .resolutions import verify_resolutions

    report = Report(f"verify N={A.N} max degree {max_degree}")
    report.extend(verify_resolutions(A, max_degree))
    report.extend(verify_comparison(A, max_degree, cap))
    report.extend(verify_cohomology(A, max_degree, cap))
    report.extend(verify_medals(A, max(1, max_degree // 2), cap))
    if max_degree >= 2:
        report.extend(ring_checks(A, max_degree, cap))
    return report


__all__ = [
    "ring_checks", "verify_medals", "medal_kernel", "verify_cohomology", "verify_all",
    "is_medal_combination",
]
