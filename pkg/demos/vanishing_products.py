"""Compare quivers whose positive-degree products vanish with one where they do not.

Acyclic quivers, and quivers with neither sinks nor sources that are not a
single oriented cycle, have no medals and a trivial product in positive
degree.  The three-vertex quiver with a loop has medals and nonzero products.
"""

from tqa.algebra import TruncatedAlgebra
from tqa.catalog import builtin
from tqa.checks import ring_checks
from tqa.cohomology import cohomology


def main():
    for name, N in [("a3", 3), ("diamond", 2), ("tensor2", 3), ("example83", 3)]:
        A = TruncatedAlgebra(builtin(name), N)
        report = ring_checks(A, 4, cross_degree=2)
        dims = [cohomology(A, n).dim for n in range(5)]
        print(f"{name} N={N}: dims {dims}")
        for r in report.results:
            print(f"    {'PASS' if r.passed else 'FAIL'}  {r.name} ({r.checked} checked)")


if __name__ == "__main__":
    main()
