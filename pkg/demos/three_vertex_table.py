"""Walk through the three-vertex quiver v1 -a-> v2 (loop x) -b-> v3.

Prints the coboundary blocks in display order, the cohomology dimensions,
the basis table and a few products of the omega classes.
"""

import sys

from tqa import example83
from tqa.cohomology import cohomology
from tqa.products import cup


def show_matrix(name, matrix):
    print(f"{name}:")
    for row in matrix.to_json():
        print("   ", " ".join(f"{x:>3}" for x in row))


def main(N=4):
    A = example83.algebra(N)
    print(f"dim A = {A.dim} for N = {N}\n")
    for name, (n, j, matrix) in example83.printed_matrices(N, 1).items():
        show_matrix(name, matrix)
    print()
    print("dim H^n:", [cohomology(A, n).dim for n in range(9)])
    print()
    print(example83.format_table(N))
    print()
    for (n1, j1), (n2, j2) in [((1, 1), (2, 1)), ((2, 1), (2, 1)), ((1, 1), (1, 2)), ((2, 2), (2, 2))]:
        left = cohomology(A, n1).class_of(example83.omega(A, n1, j1))
        right = cohomology(A, n2).class_of(example83.omega(A, n2, j2))
        product = cup(A, left, right)
        print(f"omega_{{{n1},{j1}}} * omega_{{{n2},{j2}}} = {example83.name_class(A, product)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
