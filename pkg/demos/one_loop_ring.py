"""The cohomology ring of k[x]/(x^N) built from three generators.

x = f_{0,1}, e = f_{1,1} and t = f_{2,0}: monomials x^a e^b t^c span every
H^n, e^2 = 0, and x^N = 0 while t generates a polynomial part.
"""

import sys

from tqa.algebra import TruncatedAlgebra
from tqa.catalog import loop
from tqa.cohomology import cohomology
from tqa.products import cup, loop_pair


def main(N=3, top=6):
    A = TruncatedAlgebra(loop(), N)

    def f(n, i):
        return cohomology(A, n).class_of(loop_pair(A, n, i))

    x, e, t = f(0, 1), f(1, 1), f(2, 0)
    print(f"N = {N}: dim H^n =", [cohomology(A, n).dim for n in range(top + 1)])
    print("e * e = 0:", cup(A, e, e).is_zero())
    power = f(0, 0)
    for _ in range(N):
        power = cup(A, power, x)
    print(f"x^{N} = 0:", power.is_zero())
    power = t
    for k in range(2, top // 2 + 1):
        power = cup(A, power, t)
        print(f"t^{k} = f_{{{2 * k},0}}:", power == f(2 * k, 0))
    for n in range(1, top + 1):
        for i in (range(N - 1) if n % 2 == 0 else range(1, N)):
            k = n // 2
            monomial = f(0, i - n % 2)
            for _ in range(k):
                monomial = cup(A, monomial, t)
            if n % 2:
                monomial = cup(A, monomial, e)
            print(f"x^{i - n % 2} t^{k}{' e' if n % 2 else ''} = f_{{{n},{i}}}:", monomial == f(n, i))


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:]))
