#!/usr/bin/env python3
# Independent oracle for the frozen values in the enumeration tests.
#
# Enumerates d-subspaces of F_p^m as reduced-row-echelon matrices and decides
# membership by expanding E_{m-1} at the column forms straight from its
# definition (sum over all (m-1)-subsets), using sympy polynomials mod p.
# Shares no code path with the C++ library.

import itertools
import sys

import sympy


def rref_matrices(d, m, p):
    for pivots in itertools.combinations(range(m), d):
        free = [(i, j) for i in range(d) for j in range(m)
                if j > pivots[i] and j not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * m for _ in range(d)]
            for i, j in enumerate(pivots):
                rows[i][j] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield rows


def is_member(rows, p):
    d, m = len(rows), len(rows[0])
    s = sympy.symbols(f"s1:{d + 1}")
    forms = [sum(rows[i][j] * s[i] for i in range(d)) for j in range(m)]
    total = 0
    for subset in itertools.combinations(range(m), m - 1):
        total += sympy.prod([forms[j] for j in subset])
    poly = sympy.Poly(sympy.expand(total), *s, modulus=p)
    return poly.is_zero


def main():
    cases = [(1, 2, 3), (2, 4, 2), (2, 4, 3), (1, 3, 5), (3, 5, 2)]
    cases += [(d, m, p) for p in (2, 3)
              for (d, m) in [(1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]]
    cases += [(3, 6, 2)]
    for d, m, p in sorted(set(cases)):
        total = members = 0
        for rows in rref_matrices(d, m, p):
            total += 1
            members += is_member(rows, p)
        print(f"({d},{m},{p}) total={total} members={members}")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
