"""Smith normal form over the integers (arbitrary precision, no modular tricks)."""

from __future__ import annotations

from typing import Sequence

__all__ = ["smith_normal_form", "invariant_factors", "integer_det"]

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with U*A*V = D, U and V unimodular, D diagonal with d1 | d2 | ...

    Pivots are chosen by minimal absolute value among the remaining entries.
    """
    D = [list(map(int, row)) for row in A]
    m = len(D)
    n = len(D[0]) if m else 0
    U, V = _identity(m), _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row_dst += c * row_src
        for M in (D, U):
            rs, rd = M[src], M[dst]
            for k in range(len(rd)):
                rd[k] += c * rs[k]

    def add_col(src, dst, c):  # col_dst += c * col_src
        for M in (D, V):
            for row in M:
                row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    dirty |= D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    dirty |= D[t][j] != 0
            if dirty:
                # a nonzero remainder is smaller than the pivot: move it in
                rest = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
                rest += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
                _, ri, rj = min(rest)
                swap_rows(t, ri)
                swap_cols(t, rj)
                continue
            # divisibility: the pivot must divide everything below-right
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]
        t += 1
    return D, U, V


def invariant_factors(A: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """(torsion invariant factors > 1, free rank) of Z^ncols / rowspace(A)."""
    n = len(A[0]) if A else 0
    D, _, _ = smith_normal_form(A)
    diag = [D[i][i] for i in range(min(len(D), n))]
    rank = sum(1 for d in diag if d)
    return [d for d in diag if d > 1], n - rank


def integer_det(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1]
