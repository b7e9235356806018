"""Small dense linear algebra over GF(p) for word-sized primes."""

from __future__ import annotations

import math

import numpy as np

# k * p^2 must stay below 2^63 for the matrix sizes used here
MAX_PRIME = 2**26


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = math.isqrt(n)
    f = 3
    while f <= r:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int) -> int:
    qs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    return 1  # p == 2


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if not len(nz):
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if len(others):
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of {x : M x = 0}."""
    R, pivots = rref(M, p)
    n = M.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for t, f in enumerate(free):
        basis[f, t] = 1
        for r, c in enumerate(pivots):
            basis[c, t] = (-R[r, f]) % p
    return basis


def charpoly(A: np.ndarray, p: int) -> list[int]:
    """Monic characteristic polynomial, highest degree first (Faddeev-LeVerrier)."""
    d = A.shape[0]
    if d >= p:
        raise ValueError("Faddeev-LeVerrier needs d < p")
    coeffs = [1]
    M = np.zeros_like(A)
    eye = np.eye(d, dtype=np.int64)
    for k in range(1, d + 1):
        M = (A @ M + coeffs[-1] * eye) % p
        tr = int(np.trace(A @ M % p)) % p
        coeffs.append((-tr * pow(k, -1, p)) % p)
    return coeffs


def roots(poly: list[int], p: int) -> list[int]:
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in poly:
        acc = (acc * xs + c) % p
    return [int(x) for x in np.flatnonzero(acc == 0)]
