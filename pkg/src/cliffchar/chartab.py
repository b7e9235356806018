"""
Irreducible character tables: Dixon-Schneider computation from class data,
orthogonality checks, class sizes recovered from columns, kernels and the
normal subgroup lattice, plus a CSV exchange format.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import gfp
from .classes import ClassData, class_matrix, power_map
from .cyclo import Cyclotomic, format_cyclotomic, parse_cyclotomic
from .report import Report

__all__ = [
    "CharacterTable",
    "NormalSubgroupRecord",
    "SplittingError",
    "CorruptTableError",
    "dixon_prime",
    "dixon_character_table",
    "verify_orthogonality",
    "class_sizes_from_columns",
    "character_kernel",
    "normal_subgroups",
    "integer_valued",
    "table_to_csv",
    "table_from_csv",
]


class SplittingError(RuntimeError):
    """Common eigenspaces could not be split into lines."""


class CorruptTableError(ValueError):
    pass


@dataclass
class CharacterTable:
    values: list[list[Cyclotomic]]
    group_order: int
    class_sizes: list[int] | None = None
    source: str = "computed"
    labels: list[str] | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        k = len(self.values)
        if any(len(row) != k for row in self.values):
            raise ValueError("character table must be square")
        if self.labels is None:
            self.labels = [f"chi{i + 1}" for i in range(k)]
        self._ints: np.ndarray | None | bool = False

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def degrees(self) -> list[int]:
        return [int(row[0]) for row in self.values]

    def row(self, i: int) -> list[Cyclotomic]:
        return self.values[i]

    def column(self, j: int) -> list[Cyclotomic]:
        return [row[j] for row in self.values]

    def int_matrix(self) -> np.ndarray | None:
        """Values as an object array of Python ints, or None if some value is not integral."""
        if self._ints is False:
            if integer_valued(self):
                self._ints = np.array([[int(v) for v in row] for row in self.values], dtype=object)
            else:
                self._ints = None
        return self._ints

    def permuted(self, rows: Sequence[int], cols: Sequence[int]) -> "CharacterTable":
        """New table whose (i, j) entry is self[rows[i]][cols[j]]."""
        sizes = [self.class_sizes[c] for c in cols] if self.class_sizes else None
        return CharacterTable(
            [[self.values[r][c] for c in cols] for r in rows],
            self.group_order, sizes, self.source,
            [self.labels[r] for r in rows], dict(self.meta))


@dataclass(frozen=True)
class NormalSubgroupRecord:
    class_index_set: frozenset[int]
    order: int
    is_proper_nontrivial: bool


def _c(x) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else Cyclotomic.rational(x)


# -- Dixon-Schneider ------------------------------------------------------------

def dixon_prime(group_order: int, exponent: int, above: int = 0) -> int:
    """Smallest prime p = 1 mod exponent with p > 2 sqrt(|G|) and p > above."""
    p = exponent + 1
    while not (p * p > 4 * group_order and p > above and gfp.is_prime(p)):
        p += exponent
    return p


def _split(cd: ClassData, p: int) -> list[np.ndarray]:
    """Common eigenvectors of the class matrices mod p, one per irreducible character."""
    k = cd.k
    # (M_r)[s, t] = a_rst; the vector w_t = |C_t| chi(g_t) / chi(1) satisfies
    # sum_t a_rst w_t = w_r w_s, i.e. M_r w = w_r w.
    spaces = [np.eye(k, dtype=np.int64)]
    for r in range(1, k):
        if all(V.shape[1] == 1 for V in spaces):
            break
        M = class_matrix(cd, r) % p
        nxt = []
        for V in spaces:
            if V.shape[1] == 1:
                nxt.append(V)
                continue
            # the space is invariant under M, so M V = V X; solve on the pivot rows
            _, piv = gfp.rref(V.T, p)
            MV = (M @ V) % p
            Vp = V[piv]
            X = (_inv_mod(Vp, p) @ MV[piv]) % p
            lams = gfp.roots(gfp.charpoly(X, p), p)
            dims = 0
            for lam in lams:
                N = gfp.nullspace((X - lam * np.eye(len(X), dtype=np.int64)) % p, p)
                if N.shape[1]:
                    W = (V @ N) % p
                    nxt.append(_echelon_basis(W, p))
                    dims += N.shape[1]
            if dims != V.shape[1]:
                raise SplittingError(
                    f"class matrix {r + 1} is not diagonalizable over GF({p}) "
                    f"on a {V.shape[1]}-dimensional common eigenspace")
        spaces = nxt
    bad = [V.shape[1] for V in spaces if V.shape[1] != 1]
    if bad:
        raise SplittingError(
            f"common eigenspaces of dimensions {bad} remain after all {k} class matrices")
    return [V[:, 0] for V in spaces]


def _inv_mod(A: np.ndarray, p: int) -> np.ndarray:
    n = len(A)
    R, piv = gfp.rref(np.hstack([A % p, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix mod p")
    return R[:, n:]


def _echelon_basis(W: np.ndarray, p: int) -> np.ndarray:
    R, piv = gfp.rref(W.T, p)
    return R[: len(piv)].T.copy()


def dixon_character_table(g, cd: ClassData, prime: int | None = None) -> CharacterTable:
    """Irreducible characters with exact cyclotomic values.

    Rows are sorted by (degree, value vector in class order).
    """
    order = len(g)
    e = g.exponent
    if prime is None:
        prime = dixon_prime(order, e)
    p = prime
    if not gfp.is_prime(p) or (p - 1) % e or p * p <= 4 * order:
        raise ValueError(f"{p} is not a valid Dixon prime for |G|={order}, exponent {e}")
    if p > gfp.MAX_PRIME:
        raise ValueError(f"prime {p} too large for int64 linear algebra")
    if cd.sizes[0] != 1:
        raise ValueError("class 0 must be the identity class")
    k = cd.k
    sizes = cd.sizes
    inv_cls = cd.inverse_classes
    inv_size = [pow(s, -1, p) for s in sizes]
    root = gfp.primitive_root(p)

    residues = []
    for w in _split(cd, p):
        w = (w * pow(int(w[0]), -1, p)) % p
        S = sum(int(w[t]) * int(w[inv_cls[t]]) * inv_size[t] for t in range(k)) % p
        target = order * pow(S, -1, p) % p
        d = next((d for d in range(1, math.isqrt(order) + 1)
                  if d * d % p == target and order % d == 0), None)
        if d is None:
            raise SplittingError("no admissible degree for an eigenvector")
        residues.append((d, [int(w[t]) * d * inv_size[t] % p for t in range(k)]))

    rows = []
    for d, chi in residues:
        rows.append([_lift(cd, chi, t, d, p, root, e) for t in range(k)])
    table = CharacterTable(rows, order, list(sizes), "computed",
                           meta={"prime": p, "exponent": e})
    _sort_rows(table, e)
    return table


def _lift(cd: ClassData, chi: list[int], t: int, d: int, p: int, root: int, e: int) -> Cyclotomic:
    o = cd.orders[t]
    z = pow(root, (p - 1) // o, p)
    vals = [chi[power_map(cd, j)[t]] for j in range(o)]
    inv_o = pow(o, -1, p)
    coeffs = [0] * e
    step = e // o
    for l in range(o):
        m = inv_o * sum(vals[j] * pow(z, -j * l % o, p) for j in range(o)) % p
        if m > d:
            raise SplittingError(f"multiplicity residue {m} exceeds degree {d} on class {t + 1}")
        coeffs[l * step] = m
    val = Cyclotomic(e, coeffs)
    return Cyclotomic.rational(val.to_fraction()) if val.is_rational() else val


def _sort_rows(t: CharacterTable, e: int) -> None:
    def key(row):
        return (int(row[0]), tuple(v.sort_key(e) for v in row))
    t.values.sort(key=key)


# -- verification -----------------------------------------------------------------

def _abs2(x: Cyclotomic) -> Fraction:
    return (x * x.conj()).to_fraction()


def verify_orthogonality(t: CharacterTable) -> Report:
    """Both orthogonality relations, one check per row pair and per column pair."""
    if t.class_sizes is None:
        raise ValueError("class sizes required")
    G, k, sizes = t.group_order, t.k, t.class_sizes
    report = Report("orthogonality")
    report.add("class sizes sum to |G|", sum(sizes) == G, f"sum {sum(sizes)} vs {G}")
    ints = t.int_matrix()
    if ints is not None:
        X = ints
        S = np.array(sizes, dtype=object)
        rowg = (X * S) @ X.T
        colg = X.T @ X
    else:
        vals = t.values
        conj_vals = [[v.conj() for v in row] for row in vals]
        rowg = [[sum((vals[i][c] * conj_vals[j][c] * sizes[c] for c in range(k)), _c(0))
                 for j in range(k)] for i in range(k)]
        colg = [[sum((vals[i][a] * conj_vals[i][b] for i in range(k)), _c(0))
                 for b in range(k)] for a in range(k)]
    for i in range(k):
        for j in range(i, k):
            got = rowg[i][j]
            want = G if i == j else 0
            report.add(f"row {t.labels[i]} . {t.labels[j]}", got == want,
                       "" if got == want else f"got {got}, expected {want}")
    for a in range(k):
        for b in range(a, k):
            got = colg[a][b]
            if a == b:
                want = Fraction(G, sizes[a])
                ok = _c(got) == _c(want)
            else:
                want = 0
                ok = got == 0
            report.add(f"column {a + 1} . {b + 1}", ok,
                       "" if ok else f"got {got}, expected {want}")
    return report


def class_sizes_from_columns(values: Sequence[Sequence], group_order: int) -> list[int]:
    """|C| = |G| / sum_i |chi_i(C)|^2 for every column."""
    k = len(values)
    sizes = []
    for c in range(k):
        norm = sum(_abs2(_c(values[i][c])) for i in range(k))
        if norm == 0:
            raise CorruptTableError(f"column {c + 1} is identically zero")
        size = Fraction(group_order) / norm
        if size.denominator != 1 or size <= 0:
            raise CorruptTableError(f"column {c + 1} gives non-integer class size {size}")
        sizes.append(int(size))
    if sum(sizes) != group_order:
        raise CorruptTableError(f"derived class sizes sum to {sum(sizes)}, not {group_order}")
    return sizes


def integer_valued(t: CharacterTable) -> bool:
    return all(v.is_rational_integer() for row in t.values for v in row)


def character_kernel(t: CharacterTable, i: int) -> frozenset[int]:
    row = t.values[i]
    return frozenset(c for c, v in enumerate(row) if v == row[0])


def normal_subgroups(t: CharacterTable) -> list[NormalSubgroupRecord]:
    """All normal subgroups, as intersections of kernels, sorted by order."""
    if t.class_sizes is None:
        raise ValueError("class sizes required")
    everything = frozenset(range(t.k))
    found = {everything} | {character_kernel(t, i) for i in range(t.k)}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in found:
                c = a & b
                if c not in found and c not in new:
                    new.add(c)
        found |= new
        frontier = new
    out = []
    for s in found:
        order = sum(t.class_sizes[c] for c in s)
        out.append(NormalSubgroupRecord(s, order, 1 < order < t.group_order))
    out.sort(key=lambda r: (r.order, sorted(r.class_index_set)))
    return out


# -- CSV ---------------------------------------------------------------------------

def table_to_csv(t: CharacterTable) -> str:
    """First row: blank then class sizes (blank when unknown); then one row per character."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    sizes = t.class_sizes or [""] * t.k
    w.writerow(["size"] + [str(s) for s in sizes])
    for label, row in zip(t.labels, t.values):
        w.writerow([label] + [format_cyclotomic(v) for v in row])
    return buf.getvalue()


def table_from_csv(text: str, group_order: int, source: str = "csv") -> CharacterTable:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and not r[0].startswith("#")]
    if not rows:
        raise CorruptTableError("empty table")
    head, body = rows[0], rows[1:]
    sizes_txt = [s.strip() for s in head[1:]]
    sizes = None if all(not s for s in sizes_txt) else [int(s) for s in sizes_txt]
    labels = [r[0].strip() for r in body]
    values = [[parse_cyclotomic(x.strip()) for x in r[1:]] for r in body]
    if any(len(v) != len(body) for v in values):
        raise CorruptTableError("table is not square")
    return CharacterTable(values, group_order, sizes, source, labels)
