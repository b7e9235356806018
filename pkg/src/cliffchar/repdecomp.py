"""
The conjugation representation A.M = A M A^-1 on 2^n x 2^n matrices and the
decomposition of its tensor powers into irreducible characters.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chartab import CharacterTable
from .classes import ClassData
from .cyclo import Cyclotomic

__all__ = [
    "ClassFunction",
    "DecompositionVector",
    "InconsistentDataError",
    "adjoint_character",
    "adjoint_character_from_table",
    "decompose_power",
    "reconstruct",
    "c1_recursion",
    "c1_recursion_check",
    "faithfulness_check",
    "decomposition_text",
    "decomposition_csv",
]


class InconsistentDataError(ValueError):
    """An inner product came out negative or non-integral."""


@dataclass(frozen=True)
class ClassFunction:
    values: tuple[Cyclotomic, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Cyclotomic:
        return self.values[i]

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if len(other) != len(self):
            raise ValueError("class functions on different class sets")
        return ClassFunction(tuple(a * b for a, b in zip(self.values, other.values)))

    def __pow__(self, m: int) -> "ClassFunction":
        if m < 0:
            raise ValueError("m must be nonnegative")
        out = ClassFunction(tuple(Cyclotomic.rational(1) for _ in self.values))
        for _ in range(m):
            out = out * self
        return out

    def permuted(self, cols: Sequence[int]) -> "ClassFunction":
        return ClassFunction(tuple(self.values[c] for c in cols))


@dataclass(frozen=True)
class DecompositionVector:
    v: tuple[int, ...]
    m: int

    def dimension(self, degrees: Sequence[int]) -> int:
        return sum(a * d for a, d in zip(self.v, degrees))

    def norm2(self) -> int:
        return sum(a * a for a in self.v)

    def support(self) -> dict[int, int]:
        """1-based row index -> multiplicity, nonzero entries only."""
        return {i + 1: a for i, a in enumerate(self.v) if a}


def adjoint_character(g, cd: ClassData) -> ClassFunction:
    """|tr U|^2 on each class representative; independent of the phase of U."""
    vals = []
    for r in cd.rep_ids:
        tr = g.element(r).trace()
        vals.append(tr * tr.conj())
    return ClassFunction(tuple(vals))


def adjoint_character_from_table(t: CharacterTable, rows: Sequence[int]) -> ClassFunction:
    """Pointwise sum of the given 1-based table rows."""
    vals = [Cyclotomic.rational(0)] * t.k
    for r in rows:
        vals = [a + b for a, b in zip(vals, t.values[r - 1])]
    return ClassFunction(tuple(vals))


def decompose_power(chi: ClassFunction, m: int, t: CharacterTable) -> DecompositionVector:
    """Multiplicities <chi^m, chi_i> for every row of t."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if len(chi) != t.k or t.class_sizes is None:
        raise ValueError("class function and table are incompatible")
    power = chi ** m
    sizes = t.class_sizes
    if all(v.is_rational() for v in power.values) and all(
            v.is_rational() for row in t.values for v in row):
        # rational fast path (real-valued rows: conj is the identity)
        pw = [power[c].to_fraction() * sizes[c] for c in range(t.k)]
        ips = [sum((pw[c] * row[c].to_fraction() for c in range(t.k)), Fraction(0)) / t.group_order
               for row in t.values]
    else:
        ips = []
        for row in t.values:
            s = Cyclotomic.rational(0)
            for c in range(t.k):
                s = s + power[c] * row[c].conj() * sizes[c]
            s = s / t.group_order
            if not s.is_rational():
                raise InconsistentDataError(f"inner product with {t.labels[len(ips)]} is irrational: {s}")
            ips.append(s.to_fraction())
    out = []
    for label, q in zip(t.labels, ips):
        if q.denominator != 1 or q < 0:
            raise InconsistentDataError(f"multiplicity of {label} in chi^{m} is {q}")
        out.append(int(q))
    return DecompositionVector(tuple(out), m)


def reconstruct(v: DecompositionVector, t: CharacterTable) -> ClassFunction:
    vals = [Cyclotomic.rational(0)] * t.k
    for a, row in zip(v.v, t.values):
        if a:
            vals = [x + y * a for x, y in zip(vals, row)]
    return ClassFunction(tuple(vals))


def c1_recursion(v: Sequence[int]) -> tuple[int, ...]:
    """Next vector on the five C_1 irreducibles ordered by degrees (1, 1, 2, 3, 3)."""
    a, b, c, d, e = v
    return (a + d, 2 * b + c + d + e, b + c + d, a + b + c + 2 * d, b + e)


def c1_recursion_check(v_m: Sequence[int], v_next: Sequence[int]) -> bool:
    return tuple(v_next) == c1_recursion(v_m)


def faithfulness_check(chi: ClassFunction, sizes: Sequence[int]) -> bool:
    """True iff chi(C) = chi(1) only on the identity class."""
    if not sizes or sizes[0] != 1:
        raise ValueError("class 0 must be the identity class")
    return all(chi[c] != chi[0] for c in range(1, len(chi)))


def decomposition_text(v: DecompositionVector, labels: Sequence[str] | None = None) -> str:
    labels = labels or [f"chi{i + 1}" for i in range(len(v.v))]
    terms = [(lab if a == 1 else f"{a}*{lab}") for a, lab in zip(v.v, labels) if a]
    return f"v_{v.m} = " + (" + ".join(terms) or "0")


def decomposition_csv(vs: Sequence[DecompositionVector]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "row", "multiplicity"])
    for v in vs:
        for i, a in enumerate(v.v, start=1):
            w.writerow([v.m, i, a])
    return buf.getvalue()
