"""
Conjugacy classes of an enumerated group: partition, power maps and
class-algebra structure constants a_ijk = #{(x, y) in C_i x C_j : xy = z}, z in C_k.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .matgroup import GroupTable, evaluate_word, format_word

__all__ = [
    "ClassData",
    "conjugacy_classes",
    "class_of_word",
    "power_map",
    "class_constants",
    "class_matrix",
    "classes_csv",
]


@dataclass
class ClassData:
    group: GroupTable
    rep_ids: list[int]
    sizes: list[int]
    class_of: np.ndarray
    orders: list[int]
    power_maps: dict[int, list[int]] = field(default_factory=dict)
    _constants: dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def k(self) -> int:
        return len(self.rep_ids)

    def members(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.class_of == i)

    @property
    def inverse_classes(self) -> list[int]:
        return power_map(self, -1)


def conjugacy_classes(g: GroupTable) -> ClassData:
    """Orbits under conjugation by the generators.

    Classes are sorted by (size, element order of representative, representative id);
    the representative is the smallest element id in the class.
    """
    N = len(g)
    conj = []
    inv = g.inverses
    for pos, (_, gid) in enumerate(g.generators):
        # x -> g x g^-1
        left = g.left_action(pos)
        conj.append(g.mul_right(left, int(inv[gid])))
    label = np.full(N, -1, dtype=np.int64)
    orbits = []
    for start in range(N):
        if label[start] >= 0:
            continue
        c = len(orbits)
        label[start] = c
        members = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for perm in conj:
                y = int(perm[x])
                if label[y] < 0:
                    label[y] = c
                    members.append(y)
                    stack.append(y)
        orbits.append(members)
    orders = g.orders
    reps = [min(m) for m in orbits]
    keyed = sorted(range(len(orbits)), key=lambda c: (len(orbits[c]), int(orders[reps[c]]), reps[c]))
    relabel = np.empty(len(orbits), dtype=np.int64)
    for new, old in enumerate(keyed):
        relabel[old] = new
    class_of = relabel[label]
    return ClassData(
        group=g,
        rep_ids=[reps[c] for c in keyed],
        sizes=[len(orbits[c]) for c in keyed],
        class_of=class_of,
        orders=[int(orders[reps[c]]) for c in keyed],
    )


def class_of_word(word, g: GroupTable, cd: ClassData) -> int:
    return int(cd.class_of[g.lookup(evaluate_word(word, g.n))])


def power_map(cd: ClassData, m: int) -> list[int]:
    """Class of g^m for g in each class."""
    if m not in cd.power_maps:
        g = cd.group
        cd.power_maps[m] = [int(cd.class_of[g.power(r, m)]) for r in cd.rep_ids]
    return cd.power_maps[m]


def class_matrix(cd: ClassData, i: int) -> np.ndarray:
    """M[j, k] = a_ijk, counted with a fixed z per class k via y = x^-1 z."""
    if i not in cd._constants:
        g = cd.group
        xinv = g.inverses[cd.members(i)]
        M = np.zeros((cd.k, cd.k), dtype=np.int64)
        for kk, z in enumerate(cd.rep_ids):
            ys = g.mul_right(xinv, z)
            M[:, kk] = np.bincount(cd.class_of[ys], minlength=cd.k)
        cd._constants[i] = M
    return cd._constants[i]


def class_constants(cd: ClassData, i: int, j: int) -> list[int]:
    """The vector (a_ijk)_k."""
    return [int(x) for x in class_matrix(cd, i)[j]]


def classes_csv(cd: ClassData) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "size", "representative", "order"])
    for c in range(cd.k):
        w.writerow([c + 1, cd.sizes[c], format_word(cd.group.word(cd.rep_ids[c])) or "e", cd.orders[c]])
    return buf.getvalue()
