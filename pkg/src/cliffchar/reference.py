"""
Reference tables shipped as CSV fixtures, and the tools that compare computed
character tables against them up to row and column permutation.

The fixture directory defaults to the package ``data`` folder and can be
overridden with the ``CLIFFCHAR_DATA`` environment variable.
"""

from __future__ import annotations

import csv
import io
import os
import pathlib
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Sequence

from .chartab import (
    CharacterTable,
    CorruptTableError,
    character_kernel,
    class_sizes_from_columns,
    integer_valued,
    normal_subgroups,
    table_from_csv,
    verify_orthogonality,
)
from .classes import class_of_word
from .matgroup import group_order_formula
from .report import Report

__all__ = [
    "DATA_ENV",
    "TABLE_IDS",
    "EmbeddedTable",
    "ClassRecord",
    "MatchResult",
    "data_dir",
    "load_table",
    "match_tables",
    "anchor_columns",
    "verify_embedded_c3",
    "compare_sparse",
]

DATA_ENV = "CLIFFCHAR_DATA"

TABLE_IDS = (
    "s4_chartab",
    "c2_classes",
    "c2_chartab",
    "c3_chartab",
    "order_table",
    "c1_decomp",
    "c2_decomp",
    "c3_decomp",
    "c1_adjoint_row",
)

_DESCRIPTIONS = {
    "s4_chartab": "character table of C_1 (isomorphic to S_4), columns e, H, P^2, HP, P",
    "c2_classes": "the 21 conjugacy classes of C_2: label, size, representative word",
    "c2_chartab": "character table of C_2 with class sizes",
    "c3_chartab": "character table of C_3, class sizes not given",
    "order_table": "|C_n| for n = 1..5",
    "c1_decomp": "decomposition vectors v_1..v_6 of the conjugation representation of C_1",
    "c2_decomp": "decomposition vectors v_1..v_5 of the conjugation representation of C_2",
    "c3_decomp": "sparse decomposition vectors v_1..v_3 of the conjugation representation of C_3",
    "c1_adjoint_row": "character of the conjugation representation of C_1",
}

_ORDERS = {"s4_chartab": 24, "c2_chartab": 11520, "c3_chartab": 92897280}
_SHAPES = {"s4_chartab": 5, "c2_chartab": 21, "c3_chartab": 67}


@dataclass(frozen=True)
class ClassRecord:
    label: int
    size: int
    word: str


@dataclass
class EmbeddedTable:
    table_id: str
    payload: Any
    description: str
    notes: dict = field(default_factory=dict)


def data_dir(override: str | os.PathLike | None = None) -> pathlib.Path:
    if override is not None:
        return pathlib.Path(override)
    env = os.environ.get(DATA_ENV)
    if env:
        return pathlib.Path(env)
    return pathlib.Path(__file__).resolve().parent / "data"


def _rows(text: str) -> list[list[str]]:
    return [r for r in csv.reader(io.StringIO(text)) if r]


def _chartab(table_id: str, text: str) -> CharacterTable:
    words = None
    body = []
    for line in text.splitlines():
        if line.startswith("#words,"):
            words = next(csv.reader([line]))[1:]
        else:
            body.append(line)
    t = table_from_csv("\n".join(body), _ORDERS[table_id], f"embedded:{table_id}")
    if t.k != _SHAPES[table_id]:
        raise CorruptTableError(f"{table_id}: expected {_SHAPES[table_id]} rows, found {t.k}")
    if not integer_valued(t):
        raise CorruptTableError(f"{table_id}: non-integer entry")
    if words is not None:
        t.meta["words"] = words
    return t


def load_table(table_id: str, directory: str | os.PathLike | None = None) -> EmbeddedTable:
    if table_id not in TABLE_IDS:
        raise KeyError(f"unknown table id {table_id!r}; known: {', '.join(TABLE_IDS)}")
    text = (data_dir(directory) / f"{table_id}.csv").read_text()
    notes: dict = {}
    if table_id.endswith("_chartab"):
        payload: Any = _chartab(table_id, text)
    elif table_id == "c2_classes":
        rows = _rows(text)[1:]
        payload = [ClassRecord(int(a), int(b), c.strip()) for a, b, c in rows]
        if len(payload) != 21 or sum(r.size for r in payload) != 11520:
            raise CorruptTableError("c2_classes: expected 21 classes covering 11520 elements")
    elif table_id == "order_table":
        payload = {int(n): int(o) for n, o in _rows(text)[1:]}
    elif table_id in ("c1_decomp", "c2_decomp"):
        payload = {int(r[0]): tuple(int(x) for x in r[1:]) for r in _rows(text)[1:]}
    elif table_id == "c3_decomp":
        payload = {}
        for m, row, coeff, note in _rows(text)[1:]:
            payload.setdefault(int(m), {})[int(row)] = int(coeff)
            if note:
                notes[(int(m), int(row))] = note
    else:  # c1_adjoint_row
        payload = {w.strip(): int(v) for w, v in _rows(text)[1:]}
    return EmbeddedTable(table_id, payload, _DESCRIPTIONS[table_id], notes)


# -- matching ----------------------------------------------------------------------

@dataclass
class MatchResult:
    """rows[i], cols[j] index the computed table for embedded cell (i, j)."""

    ok: bool
    rows: list[int] | None = None
    cols: list[int] | None = None
    mismatch: str = ""

    def __bool__(self) -> bool:
        return self.ok


def anchor_columns(words: Sequence[str], g, cd) -> list[int]:
    """Computed class index for each representative word."""
    return [class_of_word("" if w == "e" else w, g, cd) for w in words]


def _col(t: CharacterTable, j: int) -> Counter:
    return Counter(t.values[i][j] for i in range(t.k))


def _restricted(t: CharacterTable, cols: Sequence[int]) -> Counter:
    return Counter(tuple(row[c] for c in cols) for row in t.values)


def _match_rows(comp: CharacterTable, emb: CharacterTable, cols: Sequence[int]) -> list[int] | None:
    pool: dict[tuple, list[int]] = {}
    for i, row in enumerate(comp.values):
        pool.setdefault(tuple(row[c] for c in cols), []).append(i)
    out = []
    for row in emb.values:
        hits = pool.get(tuple(row))
        if not hits:
            return None
        out.append(hits.pop(0))
    return out


def _first_difference(comp: CharacterTable, emb: CharacterTable, cols: Sequence[int]) -> str:
    """Pair identical rows first, then the rest by fewest differing cells; name the first bad cell."""
    keyed: dict[tuple, list[int]] = {}
    for r, row in enumerate(comp.values):
        keyed.setdefault(tuple(row[c] for c in cols), []).append(r)
    left = []
    for i, row in enumerate(emb.values):
        hits = keyed.get(tuple(row))
        if hits:
            hits.pop(0)
        else:
            left.append(i)
    unused = sorted(r for hits in keyed.values() for r in hits)
    for i in left:
        row = emb.values[i]
        diffs = {r: sum(1 for j, c in enumerate(cols) if comp.values[r][c] != row[j]) for r in unused}
        best = min(unused, key=lambda r: (diffs[r], r))
        unused.remove(best)
        j = next(j for j, c in enumerate(cols) if comp.values[best][c] != row[j])
        return (f"embedded {emb.labels[i]}, class column {j + 1}: "
                f"embedded value {row[j]}, computed value {comp.values[best][cols[j]]} "
                f"(closest computed row {comp.labels[best]}, {diffs[best]} differing cells)")
    return "tables differ"


def match_tables(computed: CharacterTable, embedded: CharacterTable,
                 anchors: Sequence[int | None] | None = None) -> MatchResult:
    """Find row and column permutations carrying computed onto embedded.

    anchors[j], when given, fixes the computed column for embedded column j.
    Remaining columns are assigned by backtracking over columns with equal
    class size (when both tables know sizes) and equal value multiset.
    """
    k = embedded.k
    if computed.k != k or computed.group_order != embedded.group_order:
        return MatchResult(False, mismatch=f"shape or order differs: {computed.k} vs {k} classes, "
                                           f"|G| {computed.group_order} vs {embedded.group_order}")
    anchors = list(anchors) if anchors is not None else [None] * k
    sizes_c, sizes_e = computed.class_sizes, embedded.class_sizes

    def compatible(j: int, c: int) -> bool:
        if sizes_c and sizes_e and sizes_c[c] != sizes_e[j]:
            return False
        return _col(computed, c) == _col(embedded, j)

    cand = []
    for j in range(k):
        if anchors[j] is not None:
            cand.append([anchors[j]])
        else:
            cand.append([c for c in range(k) if c not in anchors and compatible(j, c)])
    if len(set(a for a in anchors if a is not None)) != sum(a is not None for a in anchors):
        return MatchResult(False, mismatch="two anchors name the same computed class")

    assign: dict[int, int] = {}
    taken: set[int] = set()

    def consistent() -> bool:
        js = sorted(assign)
        return _restricted(embedded, js) == _restricted(computed, [assign[j] for j in js])

    def search(order: list[int], pos: int = 0) -> bool:
        if pos == len(order):
            return True
        j = order[pos]
        for c in cand[j]:
            if c in taken:
                continue
            assign[j] = c
            taken.add(c)
            if consistent() and search(order, pos + 1):
                return True
            del assign[j]
            taken.discard(c)
        return False

    order = sorted((j for j in range(k) if cand[j]), key=lambda j: (len(cand[j]), j))
    found = search(order)
    if found and len(order) == k:
        cols = [assign[j] for j in range(k)]
        rows = _match_rows(computed, embedded, cols)
        if rows is not None:
            return MatchResult(True, rows, cols)

    # No exact match. Columns without any candidate are filled with the closest
    # unused computed column, then rows are paired to locate a differing cell.
    if not found:
        assign.clear()
        assign.update({j: a for j, a in enumerate(anchors) if a is not None})
    free = set(range(k)) - set(assign.values())
    for j in range(k):
        if j in assign:
            continue
        ranked = sorted(free, key=lambda c: (
            bool(sizes_c and sizes_e and sizes_c[c] != sizes_e[j]),
            sum((_col(computed, c) - _col(embedded, j)).values()), c))
        assign[j] = ranked[0]
        free.discard(ranked[0])
    cols = [assign[j] for j in range(k)]
    empty = [j + 1 for j in range(k) if not cand[j]]
    where = f"no compatible computed column for embedded column(s) {empty}; " if empty else ""
    return MatchResult(False, None, cols, where + _first_difference(computed, embedded, cols))


# -- C_3 --------------------------------------------------------------------------

def verify_embedded_c3(directory: str | os.PathLike | None = None) -> Report:
    """Consistency checks on the C_3 table, which is too large to recompute here."""
    report = Report("embedded C_3 character table")
    t = load_table("c3_chartab", directory).payload
    G = group_order_formula(3)
    report.add("67 x 67", t.k == 67, f"k = {t.k}")
    deg2 = sum(d * d for d in t.degrees)
    report.add("sum of squared degrees is |C_3|", deg2 == G, f"{deg2} vs {G}")
    try:
        t.class_sizes = class_sizes_from_columns(t.values, G)
    except CorruptTableError as exc:
        report.add("class sizes from column orthogonality", False, str(exc))
        return report
    report.add("class sizes from column orthogonality", True, f"sum {sum(t.class_sizes)}")
    report.add("class 1 is the identity (size 1)", t.class_sizes[0] == 1)
    report.add("class 2 has 63 elements", t.class_sizes[1] == 63, f"size {t.class_sizes[1]}")
    orth = verify_orthogonality(t)
    bad = orth.failures
    report.add("row and column orthogonality", orth.passed,
               f"{len(orth)} pairs" if orth.passed else f"{len(bad)} failures, first: {bad[0].name} {bad[0].detail}")
    linear = sum(1 for d in t.degrees if d == 1)
    report.add("exactly one degree-1 character", linear == 1, f"{linear} found")
    report.add("all values are rational integers", integer_valued(t))
    proper = [r for r in normal_subgroups(t) if r.is_proper_nontrivial]
    orders = sorted(r.order for r in proper)
    report.add("unique proper nontrivial normal subgroup has order 64", orders == [64], f"orders {orders}")
    if orders == [64]:
        report.add("it is the identity class with the size-63 class",
                   proper[0].class_index_set == frozenset({0, 1}),
                   f"classes {sorted(c + 1 for c in proper[0].class_index_set)}")
    ker = character_kernel(t, 1)
    report.add("kernel of chi2 is classes {1, 2}", ker == frozenset({0, 1}),
               f"classes {sorted(c + 1 for c in ker)}")
    ker = character_kernel(t, 9)
    report.add("kernel of chi10 is the identity class", ker == frozenset({0}),
               f"classes {sorted(c + 1 for c in ker)}")
    return report


def compare_sparse(computed: dict[int, int], reference: dict[int, int],
                   notes: dict[int, str] | None = None, title: str = "decomposition") -> Report:
    """Coefficient-by-coefficient comparison of two sparse vectors (row -> multiplicity)."""
    notes = notes or {}
    report = Report(title)
    for r in sorted(set(computed) | set(reference)):
        got, want = computed.get(r, 0), reference.get(r, 0)
        detail = f"computed {got}, reference {want}"
        note = notes.get(r, "")
        if "alt=" in note:
            alt = int(note.split("alt=")[1].split(";")[0])
            detail += f"; alternative reading {alt} {'matches' if alt == got else 'does not match'}"
        report.add(f"chi{r}", got == want, detail)
    return report
