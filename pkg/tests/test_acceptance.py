"""End-to-end acceptance checks; each test prints one PASS/FAIL line and the
session summary lists all of them."""

import random
import re
import time
from collections import Counter

import pytest

from cliffchar.chartab import (
    character_kernel,
    dixon_character_table,
    dixon_prime,
    integer_valued,
    normal_subgroups,
    verify_orthogonality,
)
from cliffchar.classes import class_of_word
from cliffchar.cli import main as cli_main
from cliffchar.matgroup import bfs_closure, clifford_generators, gen_pauli, group_order_formula
from cliffchar.presentation import abelianization, verify_relators
from cliffchar.reference import compare_sparse, load_table, match_tables, verify_embedded_c3
from cliffchar.repdecomp import (
    adjoint_character,
    adjoint_character_from_table,
    c1_recursion_check,
    decompose_power,
    faithfulness_check,
)


def _report(num, problems):
    status = "PASS" if not problems else "FAIL"
    print(f"criterion {num}: {status}" + ("" if not problems else " -- " + "; ".join(problems)))
    assert not problems, "; ".join(problems)


def _reordered(v, rows):
    return tuple(v.v[r] for r in rows)


@pytest.mark.criterion(1, "order formula reproduces |C_n| for n = 1..5")
def test_criterion_01_order_formula(capsys):
    ref = load_table("order_table").payload
    problems = [f"n={n}: {group_order_formula(n)} != {o}" for n, o in ref.items() if group_order_formula(n) != o]
    assert sorted(ref) == [1, 2, 3, 4, 5]
    cli_main(["order", "--n", "2", "-q"])
    out = capsys.readouterr().out.strip()
    if out != "11520":
        problems.append(f"cli order --n 2 wrote {out!r}")
    _report(1, problems)


@pytest.mark.criterion(2, "breadth-first closure gives 24 and 11520 elements")
def test_criterion_02_enumeration():
    problems = []
    t0 = time.perf_counter()
    g1 = bfs_closure(clifford_generators(1))
    g2 = bfs_closure(clifford_generators(2))
    elapsed = time.perf_counter() - t0
    if len(g1) != 24:
        problems.append(f"C_1 has {len(g1)} elements")
    if len(g2) != 11520:
        problems.append(f"C_2 has {len(g2)} elements")
    if [nm for nm, _ in clifford_generators(2)] != ["h1", "h2", "p1", "p2", "z1"]:
        problems.append("C_2 generating set is not h1 h2 p1 p2 z1")
    if elapsed > 60:
        problems.append(f"took {elapsed:.1f}s")
    _report(2, problems)


@pytest.mark.criterion(3, "every relator evaluates to the identity mod phase for n = 1, 2, 3")
def test_criterion_03_presentation():
    problems = []
    t0 = time.perf_counter()
    for n in (1, 2, 3):
        rep = verify_relators(n)
        if not rep.passed or not len(rep):
            problems += [f"n={n} {c.name}" for c in rep.failures] or [f"n={n}: no relators"]
    if time.perf_counter() - t0 > 60:
        problems.append("too slow")
    _report(3, problems)


@pytest.mark.criterion(4, "C_1 table, decompositions v1..v6 and recursion")
def test_criterion_04_s4(c1):
    problems = []
    if not c1.match:
        problems.append(f"table mismatch: {c1.match.mismatch}")
    else:
        ref = load_table("c1_decomp").payload
        chi = adjoint_character(c1.group, c1.classes)
        vs = {}
        for m in range(1, 7):
            vs[m] = _reordered(decompose_power(chi, m, c1.table), c1.match.rows)
            if vs[m] != ref[m]:
                problems.append(f"v{m} = {vs[m]}, reference {ref[m]}")
        for m in range(1, 6):
            if not c1_recursion_check(vs[m], vs[m + 1]):
                problems.append(f"recursion fails at m={m}")
    _report(4, problems)


@pytest.mark.criterion(5, "C_2 has 21 classes matching the reference sizes and representatives")
def test_criterion_05_c2_classes(c2):
    problems = []
    cd = c2.classes
    recs = load_table("c2_classes").payload
    if cd.k != 21:
        problems.append(f"{cd.k} classes")
    if Counter(cd.sizes) != Counter(r.size for r in recs):
        problems.append("size multiset differs")
    landed = []
    for r in recs:
        c = class_of_word("" if r.word == "e" else r.word, c2.group, cd)
        landed.append(c)
        if cd.sizes[c] != r.size:
            problems.append(f"No.{r.label} word {r.word!r} lands in a class of size {cd.sizes[c]}, not {r.size}")
    if len(set(landed)) != 21:
        problems.append("representatives are not in distinct classes")
    _report(5, problems)


@pytest.mark.criterion(6, "computed C_2 table equals the reference and is prime independent")
def test_criterion_06_c2_table(c2):
    problems = []
    t0 = time.perf_counter()
    if not c2.match:
        problems.append(f"mismatch: {c2.match.mismatch}")
    p1 = c2.table.meta["prime"]
    p2 = dixon_prime(len(c2.group), c2.group.exponent, p1)
    again = dixon_character_table(c2.group, c2.classes, prime=p2)
    if again.values != c2.table.values:
        problems.append(f"primes {p1} and {p2} give different tables")
    if time.perf_counter() - t0 > 600:
        problems.append("too slow")
    print(f"primes used: {p1}, {p2}")
    _report(6, problems)


@pytest.mark.criterion(7, "C_2 normal subgroups {16, 5760}, Pauli subgroup, sign character")
def test_criterion_07_c2_structure(c2):
    problems = []
    t, g, cd = c2.table, c2.group, c2.classes
    recs = [r for r in normal_subgroups(t) if r.is_proper_nontrivial]
    orders = sorted(r.order for r in recs)
    if orders != [16, 5760]:
        problems.append(f"proper nontrivial orders {orders}")
    pauli = bfs_closure([gen_pauli(a, i, 2) for i in (1, 2) for a in ("X", "Y")])
    pauli_classes = {int(cd.class_of[g.lookup(m)]) for m in pauli.elements}
    small = [r for r in recs if r.order == 16]
    if len(pauli) != 16 or not small or set(small[0].class_index_set) != pauli_classes:
        problems.append("order-16 normal subgroup is not the Pauli group")
    linear = [i for i, d in enumerate(t.degrees) if d == 1]
    if len(linear) != 2:
        problems.append(f"{len(linear)} degree-1 characters")
    cols = [class_of_word(w, g, cd) for w in ("h1", "p1", "z1")]
    sgn = [i for i in linear if all(t.values[i][c] == -1 for c in cols)]
    if len(sgn) != 1:
        problems.append("no degree-1 character is -1 on H1, P1 and Z")
    else:
        ker = character_kernel(t, sgn[0])
        if sum(cd.sizes[c] for c in ker) != 5760:
            problems.append("sign kernel does not have order 5760")
    _report(7, problems)


@pytest.mark.criterion(8, "C_2 decompositions v1..v5 and chi_M = chi1 + chi14")
def test_criterion_08_c2_decompositions(c2):
    problems = []
    ref = load_table("c2_decomp").payload
    chi = adjoint_character(c2.group, c2.classes)
    for m in range(1, 6):
        v = _reordered(decompose_power(chi, m, c2.table), c2.match.rows)
        if v != ref[m]:
            problems.append(f"v{m} = {v}")
    from_rows = adjoint_character_from_table(c2.reference, [1, 14])
    if chi.permuted(c2.match.cols).values != from_rows.values:
        problems.append("chi_M differs from chi1 + chi14")
    _report(8, problems)


@pytest.mark.criterion(9, "embedded C_3 table: orthogonality, sizes, one linear character, unique normal subgroup 64")
def test_criterion_09_c3_properties():
    t0 = time.perf_counter()
    rep = verify_embedded_c3()
    problems = [c.line() for c in rep.failures]
    if time.perf_counter() - t0 > 10:
        problems.append(f"took {time.perf_counter() - t0:.1f}s")
    _report(9, problems)


@pytest.mark.criterion(10, "C_3 decompositions v2, v3 against the reference; dimensions 64^m")
def test_criterion_10_c3_decompositions(c3_table):
    problems = []
    t = c3_table
    ref = load_table("c3_decomp")
    chi = adjoint_character_from_table(t, [1, 10])
    for m in (1, 2, 3):
        v = decompose_power(chi, m, t)
        if v.dimension(t.degrees) != 64 ** m:
            problems.append(f"m={m}: dimension {v.dimension(t.degrees)}")
        notes = {r: s for (mm, r), s in ref.notes.items() if mm == m}
        cmp = compare_sparse(v.support(), ref.payload[m], notes, f"v{m}")
        for c in cmp.checks:
            if "alternative" in c.detail:
                print(f"v{m} {c.name}: {c.detail}")
        problems += [f"v{m} {c.name}: {c.detail}" for c in cmp.failures]
    _report(10, problems)


@pytest.mark.criterion(11, "abelianization [2] for n = 1, 2 and trivial for n = 3, 4, 5")
def test_criterion_11_abelianization():
    problems = []
    t0 = time.perf_counter()
    for n, want in ((1, (2,)), (2, (2,)), (3, ()), (4, ()), (5, ())):
        ab = abelianization(n)
        if ab.invariant_factors != want or ab.free_rank:
            problems.append(f"n={n}: {ab}")
    if time.perf_counter() - t0 > 5:
        problems.append("too slow")
    _report(11, problems)


@pytest.mark.criterion(12, "integer-valued tables and faithful conjugation character")
def test_criterion_12_integrality_and_faithfulness(c1, c2, c3_table):
    problems = []
    for name, t in (("C_1", c1.table), ("C_2", c2.table), ("C_3", c3_table)):
        if not integer_valued(t):
            problems.append(f"{name} table not integer valued")
    for name, p in (("C_1", c1), ("C_2", c2)):
        if not faithfulness_check(adjoint_character(p.group, p.classes), p.classes.sizes):
            problems.append(f"{name} conjugation character has a nontrivial kernel")
    _report(12, problems)


_CELL = re.compile(r"embedded chi(\d+), class column (\d+):")


@pytest.mark.criterion(13, "single-cell perturbations of reference tables are detected and located")
def test_criterion_13_negative_control(c1, c2, c3_table):
    problems = []
    rng = random.Random(20240601)
    for name, pipe in (("s4", c1), ("c2", c2)):
        base = pipe.reference
        for i in range(base.k):
            for j in range(base.k):
                emb = base.permuted(range(base.k), range(base.k))
                emb.values[i][j] = emb.values[i][j] + rng.choice((1, -1, 2))
                res = match_tables(pipe.table, emb, pipe.anchors)
                loc = _CELL.search(res.mismatch)
                if res or not loc or (int(loc.group(1)), int(loc.group(2))) != (i + 1, j + 1):
                    problems.append(f"{name} cell ({i + 1},{j + 1}) not located: {res.mismatch!r}")
    # C_3: orthogonality against the fixed class sizes must fail on the perturbed row and column
    base = c3_table
    cells = [(rng.randrange(67), rng.randrange(67)) for _ in range(25)]
    for i, j in cells:
        t = base.permuted(range(67), range(67))
        t.values[i][j] = t.values[i][j] + 1
        bad = verify_orthogonality(t).failures
        rows_hit = any(c.name.startswith("row ") and f"chi{i + 1}" in c.name.split() for c in bad)
        cols_hit = any(c.name.startswith("column ") and str(j + 1) in c.name.split()[1::2] for c in bad)
        if not (rows_hit and cols_hit):
            problems.append(f"c3 cell ({i + 1},{j + 1}) not located")
    _report(13, problems)
