import pytest

from cliffchar.chartab import (
    CharacterTable,
    CorruptTableError,
    character_kernel,
    class_sizes_from_columns,
    dixon_character_table,
    dixon_prime,
    integer_valued,
    normal_subgroups,
    table_from_csv,
    table_to_csv,
    verify_orthogonality,
)
from cliffchar.classes import class_of_word, conjugacy_classes
from cliffchar.cyclo import Cyclotomic, zeta
from cliffchar.matgroup import bfs_closure, gen_pauli, gen_phase
from cliffchar.reference import load_table
from cliffchar.presentation import abelianization

C2_DEGREES = [1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 15, 15, 15, 15, 16, 30, 30, 45, 45, 45, 45]


def test_prime_choice():
    assert dixon_prime(11520, 120) == 241
    assert dixon_prime(24, 12) == 13
    assert dixon_prime(11520, 120, 241) == 601
    with pytest.raises(ValueError):
        from cliffchar.matgroup import clifford_group
        g = clifford_group(1)
        dixon_character_table(g, conjugacy_classes(g), prime=7)


def test_c1_table(c1):
    t = c1.table
    assert sorted(t.degrees) == [1, 1, 2, 3, 3]
    cols = [class_of_word(w, c1.group, c1.classes) for w in ("", "h1", "p1^2", "h1 p1", "p1")]
    rows = [[int(t.values[i][c]) for c in cols] for i in range(5)]
    assert [3, 1, -1, 0, -1] in rows
    assert verify_orthogonality(t).passed
    assert integer_valued(t)


def test_c2_table(c2):
    t = c2.table
    assert sorted(t.degrees) == C2_DEGREES
    assert sum(d * d for d in t.degrees) == 11520
    assert all(11520 % d == 0 for d in t.degrees)
    assert t.meta["prime"] == 241
    assert verify_orthogonality(t).passed
    assert t.degrees == sorted(t.degrees)


def test_linear_characters_match_abelianization(c1, c2):
    for pipe, n in ((c1, 1), (c2, 2)):
        assert sum(1 for d in pipe.table.degrees if d == 1) == abelianization(n).order


def test_klein_four_group():
    X, Z = gen_pauli("X", 1, 1), gen_pauli("Z", 1, 1)
    g = bfs_closure([X, Z])
    t = dixon_character_table(g, conjugacy_classes(g))
    assert t.k == 4
    assert {int(v) for row in t.values for v in row} == {1, -1}


def test_cyclic_group_needs_roots_of_unity():
    g = bfs_closure([gen_phase(1, 1)])
    t = dixon_character_table(g, conjugacy_classes(g))
    assert t.k == 4 and not integer_valued(t)
    assert zeta(4) in [v for row in t.values for v in row]
    assert verify_orthogonality(t).passed


def test_class_sizes_from_columns():
    t = load_table("c2_chartab").payload
    sizes = class_sizes_from_columns(t.values, 11520)
    assert sizes == t.class_sizes
    assert sizes[2] == 60
    bad = [row[:] for row in t.values]
    bad[3][4] = bad[3][4] + 1
    with pytest.raises(CorruptTableError):
        class_sizes_from_columns(bad, 11520)


def test_kernels_and_normal_subgroups(c1, c2):
    t = c2.reference
    assert character_kernel(t, 0) == frozenset(range(21))
    ker = character_kernel(t, 1)
    assert len(ker) == 11 and sum(t.class_sizes[c] for c in ker) == 5760
    recs = normal_subgroups(c1.table)
    assert sorted(r.order for r in recs if r.is_proper_nontrivial) == [4, 12]
    for r in normal_subgroups(t):
        assert 0 in r.class_index_set and 11520 % r.order == 0
    sets = {r.class_index_set for r in normal_subgroups(t)}
    assert all(a & b in sets for a in sets for b in sets)


def test_normal_subgroups_against_brute_force(c1):
    g = c1.group
    n = len(g)
    # every union of classes containing the identity that is closed under products
    from itertools import combinations
    found = set()
    cd = c1.classes
    for r in range(0, cd.k):
        for extra in combinations(range(1, cd.k), r):
            cls = {0, *extra}
            members = [x for x in range(n) if cd.class_of[x] in cls]
            ms = set(members)
            if all(g.mul(a, b) in ms for a in members for b in members):
                found.add(len(members))
    recs = normal_subgroups(c1.table)
    assert sorted(found) == sorted(r.order for r in recs)


def test_csv_round_trip(c2):
    t = c2.table
    back = table_from_csv(table_to_csv(t), t.group_order)
    assert back.values == t.values and back.class_sizes == t.class_sizes
    nonint = CharacterTable([[Cyclotomic.rational(1), zeta(3)], [Cyclotomic.rational(1), zeta(3, 2)]], 2)
    again = table_from_csv(table_to_csv(nonint), 2)
    assert again.values == nonint.values and again.class_sizes is None


def test_table_must_be_square():
    with pytest.raises(ValueError):
        CharacterTable([[Cyclotomic.rational(1)], []], 1)
