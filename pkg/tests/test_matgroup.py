import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cliffchar.cyclo import Cyclotomic, zeta
from cliffchar.matgroup import (
    EnumerationCapExceeded,
    PhaseMatrix,
    bfs_closure,
    clifford_generators,
    clifford_group,
    evaluate_word,
    format_word,
    gen_cz,
    gen_hadamard,
    gen_pauli,
    gen_phase,
    gen_swap,
    group_order_formula,
    identity,
    invert_word,
    mat_inv,
    mat_mul,
    parse_word,
)


def test_single_qubit_relations():
    H, P = gen_hadamard(1, 1), gen_phase(1, 1)
    assert (H * H).is_identity()
    assert (P ** 4).is_identity()
    assert not (P ** 2).is_identity()
    assert ((H * P) ** 3).is_identity()


def test_paulis_multiply_mod_phase():
    X, Y, Z = (gen_pauli(a, 1, 1) for a in "XYZ")
    assert X * Y == Z
    assert gen_phase(1, 1) ** 2 == Z
    assert len(bfs_closure([X, Z])) == 4


def test_phase_invariance_of_keys():
    H = gen_hadamard(1, 2)
    w = zeta(8)
    scaled = PhaseMatrix.from_entries(2, [[w * x for x in row] for row in H.entries])
    assert scaled == H and hash(scaled) == hash(H)


def test_cz_relations_and_swap():
    n = 2
    z = gen_cz(1, n)
    assert (z * z).is_identity()
    assert evaluate_word("(z1 h2 h1)^3", n) == gen_swap(1, n)
    assert evaluate_word("z1 h1 h2 z1 h1 h2 z1 h1 h2", n) == gen_swap(1, n)


def test_generators_are_unitary():
    for n in (1, 2, 3):
        for _, g in clifford_generators(n):
            assert g.is_unitary()


def test_inverse_and_powers():
    g = evaluate_word("h1 p1 z1 h2", 2)
    assert (g * mat_inv(g)).is_identity()
    assert g ** -1 == mat_inv(g)
    assert g ** 0 == identity(2)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(identity(1), identity(2))
    with pytest.raises(IndexError):
        gen_hadamard(3, 2)
    with pytest.raises(ValueError):
        gen_pauli("w", 1, 1)


def test_word_syntax():
    assert parse_word("h1 p1^-1 (z1 h2)^2") == (("h1", 1), ("p1", -1), ("z1", 1), ("h2", 1), ("z1", 1), ("h2", 1))
    assert parse_word("e") == ()
    assert parse_word("H1*P1") == (("h1", 1), ("p1", 1))
    assert parse_word("(h1 p1)^-1") == (("p1", -1), ("h1", -1))
    assert format_word(parse_word("p2 p1^2")) == "p2 p1^2"
    for bad in ("h1 (p1", "h1)", "q1", "h1 $"):
        with pytest.raises(ValueError):
            parse_word(bad)


def test_small_orders():
    assert [group_order_formula(n) for n in (1, 2, 3)] == [24, 11520, 92897280]
    g1 = clifford_group(1)
    assert len(g1) == 24
    assert sorted(set(int(o) for o in g1.orders)) == [1, 2, 3, 4]
    assert g1.exponent == 12


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded) as info:
        clifford_group(3)
    assert "1000000" in str(info.value)
    with pytest.raises(EnumerationCapExceeded):
        bfs_closure(clifford_generators(2), element_cap=1000)


def test_group_table_operations():
    g = clifford_group(2)
    assert g.exponent == 120
    assert sorted(set(int(o) for o in g.orders)) == [1, 2, 3, 4, 5, 6, 8, 12]
    rng = np.random.default_rng(7)
    ids = rng.integers(0, len(g), 40)
    for i in ids[:20]:
        i = int(i)
        assert g.lookup(evaluate_word(g.word(i), 2)) == i
        assert g.mul(i, int(g.inverses[i])) == 0
    j = g.generators[2][1]
    assert np.array_equal(g.mul_right(ids, j), [g.mul(int(x), j) for x in ids])
    assert np.array_equal(g.mul_left(j, ids), [g.mul(j, int(x)) for x in ids])
    assert np.array_equal(g.right_action(2), g.mul_right(np.arange(len(g)), j))


words = st.lists(st.tuples(st.sampled_from(["h1", "h2", "p1", "p2", "z1"]), st.integers(-3, 3)), max_size=8)


@given(words, words)
@settings(max_examples=40, deadline=None)
def test_closure_and_inverse_words(w1, w2):
    g = clifford_group(2)
    a, b = evaluate_word(w1, 2), evaluate_word(w2, 2)
    assert g.mul(g.lookup(a), g.lookup(b)) == g.lookup(a * b)
    assert (a * evaluate_word(invert_word(tuple(w1)), 2)).is_identity()
    assert (a * b).is_unitary()


@given(words, st.integers(0, 7))
@settings(max_examples=30, deadline=None)
def test_phase_rotation_is_invisible(w, k):
    a = evaluate_word(w, 2)
    rotated = PhaseMatrix.from_entries(2, [[x * zeta(8, k) for x in row] for row in a.entries])
    assert rotated == a
    assert np.allclose(np.abs(rotated.to_complex()), np.abs(a.to_complex()))
