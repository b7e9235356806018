from hypothesis import given, settings, strategies as st

from cliffchar.smith import integer_det, invariant_factors, smith_normal_form


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def test_known_snf():
    D, U, V = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [D[i][i] for i in range(3)] == [2, 6, 12]


def test_invariant_factors_cyclic_and_free():
    assert invariant_factors([[2, 0], [0, 3]]) == ([6], 0)
    assert invariant_factors([[0, 0, 0]]) == ([], 3)
    assert invariant_factors([[1, 1]]) == ([], 1)


def test_determinant():
    assert integer_det([[2, 1], [7, 4]]) == 1
    assert integer_det([[0, 1], [1, 0]]) == -1
    assert integer_det([[1, 2], [2, 4]]) == 0
    assert integer_det([]) == 1


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)))


@given(matrices)
@settings(max_examples=80, deadline=None)
def test_snf_properties(A):
    D, U, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(integer_det(U)) == 1 and abs(integer_det(V)) == 1
    m, n = len(A), len(A[0])
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert diag[:len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
@settings(max_examples=60, deadline=None)
def test_det_matches_snf(A):
    D, _, _ = smith_normal_form(A)
    assert abs(integer_det(A)) == D[0][0] * D[1][1] * D[2][2]
