import pytest

from cliffchar.matgroup import evaluate_word
from cliffchar.presentation import (
    abelianization,
    build_presentation,
    export_presentation,
    relation_matrix,
    sgn_character,
    to_gap,
    verify_relators,
)

GAP_C2 = """gap>f:=FreeGroup("h1","h2","p1","p2","z");;
gap>AssignGeneratorVariables(f);;
gap>rels:=[ z^2,h1^2,h2^2,p1^4,p2^4,
(h1*p1)^3,(h2*p2)^3,
(h1*p1*h1*p1^3)^3,(h2*p2*h2*p2^3)^3,
(h1*p1^2*h1*p1^2)^2,(h2*p2^2*h2*p2^2)^2,
Comm(h1,h2),Comm(p1,p2),
Comm(z,p1),Comm(z,p2),
z*h1*p1^2*h1/(h1*p1^2*p2^2*h1*z),
z*h2*p2^2*h2/(h2*p1^2*p2^2*h2*z),
z*h1*z/(p1*h1*p1*p2*z*h1*p1),
z*h2*z/(p2*h2*p1*p2*z*h2*p2)];;
gap>g:=f/rels;;
gap>AssignGeneratorVariables(g);;
gap>IsomorphismPermGroup(g);
"""


def test_relator_counts():
    assert len(build_presentation(1).relators) == 5
    assert len(build_presentation(2).relators) == 19
    pres = build_presentation(3)
    assert len(pres.relators) == 43
    assert {r.rule for r in pres.relators} >= {"B1", "B2", "B3", "R7"}
    assert pres.generator_names == ["h1", "h2", "h3", "p1", "p2", "p3", "z1", "z2"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_relators_hold(n):
    rep = verify_relators(n)
    assert rep.passed, rep.text()


def test_r3_as_written_equals_inverse_form():
    for i in (1, 2):
        a = evaluate_word(f"(h{i} p{i} h{i} p{i}^3)^3", 2)
        b = evaluate_word(f"(h{i} p{i} h{i} p{i}^-1)^3", 2)
        assert a == b and a.is_identity()


def test_abelianization():
    assert abelianization(1).invariant_factors == (2,)
    assert abelianization(2).invariant_factors == (2,)
    for n in (3, 4, 5):
        ab = abelianization(n)
        assert ab.invariant_factors == () and ab.free_rank == 0 and ab.order == 1


def test_relation_matrix_shape():
    pres = build_presentation(2)
    M = relation_matrix(pres)
    assert len(M) == 19 and all(len(r) == 5 for r in M)


def test_sign_character():
    assert set(sgn_character(2).values()) == {-1}
    with pytest.raises(ValueError, match="B2"):
        sgn_character(3)


def test_exports():
    text = export_presentation(2)
    assert "h1 p1 h1 p1 h1 p1  # R2" in text
    assert to_gap(2).split() == GAP_C2.split()
    assert '"z1"' in to_gap(3)


def test_bad_n():
    with pytest.raises(ValueError):
        build_presentation(0)
