import shutil

import pytest

from cliffchar.chartab import CorruptTableError, table_from_csv, table_to_csv
from cliffchar.reference import (
    DATA_ENV,
    TABLE_IDS,
    compare_sparse,
    data_dir,
    load_table,
    match_tables,
    verify_embedded_c3,
)


def test_all_fixtures_load():
    for tid in TABLE_IDS:
        assert load_table(tid).payload


def test_fixture_contents():
    cls = load_table("c2_classes").payload
    assert len(cls) == 21
    assert (cls[15].size, cls[15].word) == (2304, "z1 p1 h2 h1")
    t = load_table("c3_chartab").payload
    assert [int(v) for v in t.values[1][:5]] == [7, 7, -2, 1, 3]
    assert t.degrees[:10] == [1, 7, 15, 21, 21, 27, 35, 35, 56, 63]
    assert load_table("order_table").payload[5] == 25410822678459187200
    c3 = load_table("c3_decomp")
    assert c3.payload[3][40] == 18 and c3.payload[3][43] == 1
    assert "alt=18" in c3.notes[(3, 43)]


@pytest.mark.parametrize("tid", ["s4_chartab", "c2_chartab", "c3_chartab"])
def test_csv_round_trip_is_exact(tid):
    t = load_table(tid).payload
    back = table_from_csv(table_to_csv(t), t.group_order)
    assert back.values == t.values
    assert back.class_sizes == t.class_sizes


def test_unknown_id():
    with pytest.raises(KeyError):
        load_table("c4_chartab")


def test_env_override(tmp_path, monkeypatch):
    for f in data_dir().glob("*.csv"):
        shutil.copy(f, tmp_path)
    text = (tmp_path / "c2_chartab.csv").read_text().splitlines()
    (tmp_path / "c2_chartab.csv").write_text("\n".join(text[:-1]) + "\n")
    monkeypatch.setenv(DATA_ENV, str(tmp_path))
    assert data_dir() == tmp_path
    with pytest.raises(CorruptTableError):
        load_table("c2_chartab")


def test_embedded_c3_report():
    rep = verify_embedded_c3()
    assert rep.passed, rep.text()
    assert any("63 elements" in c.name for c in rep.checks)


def test_matching(c1, c2):
    assert c1.match and c2.match
    unanchored = match_tables(c2.table, c2.reference)
    assert unanchored and unanchored.cols == c2.anchors
    for i, r in enumerate(c2.match.rows):
        assert [c2.table.values[r][c] for c in c2.match.cols] == c2.reference.values[i]


def test_perturbed_cell_is_named(c2):
    emb = c2.reference.permuted(range(21), range(21))
    emb.values[6][9] = emb.values[6][9] + 1
    res = match_tables(c2.table, emb, c2.anchors)
    assert not res
    assert "embedded chi7, class column 10" in res.mismatch


def test_shape_mismatch(c1, c2):
    assert not match_tables(c1.table, c2.reference)


def test_compare_sparse():
    rep = compare_sparse({1: 2, 3: 1}, {1: 2, 3: 18}, {3: "alt=1"})
    assert not rep.passed
    assert "alternative reading 1 matches" in rep.failures[0].detail
