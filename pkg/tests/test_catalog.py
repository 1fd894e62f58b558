"""Catalog identifiers, reference table rows, and structure construction."""

import pytest

from hkr import catalog
from hkr.errors import InvalidParams, NotInTable, SizeBound


def test_form_id_round_trips_through_cli_text():
    for fid in catalog.standard_forms():
        text = catalog.form_cli_text(fid)
        assert catalog.parse_form(text) == fid


def test_parse_form_examples():
    fid = catalog.parse_form("su:p=1,q=2")
    assert fid.family == "su_pq"
    assert fid.params == (("p", 1), ("q", 2))
    assert catalog.form_display(fid) == "su(1,2)"
    assert catalog.parse_form("sp_r:n=2") == catalog.form_id("sp2n_R", n=2)
    assert catalog.parse_form("sl_c:n=2") == catalog.form_id(
        "sl_C_as_real", n=2)


def test_parse_form_rejects_bad_input():
    for bad in ("nope:n=2", "su:p=1", "sl_r:n=1", "su:p=0,q=2", "sl_r"):
        with pytest.raises(InvalidParams):
            catalog.parse_form(bad)


def test_standard_forms_count():
    forms = catalog.standard_forms()
    assert len(forms) == 19
    assert len(set(forms)) == 19


def test_table1_lookup_classical():
    row = catalog.lookup_table1(catalog.form_id("su_pq", p=2, q=2))
    assert row.split_sub == "sp(4,R)"
    assert row.restricted_type == "C2"
    assert row.quasi_split is True
    row = catalog.lookup_table1("su:p=1,q=3")
    assert row.split_sub == "so(1,2)"
    assert row.quasi_split is False


def test_table1_lookup_exceptional():
    labels = catalog.exceptional_labels()
    assert len(labels) == 12
    assert labels[0] == "e6(6)"
    row = catalog.lookup_table1("f4(-20)")
    assert row.split_sub == "sl(2,R)"
    assert row.restricted_type == "BC1"
    assert row.quasi_split is False
    with pytest.raises(NotInTable):
        catalog.lookup_table1("e9(9)")


def test_algebra_label_dim():
    assert catalog.algebra_label_dim("sl(2,R)") == 3
    assert catalog.algebra_label_dim("sp(4,R)") == 10
    assert catalog.algebra_label_dim("so(2,3)") == 10
    assert catalog.algebra_label_dim("su(2,2)") == 15
    assert catalog.algebra_label_dim("g2(2)") == 14
    assert catalog.algebra_label_dim("f4(4)") == 52
    assert catalog.algebra_label_dim("e6(6)") == 78
    assert catalog.algebra_label_dim("e7(7)") == 133
    assert catalog.algebra_label_dim("e8(8)") == 248


def test_size_bound_env(monkeypatch):
    monkeypatch.delenv("HKR_MAX_DIM", raising=False)
    assert catalog.size_bound() == catalog.DEFAULT_MAX_SIZE
    monkeypatch.setenv("HKR_MAX_DIM", "6")
    assert catalog.size_bound() == 6
    with pytest.raises(SizeBound):
        catalog.build(catalog.form_id("su_pq", p=3, q=4))


def test_build_every_standard_form():
    for fid in catalog.standard_forms():
        S = catalog.build(fid)
        assert S.dim == S.dim_h + S.dim_m
        assert S.rank_a == catalog.reference_rank(fid)
        assert S.name == catalog.form_display(fid)


def test_build_dimension_table():
    expect = {
        "sl(2,R)": (3, 1, 2),
        "sl(3,R)": (8, 3, 5),
        "sl(4,R)": (15, 6, 9),
        "su(1,2)": (8, 4, 4),
        "su(1,3)": (15, 9, 6),
        "su(2,2)": (15, 7, 8),
        "su(2,3)": (24, 12, 12),
        "su(3,3)": (35, 17, 18),
        "sp(2,R)": (3, 1, 2),
        "sp(4,R)": (10, 4, 6),
        "sp(6,R)": (21, 9, 12),
        "so(2,3)": (10, 4, 6),
        "so(2,4)": (15, 7, 8),
        "so(3,3)": (15, 6, 9),
        "su*(4)": (15, 10, 5),
        "sp(1,2)": (21, 13, 8),
        "so*(6)": (15, 9, 6),
        "so*(8)": (28, 16, 12),
        "sl(2,C)": (6, 3, 3),
    }
    for fid in catalog.standard_forms():
        S = catalog.build(fid)
        assert (S.dim, S.dim_h, S.dim_m) == expect[S.name], S.name


def test_reference_split_flags():
    split = {"sl(2,R)", "sl(3,R)", "sl(4,R)", "sp(2,R)", "sp(4,R)",
             "sp(6,R)", "so(2,3)", "so(3,3)"}
    for fid in catalog.standard_forms():
        name = catalog.form_display(fid)
        assert catalog.reference_is_split(fid) == (name in split), name
        if catalog.reference_is_split(fid):
            assert catalog.reference_quasi_split(fid)


def test_reference_restricted_types():
    cases = {
        "sl(2,R)": "A1", "sl(3,R)": "A2", "sl(4,R)": "A3",
        "su(1,2)": "BC1", "su(1,3)": "BC1", "su(2,2)": "C2",
        "su(2,3)": "BC2", "su(3,3)": "C3",
        "sp(2,R)": "C1", "sp(4,R)": "C2", "sp(6,R)": "C3",
        "so(2,3)": "B2", "so(2,4)": "B2", "so(3,3)": "D3",
        "su*(4)": "A1", "sp(1,2)": "BC1",
        "so*(6)": "BC1", "so*(8)": "C2",
        "sl(2,C)": "A1",
    }
    for fid in catalog.standard_forms():
        assert catalog.reference_restricted_type(fid) == \
            cases[catalog.form_display(fid)]


def test_reference_reduced_types():
    # BC_r reduces to B_r; reduced systems elsewhere match the full ones
    for fid in catalog.standard_forms():
        full = catalog.reference_restricted_type(fid)
        reduced = catalog.reference_reduced_type(fid)
        if full.startswith("BC"):
            assert reduced == "B" + full[2:]
        else:
            assert reduced == full
