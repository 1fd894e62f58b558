"""Restricted root systems, diagram classification, Weyl-group oracles."""

from fractions import Fraction

import pytest

from hkr import roots as rt
from hkr.catalog import (build, form_id, standard_forms, form_display,
                         reference_restricted_type, reference_reduced_type,
                         reference_rank)


def data_for(family, **kw):
    return rt.restricted_roots(build(form_id(family, **kw)))


def test_su12_is_bc1_with_multiplicities():
    data = data_for("su_pq", p=1, q=2)
    assert data.rank == 1
    roots = data.roots()
    assert len(roots) == 4  # +-lam, +-2lam
    lam = min(r for r in roots if rt.is_positive(r))
    two_lam = tuple(2 * v for v in lam)
    assert two_lam in data.root_spaces
    assert data.multiplicity(lam) == 2
    assert data.multiplicity(two_lam) == 1
    assert rt.is_nonreduced(data)
    assert rt.classify_type(data) == ("BC1", "A1")


def test_so33_roots_all_multiplicity_one():
    data = data_for("so_pq", p=3, q=3)
    assert len(data.roots()) == 12
    assert all(data.multiplicity(r) == 1 for r in data.roots())
    assert not rt.is_nonreduced(data)
    lam, red = rt.classify_type(data)
    assert rt.type_equivalent(lam, "D3")
    assert rt.type_equivalent(lam, "A3")


def test_root_spaces_exhaust_dimension():
    for family, kw in ((("su_pq"), dict(p=2, q=2)),
                       (("sp_pq"), dict(p=1, q=2)),
                       (("so_star"), dict(n=4))):
        S = build(form_id(family, **kw))
        data = rt.restricted_roots(S)
        total = sum(data.multiplicity(r) for r in data.roots())
        assert total + len(data.centralizer) == S.dim


def test_classification_matches_reference_for_all_forms():
    for fid in standard_forms():
        data = rt.restricted_roots(build(fid))
        lam, red = rt.classify_type(data)
        assert rt.type_equivalent(lam, reference_restricted_type(fid)), \
            form_display(fid)
        assert rt.type_equivalent(red, reference_reduced_type(fid)), \
            form_display(fid)
        assert data.rank == reference_rank(fid)


def test_simple_system_size_equals_rank():
    for family, kw in ((("sl_R"), dict(n=4)), (("su_pq"), dict(p=2, q=3))):
        data = data_for(family, **kw)
        simples = rt.simple_system(data)
        assert len(simples) == data.rank
        # every positive root is a nonnegative integer combination check is
        # heavy; sanity: simples are positive and pairwise non-proportional
        assert all(rt.is_positive(s) for s in simples)


def test_reduced_system_drops_doubled_roots():
    data = data_for("su_pq", p=1, q=3)
    reduced = rt.reduced_system(data)
    assert len(reduced) == 2  # just +-lam for BC1
    for lam in reduced:
        assert tuple(v / 2 for v in lam) not in data.root_spaces


def test_type_equivalence_relations():
    assert rt.type_equivalent("B2", "C2")
    assert rt.type_equivalent("A3", "D3")
    assert rt.type_equivalent("A1", "C1")
    assert rt.type_equivalent("D2", "A1xA1")
    assert not rt.type_equivalent("B3", "C3")
    assert not rt.type_equivalent("A2", "B2")


def test_invariant_degrees_tables():
    assert rt.invariant_degrees("A1") == [2]
    assert rt.invariant_degrees("A2") == [2, 3]
    assert rt.invariant_degrees("A3") == [2, 3, 4]
    assert rt.invariant_degrees("B2") == [2, 4]
    assert rt.invariant_degrees("C3") == [2, 4, 6]
    assert rt.invariant_degrees("BC2") == [2, 4]
    assert rt.invariant_degrees("D4") == [2, 4, 4, 6]
    assert rt.invariant_degrees("G2") == [2, 6]
    assert rt.invariant_degrees("F4") == [2, 6, 8, 12]


def test_weyl_group_b3_order_48():
    simples, pair = rt.abstract_simple_system("B3")
    w = rt.weyl_group(simples, pair)
    assert len(w) == 48
    assert rt.weyl_order_reference("B3") == 48


def test_weyl_orders():
    assert rt.weyl_order_reference("A2") == 6
    assert rt.weyl_order_reference("C4") == 384
    assert rt.weyl_order_reference("D4") == 192
    assert rt.weyl_order_reference("G2") == 12
    assert rt.weyl_order_reference("F4") == 1152


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "A3", "B3", "C3", "G2"])
def test_molien_degrees_match_invariant_degrees(label):
    simples, pair = rt.abstract_simple_system(label)
    w = rt.weyl_group(simples, pair)
    assert len(w) == rt.weyl_order_reference(label)
    rank = len(simples)
    assert rt.molien_degrees(w, rank) == rt.invariant_degrees(label)


def test_cartan_matrix_b2():
    simples, pair = rt.abstract_simple_system("B2")
    cart = rt.cartan_matrix(simples, pair)
    assert cart[0][0] == 2 and cart[1][1] == 2
    assert {cart[0][1], cart[1][0]} == {Fraction(-1), Fraction(-2)}


def test_full_root_classification_counts():
    # sl(2,C): complexification is two sl2 factors swapped by conjugation,
    # so all four roots are complex
    S = build(form_id("sl_C_as_real", n=2))
    fc = rt.full_root_classification(S)
    assert fc.dim_cartan == 2
    assert fc.n_roots == 4
    assert fc.n_complex == 4
    assert fc.n_real == fc.n_imaginary == 0
    # split form: every root is real, t = 0
    S = build(form_id("sl_R", n=3))
    fc = rt.full_root_classification(S)
    assert fc.t_basis == []
    assert fc.n_real == fc.n_roots == 6
    assert fc.n_imaginary == fc.n_complex == 0


def test_restrict_operator_diagonal_blocks():
    S = build(form_id("sl_R", n=2))
    data = rt.restricted_roots(S)
    lam = max(data.roots())
    vecs = data.root_spaces[lam]
    # ad(a) acts on its own root space by the root value
    ai = next(iter(S.a_indices))
    admat = S.ad_frac(ai)
    block = rt.restrict_operator(admat, vecs, Fraction(0), Fraction(1))
    assert block == [[data.value_on(lam, tuple(
        Fraction(1) if k == 0 else Fraction(0)
        for k in range(S.rank_a)))]]
