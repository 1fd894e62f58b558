"""Principal TDS, normal triples, split subalgebras, graded modules.

sl(2,R) is small enough to check against hand-computed matrices; the rest
of the forms are exercised through the construction's own exact relation
checks plus targeted structural assertions.
"""

from fractions import Fraction

import pytest

from hkr import roots as rt
from hkr import triples as tp
from hkr import linalg as la
from hkr.catalog import build, form_id
from hkr.errors import NoSolution
from hkr.scalars import Scalar, ZERO, ONE, I


_CACHE = {}


def chain(family, **kw):
    """build -> tds -> triple -> decomposition, cached per form."""
    key = (family, tuple(sorted(kw.items())))
    if key not in _CACHE:
        S = build(form_id(family, **kw))
        tds = tp.build_tds(S)
        triple = tp.normal_triple(tds)
        dec = tp.module_decomposition(S, triple)
        _CACHE[key] = (S, tds, triple, dec)
    return _CACHE[key]


# --- frozen sl(2,R) oracle ------------------------------------------------------

def test_sl2r_tds_frozen_values():
    S, tds, triple, dec = chain("sl_R", n=2)
    assert la.mat_eq(S.matrix_of(tds.w), la.mat([[1, 0], [0, -1]]))
    assert tds.b == [Fraction(-1)]
    assert tds.c == [Fraction(1)]
    assert tds.d == [ONE]
    assert la.mat_eq(S.matrix_of(tds.e_c), la.mat([[0, I], [0, 0]]))
    # f_c = theta(e_c) = -transpose for sl(2,R)
    assert la.mat_eq(S.matrix_of(tds.f_c), la.mat([[0, 0], [-I, 0]]))


def test_sl2r_normal_triple_frozen_values():
    S, tds, triple, dec = chain("sl_R", n=2)
    s = Scalar.sqrt(2) / 4
    e_mat = la.mat([[s, -s * I], [-s * I, -s]])
    assert la.mat_eq(S.matrix_of(triple.e), e_mat)
    f_mat = la.mat([[s, s * I], [s * I, -s]])
    assert la.mat_eq(S.matrix_of(triple.f), f_mat)
    # x = (e_c + f_c)/2 is i/2 times the rotation generator
    assert la.mat_eq(S.matrix_of(triple.x),
                     la.mat([[0, I / 2], [-I / 2, 0]]))


# --- exact relations across forms -------------------------------------------------

RELATION_FORMS = [
    ("sl_R", dict(n=2)), ("sl_R", dict(n=3)),
    ("su_pq", dict(p=1, q=2)), ("su_pq", dict(p=2, q=2)),
    ("sp2n_R", dict(n=2)), ("so_pq", dict(p=2, q=3)),
    ("su_star", dict(n=2)), ("so_star", dict(n=3)),
    ("sl_C_as_real", dict(n=2)),
]


@pytest.mark.parametrize("family,kw", RELATION_FORMS,
                         ids=lambda v: str(v))
def test_tds_relations(family, kw):
    S, tds, triple, dec = chain(family, **kw)
    w, e_c, f_c = tds.w, tds.e_c, tds.f_c
    two_e = tuple(Scalar.of(2) * v for v in e_c)
    assert tuple(S.bracket_coords(w, e_c)) == two_e
    assert tuple(S.bracket_coords(e_c, f_c)) == tuple(
        Scalar.of(v) for v in w)
    # f_c is the image of e_c under the Cartan involution
    assert tuple(S.theta_coords(e_c)) == f_c


@pytest.mark.parametrize("family,kw", RELATION_FORMS,
                         ids=lambda v: str(v))
def test_normal_triple_relations(family, kw):
    S, tds, triple, dec = chain(family, **kw)
    e, f, x = triple.e, triple.f, triple.x
    assert tuple(S.bracket_coords(x, e)) == e
    assert tuple(S.bracket_coords(x, f)) == tuple(-v for v in f)
    assert tuple(S.bracket_coords(e, f)) == x
    # theta fixes x and negates e, f
    assert tuple(S.theta_coords(x)) == x
    assert tuple(S.theta_coords(e)) == tuple(-v for v in e)
    # sqrt(2)(e + f) recovers the split regular element w
    w_s = tuple(Scalar.of(v) for v in tds.w)
    assert tuple(Scalar.sqrt(2) * (a + b) for a, b in zip(e, f)) == w_s


def test_tds_w_positive_coefficients():
    for family, kw in RELATION_FORMS:
        S, tds, triple, dec = chain(family, **kw)
        assert all(ci > 0 for ci in tds.c), S.name
        # -c_i/b_i is a positive rational with square root d_i
        for bi, ci, di in zip(tds.b, tds.c, tds.d):
            assert di * di == Scalar.of(Fraction(-ci, 1) / bi)


# --- split subalgebra gates -------------------------------------------------------

def test_split_sub_su12_is_so12():
    S, tds, triple, dec = chain("su_pq", p=1, q=2)
    sub = tp.maximal_split_subalgebra(S, tds)
    assert sub.dim == 3
    assert sub.table_label == "so(1,2)"
    assert rt.type_equivalent(sub.reduced_type, "A1")


def test_split_sub_su22_is_sp4r():
    S, tds, triple, dec = chain("su_pq", p=2, q=2)
    sub = tp.maximal_split_subalgebra(S, tds)
    assert sub.dim == 10
    assert sub.table_label == "sp(4,R)"
    assert rt.type_equivalent(sub.reduced_type, "C2")


def test_split_sub_of_split_form_is_everything():
    S, tds, triple, dec = chain("sl_R", n=3)
    sub = tp.maximal_split_subalgebra(S, tds)
    assert sub.dim == S.dim


def test_center_dims_vanish_on_catalog():
    for family, kw in RELATION_FORMS:
        S, tds, triple, dec = chain(family, **kw)
        assert tp.center_dims(S) == (0, 0, 0), S.name


# --- module decomposition ---------------------------------------------------------

def test_module_dimension_identity():
    for family, kw in RELATION_FORMS:
        S, tds, triple, dec = chain(family, **kw)
        assert sum(2 * bl.m - 1 for bl in dec.blocks) == S.dim, S.name
        assert len(dec.located("m")) == dec.a + dec.dim_z_m, S.name


def test_module_blocks_sl2c():
    # two degree-2 modules: one living in h^C, one in m^C
    S, tds, triple, dec = chain("sl_C_as_real", n=2)
    assert dec.m_values() == [2, 2]
    assert [bl.m for bl in dec.located("h")] == [2]
    assert [bl.m for bl in dec.located("m")] == [2]
    assert (dec.a, dec.b, dec.c) == (1, 1, 0)


def test_module_blocks_su22():
    S, tds, triple, dec = chain("su_pq", p=2, q=2)
    assert [bl.m for bl in dec.located("m")] == [2, 4]
    assert (dec.a, dec.b, dec.c) == (2, 1, 0)


def test_module_blocks_su_star4():
    S, tds, triple, dec = chain("su_star", n=2)
    assert [bl.m for bl in dec.located("m")] == [2]
    assert (dec.a, dec.b, dec.c) == (1, 6, 3)
    # c counts trivial h-blocks
    assert sum(1 for bl in dec.located("h") if bl.m == 1) == 3


def test_module_vectors_are_highest_weight():
    S, tds, triple, dec = chain("sp2n_R", n=2)
    for bl in dec.blocks:
        v = bl.vector
        assert not any(S.bracket_coords(triple.e, v))
        got = tuple(S.bracket_coords(triple.x, v))
        want = tuple(Scalar.of(bl.m - 1) * c for c in v)
        assert got == want


# --- quasi-split flag -------------------------------------------------------------

def test_quasi_split_flags():
    cases = {
        ("sl_R", (("n", 3),)): True,
        ("su_pq", (("p", 1), ("q", 2))): True,
        ("su_pq", (("p", 2), ("q", 2))): True,
        ("su_pq", (("p", 1), ("q", 3))): False,
        ("su_star", (("n", 2),)): False,
        ("so_star", (("n", 3),)): False,
        ("sl_C_as_real", (("n", 2),)): True,
    }
    for (family, params), want in cases.items():
        kw = dict(params)
        S, tds, triple, dec = chain(family, **kw)
        assert tp.is_quasi_split(S, triple) is want, S.name


# --- section ----------------------------------------------------------------------

def test_section_basis_degrees():
    S, tds, triple, dec = chain("su_pq", p=2, q=2)
    basis = tp.section_basis(S, triple, dec)
    assert basis.degrees == [2, 4]
    assert basis.e_list[0] == triple.e
    assert basis.central == []


def test_section_point_at_zero_is_f():
    S, tds, triple, dec = chain("sl_R", n=3)
    basis = tp.section_basis(S, triple, dec)
    pt = tp.section_point(basis, [0] * basis.rank)
    assert pt == triple.f
    assert tp.is_regular(S, pt)
    assert tp.section_point_regular(basis, [0] * basis.rank)


def test_section_points_regular_on_samples():
    S, tds, triple, dec = chain("so_pq", p=2, q=3)
    basis = tp.section_basis(S, triple, dec)
    for gamma in ([1, 0], [0, 1], [Fraction(1, 2), -3], [-2, Fraction(5, 4)]):
        assert tp.section_point_regular(basis, gamma)


def test_fiber_match_round_trip():
    S, tds, triple, dec = chain("sl_R", n=3)
    basis = tp.section_basis(S, triple, dec)
    gamma = [Scalar.of(Fraction(3, 2)), Scalar.of(-2)]
    pt = tp.section_point(basis, gamma)
    recovered = tp.section_fiber_match(S, basis, pt)
    assert recovered == gamma


def test_fiber_match_distinguishes_points():
    S, tds, triple, dec = chain("sp2n_R", n=2)
    basis = tp.section_basis(S, triple, dec)
    g1 = [Scalar.of(1), Scalar.of(2)]
    g2 = [Scalar.of(1), Scalar.of(-2)]
    p1 = la.charpoly(S.matrix_of(tp.section_point(basis, g1)))
    p2 = la.charpoly(S.matrix_of(tp.section_point(basis, g2)))
    assert tuple(p1) != tuple(p2)


def test_fiber_match_so33_unsupported():
    # the degree-3 invariant of so(3,3) is not a characteristic polynomial
    # coefficient, so the triangular solve has no slope there
    S, tds, triple, dec = chain("so_pq", p=3, q=3)
    basis = tp.section_basis(S, triple, dec)
    pt = tp.section_point(basis, [1, 1, 1])
    with pytest.raises(NoSolution):
        tp.section_fiber_match(S, basis, pt)


# --- invariance under exact conjugation ---------------------------------------------

@pytest.mark.parametrize("family,kw", [
    ("sl_R", dict(n=2)), ("su_pq", dict(p=1, q=2)), ("su_star", dict(n=2))],
    ids=lambda v: str(v))
def test_conjugation_preserves_charpoly_and_regularity(family, kw):
    S, tds, triple, dec = chain(family, **kw)
    basis = tp.section_basis(S, triple, dec)
    pt = tp.section_point(basis, [Fraction(1, 2)] * basis.rank)
    mat = S.matrix_of(pt)
    cp = la.charpoly(mat)
    for g, ginv in tp.invariance_conjugators(S, 4):
        assert la.mat_eq(la.mmul(g, ginv), la.eye(S.n))
        moved = tp.conjugate_coords(S, g, ginv, pt)
        assert la.charpoly(S.matrix_of(moved)) == cp
        assert tp.is_regular(S, moved)


# --- explicit low-rank so* matrices ---------------------------------------------

def test_so_star6_lemma_report():
    rep = tp.so_star_lemma_report(3)
    assert rep.ok()
    assert rep.w_matches_display
    # the displayed eigenvector violates the algebra conditions in its last
    # row; the corrected matrix lies in so*(6) and spans the same root line
    assert not rep.displayed_y_in_algebra
    assert rep.eigen_values == [(Fraction(1),)]
    assert rep.y_scalar == ONE


def test_so_star10_lemma_report():
    rep = tp.so_star_lemma_report(5)
    assert rep.ok()
    assert rep.displayed_y_in_algebra
    assert rep.eigen_values == [(Fraction(1),), (Fraction(1),)]
    assert rep.y_block_traces_zero and rep.x_block_traces_zero


def test_so_star_lemma_rejects_other_ranks():
    with pytest.raises(ValueError):
        tp.so_star_lemma_report(4)
