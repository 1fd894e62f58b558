"""Exact linear algebra: characteristic polynomials, kernels, solves."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from hkr import linalg as la
from hkr.scalars import Scalar, ZERO, ONE, I


small_fracs = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def frac_matrix(n):
    return st.lists(
        st.lists(small_fracs, min_size=n, max_size=n),
        min_size=n, max_size=n)


def test_charpoly_ascending_convention():
    # det(tI - A) for A = diag(2, 3) is 6 - 5t + t^2, coefficients ascending
    cp = la.charpoly_frac([[Fraction(2), Fraction(0)],
                           [Fraction(0), Fraction(3)]])
    assert cp == [Fraction(6), Fraction(-5), Fraction(1)]


def test_charpoly_scalar_field():
    m = la.mat([[I, ZERO], [ZERO, -I]])
    assert la.charpoly(m) == (ONE, ZERO, ONE)  # t^2 + 1


def test_rational_roots_include_zero():
    # t^2 - t = t(t - 1): roots 0 and 1
    roots = la.rational_roots([Fraction(0), Fraction(-1), Fraction(1)])
    assert roots is not None
    assert sorted(roots) == [Fraction(0), Fraction(1)]


def test_rational_roots_none_when_not_split():
    # t^2 - 2 has no rational roots
    assert la.rational_roots([Fraction(-2), Fraction(0), Fraction(1)]) is None


def test_rational_roots_multiplicity():
    # (t - 1)^2 = 1 - 2t + t^2
    roots = la.rational_roots([Fraction(1), Fraction(-2), Fraction(1)])
    assert sorted(roots) == [Fraction(1), Fraction(1)]


@settings(max_examples=60, deadline=None)
@given(frac_matrix(3))
def test_charpoly_cayley_hamilton(rows):
    cp = la.charpoly_frac(rows)
    a = la.mat(rows)
    acc = la.zeros(3)
    power = la.eye(3)
    for coeff in cp:
        acc = la.madd(acc, la.mscale(coeff, power))
        power = la.mmul(power, a)
    assert la.is_zero_mat(acc)


@settings(max_examples=60, deadline=None)
@given(frac_matrix(3))
def test_charpoly_frac_agrees_with_scalar_path(rows):
    cp_frac = la.charpoly_frac(rows)
    cp_scalar = la.charpoly(la.mat(rows))
    assert [Scalar.of(c) for c in cp_frac] == list(cp_scalar)


@settings(max_examples=60, deadline=None)
@given(frac_matrix(3), st.lists(small_fracs, min_size=3, max_size=3))
def test_solve_right_solves(rows, x):
    b = [sum(r[j] * x[j] for j in range(3)) for r in rows]
    sol = la.solve_right(rows, b)
    assert sol is not None
    check = [sum(rows[i][j] * sol[j] for j in range(3)) for i in range(3)]
    assert check == b


def test_solve_right_detects_inconsistency():
    # image of [[1], [0]] is the first axis; (0, 1) lies off it
    m = [[Fraction(1)], [Fraction(0)]]
    assert la.solve_right(m, [Fraction(0), Fraction(1)]) is None


@settings(max_examples=60, deadline=None)
@given(frac_matrix(4))
def test_kernel_dimension_theorem(rows):
    ker = la.kernel_right(rows, Fraction(0), Fraction(1))
    assert len(ker) == 4 - la.rank(rows)
    for v in ker:
        image = [sum(rows[i][j] * v[j] for j in range(4)) for i in range(4)]
        assert all(x == 0 for x in image)


def test_mat_pow():
    j = la.mat([[0, 1], [-1, 0]])
    assert la.mat_eq(la.mat_pow(j, 4), la.eye(2))
    assert la.mat_eq(la.mat_pow(j, 2), la.mneg(la.eye(2)))


def test_rref_pivots_are_unit_columns():
    rows = [[Fraction(2), Fraction(4), Fraction(1)],
            [Fraction(1), Fraction(2), Fraction(0)]]
    red, pivots = la.rref(rows)
    assert pivots == [0, 2]
    for k, p in enumerate(pivots):
        col = [red[i][p] for i in range(len(red))]
        assert col[k] == 1
        assert all(col[i] == 0 for i in range(len(red)) if i != k)


def test_symmetric_pivot_signs():
    gram = [[Fraction(2), Fraction(0), Fraction(0)],
            [Fraction(0), Fraction(-3), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(0)]]
    pos, neg, null = la.symmetric_pivot_signs(gram)
    assert (pos, neg, null) == (1, 1, 1)
