"""Exact dense linear algebra over Fraction or Scalar entries.

Everything here is field-generic: entries only need +, -, *, /, unary -, and
truthiness (zero test).  Matrices are tuples of tuples; vectors are tuples.
Row reduction keeps full reduced echelon form so membership and coordinates
come out of the same machinery.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .scalars import Scalar, ZERO, ONE

Mat = Tuple[Tuple[Scalar, ...], ...]


# --- matrix construction and arithmetic -------------------------------------

def mat(rows: Sequence[Sequence]) -> Mat:
    return tuple(tuple(Scalar.of(e) if not isinstance(e, Scalar) else e for e in row)
                 for row in rows)


def zeros(n: int, m: Optional[int] = None) -> Mat:
    m = n if m is None else m
    return tuple((ZERO,) * m for _ in range(n))


def eye(n: int) -> Mat:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def madd(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def msub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mneg(a: Mat) -> Mat:
    return tuple(tuple(-x for x in row) for row in a)


def mscale(c, a: Mat) -> Mat:
    c = Scalar.of(c) if not isinstance(c, Scalar) else c
    return tuple(tuple(c * x for x in row) for row in a)


def mmul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def commutator(a: Mat, b: Mat) -> Mat:
    return msub(mmul(a, b), mmul(b, a))


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def conj_transpose(a: Mat) -> Mat:
    return tuple(tuple(x.conj() for x in col) for col in zip(*a))


def trace(a: Mat) -> Scalar:
    t = ZERO
    for i in range(len(a)):
        t = t + a[i][i]
    return t


def is_zero_mat(a: Mat) -> bool:
    return all(not x for row in a for x in row)


def mat_eq(a: Mat, b: Mat) -> bool:
    return is_zero_mat(msub(a, b))


def flatten(a: Mat) -> Tuple[Scalar, ...]:
    return tuple(x for row in a for x in row)


def unflatten(v: Sequence[Scalar], n: int, m: int) -> Mat:
    return tuple(tuple(v[i * m + j] for j in range(m)) for i in range(n))


def mat_pow(a: Mat, k: int) -> Mat:
    out = eye(len(a))
    for _ in range(k):
        out = mmul(out, a)
    return out


# --- generic row reduction ----------------------------------------------------

def rref(rows: Sequence[Sequence]) -> Tuple[List[list], List[int]]:
    """Reduced row echelon form of the row list; returns (rows, pivot columns).

    Zero rows are dropped.  Works over any exact field (Fraction or Scalar).
    """
    work = [list(r) for r in rows]
    pivots: List[int] = []
    out: List[list] = []
    ncols = len(work[0]) if work else 0
    col = 0
    while work and col < ncols:
        pick = None
        for idx, r in enumerate(work):
            if r[col]:
                pick = idx
                break
        if pick is None:
            col += 1
            continue
        row = work.pop(pick)
        inv = row[col]
        row = [e / inv for e in row]
        for r in work:
            if r[col]:
                f = r[col]
                for j in range(col, ncols):
                    if row[j]:
                        r[j] = r[j] - f * row[j]
        for r in out:
            if r[col]:
                f = r[col]
                for j in range(col, ncols):
                    if row[j]:
                        r[j] = r[j] - f * row[j]
        out.append(row)
        pivots.append(col)
        col += 1
        work = [r for r in work if any(r)]
    return out, pivots


def rref_with_transform(rows: Sequence[Sequence], zero, one):
    """RREF plus the transform T with out[i] = sum_j T[i][j] * rows[j].

    Returns (out_rows, pivots, T).  `zero`/`one` are the field constants.
    """
    n = len(rows)
    work = [list(r) + [one if j == i else zero for j in range(n)]
            for i, r in enumerate(rows)]
    ncols = len(rows[0]) if rows else 0
    reduced, pivots = rref(work) if work else ([], [])
    # pivots beyond ncols would mean a zero data-row; drop those rows
    out, trans, piv = [], [], []
    for row, p in zip(reduced, pivots):
        if p < ncols:
            out.append(row[:ncols])
            trans.append(row[ncols:])
            piv.append(p)
    return out, piv, trans


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def kernel_right(m_rows: Sequence[Sequence], zero, one) -> List[list]:
    """Basis of {x : M x = 0} for M given as rows (map on column vectors)."""
    if not m_rows:
        return []
    ncols = len(m_rows[0])
    red, pivots = rref(m_rows)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve_right(m_rows: Sequence[Sequence], b: Sequence) -> Optional[list]:
    """One solution x of M x = b, or None if inconsistent."""
    if not m_rows:
        return None
    ncols = len(m_rows[0])
    aug = [list(r) + [bv] for r, bv in zip(m_rows, b)]
    red, pivots = rref(aug)
    x = [b[0] * 0 for _ in range(ncols)]  # field zero of the right type
    for row, p in zip(red, pivots):
        if p == ncols:
            return None  # pivot in the augmented column: inconsistent
        x[p] = row[ncols]
    return x


# --- characteristic polynomial -------------------------------------------------

def charpoly(a: Mat) -> Tuple[Scalar, ...]:
    """Coefficients (c_0, ..., c_n) of det(tI - A) = sum c_k t^k, exact.

    Faddeev-LeVerrier; division only by integers, so it stays in the field.
    """
    n = len(a)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m_cur = zeros(n)
    c_prev = ONE
    for k in range(1, n + 1):
        m_cur = mmul(a, madd(m_cur, mscale(c_prev, eye(n))))
        c_prev = -(trace(m_cur) / k)
        coeffs[n - k] = c_prev
    return tuple(coeffs)


def charpoly_frac(a: Sequence[Sequence[Fraction]]) -> List[Fraction]:
    """Faddeev-LeVerrier over plain Fractions (fast path for rational matrices)."""
    n = len(a)
    zero = Fraction(0)
    coeffs = [zero] * (n + 1)
    coeffs[n] = Fraction(1)
    m_cur = [[zero] * n for _ in range(n)]
    c_prev = Fraction(1)
    for k in range(1, n + 1):
        for i in range(n):
            m_cur[i][i] += c_prev
        nxt = [[sum(a[i][l] * m_cur[l][j] for l in range(n) if a[i][l]) or zero
                for j in range(n)] for i in range(n)]
        m_cur = nxt
        c_prev = -sum(m_cur[i][i] for i in range(n)) / k
        coeffs[n - k] = c_prev
    return coeffs


# --- rational spectra -----------------------------------------------------------

def _divisors(n: int) -> List[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def rational_roots(poly: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """All roots with multiplicity if the polynomial splits over Q, else None.

    `poly` lists coefficients c_0..c_n of sum c_k t^k.
    """
    from math import gcd

    coeffs = [Fraction(c) for c in poly]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial")
    roots: List[Fraction] = []
    while len(coeffs) > 1 and not coeffs[0]:
        roots.append(Fraction(0))
        coeffs.pop(0)
    while len(coeffs) > 1:
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        found = None
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                if gcd(p, q) != 1:
                    continue
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    acc = Fraction(0)
                    for c in reversed(ints):
                        acc = acc * cand + c
                    if not acc:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return None
        roots.append(found)
        # synthetic division of the Fraction coefficients by (t - found)
        quot = [Fraction(0)] * (len(coeffs) - 1)
        carry = coeffs[-1]
        for k in range(len(coeffs) - 2, -1, -1):
            quot[k] = carry
            carry = coeffs[k] + carry * found
        if carry:
            raise ArithmeticError("root division failed")
        coeffs = quot
    return roots


# --- symmetric signature ------------------------------------------------------

def symmetric_pivot_signs(gram: Sequence[Sequence[Fraction]]) -> Tuple[int, int, int]:
    """(n_pos, n_neg, n_zero) of a symmetric rational matrix by congruence pivoting."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    active = list(range(n))
    pos = neg = 0
    while active:
        pivot = next((i for i in active if a[i][i]), None)
        if pivot is None:
            pair = None
            for i in active:
                for j in active:
                    if i != j and a[i][j]:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                return pos, neg, len(active)  # zero block
            # hyperbolic pair: contributes one positive and one negative
            i, j = pair
            c = a[i][j]
            for k in active:
                if k in (i, j):
                    continue
                # clear row/column k against the pair by congruence
                fi = a[k][j] / c
                fj = a[k][i] / c
                for l in active:
                    a[k][l] -= fi * a[i][l] + fj * a[j][l]
                for l in active:
                    a[l][k] = a[k][l]
            pos += 1
            neg += 1
            active = [k for k in active if k not in (i, j)]
            continue
        piv = a[pivot][pivot]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for k in active:
            if k == pivot or not a[k][pivot]:
                continue
            f = a[k][pivot] / piv
            for l in active:
                a[k][l] -= f * a[pivot][l]
        for k in active:
            a[pivot][k] = Fraction(0)
            a[k][pivot] = Fraction(0)
        active = [k for k in active if k != pivot]
    return pos, neg, 0


# --- dense polynomial helpers (rational power series) ---------------------------

def poly_mul_trunc(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> List[Fraction]:
    out = [Fraction(0)] * order
    for i, x in enumerate(a):
        if i >= order or not x:
            continue
        for j, y in enumerate(b):
            if i + j >= order:
                break
            if y:
                out[i + j] += x * y
    return out


def poly_inv_trunc(a: Sequence[Fraction], order: int) -> List[Fraction]:
    """Power series inverse of a with a[0] != 0, to the given order."""
    if not a or a[0] == 0:
        raise ZeroDivisionError("series has no inverse")
    inv0 = 1 / a[0]
    out = [Fraction(0)] * order
    out[0] = inv0
    for k in range(1, order):
        acc = Fraction(0)
        for j in range(1, min(k, len(a) - 1) + 1):
            if a[j]:
                acc += a[j] * out[k - j]
        out[k] = -inv0 * acc
    return out
