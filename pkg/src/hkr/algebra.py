"""Real form structures: Cartan involution, invariant form, exact brackets.

A RealFormStructure holds a real matrix Lie algebra g in gl(n, C) through a
theta-adapted basis: the compact part h first, then the chosen maximal
abelian subspace a, then the rest of the -1 eigenspace m.  The Cartan
involution is always theta(X) = -conjugate_transpose(X) and the invariant
form is B(X, Y) = Re tr(XY); B must come out negative definite on h and
positive definite on m, and both facts are checked at construction, not
assumed.

Elements live in two coordinate systems: as n x n matrices over Scalar, and
as coordinate vectors in the basis.  Real elements of g have Fraction
coordinates; elements of the complexification g^C (the C-span of the same
basis) have Scalar coordinates.  Bracket, form, and involution computations
in coordinates use rational structure data, so they stay exact and cheap
even when the coordinates themselves carry radicals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg as la
from .errors import ConstructionFailure, NotInAlgebra, NotInvariant
from .linalg import Mat
from .scalars import Scalar, ZERO, ONE

_F0 = Fraction(0)
_F1 = Fraction(1)


def bracket(x: Mat, y: Mat) -> Mat:
    """Matrix commutator [x, y] = xy - yx."""
    return la.commutator(x, y)


def theta_matrix(x: Mat) -> Mat:
    """The Cartan involution theta(X) = -X^* on matrices."""
    return la.mneg(la.conj_transpose(x))


def _sparse_entries(x: Mat) -> Dict[Tuple[int, int], Scalar]:
    return {(i, j): e for i, row in enumerate(x) for j, e in enumerate(row) if e}


def _sparse_bracket(x: Dict[Tuple[int, int], Scalar],
                    y: Dict[Tuple[int, int], Scalar]) -> Dict[Tuple[int, int], Scalar]:
    acc: Dict[Tuple[int, int], Scalar] = {}
    yrows: Dict[int, List[Tuple[int, Scalar]]] = {}
    for (r, c), v in y.items():
        yrows.setdefault(r, []).append((c, v))
    for (r, k), a in x.items():
        for c, b in yrows.get(k, ()):
            key = (r, c)
            cur = acc.get(key)
            acc[key] = a * b if cur is None else cur + a * b
    xrows: Dict[int, List[Tuple[int, Scalar]]] = {}
    for (r, c), v in x.items():
        xrows.setdefault(r, []).append((c, v))
    for (r, k), a in y.items():
        for c, b in xrows.get(k, ()):
            key = (r, c)
            cur = acc.get(key)
            acc[key] = -(a * b) if cur is None else cur - a * b
    return {k: v for k, v in acc.items() if v}


def _sparse_trace_product(x: Dict[Tuple[int, int], Scalar],
                          y: Dict[Tuple[int, int], Scalar]) -> Scalar:
    acc = ZERO
    for (r, c), v in x.items():
        w = y.get((c, r))
        if w is not None:
            acc = acc + v * w
    return acc


def invariant_form(x: Mat, y: Mat) -> Fraction:
    """B(X, Y) = Re tr(XY); rational for matrices over Q(i)."""
    t = la.trace(la.mmul(x, y))
    terms = t.terms()
    for r in terms:
        if r != 1:
            raise ConstructionFailure("trace form left Q(i): %s" % t)
    return terms.get(1, (_F0, _F0))[0]


def _flatten_real(x: Mat) -> List[Fraction]:
    """Flatten a Q(i)-entry matrix to interleaved (re, im) rationals."""
    out: List[Fraction] = []
    for row in x:
        for e in row:
            terms = e.terms()
            for r in terms:
                if r != 1:
                    raise NotInAlgebra("matrix entry outside Q(i): %s" % e)
            a, b = terms.get(1, (_F0, _F0))
            out.append(a)
            out.append(b)
    return out


class Subspace:
    """Row-span subspace over an exact field, kept in reduced echelon form."""

    __slots__ = ("rows", "pivots")

    def __init__(self, vectors: Sequence[Sequence]):
        self.rows, self.pivots = la.rref(vectors)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence) -> list:
        """Residual of vec after reduction against the subspace."""
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(p, len(v)):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def contains_all(self, vecs: Sequence[Sequence]) -> bool:
        return all(self.contains(v) for v in vecs)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        if not self.rows or not other.rows:
            return Subspace([])
        reduced = [other.reduce(r) for r in self.rows]
        zero = self.rows[0][0] * 0
        one = ONE if isinstance(zero, Scalar) else _F1
        combos = la.kernel_right([list(col) for col in zip(*reduced)], zero, one)
        vecs = []
        width = len(self.rows[0])
        for c in combos:
            v = [zero] * width
            for ci, row in zip(c, self.rows):
                if ci:
                    for j, e in enumerate(row):
                        if e:
                            v[j] = v[j] + ci * e
            vecs.append(v)
        return Subspace(vecs)


def express_in(vectors: Sequence[Sequence], target: Sequence,
               zero, one) -> Optional[list]:
    """Coefficients over `vectors` expressing `target`, or None.

    The vectors must be linearly independent.
    """
    red, piv, trans = la.rref_with_transform([list(v) for v in vectors], zero, one)
    if len(red) != len(vectors):
        raise ConstructionFailure("express_in: dependent vector list")
    v = list(target)
    coefs = [zero] * len(vectors)
    for idx, (row, p) in enumerate(zip(red, piv)):
        c = v[p]
        if c:
            for j in range(p, len(v)):
                if row[j]:
                    v[j] = v[j] - c * row[j]
            for t in range(len(vectors)):
                if trans[idx][t]:
                    coefs[t] = coefs[t] + c * trans[idx][t]
    if any(v):
        return None
    return coefs


@dataclass
class RealFormStructure:
    """A classical real form in a theta-adapted exact basis."""

    name: str
    family: str
    params: Dict[str, int]
    n: int
    basis: Tuple[Mat, ...]
    dim_h: int
    rank_a: int

    dim: int = field(init=False)
    dim_m: int = field(init=False)
    gram: Tuple[Tuple[Fraction, ...], ...] = field(init=False, repr=False)
    theta_signs: Tuple[int, ...] = field(init=False, repr=False)
    struct: List[List[Tuple[Fraction, ...]]] = field(init=False, repr=False)

    def __post_init__(self):
        d = len(self.basis)
        self.dim = d
        self.dim_m = d - self.dim_h
        if not (0 < self.rank_a <= self.dim_m):
            raise ConstructionFailure("%s: rank %d incompatible with dim m %d"
                                      % (self.name, self.rank_a, self.dim_m))
        self._scalar_coordizer = None
        self._ad_frac_cache: Dict[int, List[List[Fraction]]] = {}
        self._build_real_coordizer()
        self._check_adapted()
        self._build_struct()
        self._gram_and_signs()
        self._check_a()

    # --- basis bookkeeping ----------------------------------------------

    @property
    def h_indices(self) -> range:
        return range(0, self.dim_h)

    @property
    def a_indices(self) -> range:
        return range(self.dim_h, self.dim_h + self.rank_a)

    @property
    def m_indices(self) -> range:
        return range(self.dim_h, self.dim)

    def a_basis(self) -> List[Mat]:
        return [self.basis[i] for i in self.a_indices]

    def unit_coords(self, i: int) -> Tuple[Fraction, ...]:
        return tuple(_F1 if j == i else _F0 for j in range(self.dim))

    # --- construction-time validation -------------------------------------

    def _check_adapted(self):
        for i, m in enumerate(self.basis):
            t = theta_matrix(m)
            want = m if i < self.dim_h else la.mneg(m)
            if not la.mat_eq(t, want):
                raise ConstructionFailure(
                    "%s: basis vector %d is not a theta eigenvector" % (self.name, i))

    def _build_real_coordizer(self):
        rows = [_flatten_real(m) for m in self.basis]
        red, piv, trans = la.rref_with_transform(rows, _F0, _F1)
        if len(red) != self.dim:
            raise ConstructionFailure("%s: basis is dependent over R" % self.name)
        self._rc_rows, self._rc_piv, self._rc_trans = red, piv, trans

    def _ensure_scalar_coordizer(self):
        if self._scalar_coordizer is None:
            rows = [list(la.flatten(m)) for m in self.basis]
            red, piv, trans = la.rref_with_transform(rows, ZERO, ONE)
            if len(red) != self.dim:
                raise ConstructionFailure(
                    "%s: basis is dependent over C" % self.name)
            self._scalar_coordizer = (red, piv, trans)
        return self._scalar_coordizer

    def _build_struct(self):
        d = self.dim
        sparse = [_sparse_entries(m) for m in self.basis]
        self._sparse_basis = sparse
        zero_row = tuple([_F0] * d)
        self.struct = [[zero_row] * d for _ in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                br = _sparse_bracket(sparse[i], sparse[j])
                dense = [[ZERO] * self.n for _ in range(self.n)]
                for (r, c), v in br.items():
                    dense[r][c] = v
                try:
                    cij = self.real_coords_of(tuple(tuple(row) for row in dense))
                except NotInAlgebra as exc:
                    raise ConstructionFailure(
                        "%s: bracket of basis %d, %d leaves the algebra" %
                        (self.name, i, j)) from exc
                self.struct[i][j] = cij
                self.struct[j][i] = tuple(-x for x in cij)

    def _gram_and_signs(self):
        d = self.dim
        g = [[_F0] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                t = _sparse_trace_product(self._sparse_basis[i], self._sparse_basis[j])
                terms = t.terms()
                for r in terms:
                    if r != 1:
                        raise ConstructionFailure("%s: trace form left Q(i)" % self.name)
                v = terms.get(1, (_F0, _F0))[0]
                g[i][j] = v
                g[j][i] = v
        self.gram = tuple(tuple(row) for row in g)
        self.theta_signs = tuple(1 if i < self.dim_h else -1 for i in range(d))
        hh = [[g[i][j] for j in self.h_indices] for i in self.h_indices]
        mm = [[g[i][j] for j in self.m_indices] for i in self.m_indices]
        hm = [[g[i][j] for j in self.m_indices] for i in self.h_indices]
        if any(any(row) for row in hm):
            raise ConstructionFailure("%s: B does not split h and m" % self.name)
        if hh:
            p, _, z = la.symmetric_pivot_signs(hh)
            if p or z:
                raise ConstructionFailure("%s: B not negative definite on h" % self.name)
        if mm:
            _, nn, z = la.symmetric_pivot_signs(mm)
            if nn or z:
                raise ConstructionFailure("%s: B not positive definite on m" % self.name)

    def _check_a(self):
        for i in self.a_indices:
            for j in self.a_indices:
                if any(self.struct[i][j]):
                    raise ConstructionFailure("%s: a is not abelian" % self.name)
        cm = self.centralizer_frac([self.unit_coords(i) for i in self.a_indices],
                                   within=self.m_indices)
        if len(cm) != self.rank_a:
            raise ConstructionFailure(
                "%s: a is not maximal abelian in m (centralizer of a in m has dim %d)"
                % (self.name, len(cm)))

    # --- coordinates ------------------------------------------------------

    def real_coords_of(self, x: Mat) -> Tuple[Fraction, ...]:
        """Coordinates of x in the basis; x must lie in the real span."""
        v = _flatten_real(x)
        cs = [_F0] * self.dim
        for idx, (row, p) in enumerate(zip(self._rc_rows, self._rc_piv)):
            c = v[p]
            if c:
                for j in range(p, len(v)):
                    if row[j]:
                        v[j] -= c * row[j]
                for k in range(self.dim):
                    if self._rc_trans[idx][k]:
                        cs[k] += c * self._rc_trans[idx][k]
        if any(v):
            raise NotInAlgebra("%s: matrix not in the real span" % self.name)
        return tuple(cs)

    def coords_of(self, x: Mat) -> Tuple[Scalar, ...]:
        """Coordinates of x in the complex span g^C of the basis."""
        red, piv, trans = self._ensure_scalar_coordizer()
        v = list(la.flatten(x))
        cs = [ZERO] * self.dim
        for idx, (row, p) in enumerate(zip(red, piv)):
            c = v[p]
            if c:
                for j in range(p, len(v)):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
                for k in range(self.dim):
                    if trans[idx][k]:
                        cs[k] = cs[k] + c * trans[idx][k]
        if any(v):
            raise NotInAlgebra("%s: matrix not in g^C" % self.name)
        return tuple(cs)

    def try_coords_of(self, x: Mat) -> Optional[Tuple[Scalar, ...]]:
        try:
            return self.coords_of(x)
        except NotInAlgebra:
            return None

    def matrix_of(self, coords: Sequence) -> Mat:
        out = [[ZERO] * self.n for _ in range(self.n)]
        for c, m in zip(coords, self.basis):
            if c:
                cs = c if isinstance(c, Scalar) else Scalar.of(c)
                for i in range(self.n):
                    row = m[i]
                    orow = out[i]
                    for j in range(self.n):
                        if row[j]:
                            orow[j] = orow[j] + cs * row[j]
        return tuple(tuple(row) for row in out)

    # --- operations in coordinates ------------------------------------------

    def bracket_coords(self, u: Sequence, v: Sequence) -> tuple:
        d = self.dim
        scalar = (any(isinstance(x, Scalar) for x in u)
                  or any(isinstance(x, Scalar) for x in v))
        out = [ZERO if scalar else _F0] * d
        for i in range(d):
            ui = u[i]
            if not ui:
                continue
            row = self.struct[i]
            for j in range(d):
                vj = v[j]
                if not vj:
                    continue
                c = row[j]
                f = ui * vj
                for k in range(d):
                    if c[k]:
                        out[k] = out[k] + f * c[k]
        return tuple(out)

    def ad_frac(self, i: int) -> List[List[Fraction]]:
        """Matrix of ad(basis[i]) on coordinates: row k, column j holds the
        coefficient of basis[k] in [basis[i], basis[j]]."""
        cached = self._ad_frac_cache.get(i)
        if cached is None:
            d = self.dim
            cached = [[self.struct[i][j][k] for j in range(d)] for k in range(d)]
            self._ad_frac_cache[i] = cached
        return cached

    def ad_matrix(self, u: Sequence) -> List[list]:
        """Matrix of ad(x) for x with coordinates u; entries follow u's field."""
        d = self.dim
        scalar = any(isinstance(x, Scalar) for x in u)
        zero = ZERO if scalar else _F0
        out = [[zero] * d for _ in range(d)]
        for i, ui in enumerate(u):
            if not ui:
                continue
            adi = self.ad_frac(i)
            for r in range(d):
                row = adi[r]
                orow = out[r]
                for c in range(d):
                    if row[c]:
                        orow[c] = orow[c] + ui * row[c]
        return out

    def apply_ad(self, ad: List[list], v: Sequence) -> list:
        d = self.dim
        scalar = (any(isinstance(x, Scalar) for x in v)
                  or any(isinstance(x, Scalar) for row in ad for x in row))
        out = [ZERO if scalar else _F0] * d
        for j, vj in enumerate(v):
            if vj:
                for r in range(d):
                    if ad[r][j]:
                        out[r] = out[r] + vj * ad[r][j]
        return out

    def theta_coords(self, u: Sequence) -> tuple:
        return tuple(x if s > 0 else -x for x, s in zip(u, self.theta_signs))

    def conj_coords(self, u: Sequence) -> tuple:
        """Complex conjugation of g^C with respect to the real form g."""
        return tuple(x.conj() if isinstance(x, Scalar) else x for x in u)

    def form_coords(self, u: Sequence, v: Sequence):
        acc = None
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.gram[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    term = ui * vj * row[j]
                    acc = term if acc is None else acc + term
        return _F0 if acc is None else acc

    # --- centralizers and generated subalgebras ------------------------------

    def centralizer_frac(self, elements: Sequence[Sequence[Fraction]],
                         within: Optional[Sequence[int]] = None
                         ) -> List[Tuple[Fraction, ...]]:
        """Basis of the rational centralizer of the given elements.

        `within` restricts to the span of those basis indices (a coordinate
        block such as m or h); full-length coordinate vectors come back.
        """
        idxs = list(within) if within is not None else list(range(self.dim))
        ads = [self.ad_matrix(e) for e in elements]
        cols = []
        for bi in idxs:
            col = []
            for ad in ads:
                col.extend(ad[r][bi] for r in range(self.dim))
            cols.append(col)
        rows = [list(r) for r in zip(*cols)] if cols else []
        combos = la.kernel_right(rows, _F0, _F1) if rows else []
        out = []
        for c in combos:
            v = [_F0] * self.dim
            for ci, bi in zip(c, idxs):
                v[bi] = ci
            out.append(tuple(v))
        return out

    def centralizer_in_span(self, elements: Sequence[Sequence],
                            space: Sequence[Sequence]) -> List[list]:
        """Basis of {v in span(space) : [e, v] = 0 for all e}, over Scalar."""
        ads = [self.ad_matrix(e) for e in elements]
        vecs = [list(v) for v in space]
        cols = []
        for b in vecs:
            col = []
            for ad in ads:
                col.extend(self.apply_ad(ad, b))
            cols.append(col)
        rows = [list(r) for r in zip(*cols)] if cols else []
        combos = la.kernel_right(rows, ZERO, ONE) if rows else []
        out = []
        for c in combos:
            v = [ZERO] * self.dim
            for ci, b in zip(c, vecs):
                if ci:
                    for j, bj in enumerate(b):
                        if bj:
                            v[j] = v[j] + ci * bj
            out.append(v)
        return out

    def generate_subalgebra(self, gens: Sequence[Sequence[Fraction]]) -> Subspace:
        """Smallest bracket-closed rational subspace containing the generators."""
        space = Subspace([list(g) for g in gens])
        frontier = [tuple(r) for r in space.rows]
        while frontier:
            new_vecs = []
            current = [tuple(r) for r in space.rows]
            for u in frontier:
                for v in current:
                    w = self.bracket_coords(u, v)
                    if any(w) and not space.contains(w):
                        space = Subspace(list(space.rows) + [list(w)])
                        new_vecs.append(w)
            frontier = new_vecs
        return space

    # --- block views -----------------------------------------------------

    def h_unit_coords(self) -> List[List[Scalar]]:
        return [[ONE if j == i else ZERO for j in range(self.dim)]
                for i in self.h_indices]

    def m_unit_coords(self) -> List[List[Scalar]]:
        return [[ONE if j == i else ZERO for j in range(self.dim)]
                for i in self.m_indices]

    def a_unit_coords(self) -> List[List[Scalar]]:
        return [[ONE if j == i else ZERO for j in range(self.dim)]
                for i in self.a_indices]

    def describe(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "family": self.family,
            "params": dict(self.params),
            "matrix_size": self.n,
            "dim": self.dim,
            "dim_h": self.dim_h,
            "dim_m": self.dim_m,
            "rank": self.rank_a,
        }


def ad_operator(structure: RealFormStructure, x_coords: Sequence,
                space: Sequence[Sequence]) -> List[list]:
    """Matrix of ad(x) restricted to span(space), in the `space` basis.

    Raises NotInvariant naming the offending vector if a bracket leaves the
    span.  The space vectors must be linearly independent.
    """
    vecs = [list(v) for v in space]
    scalar = (any(isinstance(e, Scalar) for v in vecs for e in v)
              or any(isinstance(e, Scalar) for e in x_coords))
    zero, one = (ZERO, ONE) if scalar else (_F0, _F1)
    red, piv, trans = la.rref_with_transform(vecs, zero, one)
    if len(red) != len(vecs):
        raise ConstructionFailure("ad_operator: space basis is dependent")
    ad = structure.ad_matrix(x_coords)
    k_dim = len(vecs)
    cols = []
    for k, b in enumerate(vecs):
        v = structure.apply_ad(ad, b)
        coefs = [zero] * k_dim
        for idx, (row, p) in enumerate(zip(red, piv)):
            c = v[p]
            if c:
                for j in range(p, structure.dim):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
                for t in range(k_dim):
                    if trans[idx][t]:
                        coefs[t] = coefs[t] + c * trans[idx][t]
        if any(v):
            raise NotInvariant(
                "ad image of space vector %d leaves the span" % k)
        cols.append(coefs)
    return [[cols[k][r] for k in range(k_dim)] for r in range(k_dim)]
