"""Classical real form constructors and static reference tables.

Each family is realized as a space of matrices cut out by sparse real-linear
conditions on the entries; the builder solves for the real span, splits it
into theta eigenspaces, and places a hand-picked maximal abelian a first in
the -1 part.  Form conventions: su(p,q) and so(p,q) use the diagonal
Hermitian form diag(I_p, -I_q); sp(2n,R) uses the antidiagonal symplectic
form; su*(2n) and sl(n,C) as a real algebra use J = [[0,-I],[I,0]]; so*(2n)
uses the pair diag(I_n, -I_n), [[0,I_n],[I_n,0]].  These choices make the
canonical a act with rational eigenvalues on the whole algebra.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg as la
from .algebra import RealFormStructure, theta_matrix
from .errors import InvalidParams, NotInTable, SizeBound, ConstructionFailure
from .scalars import Scalar, ZERO

_F0 = Fraction(0)
_F1 = Fraction(1)

FAMILIES = ("sl_R", "su_pq", "sp2n_R", "so_pq", "su_star", "sp_pq",
            "so_star", "sl_C_as_real")

_CLI_PREFIX = {
    "sl_r": "sl_R",
    "su": "su_pq",
    "sp_r": "sp2n_R",
    "so": "so_pq",
    "su_star": "su_star",
    "sp": "sp_pq",
    "so_star": "so_star",
    "sl_c": "sl_C_as_real",
}
_PREFIX_OF = {v: k for k, v in _CLI_PREFIX.items()}

_N_FAMILIES = {"sl_R", "sp2n_R", "su_star", "so_star", "sl_C_as_real"}
_PQ_FAMILIES = {"su_pq", "so_pq", "sp_pq"}

DEFAULT_MAX_SIZE = 12


@dataclass(frozen=True)
class FormId:
    family: str
    params: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParams("unknown family %r" % (self.family,))
        keys = tuple(k for k, _ in self.params)
        want = ("n",) if self.family in _N_FAMILIES else ("p", "q")
        if keys != want:
            raise InvalidParams("family %s needs params %s, got %s"
                                % (self.family, want, keys))
        vals = dict(self.params)
        if self.family == "sl_R" and vals["n"] < 2:
            raise InvalidParams("sl(n,R) needs n >= 2")
        if self.family == "sp2n_R" and vals["n"] < 1:
            raise InvalidParams("sp(2n,R) needs n >= 1")
        if self.family == "su_star" and vals["n"] < 2:
            raise InvalidParams("su*(2n) needs n >= 2")
        if self.family == "so_star" and vals["n"] < 2:
            raise InvalidParams("so*(2n) needs n >= 2")
        if self.family == "sl_C_as_real" and vals["n"] < 2:
            raise InvalidParams("sl(n,C) needs n >= 2")
        if self.family in _PQ_FAMILIES:
            if vals["p"] < 1 or vals["q"] < 1:
                raise InvalidParams("%s needs p, q >= 1" % self.family)
            if self.family == "so_pq" and vals["p"] + vals["q"] < 3:
                raise InvalidParams("so(p,q) needs p + q >= 3")

    @property
    def n(self) -> int:
        return dict(self.params)["n"]

    @property
    def p(self) -> int:
        return dict(self.params)["p"]

    @property
    def q(self) -> int:
        return dict(self.params)["q"]


def form_id(family: str, **kw: int) -> FormId:
    order = ("n",) if family in _N_FAMILIES else ("p", "q")
    try:
        params = tuple((k, int(kw[k])) for k in order)
    except KeyError as exc:
        raise InvalidParams("family %s needs params %s" % (family, order)) from exc
    return FormId(family, params)


def parse_form(text: str) -> FormId:
    """Parse CLI form syntax, e.g. ``su:p=1,q=2`` or ``sl_r:n=3``."""
    if ":" not in text:
        raise InvalidParams("form must look like fam:key=value[,...]: %r" % text)
    prefix, rest = text.split(":", 1)
    family = _CLI_PREFIX.get(prefix.strip())
    if family is None:
        raise InvalidParams("unknown family prefix %r (expected one of %s)"
                            % (prefix, sorted(_CLI_PREFIX)))
    kw: Dict[str, int] = {}
    for piece in rest.split(","):
        if "=" not in piece:
            raise InvalidParams("bad parameter %r in %r" % (piece, text))
        k, v = piece.split("=", 1)
        try:
            kw[k.strip()] = int(v)
        except ValueError as exc:
            raise InvalidParams("bad integer %r in %r" % (v, text)) from exc
    return form_id(family, **kw)


def form_cli_text(fid: FormId) -> str:
    return "%s:%s" % (_PREFIX_OF[fid.family],
                      ",".join("%s=%d" % kv for kv in fid.params))


def form_display(fid: FormId) -> str:
    f = fid.family
    if f == "sl_R":
        return "sl(%d,R)" % fid.n
    if f == "su_pq":
        return "su(%d,%d)" % (fid.p, fid.q)
    if f == "sp2n_R":
        return "sp(%d,R)" % (2 * fid.n)
    if f == "so_pq":
        return "so(%d,%d)" % (fid.p, fid.q)
    if f == "su_star":
        return "su*(%d)" % (2 * fid.n)
    if f == "sp_pq":
        return "sp(%d,%d)" % (fid.p, fid.q)
    if f == "so_star":
        return "so*(%d)" % (2 * fid.n)
    return "sl(%d,C)" % fid.n


def matrix_size(fid: FormId) -> int:
    f = fid.family
    if f in ("sl_R",):
        return fid.n
    if f in ("su_pq", "so_pq"):
        return fid.p + fid.q
    if f in ("sp2n_R", "su_star", "so_star", "sl_C_as_real"):
        return 2 * fid.n
    return 2 * (fid.p + fid.q)  # sp_pq


def reference_rank(fid: FormId) -> int:
    f = fid.family
    if f in ("su_pq", "so_pq", "sp_pq"):
        return min(fid.p, fid.q)
    if f in ("sl_R", "su_star", "sl_C_as_real"):
        return fid.n - 1
    if f == "sp2n_R":
        return fid.n
    return fid.n // 2  # so_star


def size_bound() -> int:
    raw = os.environ.get("HKR_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_SIZE
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_SIZE


# --- reference data (restricted types, split subalgebras, flags) -------------

def reference_restricted_type(fid: FormId) -> str:
    f = fid.family
    if f in ("sl_R", "su_star", "sl_C_as_real"):
        return "A%d" % (fid.n - 1)
    if f == "sp2n_R":
        return "C%d" % fid.n
    if f in ("su_pq", "sp_pq"):
        r = min(fid.p, fid.q)
        return "C%d" % r if fid.p == fid.q else "BC%d" % r
    if f == "so_pq":
        r = min(fid.p, fid.q)
        return "D%d" % r if fid.p == fid.q else "B%d" % r
    # so_star
    if fid.n % 2 == 0:
        return "C%d" % (fid.n // 2)
    return "BC%d" % (fid.n // 2)


def reference_reduced_type(fid: FormId) -> str:
    """Type of the reduced system, the root system of the split subalgebra."""
    t = reference_restricted_type(fid)
    return ("B" + t[2:]) if t.startswith("BC") else t


def reference_split_sub(fid: FormId) -> str:
    f = fid.family
    if f in ("sl_R", "sp2n_R"):
        return form_display(fid)
    if f in ("su_star", "sl_C_as_real"):
        return "sl(%d,R)" % fid.n
    if f in ("su_pq", "sp_pq"):
        r = min(fid.p, fid.q)
        if fid.p == fid.q:
            return "sp(%d,R)" % (2 * r)
        return "so(%d,%d)" % (r, r + 1)
    if f == "so_pq":
        r = min(fid.p, fid.q)
        if fid.p == fid.q:
            return "so(%d,%d)" % (r, r)
        return "so(%d,%d)" % (r, r + 1)
    # so_star
    if fid.n % 2 == 0:
        return "sp(%d,R)" % fid.n
    r = fid.n // 2
    return "so(%d,%d)" % (r, r + 1)


def reference_is_split(fid: FormId) -> bool:
    return reference_split_sub(fid) == form_display(fid)


def reference_quasi_split(fid: FormId) -> bool:
    if reference_is_split(fid):
        return True
    f = fid.family
    if f == "su_pq":
        return abs(fid.p - fid.q) <= 1
    if f == "so_pq":
        return abs(fid.p - fid.q) == 2
    if f == "sl_C_as_real":
        return True
    return False


def algebra_label_dim(label: str) -> int:
    """Dimension of a classical algebra given by its display label."""
    kind = label.split("(")[0]
    inside = label[label.index("(") + 1:label.index(")")]
    parts = inside.split(",")
    if kind == "sl" and parts[-1] == "R":
        n = int(parts[0])
        return n * n - 1
    if kind == "sl" and parts[-1] == "C":
        n = int(parts[0])
        return 2 * (n * n - 1)
    if kind == "sp" and parts[-1] == "R":
        m = int(parts[0])  # matrix size 2n written as sp(2n,R)
        n = m // 2
        return n * (2 * n + 1)
    if kind == "so" and len(parts) == 2 and parts[-1] not in ("R", "C"):
        n = int(parts[0]) + int(parts[1])
        return n * (n - 1) // 2
    if kind == "su" and len(parts) == 2:
        n = int(parts[0]) + int(parts[1])
        return n * n - 1
    exceptional = {"g2": 14, "f4": 52, "e6": 78, "e7": 133, "e8": 248}
    if kind in exceptional:
        return exceptional[kind]
    raise NotInTable("no dimension rule for label %r" % label)


@dataclass(frozen=True)
class TableOneEntry:
    form: str
    split_sub: str
    restricted_type: str
    quasi_split: bool


_EXCEPTIONAL_TABLE1 = {
    "e6(6)": ("e6(6)", "E6", True),
    "e6(2)": ("f4(4)", "F4", True),
    "e6(-14)": ("so(3,2)", "BC2", False),
    "e6(-26)": ("sl(3,R)", "A2", False),
    "e7(7)": ("e7(7)", "E7", True),
    "e7(-5)": ("f4(4)", "F4", False),
    "e7(-25)": ("sp(6,R)", "C3", False),
    "e8(8)": ("e8(8)", "E8", True),
    "e8(-24)": ("f4(4)", "F4", False),
    "f4(4)": ("f4(4)", "F4", True),
    "f4(-20)": ("sl(2,R)", "BC1", False),
    "g2(2)": ("g2(2)", "G2", True),
}


def lookup_table1(form) -> TableOneEntry:
    """Reference row for a FormId or an exceptional label string."""
    if isinstance(form, str):
        key = form.replace(" ", "")
        row = _EXCEPTIONAL_TABLE1.get(key)
        if row is None:
            try:
                form = parse_form(form)
            except InvalidParams:
                raise NotInTable("no table row for %r" % (key,))
        else:
            return TableOneEntry(key, *row)
    return TableOneEntry(form_display(form), reference_split_sub(form),
                         reference_restricted_type(form),
                         reference_quasi_split(form))


def exceptional_labels() -> List[str]:
    return list(_EXCEPTIONAL_TABLE1)


def standard_forms() -> List[FormId]:
    """The catalog entries exercised by the verification suite."""
    out = [form_id("sl_R", n=n) for n in (2, 3, 4)]
    out += [form_id("su_pq", p=p, q=q)
            for p, q in ((1, 2), (1, 3), (2, 3), (2, 2), (3, 3))]
    out += [form_id("sp2n_R", n=n) for n in (1, 2, 3)]
    out += [form_id("so_pq", p=p, q=q) for p, q in ((2, 3), (2, 4), (3, 3))]
    out += [form_id("su_star", n=2)]
    out += [form_id("sp_pq", p=1, q=2)]
    out += [form_id("so_star", n=n) for n in (3, 4)]
    out += [form_id("sl_C_as_real", n=2)]
    return out


# --- condition assembly --------------------------------------------------------

def _idx(n: int, r: int, c: int, part: int) -> int:
    return 2 * (r * n + c) + part


class _Conditions:
    """Sparse real-linear conditions on the 2n^2 real matrix coordinates."""

    def __init__(self, n: int):
        self.n = n
        self.rows: List[Dict[int, Fraction]] = []

    def add(self, pairs):
        """Add one condition; pairs of (coordinate, coefficient) are summed,
        so coincident coordinates (r = c cases) accumulate instead of clobber."""
        acc: Dict[int, Fraction] = {}
        items = pairs.items() if isinstance(pairs, dict) else pairs
        for k, v in items:
            acc[k] = acc.get(k, _F0) + v
        acc = {k: v for k, v in acc.items() if v}
        if acc:
            self.rows.append(acc)

    def re(self, r: int, c: int) -> int:
        return _idx(self.n, r, c, 0)

    def im(self, r: int, c: int) -> int:
        return _idx(self.n, r, c, 1)

    def all_real(self):
        for r in range(self.n):
            for c in range(self.n):
                self.add([(self.im(r, c), _F1)])

    def solve(self) -> List[la.Mat]:
        ncols = 2 * self.n * self.n
        dense = []
        for row in self.rows:
            v = [_F0] * ncols
            for k, val in row.items():
                v[k] += val
            dense.append(v)
        kern = la.kernel_right(dense, _F0, _F1)
        mats = []
        for vec in kern:
            m = [[ZERO] * self.n for _ in range(self.n)]
            for r in range(self.n):
                for c in range(self.n):
                    a = vec[_idx(self.n, r, c, 0)]
                    b = vec[_idx(self.n, r, c, 1)]
                    if a or b:
                        m[r][c] = Scalar.gaussian(a, b)
            mats.append(tuple(tuple(row) for row in m))
        return mats


def _e(n: int, r: int, c: int, val=1) -> la.Mat:
    return tuple(tuple(Scalar.of(val) if (i, j) == (r, c) else ZERO
                       for j in range(n)) for i in range(n))


def _msum(n: int, entries: Sequence[Tuple[int, int, int]]) -> la.Mat:
    m = [[ZERO] * n for _ in range(n)]
    for r, c, v in entries:
        m[r][c] = m[r][c] + Scalar.of(v)
    return tuple(tuple(row) for row in m)


def _conditions_for(fid: FormId) -> Tuple[_Conditions, List[la.Mat], int]:
    """Returns (conditions, a_basis_matrices, expected_dim)."""
    f = fid.family
    if f == "sl_R":
        n = fid.n
        cond = _Conditions(n)
        cond.all_real()
        cond.add([(cond.re(r, r), _F1) for r in range(n)])
        a_mats = [_msum(n, [(i, i, 1), (i + 1, i + 1, -1)]) for i in range(n - 1)]
        return cond, a_mats, n * n - 1

    if f == "su_pq":
        p, q = fid.p, fid.q
        n = p + q
        sign = [1] * p + [-1] * q
        cond = _Conditions(n)
        for r in range(n):
            for c in range(r, n):
                # X* J + J X = 0 entrywise
                cond.add([(cond.re(c, r), Fraction(sign[c])),
                          (cond.re(r, c), Fraction(sign[r]))])
                cond.add([(cond.im(c, r), Fraction(-sign[c])),
                          (cond.im(r, c), Fraction(sign[r]))])
        cond.add([(cond.im(r, r), _F1) for r in range(n)])
        a_mats = [_msum(n, [(i, n - 1 - i, 1), (n - 1 - i, i, 1)])
                  for i in range(min(p, q))]
        return cond, a_mats, n * n - 1

    if f == "sp2n_R":
        nn = fid.n
        n = 2 * nn
        omega = [1 if i < nn else -1 for i in range(n)]  # Omega[i][n-1-i]
        cond = _Conditions(n)
        cond.all_real()
        for r in range(n):
            for c in range(n):
                sc, sr = n - 1 - c, n - 1 - r
                cond.add([(cond.re(sc, r), Fraction(omega[sc])),
                          (cond.re(sr, c), Fraction(omega[r]))])
        a_mats = [_msum(n, [(i, i, 1), (n - 1 - i, n - 1 - i, -1)])
                  for i in range(nn)]
        return cond, a_mats, nn * (2 * nn + 1)

    if f == "so_pq":
        p, q = fid.p, fid.q
        n = p + q
        sign = [1] * p + [-1] * q
        cond = _Conditions(n)
        cond.all_real()
        for r in range(n):
            for c in range(r, n):
                cond.add([(cond.re(c, r), Fraction(sign[c])),
                          (cond.re(r, c), Fraction(sign[r]))])
        a_mats = [_msum(n, [(i, p + i, 1), (p + i, i, 1)])
                  for i in range(min(p, q))]
        return cond, a_mats, n * (n - 1) // 2

    if f == "su_star":
        nn = fid.n
        n = 2 * nn
        cond = _Conditions(n)
        for r in range(nn):
            for c in range(nn):
                # D = conj(A)
                cond.add([(cond.re(nn + r, nn + c), _F1), (cond.re(r, c), -_F1)])
                cond.add([(cond.im(nn + r, nn + c), _F1), (cond.im(r, c), _F1)])
                # C = -conj(B)
                cond.add([(cond.re(nn + r, c), _F1), (cond.re(r, nn + c), _F1)])
                cond.add([(cond.im(nn + r, c), _F1), (cond.im(r, nn + c), -_F1)])
        cond.add([(cond.re(r, r), _F1) for r in range(n)])
        cond.add([(cond.im(r, r), _F1) for r in range(n)])
        a_mats = [_msum(n, [(i, i, 1), (nn + i, nn + i, 1),
                            (i + 1, i + 1, -1), (nn + i + 1, nn + i + 1, -1)])
                  for i in range(nn - 1)]
        return cond, a_mats, 4 * nn * nn - 1

    if f == "sp_pq":
        p, q = fid.p, fid.q
        nn = p + q
        n = 2 * nn
        ksign = [1 if (r % nn) < p else -1 for r in range(n)]
        cond = _Conditions(n)
        # complex symplectic: Xt Omega + Omega X = 0, Omega = [[0,-I],[I,0]]
        omega = [-1 if r < nn else 1 for r in range(n)]

        def sig(r):
            return (r + nn) % n

        for r in range(n):
            for c in range(n):
                for part in (0, 1):
                    cond.add([(_idx(n, sig(c), r, part), Fraction(omega[sig(c)])),
                              (_idx(n, sig(r), c, part), Fraction(omega[r]))])
        # unitary for K
        for r in range(n):
            for c in range(r, n):
                cond.add([(cond.re(c, r), Fraction(ksign[c])),
                          (cond.re(r, c), Fraction(ksign[r]))])
                cond.add([(cond.im(c, r), Fraction(-ksign[c])),
                          (cond.im(r, c), Fraction(ksign[r]))])
        a_mats = []
        for i in range(min(p, q)):
            j = nn - 1 - i
            a_mats.append(_msum(n, [(i, j, 1), (j, i, 1),
                                    (nn + i, nn + j, -1), (nn + j, nn + i, -1)]))
        return cond, a_mats, nn * (2 * nn + 1)

    if f == "so_star":
        nn = fid.n
        n = 2 * nn
        cond = _Conditions(n)
        ssign = [1 if r < nn else -1 for r in range(n)]

        def sig(r):
            return (r + nn) % n

        # orthogonal for J: Xt J + J X = 0
        for r in range(n):
            for c in range(n):
                for part in (0, 1):
                    cond.add([(_idx(n, sig(c), r, part), _F1),
                              (_idx(n, sig(r), c, part), _F1)])
        # real form: -Ad(I_{n,n}) X* = X
        for r in range(n):
            for c in range(n):
                s = Fraction(ssign[r] * ssign[c])
                cond.add([(cond.re(r, c), _F1), (cond.re(c, r), s)])
                cond.add([(cond.im(r, c), _F1), (cond.im(c, r), -s)])
        a_mats = []
        for i in range(nn // 2):
            j = nn - 1 - i
            a_mats.append(_msum(n, [(i, nn + j, 1), (j, nn + i, -1),
                                    (nn + i, j, -1), (nn + j, i, 1)]))
        return cond, a_mats, nn * (2 * nn - 1)

    # sl_C_as_real
    nn = fid.n
    n = 2 * nn
    cond = _Conditions(n)
    cond.all_real()
    for r in range(nn):
        for c in range(nn):
            cond.add([(cond.re(nn + r, nn + c), _F1), (cond.re(r, c), -_F1)])
            cond.add([(cond.re(r, nn + c), _F1), (cond.re(nn + r, c), _F1)])
    cond.add([(cond.re(r, r), _F1) for r in range(nn)])
    cond.add([(cond.re(nn + r, r), _F1) for r in range(nn)])
    a_mats = [_msum(n, [(i, i, 1), (nn + i, nn + i, 1),
                        (i + 1, i + 1, -1), (nn + i + 1, nn + i + 1, -1)])
              for i in range(nn - 1)]
    return cond, a_mats, 2 * (nn * nn - 1)


class _GrowingSpan:
    """Incremental rational row echelon, for picking independent subsets."""

    def __init__(self):
        self.rows: List[List[Fraction]] = []
        self.pivots: List[int] = []

    def add(self, vec: Sequence[Fraction]) -> bool:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                for j in range(p, len(v)):
                    if row[j]:
                        v[j] -= f * row[j]
        piv = next((j for j, e in enumerate(v) if e), None)
        if piv is None:
            return False
        inv = v[piv]
        self.rows.append([e / inv for e in v])
        self.pivots.append(piv)
        return True

    def contains(self, vec: Sequence[Fraction]) -> bool:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                for j in range(p, len(v)):
                    if row[j]:
                        v[j] -= f * row[j]
        return not any(v)


def _flatten_real_list(m: la.Mat) -> List[Fraction]:
    out = []
    for row in m:
        for e in row:
            t = e.terms()
            a, b = t.get(1, (_F0, _F0))
            out.append(a)
            out.append(b)
    return out


def build(fid: FormId) -> RealFormStructure:
    """Construct the real form as a validated RealFormStructure."""
    n = matrix_size(fid)
    bound = size_bound()
    if n > bound:
        raise SizeBound("matrix size %d exceeds bound %d (set HKR_MAX_DIM to raise)"
                        % (n, bound))
    cond, a_mats, expect_dim = _conditions_for(fid)
    mats = cond.solve()
    if len(mats) != expect_dim:
        raise ConstructionFailure("%s: condition kernel has dim %d, expected %d"
                                  % (form_display(fid), len(mats), expect_dim))
    half = Fraction(1, 2)
    h_span, m_span = _GrowingSpan(), _GrowingSpan()
    h_mats: List[la.Mat] = []
    m_cands: List[la.Mat] = []
    for x in mats:
        t = theta_matrix(x)
        xh = la.mscale(half, la.madd(x, t))
        xm = la.mscale(half, la.msub(x, t))
        if not la.is_zero_mat(xh) and h_span.add(_flatten_real_list(xh)):
            h_mats.append(xh)
        if not la.is_zero_mat(xm):
            m_cands.append(xm)
    a_span = _GrowingSpan()
    order_span = _GrowingSpan()
    for i, am in enumerate(a_mats):
        flat = _flatten_real_list(am)
        if not a_span.add(flat) or not order_span.add(flat):
            raise ConstructionFailure("%s: a-basis element %d is dependent"
                                      % (form_display(fid), i))
    m_rest: List[la.Mat] = []
    for xm in m_cands:
        flat = _flatten_real_list(xm)
        if not m_span.add(flat):
            continue
        if order_span.add(flat):
            m_rest.append(xm)
    for i, am in enumerate(a_mats):
        if not m_span.contains(_flatten_real_list(am)):
            raise ConstructionFailure("%s: a-basis element %d is not in m"
                                      % (form_display(fid), i))
    dim_h = len(h_mats)
    if dim_h + len(a_mats) + len(m_rest) != expect_dim:
        raise ConstructionFailure("%s: theta split lost dimensions" % form_display(fid))
    basis = tuple(h_mats) + tuple(a_mats) + tuple(m_rest)
    return RealFormStructure(
        name=form_display(fid),
        family=fid.family,
        params=dict(fid.params),
        n=n,
        basis=basis,
        dim_h=dim_h,
        rank_a=len(a_mats),
    )


def so_star_lemma_check(n: int):
    """Zero-trace block check for so*(2n) principal triples, n in {3, 5}."""
    from .triples import so_star_lemma_report

    return so_star_lemma_report(n)
