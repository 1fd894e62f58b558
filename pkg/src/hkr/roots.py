"""Restricted root systems, Weyl groups, and Cartan-type classification.

The restricted roots of (g, a) are the nonzero joint rational eigenvalue
functionals of ad on the chosen a-basis; the joint eigenspaces are computed
by successive exact splitting, so multiplicities are exact.  Classification
goes through the Cartan matrix of a deterministic simple system; type labels
are canonical strings like ``B2`` or ``A1xA1``, compared through the
low-rank coincidences (B1 = C1 = A1, B2 = C2, D2 = A1 x A1, D3 = A3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg as la
from .algebra import RealFormStructure
from .errors import (ConstructionFailure, NonRationalSpectrum,
                     UnrecognizedDiagram)
from .scalars import Scalar, ZERO, ONE, I

_F0 = Fraction(0)
_F1 = Fraction(1)

RootLabel = Tuple[Fraction, ...]


def restrict_operator(admat: Sequence[Sequence], vecs: List[list], zero, one):
    """Matrix of the operator on span(vecs), in the vecs basis."""
    red, piv, trans = la.rref_with_transform(vecs, zero, one)
    if len(red) != len(vecs):
        raise ConstructionFailure("restriction basis is dependent")
    dim = len(vecs[0])
    k = len(vecs)
    cols = []
    for b in vecs:
        img = [zero] * dim
        for j, bj in enumerate(b):
            if bj:
                for r in range(dim):
                    if admat[r][j]:
                        img[r] = img[r] + bj * admat[r][j]
        coefs = [zero] * k
        v = img
        for idx, (row, p) in enumerate(zip(red, piv)):
            cv = v[p]
            if cv:
                for j in range(p, dim):
                    if row[j]:
                        v[j] = v[j] - cv * row[j]
                for t in range(k):
                    if trans[idx][t]:
                        coefs[t] = coefs[t] + cv * trans[idx][t]
        if any(v):
            raise ConstructionFailure("operator does not preserve the span")
        cols.append(coefs)
    return [[cols[j][r] for j in range(k)] for r in range(k)]


def _combine(vecs: List[list], combo: Sequence, zero) -> list:
    width = len(vecs[0])
    out = [zero] * width
    for c, v in zip(combo, vecs):
        if c:
            for j, e in enumerate(v):
                if e:
                    out[j] = out[j] + c * e
    return out


def _split_rational(spaces, admat):
    """Split each labeled subspace by the rational eigenvalues of admat."""
    out = []
    for label, vecs in spaces:
        if len(vecs) == 1:
            # 1-dimensional: the vector is an eigenvector; read the eigenvalue.
            m = restrict_operator(admat, vecs, _F0, _F1)
            out.append((label + (m[0][0],), vecs))
            continue
        m = restrict_operator(admat, vecs, _F0, _F1)
        p = la.charpoly_frac(m)
        roots = la.rational_roots(p)
        if roots is None:
            raise NonRationalSpectrum(
                "ad spectrum is not rational on a root subspace")
        k = len(vecs)
        total = 0
        for ev in sorted(set(roots)):
            shifted = [[m[r][c] - (ev if r == c else 0) for c in range(k)]
                       for r in range(k)]
            combos = la.kernel_right(shifted, _F0, _F1)
            if not combos:
                continue
            newvecs = [_combine(vecs, c, _F0) for c in combos]
            out.append((label + (ev,), newvecs))
            total += len(combos)
        if total != k:
            raise NonRationalSpectrum("ad is not diagonalizable over Q")
    return out


@dataclass
class RestrictedRootData:
    structure: RealFormStructure
    root_spaces: Dict[RootLabel, List[list]]
    centralizer: List[list]  # basis of c_g(a), rational coordinates

    @property
    def rank(self) -> int:
        return self.structure.rank_a

    def roots(self) -> List[RootLabel]:
        return sorted(self.root_spaces)

    def multiplicity(self, lam: RootLabel) -> int:
        return len(self.root_spaces[lam])

    def value_on(self, lam: RootLabel, a_coords: Sequence[Fraction]) -> Fraction:
        """lam evaluated on an element of a given by a-basis coefficients."""
        return sum((t * v for t, v in zip(a_coords, lam)), _F0)


def restricted_roots(structure: RealFormStructure,
                     within: Optional[List[list]] = None) -> RestrictedRootData:
    """Joint ad(a)-eigenvalue decomposition of g, or of span(within)."""
    if within is None:
        d = structure.dim
        start = [[_F1 if j == i else _F0 for j in range(d)] for i in range(d)]
    else:
        start = [list(v) for v in within]
    total = len(start)
    spaces = [((), start)]
    for ai in structure.a_indices:
        spaces = _split_rational(spaces, structure.ad_frac(ai))
    root_spaces: Dict[RootLabel, List[list]] = {}
    central: List[list] = []
    for label, vecs in spaces:
        if any(label):
            root_spaces[label] = vecs
        else:
            central = vecs
    if within is None and not root_spaces:
        raise ConstructionFailure("%s: no restricted roots" % structure.name)
    # sum rule: the decomposition exhausts the split space
    if sum(len(v) for v in root_spaces.values()) + len(central) != total:
        raise ConstructionFailure("%s: root space dimensions do not add up"
                                  % structure.name)
    return RestrictedRootData(structure, root_spaces, central)


# --- positivity, simple systems, reduced system -------------------------------

def is_positive(lam: RootLabel) -> bool:
    for v in lam:
        if v:
            return v > 0
    return False


def positive_roots(data: RestrictedRootData) -> List[RootLabel]:
    return sorted(lam for lam in data.root_spaces if is_positive(lam))


def simple_system(data: RestrictedRootData) -> List[RootLabel]:
    """Indecomposable positive roots, in lexicographic order."""
    pos = positive_roots(data)
    pos_set = set(pos)
    simples = []
    for lam in pos:
        decomposable = False
        for mu in pos:
            if mu == lam:
                continue
            rest = tuple(a - b for a, b in zip(lam, mu))
            if rest in pos_set:
                decomposable = True
                break
        if not decomposable:
            simples.append(lam)
    return simples


def reduced_system(data: RestrictedRootData) -> List[RootLabel]:
    """Roots lam with lam/2 not a root (the system of the split subalgebra)."""
    all_roots = set(data.root_spaces)
    out = []
    for lam in all_roots:
        half = tuple(v / 2 for v in lam)
        if half not in all_roots:
            out.append(lam)
    return sorted(out)


def is_nonreduced(data: RestrictedRootData) -> bool:
    all_roots = set(data.root_spaces)
    return any(tuple(2 * v for v in lam) in all_roots for lam in all_roots)


# --- inner products on root space ----------------------------------------------

def a_gram(structure: RealFormStructure) -> List[List[Fraction]]:
    return [[structure.gram[i][j] for j in structure.a_indices]
            for i in structure.a_indices]


def root_pairing(structure: RealFormStructure):
    """Returns pair(lam, mu) = B(t_lam, t_mu) via B-duality on a."""
    gram = a_gram(structure)
    r = len(gram)
    dual_cache: Dict[RootLabel, List[Fraction]] = {}

    def dual(lam: RootLabel) -> List[Fraction]:
        got = dual_cache.get(lam)
        if got is None:
            got = la.solve_right(gram, list(lam))
            if got is None:
                raise ConstructionFailure("degenerate form on a")
            dual_cache[lam] = got
        return got

    def pair(lam: RootLabel, mu: RootLabel) -> Fraction:
        dm = dual(mu)
        return sum((lv * dv for lv, dv in zip(lam, dm)), _F0)

    return pair


def cartan_matrix(simples: List[RootLabel], pair) -> List[List[Fraction]]:
    """Entries n_ij = 2 (a_i, a_j) / (a_j, a_j); must be integral."""
    r = len(simples)
    out = [[_F0] * r for _ in range(r)]
    for j in range(r):
        dj = pair(simples[j], simples[j])
        if dj <= 0:
            raise ConstructionFailure("simple root with nonpositive norm")
        for i in range(r):
            v = 2 * pair(simples[i], simples[j]) / dj
            if v.denominator != 1:
                raise UnrecognizedDiagram("non-integral Cartan matrix entry %s" % v)
            out[i][j] = v
    return out


# --- Dynkin classification ------------------------------------------------------

def _components(adj: List[List[int]]) -> List[List[int]]:
    n = len(adj)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(n):
                if adj[v][w] and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _classify_component(idxs: List[int], cart: List[List[Fraction]],
                        norms: List[Fraction]) -> str:
    r = len(idxs)
    if r == 1:
        return "A1"
    bond = {}
    triple = double = 0
    for x in range(r):
        for y in range(x + 1, r):
            i, j = idxs[x], idxs[y]
            b = int(cart[i][j] * cart[j][i])
            bond[(x, y)] = b
            if b == 3:
                triple += 1
            elif b == 2:
                double += 1
            elif b not in (0, 1):
                raise UnrecognizedDiagram("bond multiplicity %d" % b)
    if triple:
        if r == 2 and triple == 1 and double == 0:
            return "G2"
        raise UnrecognizedDiagram("triple bond in rank %d diagram" % r)
    deg = [0] * r
    for (x, y), b in bond.items():
        if b:
            deg[x] += 1
            deg[y] += 1
    if double:
        if double > 1 or any(d > 2 for d in deg):
            raise UnrecognizedDiagram("bad doubly-laced diagram")
        if r == 2:
            return "B2"
        ns = [norms[i] for i in idxs]
        top = max(ns)
        nshort = sum(1 for v in ns if v < top)
        nlong = r - nshort
        if nshort == nlong == 2 and r == 4:
            return "F4"
        if nshort == 1:
            return "B%d" % r
        if nlong == 1:
            return "C%d" % r
        raise UnrecognizedDiagram("doubly-laced diagram with %d short roots" % nshort)
    branch = [x for x in range(r) if deg[x] == 3]
    if any(d > 3 for d in deg):
        raise UnrecognizedDiagram("vertex of degree > 3")
    if not branch:
        return "A%d" % r
    if len(branch) > 1:
        raise UnrecognizedDiagram("more than one branch vertex")
    b = branch[0]
    # arm lengths from the branch vertex
    arms = []
    for start in (x for x in range(r) if bond.get((min(b, x), max(b, x)), 0)):
        length = 1
        prev, cur = b, start
        while True:
            nxt = [y for y in range(r)
                   if y != prev and bond.get((min(cur, y), max(cur, y)), 0)]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return "D%d" % r
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    raise UnrecognizedDiagram("branched diagram with arms %s" % arms)


def classify_simples(simples: List[RootLabel], pair) -> str:
    """Canonical type label of the (reduced) system generated by the simples."""
    if not simples:
        return ""
    cart = cartan_matrix(simples, pair)
    r = len(simples)
    adj = [[1 if (i != j and cart[i][j]) else 0 for j in range(r)]
           for i in range(r)]
    norms = [pair(s, s) for s in simples]
    labels = [_classify_component(c, cart, norms) for c in _components(adj)]
    return "x".join(sorted(labels, key=_label_sort_key))


def classify_type(data: RestrictedRootData) -> Tuple[str, str]:
    """(type of the full restricted system Lambda, type of the reduced system).

    A non-reduced irreducible system is labeled BC_r; its reduced companion
    keeps the Cartan-matrix label of the simple system.
    """
    pair = root_pairing(data.structure)
    simples = simple_system(data)
    reduced_label = classify_simples(simples, pair)
    if is_nonreduced(data):
        # the simple system of BC_r has the B_r Cartan matrix (A1 when r = 1)
        if reduced_label == "A1":
            lam_label = "BC1"
        elif "x" not in reduced_label and reduced_label.startswith("B"):
            lam_label = "BC" + reduced_label[1:]
        else:
            raise UnrecognizedDiagram(
                "non-reduced system with reduced type %s" % reduced_label)
    else:
        lam_label = reduced_label
    return lam_label, reduced_label


def _label_sort_key(label: str):
    letter = "".join(ch for ch in label if ch.isalpha())
    rank = int("".join(ch for ch in label if ch.isdigit()) or 0)
    return (letter, rank)


def split_label(label: str) -> Tuple[str, int]:
    letter = "".join(ch for ch in label if ch.isalpha())
    rank = int("".join(ch for ch in label if ch.isdigit()))
    return letter, rank


def normalize_type(label: str) -> Tuple[str, ...]:
    """Equivalence-class normal form of a product type label."""
    atoms: List[str] = []
    for part in label.split("x"):
        part = part.strip()
        if not part:
            continue
        letter, rank = split_label(part)
        if letter in ("B", "C") and rank == 1:
            atoms.append("A1")
        elif letter == "C" and rank == 2:
            atoms.append("B2")
        elif letter == "D" and rank == 1:
            atoms.append("A1")
        elif letter == "D" and rank == 2:
            atoms.extend(["A1", "A1"])
        elif letter == "D" and rank == 3:
            atoms.append("A3")
        else:
            atoms.append("%s%d" % (letter, rank))
    return tuple(sorted(atoms, key=_label_sort_key))


def type_equivalent(t1: str, t2: str) -> bool:
    return normalize_type(t1) == normalize_type(t2)


# --- invariant degrees ------------------------------------------------------------

_EXCEPTIONAL_DEGREES = {
    "G2": [2, 6],
    "F4": [2, 6, 8, 12],
    "E6": [2, 5, 6, 8, 9, 12],
    "E7": [2, 6, 8, 10, 12, 14, 18],
    "E8": [2, 8, 12, 14, 18, 20, 24, 30],
}


def invariant_degrees(label: str) -> List[int]:
    """Degrees of the basic Weyl-invariant polynomials for a type label."""
    out: List[int] = []
    for part in label.split("x"):
        part = part.strip()
        if not part:
            continue
        if part in _EXCEPTIONAL_DEGREES:
            out.extend(_EXCEPTIONAL_DEGREES[part])
            continue
        letter, rank = split_label(part)
        if letter == "A":
            out.extend(range(2, rank + 2))
        elif letter in ("B", "C", "BC"):
            out.extend(range(2, 2 * rank + 1, 2))
        elif letter == "D":
            out.extend(sorted(list(range(2, 2 * rank - 1, 2)) + [rank]))
        else:
            raise UnrecognizedDiagram("no degree table for %r" % part)
    return sorted(out)


def weyl_order_reference(label: str) -> int:
    out = 1
    for part in label.split("x"):
        part = part.strip()
        if not part:
            continue
        if part == "G2":
            out *= 12
            continue
        if part == "F4":
            out *= 1152
            continue
        letter, rank = split_label(part)
        if letter == "A":
            out *= math.factorial(rank + 1)
        elif letter in ("B", "C", "BC"):
            out *= (2 ** rank) * math.factorial(rank)
        elif letter == "D":
            out *= (2 ** (rank - 1)) * math.factorial(rank)
        else:
            raise UnrecognizedDiagram("no Weyl order for %r" % part)
    return out


# --- Weyl group generation ----------------------------------------------------------

def weyl_group(simples: List[RootLabel], pair) -> List[Tuple[Tuple[int, ...], ...]]:
    """All Weyl elements as integer matrices in the simple-root basis.

    Row r, column j: coefficient of simple root r in the image of simple
    root j.  Generated by breadth-first closure over the simple reflections.
    """
    r = len(simples)
    cart = cartan_matrix(simples, pair)
    gens = []
    for i in range(r):
        m = [[1 if x == y else 0 for y in range(r)] for x in range(r)]
        for j in range(r):
            # s_i(a_j) = a_j - n(j, i) a_i with n(j, i) = 2(a_j, a_i)/(a_i, a_i)
            m[i][j] -= int(cart[j][i])
        gens.append(tuple(tuple(row) for row in m))
    ident = tuple(tuple(1 if x == y else 0 for y in range(r)) for x in range(r))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                prod = tuple(
                    tuple(sum(g[x][k] * w[k][y] for k in range(r))
                          for y in range(r))
                    for x in range(r))
                if prod not in seen:
                    seen.add(prod)
                    new.append(prod)
        frontier = new
    return sorted(seen)


def molien_degrees(wmats: Sequence[Tuple[Tuple[int, ...], ...]], rank: int,
                   order: Optional[int] = None) -> List[int]:
    """Degrees of basic invariants from the Molien series of the group."""
    if order is None:
        order = 4 * rank + 6
    total = [_F0] * order
    for w in wmats:
        p = la.charpoly_frac([[Fraction(e) for e in row] for row in w])
        # det(I - tW) = t^r charpoly(1/t) with charpoly = det(tI - W)
        det_poly = list(reversed(p))
        inv = la.poly_inv_trunc(det_poly, order)
        for k in range(order):
            total[k] += inv[k]
    n = Fraction(len(wmats))
    series = [c / n for c in total]
    degrees = []
    p = series
    for _ in range(rank):
        d = next((k for k in range(1, order) if p[k]), None)
        if d is None:
            raise ConstructionFailure("Molien series terminated early")
        degrees.append(d)
        # multiply by (1 - t^d)
        q = list(p)
        for k in range(order - 1, d - 1, -1):
            q[k] -= p[k - d]
        p = q
    if p[0] != 1 or any(p[1:]):
        raise ConstructionFailure("Molien series is not a product of %d factors"
                                  % rank)
    return degrees


def abstract_simple_system(label: str):
    """Standard-coordinate simple roots and pairing for one irreducible type."""
    letter, rank = split_label(label)
    if letter == "A":
        n = rank + 1
        simples = [tuple(Fraction(1 if j == i else (-1 if j == i + 1 else 0))
                         for j in range(n)) for i in range(rank)]
    elif letter in ("B", "BC"):
        n = rank
        simples = [tuple(Fraction(1 if j == i else (-1 if j == i + 1 else 0))
                         for j in range(n)) for i in range(rank - 1)]
        simples.append(tuple(Fraction(1 if j == rank - 1 else 0) for j in range(n)))
    elif letter == "C":
        n = rank
        simples = [tuple(Fraction(1 if j == i else (-1 if j == i + 1 else 0))
                         for j in range(n)) for i in range(rank - 1)]
        simples.append(tuple(Fraction(2 if j == rank - 1 else 0) for j in range(n)))
    elif letter == "D":
        n = rank
        simples = [tuple(Fraction(1 if j == i else (-1 if j == i + 1 else 0))
                         for j in range(n)) for i in range(rank - 1)]
        simples.append(tuple(Fraction(1 if j in (rank - 2, rank - 1) else 0)
                             for j in range(n)))
    elif label == "G2":
        simples = [(Fraction(1), Fraction(-1), Fraction(0)),
                   (Fraction(-2), Fraction(1), Fraction(1))]
    elif label == "F4":
        simples = [(Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
                   (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
                   (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
                   (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2),
                    Fraction(-1, 2))]
    else:
        raise UnrecognizedDiagram("no abstract coordinates for %r" % label)

    def pair(x, y):
        return sum((a * b for a, b in zip(x, y)), _F0)

    return simples, pair


# --- full root classification on a maximally split Cartan ----------------------------

@dataclass
class FullRootClassification:
    structure: RealFormStructure
    t_basis: List[Tuple[Fraction, ...]]  # toral completion inside c_h(a)
    n_imaginary: int
    n_real: int
    n_complex: int

    @property
    def n_roots(self) -> int:
        return self.n_imaginary + self.n_real + self.n_complex

    @property
    def dim_cartan(self) -> int:
        return len(self.t_basis) + self.structure.rank_a


def _maximal_torus_in_ch(structure: RealFormStructure) -> List[Tuple[Fraction, ...]]:
    """A maximal abelian subalgebra t of c_h(a), grown by centralizer passes."""
    a_units = [structure.unit_coords(i) for i in structure.a_indices]
    ch = structure.centralizer_frac(a_units, within=structure.h_indices)
    t: List[Tuple[Fraction, ...]] = []
    while True:
        if t:
            z = structure.centralizer_frac(list(t) + a_units,
                                           within=structure.h_indices)
        else:
            z = ch
        # keep only elements of z that also commute with all of current z? No:
        # any element of the centralizer of t commutes with t, so the first
        # new independent one extends t as an abelian subalgebra.
        span = la.rref([list(v) for v in t])[0] if t else []
        grew = False
        for cand in z:
            v = list(cand)
            for row, p in zip(span, [next(j for j, e in enumerate(r) if e)
                                     for r in span]):
                if v[p]:
                    f = v[p]
                    for j in range(p, len(v)):
                        if row[j]:
                            v[j] -= f * row[j]
            if any(v):
                t.append(cand)
                grew = True
                break
        if not grew:
            return t


def _imaginary_eigenvalues(admat) -> List[Fraction]:
    """Eigenvalue list mu for spectrum {i mu} of a real matrix, or raises."""
    p = la.charpoly_frac(admat)
    z = 0
    while z < len(p) and not p[z]:
        z += 1
    body = p[z:]
    for k in range(1, len(body), 2):
        if body[k]:
            raise NonRationalSpectrum("spectrum is not purely imaginary")
    q = [body[k] for k in range(0, len(body), 2)]
    if len(q) == 1:
        return [_F0] if z else []
    u_roots = la.rational_roots(q)
    if u_roots is None:
        raise NonRationalSpectrum("imaginary spectrum is not rational")
    mus = {_F0} if z else set()
    for u in u_roots:
        if u > 0:
            raise NonRationalSpectrum("real eigenvalue pair in compact direction")
        w = -u
        num, den = w.numerator, w.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn != num or rd * rd != den:
            raise NonRationalSpectrum("irrational imaginary eigenvalue")
        mus.add(Fraction(rn, rd))
        mus.add(Fraction(-rn, rd))
    return sorted(mus)


def full_root_classification(structure: RealFormStructure) -> FullRootClassification:
    """Tags the roots of g^C on the maximally split Cartan d = t + a."""
    t_basis = _maximal_torus_in_ch(structure)
    d = structure.dim
    a_units = [structure.unit_coords(i) for i in structure.a_indices]

    spaces = [((), [[ONE if j == i else ZERO for j in range(d)]
                    for i in range(d)])]
    # split by a first (rational eigenvalues, Scalar arithmetic)
    for ai in structure.a_indices:
        admat = structure.ad_frac(ai)
        new_spaces = []
        for label, vecs in spaces:
            m = restrict_operator(admat, vecs, ZERO, ONE)
            evs = sorted(set(
                la.rational_roots(la.charpoly_frac(
                    [[_as_frac(e) for e in row] for row in m])) or
                _raise_nonrational()))
            k = len(vecs)
            total = 0
            for ev in evs:
                evs_s = Scalar.of(ev)
                shifted = [[m[r][c] - (evs_s if r == c else ZERO)
                            for c in range(k)] for r in range(k)]
                combos = la.kernel_right(shifted, ZERO, ONE)
                if not combos:
                    continue
                new_spaces.append((label + ((ev, _F0),),
                                   [_combine(vecs, c, ZERO) for c in combos]))
                total += len(combos)
            if total != k:
                raise NonRationalSpectrum("a-operator not diagonalizable")
        spaces = new_spaces
    # then by t (imaginary eigenvalues i mu)
    for tv in t_basis:
        admat = structure.ad_matrix(tv)
        mus = _imaginary_eigenvalues(admat)
        new_spaces = []
        for label, vecs in spaces:
            m = restrict_operator(admat, vecs, ZERO, ONE)
            k = len(vecs)
            total = 0
            for mu in mus:
                ev = I * Scalar.of(mu)
                shifted = [[m[r][c] - (ev if r == c else ZERO)
                            for c in range(k)] for r in range(k)]
                combos = la.kernel_right(shifted, ZERO, ONE)
                if not combos:
                    continue
                new_spaces.append((label + ((_F0, mu),),
                                   [_combine(vecs, c, ZERO) for c in combos]))
                total += len(combos)
            if total != k:
                raise NonRationalSpectrum("t-operator not diagonalizable over Q(i)")
        spaces = new_spaces

    r = structure.rank_a
    n_im = n_re = n_cx = 0
    zero_dim = 0
    for label, vecs in spaces:
        a_part = label[:r]
        t_part = label[r:]
        a_zero = all(v[0] == 0 for v in a_part)
        t_zero = all(v[1] == 0 for v in t_part)
        if a_zero and t_zero:
            zero_dim += len(vecs)
            continue
        if len(vecs) != 1:
            raise ConstructionFailure(
                "%s: root space of dimension %d on the split Cartan"
                % (structure.name, len(vecs)))
        if a_zero:
            n_im += 1
        elif t_zero:
            n_re += 1
        else:
            n_cx += 1
    if zero_dim != len(t_basis) + r:
        raise ConstructionFailure(
            "%s: d is not a Cartan subalgebra (centralizer dim %d)"
            % (structure.name, zero_dim))
    return FullRootClassification(structure, t_basis, n_im, n_re, n_cx)


def _as_frac(e: Scalar) -> Fraction:
    return e.as_fraction()


def _raise_nonrational():
    raise NonRationalSpectrum("a-spectrum is not rational")
