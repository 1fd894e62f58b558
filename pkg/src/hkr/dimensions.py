"""Dimension and counting formulas for the moduli side of the construction.

Everything here is bookkeeping over the module decomposition: Riemann-Roch
values for powers of a line bundle L on a genus-g curve, the Hitchin base
dimension computed two independent ways, graded bundle power lists, the
expected moduli dimension, the split-openness test, and the rank-one moduli
classification.  All arithmetic is exact; d_L/2 terms are carried as
Fractions and final sums asserted integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import roots as rt
from . import triples as tp
from .algebra import RealFormStructure
from .errors import AmbiguousCohomology, RouteDisagreement

_F0 = Fraction(0)


@dataclass(frozen=True)
class CurveContext:
    genus: int
    d_L: int
    L_is_canonical: bool = False
    L_is_trivial: bool = False

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError("genus must be at least 2")
        if self.L_is_canonical and self.d_L != 2 * self.genus - 2:
            raise ValueError("canonical L must have degree 2g - 2")
        if self.L_is_trivial and self.d_L != 0:
            raise ValueError("trivial L must have degree 0")

    @staticmethod
    def canonical(genus: int) -> "CurveContext":
        return CurveContext(genus, 2 * genus - 2, L_is_canonical=True)

    @staticmethod
    def trivial(genus: int) -> "CurveContext":
        return CurveContext(genus, 0, L_is_trivial=True)

    @staticmethod
    def of_degree(genus: int, d_L: int) -> "CurveContext":
        return CurveContext(genus, d_L)


def h0_h1_line_power(m: int, ctx: CurveContext) -> Tuple[int, int]:
    """(h0, h1) of L^m.

    Canonical and trivial L are table lookups; otherwise L is generic of its
    degree, which pins the answer only when deg L^m is outside [1, 2g-2].
    """
    g = ctx.genus
    if ctx.L_is_canonical:
        if m >= 2:
            return (2 * m - 1) * (g - 1), 0
        if m == 1:
            return g, 1
        if m == 0:
            return 1, g
        # negative powers by Serre duality against K^(1-m)
        return 0, (1 - 2 * m) * (g - 1)
    if ctx.L_is_trivial:
        return 1, g
    deg = m * ctx.d_L
    if m == 0:
        return 1, g
    if deg > 2 * g - 2:
        return deg - g + 1, 0
    if m == 1 and ctx.d_L >= 2 * g - 2:
        # generic of degree exactly 2g-2 is not canonical, so h1 = 0
        return deg - g + 1, 0
    if deg < 0:
        return 0, g - 1 - deg
    if deg == 0:
        # generic nontrivial of degree zero has no sections
        return 0, g - 1
    raise AmbiguousCohomology("deg L^%d = %d lies in [1, %d] and L is "
                              "neither canonical nor trivial"
                              % (m, deg, 2 * g - 2))


@dataclass
class FormAnalysis:
    """Everything the dimension formulas need, computed once per form."""
    structure: RealFormStructure
    root_data: rt.RestrictedRootData
    tds: tp.TdsConstruction
    triple: tp.NormalTriple
    split_sub: tp.SplitSubalgebra
    decomposition: tp.ModuleDecomposition
    quasi_split: bool
    num_roots: int
    num_reduced: int

    @property
    def is_split(self) -> bool:
        return self.split_sub.dim == self.structure.dim


def analyze(structure: RealFormStructure) -> FormAnalysis:
    S = structure
    data = rt.restricted_roots(S)
    tds = tp.build_tds(S, data)
    triple = tp.normal_triple(tds)
    sub = tp.maximal_split_subalgebra(S, tds)
    dec = tp.module_decomposition(S, triple, data)
    qs = tp.is_quasi_split(S, triple, data)
    full = rt.full_root_classification(S)
    num_reduced = len(rt.reduced_system(data))
    return FormAnalysis(S, data, tds, triple, sub, dec, qs,
                        full.n_roots, num_reduced)


def hitchin_base_dim(analysis: FormAnalysis, ctx: CurveContext) -> int:
    """dim of the base, as the h0 sum and as the closed form, asserted equal.

    Trivial L collapses the base to a^C plus the central part; a nontrivial
    degree-zero L admits no nonzero twisted sections at all.
    """
    dec = analysis.decomposition
    if ctx.d_L == 0:
        return dec.a + dec.dim_z_m if ctx.L_is_trivial else 0
    route1 = sum(h0_h1_line_power(bl.m, ctx)[0] for bl in dec.located("m"))
    h1_L = h0_h1_line_power(1, ctx)[1]
    half = Fraction(ctx.d_L, 2)
    route2 = half * analysis.split_sub.dim + \
        dec.a * (half - ctx.genus + 1) + h1_L * dec.dim_z_m
    if route2.denominator != 1 or route1 != route2:
        raise RouteDisagreement("%s: base dim %s (h0 sum) vs %s (closed form)"
                                % (analysis.structure.name, route1, route2))
    return route1


@dataclass
class GradedBundleSpec:
    structure: RealFormStructure
    h_powers: List[List[int]]
    m_powers: List[List[int]]
    locations: List[str]
    degrees: List[int]


def graded_bundle_spec(analysis: FormAnalysis) -> GradedBundleSpec:
    """Per-block L-power lists of the two graded bundles.

    A block of degree m contributes the odd ladder {m-1, m-3, ..., -m+1} to
    its own side of the Cartan decomposition and the even ladder
    {m-2, ..., -m+2} to the other side.
    """
    S = analysis.structure
    h_powers: List[List[int]] = []
    m_powers: List[List[int]] = []
    locations: List[str] = []
    degrees: List[int] = []
    for bl in analysis.decomposition.blocks:
        own = list(range(bl.m - 1, -bl.m, -2))
        other = list(range(bl.m - 2, -bl.m + 1, -2))
        if bl.location == "m":
            m_powers.append(own)
            h_powers.append(other)
        else:
            h_powers.append(own)
            m_powers.append(other)
        locations.append(bl.location)
        degrees.append(bl.m)
    total_h = sum(len(lst) for lst in h_powers)
    total_m = sum(len(lst) for lst in m_powers)
    if total_h != S.dim_h or total_m != S.dim_m:
        raise RouteDisagreement("%s: graded power lists cover (%d, %d), "
                                "Cartan decomposition is (%d, %d)"
                                % (S.name, total_h, total_m,
                                   S.dim_h, S.dim_m))
    return GradedBundleSpec(S, h_powers, m_powers, locations, degrees)


def euler_characteristic_difference(spec: GradedBundleSpec,
                                    ctx: CurveContext) -> int:
    """chi(E(m^C) tensor L) - chi(E(h^C)) from the power lists, asserted
    against the closed form dim m^C (d_L + 1 - g) - dim h^C (1 - g)."""
    g, dl = ctx.genus, ctx.d_L
    chi_m = sum((p + 1) * dl + 1 - g
                for lst in spec.m_powers for p in lst)
    chi_h = sum(p * dl + 1 - g for lst in spec.h_powers for p in lst)
    value = chi_m - chi_h
    S = spec.structure
    closed = S.dim_m * (dl + 1 - g) - S.dim_h * (1 - g)
    if value != closed:
        raise RouteDisagreement("%s: chi difference %d vs closed form %d"
                                % (S.name, value, closed))
    return value


def expected_moduli_dim(analysis: FormAnalysis, ctx: CurveContext) -> int:
    """Expected dimension of the moduli space, two routes.

    The direct route adds the failure terms c and h1(z_m tensor L) to the
    Euler characteristic of the deformation complex; the graded-bundle route
    replaces c by dim z_h, and the two agree exactly on quasi-split forms.
    """
    dec = analysis.decomposition
    g, dl = ctx.genus, ctx.d_L
    h1_L = h0_h1_line_power(1, ctx)[1]
    half = Fraction(dl, 2)
    eq_direct = dec.c + dec.dim_z_m * h1_L + half * analysis.structure.dim \
        + (dec.a - dec.b) * (half - g + 1)
    if eq_direct.denominator != 1:
        raise RouteDisagreement("%s: expected dimension %s is not integral"
                                % (analysis.structure.name, eq_direct))
    value = int(eq_direct)
    if analysis.quasi_split:
        spec = graded_bundle_spec(analysis)
        chi = euler_characteristic_difference(spec, ctx)
        alt = dec.dim_z_h + dec.dim_z_m * h1_L + chi
        if alt != value:
            raise RouteDisagreement("%s: expected dim %d (direct) vs %d "
                                    "(graded route)"
                                    % (analysis.structure.name, value, alt))
    return value


@dataclass
class OpennessBreakdown:
    value: int
    term_roots: int
    term_b: int
    term_z_h: int
    is_open: bool


def split_openness_test(analysis: FormAnalysis, ctx: CurveContext
                        ) -> OpennessBreakdown:
    """-d_L(#roots - #reduced restricted roots) - b(g-1) - dim z_h.

    Nonnegative exactly when every term vanishes, which happens exactly for
    the split forms.
    """
    dec = analysis.decomposition
    t1 = -ctx.d_L * (analysis.num_roots - analysis.num_reduced)
    t2 = -dec.b * (ctx.genus - 1)
    t3 = -dec.dim_z_h
    value = t1 + t2 + t3
    is_open = value >= 0
    if ctx.d_L > 0:
        each_zero = t1 == 0 and t2 == 0 and t3 == 0
        if is_open != each_zero or is_open != analysis.is_split:
            raise RouteDisagreement("%s: openness %s, zero terms %s, split %s"
                                    % (analysis.structure.name, is_open,
                                       each_zero, analysis.is_split))
    return OpennessBreakdown(value, t1, t2, t3, is_open)


def component_count(n_cosets: int, genus: int) -> int:
    if n_cosets < 1:
        raise ValueError("the coset count must be a positive integer")
    return n_cosets * 2 ** (2 * genus)


def sl2_moduli_classify(alpha, d: int, d_L: int) -> str:
    """Moduli of rank-one pairs with fixed determinant degree d.

    Empty when d exceeds |d_L/2| or falls below the stability parameter;
    a torsor over the Picard variety at the critical value alpha = d;
    entirely semistable above it.
    """
    alpha = Fraction(alpha)
    if Fraction(d) > Fraction(abs(d_L), 2) or Fraction(d) < alpha:
        return "empty"
    if alpha == d:
        return "picard_torsor"
    return "all_semistable"


@dataclass
class DimensionReport:
    form: str
    genus: int
    d_L: int
    a: int
    b: int
    c: int
    dim_z_m: int
    dim_z_h: int
    dim_g_C: int
    dim_split_C: int
    num_roots: int
    num_reduced_restricted: int
    base_dim: int
    expected_moduli_dim: Optional[int]
    is_split: bool
    is_quasi_split: bool
    hkr_open: Optional[bool]
    openness_terms: Optional[Dict[str, int]]

    def to_dict(self) -> Dict[str, object]:
        return {
            "form": self.form, "genus": self.genus, "d_L": self.d_L,
            "a": self.a, "b": self.b, "c": self.c,
            "dim_z_m": self.dim_z_m, "dim_z_h": self.dim_z_h,
            "dim_g_C": self.dim_g_C, "dim_split_C": self.dim_split_C,
            "num_roots": self.num_roots,
            "num_reduced_restricted": self.num_reduced_restricted,
            "base_dim": self.base_dim,
            "expected_moduli_dim": self.expected_moduli_dim,
            "is_split": self.is_split,
            "is_quasi_split": self.is_quasi_split,
            "hkr_open": self.hkr_open,
            "openness_terms": self.openness_terms,
        }


def dimension_report(analysis: FormAnalysis, ctx: CurveContext
                     ) -> DimensionReport:
    dec = analysis.decomposition
    base = hitchin_base_dim(analysis, ctx)
    if ctx.d_L == 0:
        expected = None
        hkr_open = None
        terms = None
    else:
        expected = expected_moduli_dim(analysis, ctx)
        br = split_openness_test(analysis, ctx)
        hkr_open = br.is_open
        terms = {"roots": br.term_roots, "b": br.term_b,
                 "z_h": br.term_z_h, "value": br.value}
        if analysis.is_split and base != expected:
            raise RouteDisagreement("%s: split form with base %d != expected "
                                    "%d" % (analysis.structure.name,
                                            base, expected))
    return DimensionReport(
        analysis.structure.name, ctx.genus, ctx.d_L,
        dec.a, dec.b, dec.c, dec.dim_z_m, dec.dim_z_h,
        analysis.structure.dim, analysis.split_sub.dim,
        analysis.num_roots, analysis.num_reduced,
        base, expected, analysis.is_split, analysis.quasi_split,
        hkr_open, terms)
