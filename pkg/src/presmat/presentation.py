"""Presentation-matrix analysis: the annihilator row gamma, the presentation
test, the length-3 graded resolution it induces, exactness verification,
the zeta invariant, and the minor/row ideal decomposition.

Heights stand in for depths throughout: over the graded polynomial ring the
grade of an ideal equals its height, so every depth hypothesis below is
checked as a height (the Koszul examples in the tests pin this down).
"""

from __future__ import annotations

from itertools import combinations

from .groebner import (
    Budget,
    GradedResolution,
    IdealBasis,
    ModuleBasis,
    height,
    ideal_equal,
    intersect,
    member_with_cofactors,
    minimal_generators,
    module_member,
    quotient,
    syzygies,
)
from .matrices import PolyMatrix, check_graded, cofactor_matrix, det, minor, rank
from .ring import Polynomial, exact_div, gcd

FAIL_RANK = "rank_not_n_minus_1"
FAIL_FACTOR = "cofactor_factorization_failed"
FAIL_UNIT = "cofactor_unit_not_constant"
FAIL_HEIGHT = "height_of_row_ideal_below_3"


class GammaVector:
    """The row annihilator of a matrix of rank n-1, normalized.

    Components have gcd 1 and the first nonzero one is monic, so vectors that
    agree up to a unit agree literally.
    """

    __slots__ = ("components", "source", "column_subset", "normalization_note")

    def __init__(self, components, source: PolyMatrix, column_subset,
                 normalization_note: str):
        self.components = tuple(components)
        self.source = source
        self.column_subset = tuple(column_subset)
        self.normalization_note = normalization_note

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __eq__(self, other):
        if isinstance(other, GammaVector):
            return self.components == other.components
        return self.components == tuple(other)

    def __repr__(self):
        return "GammaVector(" + ", ".join(str(p) for p in self.components) + ")"


def _signed_row_minors(N: PolyMatrix):
    """(-1)^i * (minor deleting row i), i counted from 0, for an n x (n-1) N."""
    n = N.rows
    rows = list(range(n))
    cols = list(range(N.cols))
    out = []
    for i in range(n):
        m = minor(N, [r for r in rows if r != i], cols)
        out.append(m if i % 2 == 0 else -m)
    return out


def gamma(M: PolyMatrix, budget: Budget | None = None) -> GammaVector:
    """Normalized generator of the row annihilator of M (rank must be n-1).

    The defining submatrix is the lexicographically first full-rank choice
    of n-1 columns; the result does not depend on it (up to the fixed
    normalization), which the tests exercise over all subsets.
    """
    n, m = M.rows, M.cols
    if n > m + 1 or rank(M) != n - 1:
        raise ValueError("gamma needs rank exactly rows - 1")
    chosen = None
    for subset in combinations(range(m), n - 1):
        N = M.submatrix(range(n), subset)
        if rank(N) == n - 1:
            chosen = subset
            break
    if chosen is None:
        raise AssertionError("rank n-1 guarantees a full-rank column subset")
    raw = _signed_row_minors(M.submatrix(range(n), chosen))
    common = M.ring.zero()
    for p in raw:
        common = gcd(common, p)
    components = [exact_div(p, common) if not p.is_zero() else p for p in raw]
    lead = next(p for p in components if not p.is_zero())
    scale = lead.lead_coeff()
    if scale != 1:
        components = [p * (1 / scale) for p in components]
    # sanity: the vector annihilates all of M, not just the chosen submatrix
    for j in range(m):
        total = M.ring.zero()
        for i in range(n):
            total = total + components[i] * M.entry(i, j)
        if not total.is_zero():
            raise AssertionError("annihilator check failed; rank computation is off")
    return GammaVector(components, M, chosen,
                       "gcd removed; first nonzero component monic")


class PresentationReport:
    __slots__ = ("is_presentation", "gamma", "gamma_transpose", "cofactor_unit",
                 "height_J", "is_minimal", "failure_reason")

    def __init__(self, is_presentation, gamma, gamma_transpose, cofactor_unit,
                 height_J, is_minimal, failure_reason):
        self.is_presentation = is_presentation
        self.gamma = gamma
        self.gamma_transpose = gamma_transpose
        self.cofactor_unit = cofactor_unit
        self.height_J = height_J
        self.is_minimal = is_minimal
        self.failure_reason = failure_reason

    def __repr__(self):
        if self.is_presentation:
            return "PresentationReport(presentation, minimal=%s)" % self.is_minimal
        return "PresentationReport(not a presentation: %s)" % self.failure_reason


def check_presentation(M: PolyMatrix, budget: Budget | None = None) -> PresentationReport:
    """Decide the presentation property for a square matrix.

    Runs the rank test, factors the cofactor matrix as u * (g_i h_j) with
    g, h the two normalized annihilators, requires u to be a nonzero
    constant, and requires the ideal of the h components to have height at
    least 3. Failures are reported, never raised.
    """
    n = M.rows
    if n != M.cols or n < 2:
        raise ValueError("check_presentation needs a square matrix of size >= 2")
    is_minimal = all(p.constant_term() == 0 for row in M.entries for p in row)
    if rank(M) != n - 1:
        return PresentationReport(False, None, None, None, None, is_minimal,
                                  FAIL_RANK)
    g = gamma(M, budget=budget)
    h = gamma(M.transpose(), budget=budget)
    # the chain is minimal only if the annihilator entries avoid units too
    is_minimal = is_minimal and all(p.constant_term() == 0 for p in g) \
        and all(p.constant_term() == 0 for p in h)
    C = cofactor_matrix(M)
    unit = None
    for i in range(n):
        for j in range(n):
            prod = g[i] * h[j]
            if not prod.is_zero():
                try:
                    unit = exact_div(C.entry(i, j), prod)
                except ValueError:
                    return PresentationReport(False, g, h, None, None,
                                              is_minimal, FAIL_FACTOR)
                break
        if unit is not None:
            break
    if unit is None:
        raise AssertionError("both annihilators vanish; impossible at rank n-1")
    for i in range(n):
        for j in range(n):
            if C.entry(i, j) != unit * g[i] * h[j]:
                return PresentationReport(False, g, h, None, None, is_minimal,
                                          FAIL_FACTOR)
    if not unit.is_unit():
        return PresentationReport(False, g, h, unit, None, is_minimal, FAIL_UNIT)
    nonzero_h = [p for p in h if not p.is_zero()]
    if any(p.is_unit() for p in nonzero_h):
        hJ = float("inf")  # unit ideal, every depth bound holds
    else:
        hJ = height(IdealBasis(nonzero_h, ring=M.ring), budget=budget)
    if hJ < 3:
        return PresentationReport(False, g, h, unit, hJ, is_minimal, FAIL_HEIGHT)
    return PresentationReport(True, g, h, unit, hJ, is_minimal, None)


def column_module(M: PolyMatrix) -> ModuleBasis:
    cols = [tuple(M.entry(i, j) for i in range(M.rows)) for j in range(M.cols)]
    return ModuleBasis(M.rows, cols, ring=M.ring)


def check_presentation_rect(M: PolyMatrix, budget: Budget | None = None) -> bool:
    """Every syzygy on gamma(M) must lie in the column module of M."""
    g = gamma(M, budget=budget)  # raises unless rank is rows - 1
    S = syzygies(IdealBasis(list(g.components), ring=M.ring), budget=budget)
    columns = column_module(M)
    return all(module_member(v, columns, budget=budget) for v in S.generators)


def _derive_shifts(M: PolyMatrix, g):
    """Generator and relation degrees (a, b) from gamma and entry degrees."""
    n = M.rows
    if M.row_shifts is not None and M.col_shifts is not None:
        return list(M.row_shifts), list(M.col_shifts)
    a = []
    for p in g:
        if p.is_zero():
            raise ValueError("grading underdetermined: zero generator and no shifts")
        if not p.is_homogeneous():
            raise ValueError("grading inconsistency: generator not homogeneous")
        a.append(p.degree())
    b = []
    for j in range(M.cols):
        col_deg = None
        for i in range(n):
            e = M.entry(i, j)
            if e.is_zero():
                continue
            if not e.is_homogeneous():
                raise ValueError("grading inconsistency: entry not homogeneous")
            d = a[i] + e.degree()
            if col_deg is None:
                col_deg = d
            elif col_deg != d:
                raise ValueError("grading inconsistency in column %d" % j)
        if col_deg is None:
            raise ValueError("zero column has no degree")
        b.append(col_deg)
    return a, b


def _minor_gcd_is_unit(M: PolyMatrix, size: int) -> bool:
    """True when the minors of the given size have unit gcd (height >= 2).

    Over a factorial ring the ideal they generate has height at least 2
    exactly when no common factor survives; accumulate and stop early.
    """
    common = M.ring.zero()
    for rows in combinations(range(M.rows), size):
        for cols in combinations(range(M.cols), size):
            common = gcd(common, minor(M, rows, cols))
            if common.is_unit():
                return True
    return common.is_unit()


def build_resolution(M: PolyMatrix, budget: Budget | None = None) -> GradedResolution:
    """Length-3 graded resolution of R/I_M for a presentation matrix M.

    The chain is R(-s) -> (+)R(-b_j) -> (+)R(-a_i) -> R with maps given by
    the transposed annihilator as a column, M itself, and gamma(M) as a row;
    s = sum(b) - sum(a). Exactness is certified by the rank and height
    criteria specialized to this shape.
    """
    report = check_presentation(M, budget=budget)
    if not report.is_presentation:
        raise ValueError("not a presentation matrix: %s" % report.failure_reason)
    ring = M.ring
    g = list(report.gamma.components)
    h = list(report.gamma_transpose.components)
    n = M.rows
    a, b = _derive_shifts(M, g)
    s = sum(b) - sum(a)
    phi1 = PolyMatrix(ring, [g], row_shifts=(0,), col_shifts=tuple(a))
    phi2 = PolyMatrix(ring, [list(row) for row in M.entries],
                      row_shifts=tuple(a), col_shifts=tuple(b))
    phi3 = PolyMatrix(ring, [[p] for p in h], row_shifts=tuple(b),
                      col_shifts=(s,))
    for m in (phi1, phi2, phi3):
        if not check_graded(m):
            raise ValueError("grading inconsistency in the assembled chain")
    if not (phi1 @ phi2).is_zero() or not (phi2 @ phi3).is_zero():
        raise AssertionError("annihilator composites must vanish")
    # exactness, specialized: gcd(gamma) = 1 gives height(I_M) >= 2; the
    # submaximal minors need unit gcd; the row ideal height comes from the report
    if not _minor_gcd_is_unit(phi2, n - 1):
        raise ValueError("submaximal minors share a factor; chain not exact")
    minimal = all(p.constant_term() == 0
                  for mat in (phi1, phi2, phi3) for row in mat.entries for p in row)
    return GradedResolution(ring, [phi1, phi2, phi3],
                            [tuple(a), tuple(b), (s,)], minimal=minimal)


class ExactnessReport:
    __slots__ = ("stages", "exact")

    def __init__(self, stages):
        self.stages = tuple(stages)
        self.exact = all(ok for (_label, ok, _detail) in self.stages)

    def __repr__(self):
        body = "; ".join("%s:%s" % (label, "ok" if ok else "FAIL (%s)" % detail)
                         for label, ok, detail in self.stages)
        return "ExactnessReport(%s)" % body


def verify_exactness(res: GradedResolution, budget: Budget | None = None) -> ExactnessReport:
    """Rank and height criteria for exactness of a finite free chain.

    For maps phi_1, ..., phi_L (rightmost first) the chain is exact away
    from the augmentation iff rank(phi_k) + rank(phi_{k+1}) equals the rank
    of the shared module and the rank-sized minor ideal of phi_k has height
    at least k. Composites must already vanish; that precondition raises.
    """
    maps = res.maps
    if not maps:
        raise ValueError("empty chain")
    for k in range(len(maps) - 1):
        if not (maps[k] @ maps[k + 1]).is_zero():
            raise ValueError("composite at stage %d is nonzero" % (k + 1))
    ranks = [rank(m) for m in maps]
    stages = []
    for k in range(len(maps)):
        expected = len(res.shifts[k])  # rank of the source module F_{k+1}
        nxt = ranks[k + 1] if k + 1 < len(maps) else 0
        stages.append(("rank at F_%d" % (k + 1), nxt + ranks[k] == expected,
                       "%d + %d vs %d" % (ranks[k], nxt, expected)))
    for k, m in enumerate(maps):
        depth_needed = k + 1
        r = ranks[k]
        if depth_needed == 1:
            ok = r >= 1
            detail = "nonzero map"
        elif depth_needed == 2:
            ok = _minor_gcd_is_unit(m, r)
            detail = "gcd of %d-minors" % r
        else:
            minors_ideal = IdealBasis(
                [minor(m, rows, cols)
                 for rows in combinations(range(m.rows), r)
                 for cols in combinations(range(m.cols), r)],
                ring=m.ring)
            gens = [p for p in minors_ideal.generators if not p.is_zero()]
            if not gens:
                ok = False
                ht = 0
            elif any(p.is_unit() for p in gens):
                ok = True
                ht = float("inf")
            else:
                ht = height(IdealBasis(gens, ring=m.ring), budget=budget)
                ok = ht >= depth_needed
            detail = "height %s needs >= %d" % (ht, depth_needed)
        stages.append(("height at map %d" % (k + 1), ok, detail))
    return ExactnessReport(stages)


class ZetaReport:
    __slots__ = ("nu_I", "nu_J", "zeta", "normalized_rho", "transformed_matrix")

    def __init__(self, nu_I, nu_J, zeta, normalized_rho, transformed_matrix):
        self.nu_I = nu_I
        self.nu_J = nu_J
        self.zeta = zeta
        self.normalized_rho = tuple(normalized_rho)
        self.transformed_matrix = transformed_matrix

    def __repr__(self):
        return "ZetaReport(nu_I=%d, nu_J=%d, zeta=%d)" % (
            self.nu_I, self.nu_J, self.zeta)


def zeta(M: PolyMatrix, budget: Budget | None = None) -> ZetaReport:
    """Difference between generator counts of I_M and of its row ideal.

    Performs the basis change that zeroes the dependent components of the
    transposed annihilator, in descending index order, using membership
    cofactors; the mirrored column operations keep the chain a complex.
    The surviving components are moved to the front.
    """
    report = check_presentation(M, budget=budget)
    if not report.is_presentation or not report.is_minimal:
        raise ValueError("zeta needs a minimal presentation matrix")
    ring = M.ring
    n = M.rows
    h = list(report.gamma_transpose.components)
    cols = [[M.entry(i, j) for i in range(n)] for j in range(n)]
    for j in range(n - 1, -1, -1):
        if h[j].is_zero():
            continue
        others = [(k, h[k]) for k in range(n) if k != j and not h[k].is_zero()]
        if not others:
            continue
        cof = member_with_cofactors(
            h[j], IdealBasis([p for _k, p in others], ring=ring), budget=budget)
        if cof is None:
            continue
        for (k, _p), c in zip(others, cof):
            if c.is_zero():
                continue
            cols[k] = [cols[k][i] + c * cols[j][i] for i in range(n)]
        h[j] = ring.zero()
    for i in range(n):
        total = ring.zero()
        for j in range(n):
            total = total + cols[j][i] * h[j]
        if not total.is_zero():
            raise AssertionError("basis change broke the annihilation identity")
    survivors = [j for j in range(n) if not h[j].is_zero()]
    J = IdealBasis([p for p in report.gamma_transpose.components
                    if not p.is_zero()], ring=ring)
    if len(survivors) != len(minimal_generators(J, budget=budget).generators):
        raise AssertionError("sweep left a non-minimal generating set")
    order = survivors + [j for j in range(n) if h[j].is_zero()]
    rho = [h[j] for j in order]
    entries = [[cols[j][i] for j in order] for i in range(n)]
    transformed = PolyMatrix(ring, entries)
    s = len(survivors)
    return ZetaReport(n, s, n - s, rho, transformed)


class DecompositionReport:
    __slots__ = ("ideal", "z_ideal", "y_ideal", "regular", "intersection_verified")

    def __init__(self, ideal, z_ideal, y_ideal, regular, intersection_verified):
        self.ideal = ideal
        self.z_ideal = z_ideal
        self.y_ideal = y_ideal
        self.regular = regular
        self.intersection_verified = intersection_verified

    def __repr__(self):
        return "DecompositionReport(regular=%s, intersection=%s)" % (
            self.regular, self.intersection_verified)


def decompose(B: PolyMatrix, budget: Budget | None = None) -> DecompositionReport:
    """Split the minor ideal of an (n+1) x n matrix along its last row.

    I is generated by the signed minors through the last row H; the test
    ideal I(B) takes all maximal minors. When the top-block determinant is
    regular modulo (H), the identity I = I(B) meet (H) is verified by a
    double-inclusion check and reported.
    """
    n = B.cols
    if B.rows != n + 1:
        raise ValueError("decompose needs an (n+1) x n matrix")
    if rank(B) != n:
        raise ValueError("decompose needs full column rank")
    ring = B.ring
    all_rows = list(range(n + 1))
    cols = list(range(n))
    minors = []
    for i in all_rows:
        m = minor(B, [r for r in all_rows if r != i], cols)
        minors.append(m if i % 2 == 0 else -m)
    through_H = minors[:n]
    top_det = minors[n]
    ideal_I = IdealBasis(through_H, ring=ring)
    z_gens = [B.entry(n, j) for j in range(n) if not B.entry(n, j).is_zero()]
    z_ideal = IdealBasis(z_gens, ring=ring)
    y_ideal = IdealBasis(minors, ring=ring)
    if top_det.is_zero() or not z_gens:
        regular = False
    else:
        regular = ideal_equal(quotient(z_ideal, top_det, budget=budget), z_ideal,
                              budget=budget)
    verified = None
    if regular:
        meet = intersect(y_ideal, z_ideal, budget=budget)
        verified = ideal_equal(ideal_I, meet, budget=budget)
    return DecompositionReport(ideal_I, z_ideal, y_ideal, regular, verified)
