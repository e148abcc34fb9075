"""Level-zero structure theory, checked degree by degree.

For c_I = 0, c_LI != 0 and integer ratio r = hI/cLI != 1 the Verma module has
a singular vector in degree p = |r - 1| whose lowest I-degree part is L(-p)1
(r < 1, the "L" case) or I(-p)1 (r > 1, the "I" case), and the quotient by the
submodule it generates is irreducible with character
(1 - q^p) prod (1 - q^j)^(-2).  Otherwise the Verma module is irreducible.

Everything here is exact and truncated at a caller-supplied degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import Generator, HighestWeight, I, L
from .scalars import UnsupportedModeError, format_scalar, nullspace, rank, row_basis
from .shapovalov import p2, shapovalov_det
from .verma import (
    ModuleVector, PBWMonomial, VermaModule, basis_of_degree, is_pure_I,
    lowest_i_component, verma_module,
)

TRUNCATION_NOTE = ("statements hold for all degrees; this run verifies them exactly "
                   "only up to the stated max_degree")

# L(1), L(2), I(1) generate the positive part: L(n) from L(1), L(2), and [L(n), I(1)] = -I(n+1)
SHORTCUT_GENERATORS = (L(1), L(2), I(1))


class OutsideTheoremError(ValueError):
    """Parameters violate c_I = 0, c_LI != 0 (or evaluated mode)."""


class InternalConsistencyError(RuntimeError):
    """A kernel vector from the generator shortcut is not actually singular."""


def _require_theorem_domain(hw: HighestWeight):
    if hw.mode != "evaluated":
        raise OutsideTheoremError("structure checks need rational (evaluated) parameters")
    if hw.cI != 0:
        raise OutsideTheoremError("structure theorem needs c_I = 0")
    if hw.cLI == 0:
        raise OutsideTheoremError("structure theorem needs c_LI != 0")


def predicted_p(hw: HighestWeight):
    """(p, case) with case "L" or "I", or (None, None) when M(hw) is irreducible."""
    _require_theorem_domain(hw)
    ratio = Fraction(hw.hI) / hw.cLI
    if ratio.denominator != 1 or ratio == 1:
        return None, None
    r = int(ratio)
    return (1 - r, "L") if r < 1 else (r - 1, "I")


def constraint_matrix(module: VermaModule, n: int, generators=SHORTCUT_GENERATORS) -> list:
    """Rows: coordinates of g(b_j) for each g, stacked; columns: degree-n basis."""
    basis = basis_of_degree(n)
    rows = []
    for g in generators:
        target = basis_of_degree(n - g.index)
        images = [module.apply_generator(g, module.vector(b)) for b in basis]
        cols = [img.coordinates(target) for img in images]
        rows.extend([cols[j][i] for j in range(len(basis))] for i in range(len(target)))
    return rows


@dataclass
class SingularSearchResult:
    degree: int
    kernel_basis: list
    verified_annihilators: list

    @property
    def dimension(self) -> int:
        return len(self.kernel_basis)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "kernel_dimension": self.dimension,
            "kernel_basis": [v.to_json() for v in self.kernel_basis],
            "kernel_basis_text": [str(v) for v in self.kernel_basis],
            "verified_annihilators": [str(g) for g in self.verified_annihilators],
        }


def singular_vectors(n: int, hw: HighestWeight) -> SingularSearchResult:
    """Exact basis of the degree-n singular vectors of M(hw).

    Each basis vector has last nonzero coordinate 1 in the canonical order.
    """
    if hw.mode != "evaluated":
        raise UnsupportedModeError("singular vector search needs rational parameters")
    if n < 1:
        raise ValueError("singular vectors are searched in positive degree")
    module = verma_module(hw)
    basis = basis_of_degree(n)
    rows = constraint_matrix(module, n)
    kernel = [module.from_coordinates(v, basis) for v in nullspace_cols(rows, len(basis))]
    checks = [L(j) for j in range(1, n + 1)] + [I(j) for j in range(1, n + 1)]
    for v in kernel:
        for g in checks:
            if module.apply_generator(g, v):
                raise InternalConsistencyError(f"{g} does not annihilate {v}")
    return SingularSearchResult(n, kernel, checks)


def nullspace_cols(rows: list, ncols: int) -> list:
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    return nullspace(rows)


def _is_multiple_of(v: ModuleVector, mono: PBWMonomial) -> bool:
    return len(v) == 1 and next(iter(v.monomials())) == mono


def lemma4_check(result: SingularSearchResult, hw: HighestWeight) -> bool:
    """Some kernel vector at degree p has lowest I-degree part a multiple of L(-p)1 / I(-p)1."""
    p, case = predicted_p(hw)
    if p is None or result.degree != p or not result.kernel_basis:
        return False
    target = PBWMonomial.of(l_part=[p]) if case == "L" else PBWMonomial.of(i_part=[p])
    return any(_is_multiple_of(lowest_i_component(v), target) for v in result.kernel_basis)


@dataclass
class SubmoduleSlice:
    ambient_degree: int
    spanning_vectors: list
    rank: int

    def basis_rows(self) -> list:
        """Independent coordinate rows spanning the slice."""
        if not self.spanning_vectors:
            return []
        basis = basis_of_degree(self.ambient_degree)
        return row_basis(v.coordinates(basis) for v in self.spanning_vectors)


def submodule_slice(v: ModuleVector, n: int) -> SubmoduleSlice:
    """Degree-n part of U(L_-) v, spanned by PBW words of degree n - deg v."""
    if not v:
        raise ValueError("submodule_slice needs a nonzero vector")
    p = v.degree
    if n < p:
        return SubmoduleSlice(n, [], 0)
    module = v.module
    spanning = [module.apply_monomial(w, v) for w in basis_of_degree(n - p)]
    basis = basis_of_degree(n)
    return SubmoduleSlice(n, spanning, rank(s.coordinates(basis) for s in spanning))


@dataclass
class CharSeries:
    truncation: int
    coeffs: list

    def __getitem__(self, n):
        return self.coeffs[n]


def character_series(p: Optional[int], truncation: int) -> CharSeries:
    """Coefficients of (1 - q^p) prod (1 - q^j)^(-2) (or of the product alone when p is None)."""
    if truncation < 0:
        raise ValueError("truncation must be non-negative")
    coeffs = [p2(n) - (p2(n - p) if p else 0) for n in range(truncation + 1)]
    return CharSeries(truncation, coeffs)


def avoiding_monomials(case: str, p: int, n: int) -> list:
    """Degree-n monomials with no factor L(-p) (case "L") or I(-p) (case "I")."""
    if case == "L":
        return [m for m in basis_of_degree(n) if p not in m.l_part]
    return [m for m in basis_of_degree(n) if p not in m.i_part]


@dataclass
class Corollary6Result:
    degree: int
    count: int
    expected_count: int
    slice_rank: int
    combined_rank: int
    dimension: int

    @property
    def passed(self) -> bool:
        return (self.count == self.expected_count
                and self.combined_rank == self.slice_rank + self.count
                and self.combined_rank == self.dimension)

    def __bool__(self):
        return self.passed


def corollary6_check(v: ModuleVector, case: str, p: int, n: int) -> Corollary6Result:
    """Monomials avoiding the p-factor are independent modulo V_n and complete it to M_n."""
    basis = basis_of_degree(n)
    monos = avoiding_monomials(case, p, n)
    sl = submodule_slice(v, n)
    slice_rows = sl.basis_rows()
    mono_rows = [[int(b == m) for b in basis] for m in monos]
    combined = rank(slice_rows + mono_rows) if slice_rows or mono_rows else 0
    return Corollary6Result(n, len(monos), p2(n) - p2(n - p), sl.rank, combined, len(basis))


@dataclass
class QuotientCheck:
    degree: int
    solution_dim: int
    slice_rank: int
    contains_slice: bool

    @property
    def passed(self) -> bool:
        return self.contains_slice and self.solution_dim == self.slice_rank

    def __bool__(self):
        return self.passed


def _slice_rows(v: Optional[ModuleVector], n: int) -> list:
    if v is None or n < 0:
        return []
    return submodule_slice(v, n).basis_rows()


def quotient_singular_check(v: Optional[ModuleVector], n: int, module: Optional[VermaModule] = None) -> QuotientCheck:
    """Is {w in M_n : L(1)w, L(2)w, I(1)w in V} equal to V_n?

    ``v=None`` means V = 0 (irreducible Verma case); pass ``module`` then.
    """
    if n < 1:
        raise ValueError("quotient check is for positive degree")
    module = v.module if v is not None else module
    if module is None:
        raise ValueError("need a singular vector or a module")
    dim = p2(n)
    blocks = []
    for g in SHORTCUT_GENERATORS:
        target = basis_of_degree(n - g.index)
        images = [module.apply_generator(g, module.vector(b)).coordinates(target)
                  for b in basis_of_degree(n)]
        blocks.append((target, images, _slice_rows(v, n - g.index)))
    # unknowns: w (dim coords) then slice coefficients; equations A w - S^T c = 0
    n_extra = sum(len(s) for _, _, s in blocks)
    rows = []
    offset = dim
    for target, images, srows in blocks:
        for i in range(len(target)):
            row = [images[j][i] for j in range(dim)] + [0] * n_extra
            for k, s in enumerate(srows):
                row[offset + k] = -s[i]
            rows.append(row)
        offset += len(srows)
    sol = nullspace_cols(rows, dim + n_extra)
    w_rows = [s[:dim] for s in sol]
    sol_dim = rank(w_rows) if w_rows else 0
    vrows = _slice_rows(v, n)
    contains = (rank(w_rows + vrows) == sol_dim) if vrows else True
    return QuotientCheck(n, sol_dim, len(vrows), contains)


@dataclass
class CheckRecord:
    check: str
    degree: Optional[int]
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.check, "degree": self.degree, "passed": self.passed, "witness": self.witness}


@dataclass
class TheoremReport:
    weight: HighestWeight
    max_degree: int
    case: str
    p: Optional[int]
    records: list = field(default_factory=list)
    singular_vector: Optional[ModuleVector] = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list:
        return [r for r in self.records if not r.passed]

    def to_json(self) -> dict:
        return {
            "weight": self.weight.as_strings(),
            "max_degree": self.max_degree,
            "case": self.case,
            "p": self.p,
            "note": TRUNCATION_NOTE,
            "passed": self.passed,
            "records": [r.to_json() for r in self.records],
        }


def corollary5_holds(vectors: Sequence[ModuleVector], case: str, p: int) -> bool:
    """Every nonzero vector's lowest I-degree part has a term containing the p-factor."""
    for w in vectors:
        if not w:
            continue
        low = lowest_i_component(w)
        part = (lambda m: m.l_part) if case == "L" else (lambda m: m.i_part)
        if not any(p in part(m) for m in low.monomials()):
            return False
    return True


def verify_theorem1(hw: HighestWeight, max_degree: int) -> TheoremReport:
    """Run every structure check up to ``max_degree`` and collect one record per (check, degree)."""
    p, case = predicted_p(hw)
    module = verma_module(hw)
    if p is None:
        report = TheoremReport(hw, max_degree, "a", None)
        for n in range(1, max_degree + 1):
            det = shapovalov_det(n, hw)
            report.records.append(CheckRecord("det_nonzero", n, det != 0, {"det": format_scalar(det)}))
            res = singular_vectors(n, hw)
            report.records.append(CheckRecord("no_singular_vector", n, res.dimension == 0,
                                              {"kernel_dimension": res.dimension}))
        return report

    report = TheoremReport(hw, max_degree, "b", p)
    for n in range(1, min(p, max_degree + 1)):
        res = singular_vectors(n, hw)
        report.records.append(CheckRecord("no_singular_vector", n, res.dimension == 0,
                                          {"kernel_dimension": res.dimension}))
    if p > max_degree:
        report.records.append(CheckRecord("singular_vector_exists", p, False,
                                          {"reason": f"p = {p} exceeds max_degree"}))
        return report
    res = singular_vectors(p, hw)
    report.records.append(CheckRecord("singular_vector_exists", p, res.dimension >= 1,
                                      {"kernel_dimension": res.dimension,
                                       "vectors": [str(x) for x in res.kernel_basis]}))
    if not res.kernel_basis:
        return report
    v = res.kernel_basis[0]
    report.singular_vector = v
    report.records.append(CheckRecord("lemma4_lowest_component", p, lemma4_check(res, hw),
                                      {"lowest": str(lowest_i_component(v))}))
    if case == "I":
        report.records.append(CheckRecord("remark_pure_I", p, all(is_pure_I(x) for x in res.kernel_basis),
                                          {"vectors": [str(x) for x in res.kernel_basis]}))
    series = character_series(p, max_degree)
    for n in range(0, max_degree + 1):
        sl = submodule_slice(v, n)
        qdim = p2(n) - sl.rank
        report.records.append(CheckRecord("character", n, qdim == series[n],
                                          {"quotient_dim": qdim, "coefficient": series[n], "slice_rank": sl.rank}))
        report.records.append(CheckRecord("corollary5", n, corollary5_holds(sl.spanning_vectors, case, p), {}))
        c6 = corollary6_check(v, case, p, n)
        report.records.append(CheckRecord("corollary6", n, c6.passed,
                                          {"count": c6.count, "slice_rank": c6.slice_rank,
                                           "combined_rank": c6.combined_rank}))
        if n >= 1:
            q = quotient_singular_check(v, n)
            report.records.append(CheckRecord("lemma7_quotient", n, q.passed,
                                              {"solution_dim": q.solution_dim, "slice_rank": q.slice_rank}))
    return report
