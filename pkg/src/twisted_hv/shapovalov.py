"""Shapovalov form, Gram matrices and the level-zero determinant product.

The pairing ``(u | v)`` is evaluated by peeling the leftmost creation operator
``X`` off each monomial of u and moving it across as ``sigma(X)``::

    (X u' | v) = (u' | sigma(X) v),    (1 | 1) = 1.

Because sigma does not fix I(0) or C_LI, this is invariant under *all* of
the algebra only as a pairing between the Verma module of the sigma-twisted
weight (left argument) and M(hw) (right argument); see
:meth:`HighestWeight.sigma_twist`.  For the creation operators the identity
holds within a single module.  Gram matrices are not symmetric in general.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import HighestWeight, I, L
from .scalars import (
    DEFAULT_SYMBOLIC_DIM, InexactDivisionError, ParamPoly, ScalarMatrix, UnsupportedModeError,
    det_fraction_free, exact_quotient, format_scalar,
)
from .verma import ONE, ModuleVector, PBWMonomial, VermaModule, basis_of_degree, verma_module


class FormulaDomainError(ValueError):
    """The level-zero product formula was asked about c_I != 0."""


class InconclusiveError(RuntimeError):
    """Every sample point was degenerate."""


def _sigma_creation(g):
    # sigma(I(-m)) = I(m), sigma(L(-n)) = L(n) for m, n > 0: no central terms
    return I(-g.index) if g.kind == "I" else L(-g.index)


def pair_monomials(module: VermaModule, a: PBWMonomial, b: PBWMonomial):
    """(a | b) for PBW monomials, memoized on the module."""
    if a.degree != b.degree:
        return 0
    if a == ONE:
        return 1 if b == ONE else 0
    key = (a, b)
    cache = module.pair_cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    first, rest = a.split_first()
    total = 0
    for m, c in module.act_on_monomial(_sigma_creation(first), b).items():
        total = total + c * pair_monomials(module, rest, m)
    cache[key] = total
    return total


def pair(u: ModuleVector, v: ModuleVector):
    """The Shapovalov pairing (u | v), computed in v's module.

    u may live in the same module as v or in the module of the sigma-twisted
    weight; only its PBW coordinates are used.
    """
    hw = v.module.hw
    if u.module.hw != hw and u.module.hw != hw.sigma_twist():
        raise ValueError("pair() needs u and v in the same (or sigma-twisted) Verma module")
    total = 0
    for a, ca in u.items():
        for b, cb in v.items():
            if a.degree == b.degree:
                p = pair_monomials(v.module, a, b)
                if p:
                    total = total + ca * cb * p
    return total


def gram_matrix(n: int, hw: HighestWeight) -> ScalarMatrix:
    """Entry (i, j) = (b_i | b_j) over the canonical degree-n basis."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    module = verma_module(hw)
    basis = basis_of_degree(n)
    one = ParamPoly.constant(1) if hw.mode == "symbolic" else Fraction(1)
    rows = [[one * pair_monomials(module, a, b) for b in basis] for a in basis]
    return ScalarMatrix.from_rows(rows, cols=len(basis))


def check_symbolic_size(n: int, hw: HighestWeight, max_symbolic_dim: int = DEFAULT_SYMBOLIC_DIM) -> None:
    # fail before the (expensive) symbolic Gram matrix is built
    if hw.mode == "symbolic" and len(basis_of_degree(n)) > max_symbolic_dim:
        raise UnsupportedModeError(
            f"symbolic determinant at degree {n} has dimension {len(basis_of_degree(n))} > {max_symbolic_dim}")


def shapovalov_det(n: int, hw: HighestWeight, max_symbolic_dim: int = DEFAULT_SYMBOLIC_DIM):
    check_symbolic_size(n, hw, max_symbolic_dim)
    return det_fraction_free(gram_matrix(n, hw), max_symbolic_dim=max_symbolic_dim)


@dataclass(frozen=True)
class PhiFactor:
    r: int
    value: object


def phi(r: int, hw: HighestWeight) -> PhiFactor:
    """(hI - (1+r) cLI)(hI - (1-r) cLI)."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    return PhiFactor(r, (hw.hI - (1 + r) * hw.cLI) * (hw.hI - (1 - r) * hw.cLI))


def p2(n: int) -> int:
    """Coefficient of q^n in prod_{k>=1} (1 - q^k)^(-2)."""
    if n < 0:
        return 0
    series = [1] + [0] * n
    for k in range(1, n + 1):
        for _ in range(2):
            # multiply by 1/(1 - q^k)
            for i in range(k, n + 1):
                series[i] += series[i - k]
    return series[n]


def determinant_index_set(n: int) -> list:
    """Pairs (r, s) with 1 <= s <= r <= n and rs <= n."""
    return [(r, s) for r in range(1, n + 1) for s in range(1, r + 1) if r * s <= n]


def predicted_det_product(n: int, hw: HighestWeight):
    """prod over (r, s) of phi_{r,s}^{p2(n - rs)}, with phi_{r,r} = phi_r
    and phi_{r,s} = phi_r phi_s otherwise.  Level zero only."""
    if hw.cI != 0:
        raise FormulaDomainError("the product formula is the c_I = 0 reduction")
    exponents: dict = {}
    for r, s in determinant_index_set(n):
        e = p2(n - r * s)
        exponents[r] = exponents.get(r, 0) + e
        if r != s:
            exponents[s] = exponents.get(s, 0) + e
    result = ParamPoly.constant(1) if hw.mode == "symbolic" else Fraction(1)
    for r in sorted(exponents):
        result = result * phi(r, hw).value ** exponents[r]
    return result


@dataclass
class GramReport:
    degree: int
    matrix: ScalarMatrix
    determinant: object
    predicted_product: Optional[object]
    kn_ratio: Optional[object]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "matrix": [[format_scalar(x) for x in row] for row in self.matrix.to_rows()],
            "determinant": format_scalar(self.determinant),
            "predicted_product": None if self.predicted_product is None else format_scalar(self.predicted_product),
            "kn_ratio": None if self.kn_ratio is None else format_scalar(self.kn_ratio),
        }


def gram_report(n: int, hw: HighestWeight, max_symbolic_dim: int = DEFAULT_SYMBOLIC_DIM) -> GramReport:
    check_symbolic_size(n, hw, max_symbolic_dim)
    m = gram_matrix(n, hw)
    det = det_fraction_free(m, max_symbolic_dim=max_symbolic_dim)
    product = predicted_det_product(n, hw) if hw.cI == 0 else None
    ratio = None
    if product is not None and product != 0:
        try:
            ratio = exact_quotient(det, product)
        except InexactDivisionError:
            ratio = None
    return GramReport(n, m, det, product, ratio)


@dataclass
class KnReport:
    degree: int
    mode: str
    ratios: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    constant: Optional[Fraction] = None
    passed: bool = False
    note: str = ""

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "mode": self.mode,
            "ratios": [format_scalar(r) for r in self.ratios],
            "skipped": [hw.as_strings() for hw in self.skipped],
            "K_n": None if self.constant is None else format_scalar(self.constant),
            "passed": self.passed,
            "note": self.note,
        }


def kn_constancy_check(n: int, sample_points: Sequence[HighestWeight] = (), mode: str = "evaluated",
                       max_symbolic_dim: int = DEFAULT_SYMBOLIC_DIM) -> KnReport:
    """Check det_n / product is one nonzero constant.

    Evaluated mode uses the sample points; symbolic mode divides the generic
    level-zero determinant by the generic product.
    """
    if mode == "symbolic":
        hw = HighestWeight.symbolic(level_zero=True)
        det = shapovalov_det(n, hw, max_symbolic_dim=max_symbolic_dim)
        prod = predicted_det_product(n, hw)
        report = KnReport(n, mode)
        try:
            q = exact_quotient(det, prod)
        except InexactDivisionError:
            report.note = "division is not exact"
            return report
        report.ratios = [q]
        if q.is_constant() and q:
            report.constant = q.constant_value()
            report.passed = True
        else:
            report.note = "quotient is not a nonzero constant"
        return report

    report = KnReport(n, mode)
    for hw in sample_points:
        if hw.cI != 0 or hw.cLI == 0:
            raise FormulaDomainError("sample points need c_I = 0 and c_LI != 0")
        prod = predicted_det_product(n, hw)
        if prod == 0:
            report.skipped.append(hw)
            continue
        report.ratios.append(Fraction(shapovalov_det(n, hw)) / prod)
    if not report.ratios:
        raise InconclusiveError(f"all sample points are degenerate at degree {n}")
    if report.skipped:
        report.note = f"skipped {len(report.skipped)} degenerate point(s)"
    first = report.ratios[0]
    report.passed = first != 0 and all(r == first for r in report.ratios)
    if report.passed:
        report.constant = first
    return report


def sample_points(rng, count: int = 5) -> list:
    """Level-zero rational weights: numerators in [-20, 20], denominators in [1, 10], c_LI != 0."""
    def draw():
        return Fraction(rng.randint(-20, 20), rng.randint(1, 10))

    points = []
    while len(points) < count:
        h, hI, cL, cLI = draw(), draw(), draw(), draw()
        if cLI == 0:
            continue
        points.append(HighestWeight(h, hI, cL, cLI, Fraction(0)))
    return points
