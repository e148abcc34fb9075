"""Seeded randomized identity checks.

Every suite draws from one ``random.Random(seed)`` and compares exact values,
so a (suite, seed) pair always runs the same cases.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import C_I, C_L, C_LI, HighestWeight, I, L, LieElement, bracket, sigma
from .shapovalov import pair
from .verma import (
    ModuleVector, PBWMonomial, basis_of_degree, i_degree_split, is_pure_I,
    lowest_i_component, partial_derivative, verma_module,
)

DEFAULT_CASES = 200


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.failures == 0

    def record(self, ok: bool, describe):
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = describe()

    def to_json(self) -> dict:
        return {"suite": self.name, "cases": self.cases, "failures": self.failures,
                "passed": self.passed, "counterexample": self.counterexample}


def random_rational(rng: random.Random, lo=-20, hi=20, max_den=10) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_weight(rng: random.Random, level_zero: bool = False) -> HighestWeight:
    vals = [random_rational(rng) for _ in range(5)]
    if level_zero:
        vals[4] = Fraction(0)
    return HighestWeight(*vals)


def random_generator(rng: random.Random, bound: int, central: bool = True):
    kinds = ["L", "I"] + (["C"] if central else [])
    kind = rng.choice(kinds)
    if kind == "C":
        return rng.choice([C_L, C_LI, C_I])
    n = rng.randint(-bound, bound)
    return L(n) if kind == "L" else I(n)


def random_element(rng: random.Random, bound: int, terms: int = 3) -> LieElement:
    out = LieElement()
    for _ in range(rng.randint(1, terms)):
        out = out + LieElement.of(random_generator(rng, bound), random_rational(rng, -5, 5, 3))
    return out


def random_vector(module, rng: random.Random, max_degree: int, degree: int | None = None,
                  terms: int = 3) -> ModuleVector:
    out = module.zero()
    for _ in range(rng.randint(1, terms)):
        d = rng.randint(0, max_degree) if degree is None else degree
        mono = rng.choice(basis_of_degree(d))
        c = random_rational(rng, -9, 9, 4) or Fraction(1)
        out = out + module.vector({mono: c})
    return out


def jacobi_suite(seed: int, cases: int = DEFAULT_CASES) -> SuiteResult:
    rng = random.Random(f"jacobi:{seed}")
    res = SuiteResult("jacobi")
    for _ in range(cases):
        x, y, z = (random_generator(rng, 6) for _ in range(3))
        total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        res.record(total == 0, lambda: f"x={x}, y={y}, z={z}: {total}")
    return res


def antisymmetry_suite(seed: int, cases: int = DEFAULT_CASES) -> SuiteResult:
    rng = random.Random(f"antisymmetry:{seed}")
    res = SuiteResult("antisymmetry")
    for _ in range(cases):
        x, y = random_generator(rng, 10), random_generator(rng, 10)
        res.record(bracket(x, y) == -bracket(y, x), lambda: f"x={x}, y={y}")
    return res


def sigma_suite(seed: int, cases: int = DEFAULT_CASES) -> SuiteResult:
    rng = random.Random(f"sigma:{seed}")
    res = SuiteResult("sigma_anti_involution")
    for _ in range(cases):
        x, y = random_element(rng, 8), random_element(rng, 8)
        ok = sigma(bracket(x, y)) == bracket(sigma(y), sigma(x)) and sigma(sigma(x)) == x
        res.record(ok, lambda: f"x={x}, y={y}")
    return res


def module_axiom_suite(seed: int, cases: int = DEFAULT_CASES) -> SuiteResult:
    rng = random.Random(f"module:{seed}")
    res = SuiteResult("module_axiom")
    module = verma_module(random_weight(rng))
    for _ in range(cases):
        x, y = random_generator(rng, 5), random_generator(rng, 5)
        v = random_vector(module, rng, 5)
        lhs = module.apply_generator(x, module.apply_generator(y, v)) - module.apply_generator(
            y, module.apply_generator(x, v))
        rhs = module.apply_generator(bracket(x, y), v)
        res.record(lhs == rhs, lambda: f"x={x}, y={y}, v={v}")
    return res


def _mode(g) -> int:
    return 0 if g.is_central else g.index


def contravariance_suite(seed: int, cases: int = DEFAULT_CASES) -> SuiteResult:
    """(x u | v) = (u | sigma(x) v) with u in M(twisted weight), v in M(weight)."""
    rng = random.Random(f"contravariance:{seed}")
    res = SuiteResult("contravariance")
    hw = random_weight(rng)
    right = verma_module(hw)
    left = verma_module(hw.sigma_twist())
    while res.cases < cases:
        x = random_generator(rng, 4)
        a = rng.randint(0, 4)
        b = a - _mode(x)
        if b < 0:
            continue
        u = random_vector(left, rng, 4, degree=a)
        v = random_vector(right, rng, 4, degree=b)
        lhs = pair(left.apply_generator(x, u), v)
        rhs = pair(u, right.apply_generator(sigma(x), v))
        res.record(lhs == rhs, lambda: f"x={x}, u={u}, v={v}: {lhs} != {rhs}")
    return res


def orthogonality_suite(seed: int, cases: int = DEFAULT_CASES) -> SuiteResult:
    rng = random.Random(f"orthogonality:{seed}")
    res = SuiteResult("degree_orthogonality")
    module = verma_module(random_weight(rng))
    while res.cases < cases:
        a, b = rng.randint(0, 5), rng.randint(0, 5)
        if a == b:
            continue
        u = random_vector(module, rng, 5, degree=a)
        v = random_vector(module, rng, 5, degree=b)
        res.record(pair(u, v) == 0, lambda: f"u={u}, v={v}")
    return res


def _random_i_homogeneous(module, rng, k: int, max_degree: int) -> ModuleVector:
    candidates = [m for d in range(max_degree + 1) for m in basis_of_degree(d) if m.i_degree == k]
    out = module.zero()
    for _ in range(rng.randint(1, 3)):
        out = out + module.vector({rng.choice(candidates): random_rational(rng, -9, 9, 4) or 1})
    return out


def lemma2_suite(seed: int, cases: int = DEFAULT_CASES) -> SuiteResult:
    rng = random.Random(f"lemma2:{seed}")
    res = SuiteResult("lemma2_i_degree")
    module = verma_module(random_weight(rng, level_zero=True))
    while res.cases < cases:
        k = rng.randint(0, 3)
        w = _random_i_homogeneous(module, rng, k, 5)
        if not w:
            continue
        n = rng.randint(1, 5)
        i_degs = set(i_degree_split(module.apply_generator(I(n), w)).components)
        l_degs = set(i_degree_split(module.apply_generator(L(n), w)).components)
        ok = i_degs <= {k, k + 1} and l_degs <= {k - 1, k}
        res.record(ok, lambda: f"k={k}, n={n}, w={w}: I-> {i_degs}, L-> {l_degs}")
    return res


def _component(v: ModuleVector, j: int) -> ModuleVector:
    return i_degree_split(v).components.get(j, v.module.zero())


def lemma3a_suite(seed: int, cases: int = DEFAULT_CASES) -> SuiteResult:
    """The I-degree-k part of I(n) w equals n (hI + (n-1) cLI) dw/dL(-n)."""
    rng = random.Random(f"lemma3a:{seed}")
    res = SuiteResult("lemma3a")
    hw = random_weight(rng, level_zero=True)
    module = verma_module(hw)
    while res.cases < cases:
        w = random_vector(module, rng, 5, terms=4)
        if not w:
            continue
        low = lowest_i_component(w)
        if is_pure_I(low):
            continue
        k = next(iter(low.monomials())).i_degree
        n = min(x for m in low.monomials() for x in m.l_part)
        lhs = _component(module.apply_generator(I(n), w), k)
        rhs = partial_derivative("L", n, low) * (n * (hw.hI + (n - 1) * hw.cLI))
        res.record(lhs == rhs, lambda: f"w={w}, n={n}")
    return res


def lemma3b_suite(seed: int, cases: int = DEFAULT_CASES) -> SuiteResult:
    """The I-degree-(k-1) part of L(m) w equals m (hI - (m+1) cLI) dw/dI(-m)."""
    rng = random.Random(f"lemma3b:{seed}")
    res = SuiteResult("lemma3b")
    hw = random_weight(rng, level_zero=True)
    module = verma_module(hw)
    while res.cases < cases:
        k = rng.randint(1, 3)
        pure = [m for d in range(1, 6) for m in basis_of_degree(d) if m.i_degree == k and not m.l_part]
        low = module.zero()
        for _ in range(rng.randint(1, 3)):
            low = low + module.vector({rng.choice(pure): random_rational(rng, -9, 9, 4) or 1})
        if not low:
            continue
        w = low + _random_i_homogeneous(module, rng, k + 1, 5)
        m = max(x for mono in low.monomials() for x in mono.i_part)
        lhs = _component(module.apply_generator(L(m), w), k - 1)
        rhs = partial_derivative("I", m, low) * (m * (hw.hI - (m + 1) * hw.cLI))
        res.record(lhs == rhs, lambda: f"w={w}, m={m}")
    return res


SUITES = {
    "jacobi": jacobi_suite,
    "antisymmetry": antisymmetry_suite,
    "sigma": sigma_suite,
    "module_axiom": module_axiom_suite,
    "contravariance": contravariance_suite,
    "orthogonality": orthogonality_suite,
    "lemma2": lemma2_suite,
    "lemma3a": lemma3a_suite,
    "lemma3b": lemma3b_suite,
}


def run_all(seed: int = 0, cases: int = DEFAULT_CASES) -> list:
    return [suite(seed, cases) for suite in SUITES.values()]
