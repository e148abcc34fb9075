"""Verma modules M(h, hI, cL, cLI, cI) in the PBW basis

    I(-m_1) ... I(-m_k) L(-n_1) ... L(-n_s) 1,   m_1 >= ... >= m_k > 0, n_1 >= ... >= n_s > 0.

The module action is computed by normal-ordering: a generator is commuted
rightward through the leftmost factor, ``g X rest = X (g rest) + [g, X] rest``,
until it either stands in normal position or reaches the highest-weight
vector.  Results are memoized per (generator, monomial).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .algebra import Generator, HighestWeight, LieElement, I, L, bracket_generators
from .scalars import format_scalar


def _factor_key(g: Generator) -> tuple:
    # normal order: all I's before all L's, larger index first
    return (0 if g.kind == "I" else 1, g.index)


@dataclass(frozen=True)
class PBWMonomial:
    i_part: tuple = ()
    l_part: tuple = ()

    def __post_init__(self):
        for part in (self.i_part, self.l_part):
            if any(x <= 0 for x in part) or any(a < b for a, b in zip(part, part[1:])):
                raise ValueError(f"parts must be weakly decreasing positive integers: {part!r}")

    @classmethod
    def of(cls, i_part: Sequence[int] = (), l_part: Sequence[int] = ()) -> "PBWMonomial":
        return cls(tuple(sorted(i_part, reverse=True)), tuple(sorted(l_part, reverse=True)))

    @property
    def degree(self) -> int:
        return sum(self.i_part) + sum(self.l_part)

    @property
    def i_degree(self) -> int:
        return len(self.i_part)

    @property
    def length(self) -> int:
        return len(self.i_part) + len(self.l_part)

    def factors(self) -> tuple:
        """The word of creation operators, left to right."""
        return tuple(I(-m) for m in self.i_part) + tuple(L(-n) for n in self.l_part)

    def sort_key(self) -> tuple:
        return (self.degree, tuple(_factor_key(g) for g in self.factors()))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def split_first(self):
        if self.i_part:
            return I(-self.i_part[0]), PBWMonomial(self.i_part[1:], self.l_part)
        return L(-self.l_part[0]), PBWMonomial(self.i_part, self.l_part[1:])

    def prepend(self, g: Generator) -> "PBWMonomial":
        # caller guarantees g precedes the current first factor in normal order
        if g.kind == "I":
            return PBWMonomial((-g.index,) + self.i_part, self.l_part)
        return PBWMonomial(self.i_part, (-g.index,) + self.l_part)

    def count(self, kind: str, index: int) -> int:
        return (self.i_part if kind == "I" else self.l_part).count(index)

    def without_one(self, kind: str, index: int) -> "PBWMonomial":
        if kind == "I":
            part = list(self.i_part)
            part.remove(index)
            return PBWMonomial(tuple(part), self.l_part)
        part = list(self.l_part)
        part.remove(index)
        return PBWMonomial(self.i_part, tuple(part))

    def to_json(self) -> dict:
        return {"I": list(self.i_part), "L": list(self.l_part)}

    def __str__(self):
        words = []
        for kind, part in (("I", self.i_part), ("L", self.l_part)):
            for idx in sorted(set(part), reverse=True):
                k = part.count(idx)
                words.append(f"{kind}(-{idx})" + (f"^{k}" if k > 1 else ""))
        return " ".join(words + ["𝟏"])


ONE = PBWMonomial()


def _partitions(n: int, largest: int | None = None):
    if n == 0:
        yield ()
        return
    largest = n if largest is None else min(largest, n)
    for first in range(largest, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def basis_of_degree(n: int) -> tuple:
    """All PBW monomials of degree n in canonical order."""
    if n < 0:
        return ()
    monos = [PBWMonomial(ip, lp)
             for a in range(n + 1)
             for ip, lp in product(_partitions(a), _partitions(n - a))]
    return tuple(sorted(monos, key=PBWMonomial.sort_key))


def _accumulate(out: dict, mono, c):
    v = out.get(mono, 0) + c
    if v:
        out[mono] = v
    else:
        out.pop(mono, None)


class ModuleVector:
    """Finite combination of PBW monomials in a fixed Verma module."""

    __slots__ = ("module", "_terms")

    def __init__(self, module: "VermaModule", terms=None):
        self.module = module
        self._terms = {m: c for m, c in dict(terms or {}).items() if c}

    @property
    def weight(self) -> HighestWeight:
        return self.module.hw

    def terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coeff(self, mono: PBWMonomial):
        return self._terms.get(mono, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other):
        if not isinstance(other, ModuleVector):
            raise TypeError(f"expected ModuleVector, got {type(other).__name__}")
        if other.module.hw != self.module.hw:
            raise ValueError("vectors live in different Verma modules")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            _accumulate(out, m, c)
        return ModuleVector(self.module, out)

    def __neg__(self):
        return ModuleVector(self.module, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return ModuleVector(self.module, {m: c * scalar for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / Fraction(scalar))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.module.hw == other.module.hw and self._terms == other._terms

    __hash__ = None

    def degrees(self) -> set:
        return {m.degree for m in self._terms}

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("vector is not homogeneous (or is zero)")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coordinates(self, basis: Sequence[PBWMonomial]) -> list:
        index = set(basis)
        stray = [m for m in self._terms if m not in index]
        if stray:
            raise ValueError(f"monomial {stray[0]} is outside the given basis")
        return [self._terms.get(b, 0) for b in basis]

    def to_json(self) -> list:
        return [{"monomial": m.to_json(), "coeff": format_scalar(c)} for m, c in self.terms()]

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms():
            if c == 1:
                parts.append(str(m))
            else:
                parts.append(f"({format_scalar(c)}) {m}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ModuleVector({str(self)!r})"


class VermaModule:
    """M(hw) with a memoized normal-ordering action.

    The caches only ever store deterministic results, so repeated or
    concurrent fills are harmless.
    """

    def __init__(self, hw: HighestWeight):
        self.hw = hw
        self._act_cache: dict = {}
        self.pair_cache: dict = {}

    def __repr__(self):
        return f"VermaModule({self.hw})"

    def basis(self, n: int) -> tuple:
        return basis_of_degree(n)

    def vector(self, terms) -> ModuleVector:
        if isinstance(terms, PBWMonomial):
            terms = {terms: 1}
        return ModuleVector(self, terms)

    def monomial(self, i_part=(), l_part=()) -> ModuleVector:
        return self.vector(PBWMonomial.of(i_part, l_part))

    def highest_weight_vector(self) -> ModuleVector:
        return self.vector(ONE)

    def zero(self) -> ModuleVector:
        return ModuleVector(self)

    def from_coordinates(self, coords: Sequence, basis: Sequence[PBWMonomial]) -> ModuleVector:
        return ModuleVector(self, dict(zip(basis, coords)))

    def act_on_monomial(self, g: Generator, mono: PBWMonomial) -> dict:
        """g . mono as a dict monomial -> scalar (cached; do not mutate)."""
        key = (g, mono)
        hit = self._act_cache.get(key)
        if hit is None:
            hit = self._act(g, mono)
            self._act_cache[key] = hit
        return hit

    def _act(self, g: Generator, mono: PBWMonomial) -> dict:
        hw = self.hw
        if g.is_central or g == I(0):
            c = hw.central_value(g)
            return {mono: c} if c else {}
        if g == L(0):
            c = hw.h + mono.degree
            return {mono: c} if c else {}
        if mono == ONE:
            return {} if g.index > 0 else {ONE.prepend(g): 1}
        first, rest = mono.split_first()
        if g.index < 0 and _factor_key(g) <= _factor_key(first):
            return {mono.prepend(g): 1}
        out: dict = {}
        for m, c in self.act_on_monomial(g, rest).items():
            for m2, c2 in self.act_on_monomial(first, m).items():
                _accumulate(out, m2, c * c2)
        for gen, cb in bracket_generators(g, first).items():
            for m, c in self.act_on_monomial(gen, rest).items():
                _accumulate(out, m, cb * c)
        return out

    def apply_generator(self, g, v: ModuleVector) -> ModuleVector:
        """Action of a generator or LieElement on v."""
        if isinstance(g, LieElement):
            out: dict = {}
            for gen, cg in g.terms():
                for mono, c in v.items():
                    for m, c2 in self.act_on_monomial(gen, mono).items():
                        _accumulate(out, m, cg * c * c2)
            return ModuleVector(self, out)
        out = {}
        for mono, c in v.items():
            for m, c2 in self.act_on_monomial(g, mono).items():
                _accumulate(out, m, c * c2)
        return ModuleVector(self, out)

    def apply_word(self, gs: Sequence, v: ModuleVector) -> ModuleVector:
        """Apply ``gs[0] gs[1] ... gs[-1]`` to v (rightmost acts first)."""
        for g in reversed(list(gs)):
            v = self.apply_generator(g, v)
        return v

    def apply_monomial(self, word: PBWMonomial, v: ModuleVector) -> ModuleVector:
        """The PBW word of ``word`` applied to v, i.e. ``word`` viewed in U(L_-)."""
        return self.apply_word(word.factors(), v)


@lru_cache(maxsize=64)
def verma_module(hw: HighestWeight) -> VermaModule:
    """Shared VermaModule per weight, so caches are reused."""
    return VermaModule(hw)


def apply_generator(g, v: ModuleVector) -> ModuleVector:
    return v.module.apply_generator(g, v)


def apply_word(gs: Sequence, v: ModuleVector) -> ModuleVector:
    return v.module.apply_word(gs, v)


@dataclass
class IDegreeSplit:
    components: dict

    def reconstruct(self) -> ModuleVector:
        vecs = list(self.components.values())
        total = vecs[0]
        for w in vecs[1:]:
            total = total + w
        return total


def i_degree_split(v: ModuleVector) -> IDegreeSplit:
    parts: dict = {}
    for m, c in v.items():
        parts.setdefault(m.i_degree, {})[m] = c
    return IDegreeSplit({j: ModuleVector(v.module, parts[j]) for j in sorted(parts)})


def lowest_i_component(v: ModuleVector) -> ModuleVector:
    """The nonzero component of smallest I-degree."""
    if not v:
        raise ValueError("the zero vector has no lowest I-degree component")
    split = i_degree_split(v).components
    return split[min(split)]


def partial_derivative(kind: str, index: int, v: ModuleVector) -> ModuleVector:
    """Formal Leibniz derivative d/dI(-index) or d/dL(-index) in the PBW basis."""
    if kind not in ("I", "L") or index <= 0:
        raise ValueError("partial_derivative needs kind 'I' or 'L' and a positive index")
    out: dict = {}
    for m, c in v.items():
        k = m.count(kind, index)
        if k:
            _accumulate(out, m.without_one(kind, index), c * k)
    return ModuleVector(v.module, out)


def is_pure_I(v: ModuleVector) -> bool:
    return all(not m.l_part for m in v.monomials())


def coordinate_rows(vectors: Iterable[ModuleVector], basis: Sequence[PBWMonomial]) -> list:
    return [v.coordinates(basis) for v in vectors]
