"""The twisted Heisenberg-Virasoro algebra.

Basis ``L(n), I(n)`` (n in Z) and central ``C_L, C_LI, C_I`` with

    [L(n), L(m)] = (n-m) L(n+m) + delta_{n,-m} (n^3-n)/12 C_L
    [L(n), I(m)] = -m I(n+m) - delta_{n,-m} (n^2+n) C_LI
    [I(n), I(m)] = n delta_{n,-m} C_I

It is the universal central extension of the order <= 1 differential
operators on the circle, via L(n) -> -t^{n+1} d/dt and I(n) -> t^n; that
projection is not needed here and is not implemented.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering

from .scalars import ParamPoly, symbolic_parameters, parse_rational, format_scalar

MAX_INDEX = 10**6

_CENTRAL_RANK = {"C_L": 0, "C_LI": 1, "C_I": 2}
_KIND_RANK = {"C_L": 0, "C_LI": 1, "C_I": 2, "I": 3, "L": 4}


@total_ordering
@dataclass(frozen=True)
class Generator:
    """A basis element: ``kind`` is one of L, I, C_L, C_LI, C_I."""

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind in _CENTRAL_RANK and self.index != 0:
            raise ValueError("central generators carry no index")
        if abs(self.index) > MAX_INDEX:
            raise ValueError(f"generator index {self.index} exceeds |n| <= {MAX_INDEX}")

    @property
    def is_central(self) -> bool:
        return self.kind in _CENTRAL_RANK

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.index)

    def __lt__(self, other):
        if not isinstance(other, Generator):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.is_central:
            return self.kind
        return f"{self.kind}({self.index})"


def L(n: int) -> Generator:
    return Generator("L", n)


def I(n: int) -> Generator:  # noqa: E743
    return Generator("I", n)


C_L = Generator("C_L")
C_LI = Generator("C_LI")
C_I = Generator("C_I")


def degree_of(g: Generator) -> int:
    return 0 if g.is_central else g.index


class LieElement:
    """Finite linear combination of generators."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for g, c in dict(terms or {}).items():
            if not isinstance(g, Generator):
                raise TypeError(f"not a generator: {g!r}")
            if c:
                clean[g] = c
        self._terms = clean

    @classmethod
    def of(cls, g: Generator, coeff=1) -> "LieElement":
        return cls({g: coeff})

    @staticmethod
    def coerce(x) -> "LieElement":
        return x if isinstance(x, LieElement) else LieElement.of(x)

    def terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def __iter__(self):
        return iter(self.terms())

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, g: Generator):
        return self._terms.get(g, 0)

    def __add__(self, other):
        other = LieElement.coerce(other)
        out = dict(self._terms)
        for g, c in other._terms.items():
            out[g] = out.get(g, 0) + c
        return LieElement(out)

    def __neg__(self):
        return LieElement({g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-LieElement.coerce(other))

    def __mul__(self, scalar):
        return LieElement({g: c * scalar for g, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Generator):
            other = LieElement.of(other)
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LieElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def degree(self) -> int | None:
        """The common degree of all terms, or None if mixed or empty."""
        degs = {degree_of(g) for g in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for g, c in self.terms():
            if c == 1:
                parts.append(str(g))
            else:
                parts.append(f"{format_scalar(c)}*{g}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LieElement({str(self)!r})"


def bracket_generators(x: Generator, y: Generator) -> dict:
    """Structure constants: [x, y] as a dict Generator -> rational."""
    if x.is_central or y.is_central:
        return {}
    n, m = x.index, y.index
    out = {}
    if x.kind == "L" and y.kind == "L":
        if n != m:
            out[L(n + m)] = n - m
        if n == -m and n**3 != n:
            out[C_L] = Fraction(n**3 - n, 12)
    elif x.kind == "L" and y.kind == "I":
        if m:
            out[I(n + m)] = -m
        if n == -m and n * n + n:
            out[C_LI] = -(n * n + n)
    elif x.kind == "I" and y.kind == "L":
        if n:
            out[I(n + m)] = n
        if m == -n and m * m + m:
            out[C_LI] = m * m + m
    else:
        if n == -m and n:
            out[C_I] = n
    return out


def bracket(a, b) -> LieElement:
    """Bilinear Lie bracket of generators or LieElements."""
    a, b = LieElement.coerce(a), LieElement.coerce(b)
    out: dict = {}
    for x, cx in a.terms():
        for y, cy in b.terms():
            for g, c in bracket_generators(x, y).items():
                out[g] = out.get(g, 0) + cx * cy * c
    return LieElement(out)


def sigma_generator(g: Generator) -> LieElement:
    if g.kind == "L":
        return LieElement.of(L(-g.index))
    if g.kind == "I":
        if g.index == 0:
            return LieElement({I(0): 1, C_LI: -2})
        return LieElement.of(I(-g.index))
    if g.kind == "C_LI":
        return LieElement.of(C_LI, -1)
    return LieElement.of(g)


def sigma(a) -> LieElement:
    """The anti-involution: L(n) -> L(-n), I(n) -> I(-n) - 2 delta_{n,0} C_LI,
    C_L, C_I fixed, C_LI -> -C_LI."""
    out = LieElement()
    for g, c in LieElement.coerce(a).terms():
        out = out + sigma_generator(g) * c
    return out


@dataclass(frozen=True)
class HighestWeight:
    """Eigenvalues of L(0), I(0), C_L, C_LI, C_I on the highest-weight vector."""

    h: object = field(default=Fraction(0))
    hI: object = field(default=Fraction(0))
    cL: object = field(default=Fraction(0))
    cLI: object = field(default=Fraction(0))
    cI: object = field(default=Fraction(0))

    @classmethod
    def rational(cls, h=0, hI=0, cL=0, cLI=0, cI=0) -> "HighestWeight":
        vals = [parse_rational(v) if isinstance(v, str) else Fraction(v) for v in (h, hI, cL, cLI, cI)]
        return cls(*vals)

    @classmethod
    def symbolic(cls, level_zero: bool = False) -> "HighestWeight":
        h, hI, cL, cLI, cI = symbolic_parameters()
        if level_zero:
            cI = ParamPoly.constant(0)
        return cls(h, hI, cL, cLI, cI)

    def values(self) -> tuple:
        return (self.h, self.hI, self.cL, self.cLI, self.cI)

    @property
    def mode(self) -> str:
        return "symbolic" if any(isinstance(v, ParamPoly) for v in self.values()) else "evaluated"

    @property
    def level_zero(self) -> bool:
        return self.cI == 0

    def central_value(self, g: Generator):
        """Scalar by which a degree-zero generator other than L(0) acts on 1."""
        if g == I(0):
            return self.hI
        return {"C_L": self.cL, "C_LI": self.cLI, "C_I": self.cI}[g.kind]

    def sigma_twist(self) -> "HighestWeight":
        """The weight composed with the anti-involution (I(0) -> hI - 2 cLI, C_LI -> -cLI).

        The Shapovalov pairing is invariant as a pairing between the Verma
        module of the twisted weight (left) and of this weight (right).
        """
        return HighestWeight(self.h, self.hI - 2 * self.cLI, self.cL, -self.cLI, self.cI)

    def as_strings(self) -> dict:
        return {k: format_scalar(v) for k, v in zip(("h", "hI", "cL", "cLI", "cI"), self.values())}

    def __str__(self):
        s = self.as_strings()
        return f"M(h={s['h']}, hI={s['hI']}, cL={s['cL']}, cLI={s['cLI']}, cI={s['cI']})"
