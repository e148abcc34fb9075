"""Exact scalars: rationals, parameter polynomials and fraction-free linear algebra.

Rationals are :class:`fractions.Fraction`.  Symbolic computations use
:class:`ParamPoly`, a sparse polynomial in the five highest-weight parameters
``(h, hI, cL, cLI, cI)`` with rational coefficients.  Both kinds support the
ring operations with ints, so the rest of the package is written once and runs
in either mode.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

VARIABLES = ("h", "hI", "cL", "cLI", "cI")
NVARS = len(VARIABLES)

Rational = Fraction
Scalar = Union[Fraction, "ParamPoly"]

_RATIONAL_RE = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")

DEFAULT_SYMBOLIC_DIM = 20


class UnsupportedModeError(TypeError):
    """An operation was asked to run in a scalar mode it does not support."""


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a reduced Fraction.

    Decimal and exponent notation are rejected on purpose.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    return Fraction(text.replace(" ", ""))


def format_rational(x) -> str:
    return str(Fraction(x))


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def _grlex(exps: tuple) -> tuple:
    return (sum(exps), exps)


class ParamPoly:
    """Sparse polynomial in ``h, hI, cL, cLI, cI`` over the rationals.

    Terms map exponent 5-tuples to nonzero Fractions.  Instances are treated
    as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, c in dict(terms).items():
                exps = tuple(exps)
                if len(exps) != NVARS or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps!r}")
                if c:
                    clean[exps] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "ParamPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "ParamPoly":
        return cls._raw({(0,) * NVARS: Fraction(c)} if c else {})

    @classmethod
    def variable(cls, name: str) -> "ParamPoly":
        exps = [0] * NVARS
        exps[VARIABLES.index(name)] = 1
        return cls._raw({tuple(exps): Fraction(1)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0,) * NVARS}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * NVARS, Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def leading_term(self):
        exps = max(self._terms, key=_grlex)
        return exps, self._terms[exps]

    def ordered_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    @staticmethod
    def _coerce(other):
        if isinstance(other, ParamPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return ParamPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return ParamPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ParamPoly._raw({})
            return ParamPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3], e1[4] + e2[4])
                out[e] = out.get(e, 0) + c1 * c2
        return ParamPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = ParamPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, ParamPoly):
            return self.exact_div(other)
        return NotImplemented

    def exact_div(self, other: "ParamPoly") -> "ParamPoly":
        """Quotient of an exact division; raises InexactDivisionError otherwise."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_constant():
            return self * (1 / other.constant_value())
        lead_e, lead_c = other.leading_term()
        rem = dict(self._terms)
        quot = {}
        while rem:
            e = max(rem, key=_grlex)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if any(x < 0 for x in qe):
                raise InexactDivisionError("division leaves a remainder")
            qc = c / lead_c
            quot[qe] = qc
            for oe, oc in other._terms.items():
                te = tuple(a + b for a, b in zip(qe, oe))
                v = rem.get(te, 0) - qc * oc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return ParamPoly._raw(quot)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, point) -> Fraction:
        """Substitute rational values for all five parameters.

        ``point`` is a sequence in variable order or an object with
        attributes ``h, hI, cL, cLI, cI``.
        """
        if not isinstance(point, (tuple, list)):
            point = tuple(getattr(point, v) for v in VARIABLES)
        vals = [Fraction(x) for x in point]
        if len(vals) != NVARS:
            raise ValueError("point needs all five coordinates")
        total = Fraction(0)
        for exps, c in self._terms.items():
            t = c
            for v, e in zip(vals, exps):
                if e:
                    t *= v ** e
            total += t
        return total

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.ordered_terms():
            mono = " ".join(f"{v}^{e}" for v, e in zip(VARIABLES, exps) if e)
            parts.append(f"{c} * {mono}" if mono else str(c))
        return " + ".join(parts)

    def __repr__(self):
        return f"ParamPoly({str(self)!r})"


def symbolic_parameters():
    """The five parameters as ParamPoly variables, in canonical order."""
    return tuple(ParamPoly.variable(v) for v in VARIABLES)


def is_symbolic(x) -> bool:
    return isinstance(x, ParamPoly)


def format_scalar(x) -> str:
    if isinstance(x, ParamPoly):
        if x.is_constant():
            return str(x.constant_value())
        return str(x)
    return str(Fraction(x))


def exact_quotient(a, b):
    if isinstance(a, ParamPoly) or isinstance(b, ParamPoly):
        return ParamPoly._coerce(a).exact_div(ParamPoly._coerce(b))
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError(f"{a} / {b} is not an integer")
        return q
    return Fraction(a) / b


def poly_eval(p, point) -> Fraction:
    if isinstance(p, ParamPoly):
        return p.evaluate(point)
    return Fraction(p)


@dataclass(frozen=True)
class ScalarMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "ScalarMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "ScalarMatrix":
        return cls.from_rows([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def mode(self) -> str:
        return "symbolic" if any(isinstance(x, ParamPoly) for x in self.entries) else "evaluated"

    def permuted(self, perm: Sequence[int]) -> "ScalarMatrix":
        """Simultaneous row/column permutation."""
        rows = self.to_rows()
        return ScalarMatrix.from_rows([[rows[i][j] for j in perm] for i in perm], cols=self.cols)


def _integer_rows(rows):
    """Scale each rational row to integers; returns (int rows, product of scales)."""
    out, scale = [], Fraction(1)
    for r in rows:
        den = 1
        for x in r:
            d = Fraction(x).denominator
            den = den * d // _gcd(den, d)
        out.append([int(Fraction(x) * den) for x in r])
        scale *= den
    return out, scale


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _bareiss(a: list, pick) -> object:
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        piv = pick(a, k)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = exact_quotient(rowi[j] * akk - aik * rowk[j], prev)
            rowi[k] = 0
        prev = akk
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def _first_nonzero(a, k):
    for i in range(k, len(a)):
        if a[i][k]:
            return i
    return None


def _sparsest_nonzero(a, k):
    best, size = None, None
    for i in range(k, len(a)):
        x = a[i][k]
        if x:
            s = len(x) if isinstance(x, ParamPoly) else 1
            if size is None or s < size:
                best, size = i, s
    return best


def det_fraction_free(m: ScalarMatrix, max_symbolic_dim: int = DEFAULT_SYMBOLIC_DIM):
    """Exact determinant by Bareiss elimination.

    Rational matrices are scaled row-wise to integers first so the elimination
    runs on Python ints.  Symbolic matrices larger than ``max_symbolic_dim``
    are refused.
    """
    if not m.is_square:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    if m.mode == "symbolic":
        if n > max_symbolic_dim:
            raise UnsupportedModeError(
                f"symbolic determinant of dimension {n} exceeds ceiling {max_symbolic_dim}")
        rows = [[ParamPoly._coerce(x) for x in r] for r in m.to_rows()]
        if n == 1:
            return rows[0][0]
        return _bareiss(rows, _sparsest_nonzero)
    rows, scale = _integer_rows(m.to_rows())
    if n == 1:
        return Fraction(rows[0][0]) / scale
    return Fraction(_bareiss(rows, _first_nonzero)) / scale


def rref(rows: Sequence[Sequence]):
    """Reduced row echelon form over the rationals.

    Returns ``(R, pivots)`` with R holding only the nonzero rows.
    """
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        row = [x * inv for x in a[r]]
        a[r] = row
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], row)]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def _check_rational(rows):
    for r in rows:
        for x in r:
            if isinstance(x, ParamPoly):
                raise UnsupportedModeError("nullspace needs evaluated (rational) entries")


def nullspace(m) -> list:
    """Basis of the right kernel as lists of Fractions.

    One vector per free column f: coordinate f is 1, pivot coordinates are
    read off the reduced echelon form, everything else is 0.  So every basis
    vector's last nonzero coordinate is 1.
    """
    rows = m.to_rows() if isinstance(m, ScalarMatrix) else [list(r) for r in m]
    ncols = m.cols if isinstance(m, ScalarMatrix) else (len(rows[0]) if rows else 0)
    _check_rational(rows)
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def rank(rows: Iterable[Sequence]) -> int:
    rows = [list(r) for r in rows]
    _check_rational(rows)
    return len(rref(rows)[1])


def row_basis(rows: Iterable[Sequence]) -> list:
    """A basis (the nonzero RREF rows) of the row span."""
    rows = [list(r) for r in rows]
    _check_rational(rows)
    return rref(rows)[0]
