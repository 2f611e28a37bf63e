"""Exact sparse multivariate Laurent polynomials over the integers.

Variables are small nonnegative integers.  Index ``j >= 1`` names the strand
variable ``t_j`` and index ``0`` (:data:`X`) names the axis variable ``x``.
The global monomial order is pure lex with ``t1 > t2 > ... > x``.

A monomial is stored as a tuple of ``(var, exponent)`` pairs sorted by
variable index with no zero exponents, so ``t1^2*x^-1`` is ``((0, -1), (1, 2))``.
"""

from __future__ import annotations

import heapq
import itertools
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import DivisorZero, NotDivisible, NotSquare

X = 0

Monomial = tuple  # tuple[tuple[int, int], ...]

ONE_MONOMIAL: Monomial = ()


def var_rank(v: int):
    """Sort key placing variables in decreasing lex priority."""
    return (v == X, v)


def var_name(v: int) -> str:
    return "x" if v == X else f"t{v}"


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e))


def _mono_inv(a: Monomial) -> Monomial:
    return tuple((v, -e) for v, e in a)


def _mono_from_map(exps: Mapping[int, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exps.items() if e))


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Supports ``+ - *``, integer powers (negative powers only for units),
    equality and hashing.  Integers are coerced where a polynomial is
    expected.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def monomial(cls, exps: Mapping[int, int] | None = None, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({_mono_from_map(exps or {}): coeff} if coeff else {})

    @classmethod
    def var(cls, v: int, power: int = 1) -> "LaurentPoly":
        return cls.monomial({v: power})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[int, int], int]]) -> "LaurentPoly":
        """Build from ``(exponent map, coeff)`` pairs, collecting like terms."""
        acc: dict = {}
        for exps, c in terms:
            m = _mono_from_map(exps)
            acc[m] = acc.get(m, 0) + c
        return cls(acc)

    @staticmethod
    def coerce(value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")

    # inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Copy of the ``monomial -> coefficient`` map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_unit(self) -> bool:
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def variables(self) -> set[int]:
        return {v for m in self._terms for v, _ in m}

    def min_exponents(self) -> dict[int, int]:
        """Per-variable minimum exponent over all terms (absent counts as 0)."""
        dicts = [dict(m) for m in self._terms]
        return {v: min(d.get(v, 0) for d in dicts) for v in self.variables()}

    def constant_term(self) -> int:
        return self._terms.get(ONE_MONOMIAL, 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending global (lex) order."""
        order = sorted(self.variables(), key=var_rank)
        return sorted(
            self._terms.items(),
            key=lambda mc: _dense(mc[0], order),
            reverse=True,
        )

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        order = sorted(self.variables(), key=var_rank)
        return max(self._terms.items(), key=lambda mc: _dense(mc[0], order))

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return LaurentPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit ``±monomial``."""
        if not self.is_unit():
            raise NotDivisible(f"{self} is not a unit of the Laurent ring")
        ((m, c),) = self._terms.items()
        return LaurentPoly._raw({_mono_inv(m): c})

    def shift(self, mono: Monomial) -> "LaurentPoly":
        """Multiply by a monomial given in internal form."""
        return LaurentPoly._raw({_mono_mul(m, mono): c for m, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # rendering ----------------------------------------------------------

    def to_text(self, names: Callable[[int], str] = var_name, latex: bool = False) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in sorted(m, key=lambda ve: var_rank(ve[0])):
                name = names(v)
                if latex:
                    name = _latex_name(name)
                    factors.append(name if e == 1 else f"{name}^{{{e}}}")
                else:
                    factors.append(name if e == 1 else f"{name}^{e}")
            sep = " " if latex else "*"
            body = sep.join(factors)
            mag = abs(c)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}{sep}{body}" if not latex else f"{mag} {body}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"


def _latex_name(name: str) -> str:
    if name.startswith("t") and name[1:].isdigit():
        return f"t_{{{name[1:]}}}"
    return name


def _dense(m: Monomial, order: Sequence[int]) -> tuple:
    d = dict(m)
    return tuple(d.get(v, 0) for v in order)


ZERO = LaurentPoly.const(0)
ONE = LaurentPoly.const(1)


def t(j: int, power: int = 1) -> LaurentPoly:
    """The strand variable ``t_j``."""
    if j < 1:
        raise ValueError("strand variables are indexed from 1")
    return LaurentPoly.var(j, power)


def x(power: int = 1) -> LaurentPoly:
    """The axis variable."""
    return LaurentPoly.var(X, power)


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def _normalizing_shift(p: LaurentPoly) -> Monomial:
    """Monomial ``u`` such that ``p*u`` has every variable's minimum exponent 0."""
    return _mono_from_map({v: -e for v, e in p.min_exponents().items()})


def canonicalize(p: LaurentPoly) -> LaurentPoly:
    """Representative of ``p`` up to units ``±monomial``.

    Every variable ends with minimum exponent 0 and the lex-greatest term
    has a positive coefficient.
    """
    if p.is_zero():
        return p
    q = p.shift(_normalizing_shift(p))
    _, c = q.leading_term()
    return -q if c < 0 else q


def units_equal(p: LaurentPoly, q: LaurentPoly) -> bool:
    return canonicalize(p) == canonicalize(q)


def substitute(p: LaurentPoly, mapping: Mapping[int, int]) -> LaurentPoly:
    """Rename variables; unmapped variables are left alone."""
    acc: dict = {}
    for m, c in p.items():
        exps: dict[int, int] = {}
        for v, e in m:
            w = mapping.get(v, v)
            exps[w] = exps.get(w, 0) + e
        key = _mono_from_map(exps)
        acc[key] = acc.get(key, 0) + c
    return LaurentPoly(acc)


def exact_divide(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``p == q*d``, raising :class:`NotDivisible` otherwise.

    Both operands are shifted into the ordinary polynomial ring, then reduced
    by the divisor's lex-leading term until the remainder vanishes.  Over a
    UFD the shifted quotient of an exact Laurent division is a polynomial, so
    the first leading term that the divisor cannot absorb proves a remainder.
    """
    p, d = LaurentPoly.coerce(p), LaurentPoly.coerce(d)
    if d.is_zero():
        raise DivisorZero("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    if d.is_unit():
        return p * d.inverse()

    sp, sd = _normalizing_shift(p), _normalizing_shift(d)
    P, D = p.shift(sp), d.shift(sd)
    order = sorted(P.variables() | D.variables(), key=var_rank)
    idx = {v: i for i, v in enumerate(order)}

    def dense(m):
        row = [0] * len(order)
        for v, e in m:
            row[idx[v]] = e
        return tuple(row)

    div = sorted(((dense(m), c) for m, c in D.items()), reverse=True)
    lead_m, lead_c = div[0]
    rest = div[1:]

    rem = {dense(m): c for m, c in P.items()}
    heap = [tuple(-e for e in k) for k in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while rem:
        key = tuple(-e for e in heapq.heappop(heap))
        c = rem.get(key)
        if not c:
            continue
        qm = tuple(a - b for a, b in zip(key, lead_m))
        if any(e < 0 for e in qm) or c % lead_c:
            raise NotDivisible(f"{p} is not divisible by {d}")
        qc = c // lead_c
        quot[qm] = qc
        del rem[key]
        for dm, dc in rest:
            k = tuple(a + b for a, b in zip(qm, dm))
            s = rem.get(k, 0) - qc * dc
            if s:
                if k not in rem:
                    heapq.heappush(heap, tuple(-e for e in k))
                rem[k] = s
            else:
                rem.pop(k, None)

    back = _mono_mul(_mono_inv(sp), sd)
    q = LaurentPoly._raw(
        {_mono_from_map(dict(zip(order, qm))): qc for qm, qc in quot.items()}
    )
    return q.shift(back)


# matrices -----------------------------------------------------------------


class PolyMatrix:
    """Immutable dense matrix over :class:`LaurentPoly`, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(LaurentPoly.coerce(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, itertools.chain.from_iterable(rows))

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(n, n, (ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "PolyMatrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __iter__(self) -> Iterator[tuple]:
        return (self.row(i) for i in range(self.rows))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def map(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, (fn(e) for e in self.entries))

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_shape(other)
        return PolyMatrix(self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_shape(other)
        return PolyMatrix(self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, p) -> "PolyMatrix":
        p = LaurentPoly.coerce(p)
        return self.map(lambda e: p * e)

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = r[k]
                    if a:
                        b = other.entries[k * other.cols + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, out)

    def __rmul__(self, other):
        return self.scale(other)

    def _check_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self)
        return f"PolyMatrix([{body}])"


def determinant(M: PolyMatrix) -> LaurentPoly:
    """Exact determinant by Bareiss fraction-free elimination.

    Each row first has a monomial unit factored out so that all entries are
    ordinary polynomials; the units are multiplied back at the end.
    """
    if not M.is_square:
        raise NotSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return ONE

    unit = ONE_MONOMIAL
    a = []
    for r in M:
        nonzero = [e for e in r if e]
        if not nonzero:
            return ZERO
        s = _normalizing_shift(_row_support(nonzero))
        unit = _mono_mul(unit, _mono_inv(s))
        a.append([e.shift(s) if e else e for e in r])

    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - aik * row_k[j]
                row_i[j] = exact_divide(num, prev) if num and prev != ONE else num
            row_i[k] = ZERO
        prev = pivot
    det = a[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.shift(unit)


def _row_support(entries: Sequence[LaurentPoly]) -> LaurentPoly:
    """A polynomial whose monomials are exactly those appearing in the row."""
    support: dict = {}
    for e in entries:
        for m in e._terms:
            support[m] = 1
    return LaurentPoly._raw(support)
