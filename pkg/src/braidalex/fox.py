"""Fox free differential calculus on the closed-braid-plus-axis group.

Independent route to the axis polynomial: braid automorphisms of the free
group act on meridians ``x_1..x_n``, the link group of the closed braid and
its axis is presented by relations ``F(x_i) = x^-1 x_i x``, and the Alexander
matrix comes from abelianised Fox derivatives of those relations.

Symbols use the same integer convention as :mod:`braidalex.laurent`: ``j``
is the meridian ``x_j`` and ``0`` is the axis meridian.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .alexander import identification_map
from .braid import BraidWord, permutation_of
from .errors import DivisibilityFailure, IndexOutOfRange, NotDivisible
from .laurent import (
    ONE,
    X,
    LaurentPoly,
    PolyMatrix,
    canonicalize,
    determinant,
    exact_divide,
)

Letter = tuple  # (symbol, sign)


class FreeWord:
    """Word in a free group, stored as ``(symbol, ±1)`` letters.

    Construction does not reduce; :meth:`reduced` cancels adjacent inverse
    pairs.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = tuple((int(s), int(e)) for s, e in letters)

    @classmethod
    def gen(cls, symbol: int, sign: int = 1) -> "FreeWord":
        return cls(((symbol, sign),))

    def reduced(self) -> "FreeWord":
        stack: list[Letter] = []
        for s, e in self.letters:
            if stack and stack[-1][0] == s and stack[-1][1] == -e:
                stack.pop()
            else:
                stack.append((s, e))
        return FreeWord(stack)

    def inverse(self) -> "FreeWord":
        return FreeWord((s, -e) for s, e in reversed(self.letters))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.reduced().letters == other.reduced().letters

    def __hash__(self):
        return hash(self.reduced().letters)

    def __repr__(self):
        def fmt(s, e):
            name = "x" if s == X else f"x{s}"
            return name if e == 1 else f"{name}^-1"
        return "FreeWord(" + " ".join(fmt(s, e) for s, e in self.letters) + ")"


def _sigma_images(i: int, sign: int) -> dict[int, FreeWord]:
    a, b = i, i + 1
    if sign > 0:
        # x_i -> x_{i+1},  x_{i+1} -> x_{i+1} x_i x_{i+1}^-1
        return {a: FreeWord(((b, 1),)), b: FreeWord(((b, 1), (a, 1), (b, -1)))}
    # inverse substitution: x_{i+1} -> x_i,  x_i -> x_i^-1 x_{i+1} x_i
    return {b: FreeWord(((a, 1),)), a: FreeWord(((a, -1), (b, 1), (a, 1)))}


def apply_sigma(word: FreeWord, i: int, sign: int, strands: int | None = None) -> FreeWord:
    """Apply the elementary automorphism of sigma_i^sign to every letter."""
    if i < 1 or (strands is not None and i > strands - 1):
        raise IndexOutOfRange(f"generator {i} out of range")
    images = _sigma_images(i, sign)
    out: list[Letter] = []
    for s, e in word.letters:
        img = images.get(s)
        if img is None:
            out.append((s, e))
        else:
            out.extend(img.letters if e > 0 else img.inverse().letters)
    return FreeWord(out).reduced()


def apply_braid(fw: FreeWord, word: BraidWord, order: str = "top-first") -> FreeWord:
    """Push a free word through the elementary automorphisms of ``word``.

    ``"top-first"`` substitutes the first (top) letter first, so that
    ``F(w1 w2) = F(w2) ∘ F(w1)`` and the Fox Jacobian of ``w`` factors with
    the top crossing leftmost, matching the Burau product.  ``"bottom-first"``
    is the reverse convention, kept so both can be compared.
    """
    letters = list(word)
    if order == "bottom-first":
        letters.reverse()
    elif order != "top-first":
        raise ValueError(f"unknown order {order!r}")
    for i, sign in letters:
        fw = apply_sigma(fw, i, sign)
    return fw


def braid_automorphism(word: BraidWord, generator: int, order: str = "top-first") -> FreeWord:
    """Image of the meridian ``x_generator`` under the automorphism of ``word``."""
    if not 1 <= generator <= word.strands:
        raise IndexOutOfRange(f"meridian x{generator} out of range")
    return apply_braid(FreeWord.gen(generator), word, order)


def fox_derivative_eval(
    word: FreeWord, wrt: int, phi: Mapping[int, LaurentPoly]
) -> LaurentPoly:
    """Abelianised Fox derivative ``phi(d word / d wrt)``.

    Unrolls the product rule: an occurrence of ``wrt`` contributes
    ``phi(prefix)`` and an occurrence of ``wrt^-1`` contributes
    ``-phi(prefix) * phi(wrt)^-1``.
    """
    acc: dict = {}
    prefix = ONE
    for s, e in word.reduced().letters:
        g = phi[s]
        if s == wrt:
            if e > 0:
                term = prefix
            else:
                term = -(prefix * g.inverse())
            for m, c in term.items():
                acc[m] = acc.get(m, 0) + c
        prefix = prefix * (g if e > 0 else g.inverse())
    return LaurentPoly(acc)


def evaluate_word(word: FreeWord, phi: Mapping[int, LaurentPoly]) -> LaurentPoly:
    out = ONE
    for s, e in word.letters:
        out = out * (phi[s] if e > 0 else phi[s].inverse())
    return out


def abelianisation(word: BraidWord) -> dict[int, LaurentPoly]:
    """``x_j -> t_c`` (cycle representative) and axis ``x -> x``."""
    mapping = identification_map(permutation_of(word))
    return {s: LaurentPoly.var(v) for s, v in mapping.items()}


def relations(word: BraidWord, order: str = "top-first") -> list[tuple[FreeWord, FreeWord]]:
    """Pairs ``(F(x_i), x^-1 x_i x)`` for i = 1..n."""
    axis = FreeWord.gen(X)
    return [
        (braid_automorphism(word, i, order), axis.inverse() * FreeWord.gen(i) * axis)
        for i in range(1, word.strands + 1)
    ]


def alexander_matrix(word: BraidWord, order: str = "top-first") -> PolyMatrix:
    """Abelianised Fox matrix of the relation differences, columns x_1..x_n, x."""
    phi = abelianisation(word)
    n = word.strands
    cols: Sequence[int] = list(range(1, n + 1)) + [X]
    entries = []
    for lhs, rhs in relations(word, order):
        for g in cols:
            entries.append(fox_derivative_eval(lhs, g, phi) - fox_derivative_eval(rhs, g, phi))
    return PolyMatrix(n, n + 1, entries)


def oracle_axis_polynomial(word: BraidWord, order: str = "top-first") -> LaurentPoly:
    """Axis polynomial from the Fox matrix with the axis column deleted."""
    A = alexander_matrix(word, order)
    n = word.strands
    minor = PolyMatrix(n, n, (A[i, j] for i in range(n) for j in range(n)))
    det = determinant(minor)
    try:
        quotient = exact_divide(det, ONE - LaurentPoly.var(X))
    except NotDivisible:
        raise DivisibilityFailure(f"Fox minor {det} not divisible by 1 - x") from None
    return canonicalize(quotient)

