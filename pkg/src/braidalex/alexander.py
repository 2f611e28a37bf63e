"""Multivariable Alexander polynomial of a closed braid.

The coloured reduced Burau matrix of a word is the product, top crossing
first, of elementary matrices that differ from the identity in one row and
carry the variable of the undercrossing strand.  Its characteristic
polynomial ``det(I - x B)`` with the strand variables identified along the
cycles of the braid permutation gives the polynomial of the closed braid
together with its axis.  Setting ``x = 1`` and dividing by the class of the
axis recovers the polynomial of the closed braid itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, Permutation, components_of, permutation_of, undercrossing_labels
from .errors import DivisibilityFailure, IndexOutOfRange, NotDivisible
from .laurent import (
    ONE,
    ZERO,
    X,
    LaurentPoly,
    PolyMatrix,
    canonicalize,
    determinant,
    exact_divide,
    substitute,
    var_name,
)


@dataclass(frozen=True)
class ColouredBurau:
    matrix: PolyMatrix
    strands: int


@dataclass(frozen=True)
class LinkInvariantReport:
    """Everything computed for one braid word.

    ``invariant`` is the Torres-Fox quotient for links with several
    components.  For a knot the true invariant ``Delta(t)/(1-t)`` is not a
    Laurent polynomial, so the numerator ``Delta(t)`` is stored instead and
    ``invariant == alexander``.
    """

    strands: int
    word: BraidWord
    components: int
    cycles: tuple[tuple[int, ...], ...]
    variables: tuple[str, ...]
    with_axis: LaurentPoly
    invariant: LaurentPoly
    alexander: LaurentPoly


def c_matrix(i: int, a: int, n: int, sign: int = 1) -> PolyMatrix:
    """Elementary coloured Burau factor for sigma_i^sign with label variable ``a``.

    Row ``i`` reads ``(a, -a, 1)`` in columns ``i-1, i, i+1`` for a positive
    crossing and ``(1, -1/a, 1/a)`` for a negative one; columns outside the
    ``(n-1) x (n-1)`` matrix are dropped.
    """
    if n < 2 or not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator {i} out of range for {n} strands")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    m = n - 1
    lab = LaurentPoly.var(a, sign)
    if sign > 0:
        row = {i - 1: lab, i: -lab, i + 1: ONE}
    else:
        row = {i - 1: ONE, i: -lab, i + 1: lab}
    entries = []
    for r in range(1, m + 1):
        for c in range(1, m + 1):
            if r == i:
                entries.append(row.get(c, ZERO))
            else:
                entries.append(ONE if r == c else ZERO)
    return PolyMatrix(m, m, entries)


def coloured_burau(word: BraidWord) -> ColouredBurau:
    n = word.strands
    if n < 2:
        return ColouredBurau(PolyMatrix.identity(0), n)
    labels = undercrossing_labels(word)
    B = PolyMatrix.identity(n - 1)
    for (i, sign), a in zip(word, labels):
        B = B * c_matrix(i, a, n, sign)
    return ColouredBurau(B, n)


def identification_map(perm: Permutation) -> dict[int, int]:
    """Send each ``t_j`` to ``t_c`` with ``c`` the least index on its cycle."""
    mapping = {X: X}
    for cycle in components_of(perm):
        rep = min(cycle)
        for j in cycle:
            mapping[j] = rep
    return mapping


def identified_burau(word: BraidWord) -> PolyMatrix:
    mapping = identification_map(permutation_of(word))
    return coloured_burau(word).matrix.map(lambda e: substitute(e, mapping))


def characteristic_polynomial(word: BraidWord) -> LaurentPoly:
    """``det(I - x B)`` after identification, not canonicalized."""
    B = identified_burau(word)
    M = PolyMatrix.identity(B.rows) - B.scale(LaurentPoly.var(X))
    return determinant(M)


def axis_link_polynomial(word: BraidWord) -> LaurentPoly:
    """Polynomial of the closed braid together with its axis, up to units."""
    return canonicalize(characteristic_polynomial(word))


def _det_at_x_equal_one(word: BraidWord) -> LaurentPoly:
    B = identified_burau(word)
    return determinant(PolyMatrix.identity(B.rows) - B)


def axis_class(perm: Permutation) -> LaurentPoly:
    """Image of the axis in the abelianised link group: prod t_c^(cycle length)."""
    exps = {min(cycle): len(cycle) for cycle in components_of(perm)}
    return LaurentPoly.monomial(exps)


def _divide(p: LaurentPoly, d: LaurentPoly, what: str) -> LaurentPoly:
    try:
        return exact_divide(p, d)
    except NotDivisible:
        raise DivisibilityFailure(f"{what}: {p} is not divisible by {d}") from None


def _knot_polynomial(det: LaurentPoly, n: int, rep: int) -> LaurentPoly:
    # det * (1 - t) / (1 - t^n) computed as det / (1 + t + ... + t^(n-1))
    tv = LaurentPoly.var(rep)
    geometric = _divide(ONE - tv ** n, ONE - tv, "geometric factor")
    return _divide(det, geometric, "knot quotient")


def alexander_invariant(word: BraidWord) -> LaurentPoly:
    """Torres-Fox quotient ``det(I - B) / (1 - prod t_c^n_c)``.

    For a knot this would be ``Delta(t)/(1-t)``, which is not a Laurent
    polynomial; the knot branch of :func:`alexander_polynomial` is returned
    instead.
    """
    perm = permutation_of(word)
    cycles = components_of(perm)
    det = _det_at_x_equal_one(word)
    if len(cycles) == 1:
        return canonicalize(_knot_polynomial(det, word.strands, cycles[0][0]))
    return canonicalize(_divide(det, ONE - axis_class(perm), "Torres-Fox quotient"))


def alexander_polynomial(word: BraidWord) -> LaurentPoly:
    return alexander_invariant(word)


def full_report(word: BraidWord) -> LinkInvariantReport:
    cycles = tuple(components_of(permutation_of(word)))
    names = tuple(var_name(min(c)) for c in cycles) + (var_name(X),)
    with_axis = axis_link_polynomial(word)
    invariant = alexander_invariant(word)
    return LinkInvariantReport(
        strands=word.strands,
        word=word,
        components=len(cycles),
        cycles=cycles,
        variables=names,
        with_axis=with_axis,
        invariant=invariant,
        alexander=invariant,
    )
