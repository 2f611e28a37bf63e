import pytest
import sympy
from hypothesis import given, settings
from oracles import T, standard_reduced_burau, sympy_knot_polynomial, to_sympy
from test_braid import FIGURE_ONE, words

from braidalex import alexander
from braidalex.alexander import (
    alexander_invariant,
    alexander_polynomial,
    axis_link_polynomial,
    c_matrix,
    characteristic_polynomial,
    coloured_burau,
    full_report,
    identification_map,
)
from braidalex.braid import BraidWord, Permutation, parse_word, permutation_of
from braidalex.errors import DivisibilityFailure, IndexOutOfRange
from braidalex.laurent import ONE, ZERO, X, PolyMatrix, canonicalize, substitute, t, units_equal, x

t1, t2, t3, t4 = t(1), t(2), t(3), t(4)
TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))
HOPF = BraidWord(2, (1, 1))


def rows(M):
    return M.to_rows()


def test_c_matrix_middle_row():
    assert rows(c_matrix(2, 4, 4)) == [[1, 0, 0], [t4, -t4, 1], [0, 0, 1]]


def test_c_matrix_truncated_at_edges():
    assert rows(c_matrix(1, 1, 4)) == [[-t1, 1, 0], [0, 1, 0], [0, 0, 1]]
    assert rows(c_matrix(3, 2, 4)) == [[1, 0, 0], [0, 1, 0], [0, t2, -t2]]
    assert rows(c_matrix(1, 2, 2)) == [[-t2]]


def test_c_matrix_negative_row():
    assert rows(c_matrix(2, 3, 4, -1)) == [[1, 0, 0], [1, -t(3, -1), t(3, -1)], [0, 0, 1]]


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_c_matrix_inverse_pair(n):
    for i in range(1, n):
        for a in (1, n, X):
            assert c_matrix(i, a, n, 1) * c_matrix(i, a, n, -1) == PolyMatrix.identity(n - 1)


def test_c_matrix_range():
    with pytest.raises(IndexOutOfRange):
        c_matrix(3, 1, 3)
    with pytest.raises(IndexOutOfRange):
        c_matrix(1, 1, 1)


def test_coloured_burau_figure_one():
    C = c_matrix
    expected = (
        C(1, 1, 4) * C(2, 4, 4, -1) * C(1, 2, 4) * C(2, 1, 4, -1)
        * C(1, 4, 4) * C(2, 2, 4, -1) * C(3, 4, 4)
    )
    assert coloured_burau(parse_word(FIGURE_ONE, 4)).matrix == expected


def test_coloured_burau_small():
    # labels (2, 1, 2): (-t2)(-t1)(-t2)
    assert rows(coloured_burau(TREFOIL).matrix) == [[-t1 * t2 ** 2]]
    assert coloured_burau(BraidWord(4)).matrix == PolyMatrix.identity(3)
    assert coloured_burau(BraidWord(1)).matrix == PolyMatrix.identity(0)


def test_identification_map_examples():
    fig = permutation_of(parse_word(FIGURE_ONE, 4))
    assert identification_map(fig) == {X: X, 1: 1, 2: 2, 3: 3, 4: 3}
    assert identification_map(Permutation.identity(3)) == {X: X, 1: 1, 2: 2, 3: 3}
    assert identification_map(Permutation((2, 1))) == {X: X, 1: 1, 2: 1}


def test_axis_polynomial_examples():
    assert axis_link_polynomial(BraidWord(3)) == canonicalize((1 - x()) ** 2)
    assert axis_link_polynomial(TREFOIL) == canonicalize(1 + x() * t1 ** 3)
    assert axis_link_polynomial(HOPF) == canonicalize(1 - x() * t1 * t2)
    assert axis_link_polynomial(BraidWord(1)) == ONE


def test_alexander_invariant_examples():
    assert alexander_invariant(HOPF) == ONE
    assert alexander_invariant(BraidWord(2)) == ZERO
    # knot branch: (1 + t^3) / (1 + t)
    assert alexander_invariant(TREFOIL) == t1 ** 2 - t1 + 1


def test_alexander_polynomial_examples():
    assert alexander_polynomial(TREFOIL) == t1 ** 2 - t1 + 1
    assert alexander_polynomial(FIGURE_EIGHT) == t1 ** 2 - 3 * t1 + 1
    assert alexander_polynomial(HOPF) == ONE
    assert alexander_polynomial(BraidWord(2, (1,))) == ONE
    assert alexander_polynomial(BraidWord(1)) == ONE


def test_figure_eight_value_from_sympy():
    # frozen value above came from this single-variable computation
    assert sympy.expand(sympy_knot_polynomial(FIGURE_EIGHT) * T ** 2) == -(T ** 2 - 3 * T + 1)


def test_figure_one_is_borromean():
    # the braid is a stabilised (s1 s2^-1)^3, whose closure is the Borromean rings
    fig = parse_word(FIGURE_ONE, 4)
    assert units_equal(alexander_invariant(fig), (t1 - 1) * (t2 - 1) * (t3 - 1))
    assert units_equal(alexander_invariant(fig), alexander_invariant(BraidWord(3, (1, -2) * 3)))


def test_torus_link_t24():
    assert units_equal(alexander_polynomial(BraidWord(2, (1, 1, 1, 1))), 1 + t1 * t2)


def test_full_report_examples():
    fig = full_report(parse_word(FIGURE_ONE, 4))
    assert fig.components == 3
    assert fig.variables == ("t1", "t2", "t3", "x")
    assert fig.with_axis.variables() == {1, 2, 3, X}

    tre = full_report(TREFOIL)
    assert tre.components == 1
    assert tre.alexander == t1 ** 2 - t1 + 1

    unknot = full_report(BraidWord(1))
    assert (unknot.components, unknot.with_axis, unknot.alexander) == (1, ONE, ONE)


def test_divisibility_failure_is_loud():
    with pytest.raises(DivisibilityFailure):
        alexander._divide(1 + t1, 1 - t1 * t2, "test")


@given(words(max_strands=6, max_length=20))
@settings(max_examples=40, deadline=None)
def test_single_variable_collapse(w):
    B = coloured_burau(w).matrix
    collapse = {j: 1 for j in range(1, w.strands + 1)}
    symbols = {1: T}
    got = sympy.Matrix(B.rows, B.cols, [to_sympy(substitute(e, collapse), symbols) for e in B.entries])
    assert (got - standard_reduced_burau(w)).applyfunc(sympy.expand) == sympy.zeros(B.rows, B.cols)


@given(words())
@settings(max_examples=40, deadline=None)
def test_char_poly_at_x_zero_is_one(w):
    p = characteristic_polynomial(w)
    assert sum(c for m, c in p.items() if all(v != X for v, _ in m)) == 1


@given(words())
@settings(max_examples=40, deadline=None)
def test_inverse_word_gives_identity(w):
    assert coloured_burau(w * w.inverse()).matrix == PolyMatrix.identity(w.strands - 1)


@given(words())
@settings(max_examples=40, deadline=None)
def test_coloured_entries_avoid_axis_variable(w):
    assert all(X not in e.variables() for e in coloured_burau(w).matrix.entries)
