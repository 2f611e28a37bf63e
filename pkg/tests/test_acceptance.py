"""Exit criteria.  Each test records one PASS/FAIL line, shown in the
terminal summary under "acceptance criteria"."""

import random

import pytest
import sympy
from oracles import T, laplace_det, standard_reduced_burau, to_sympy

from braidalex import checks
from braidalex.alexander import alexander_polynomial, axis_link_polynomial, coloured_burau
from braidalex.braid import BraidWord, components_of, parse_word, permutation_of, random_word, undercrossing_labels
from braidalex.fox import FreeWord, evaluate_word, fox_derivative_eval, oracle_axis_polynomial
from braidalex.laurent import ONE, ZERO, X, LaurentPoly, PolyMatrix, determinant, substitute, t, units_equal, x

SEED = 20261016


def record(log, number, title, ok, detail=""):
    log.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}{': ' + detail if detail else ''}")
    print(log[-1])
    return ok


@pytest.fixture(scope="module")
def suites():
    rng = lambda name: random.Random(f"{SEED}:{name}")  # noqa: E731
    return {
        "oracle": checks.oracle_agreement(rng("oracle"), trials=200, max_strands=4, max_length=10),
        "braid-relation": checks.braid_relation(rng("braid"), trials=100),
        "far-commutation": checks.far_commutation(rng("far"), trials=100),
        "conjugation": checks.markov_conjugation(rng("conj"), trials=100),
        "stabilization": checks.markov_stabilization(rng("stab"), trials=100),
        "divisibility": checks.divisibility(rng("div"), trials=200, max_strands=6, max_length=20),
    }


def test_1_figure_one_golden(acceptance_log):
    w = parse_word("1 -2 1 -2 1 -2 3", 4)
    labels = undercrossing_labels(w)
    perm = permutation_of(w)
    ok = labels == (1, 4, 2, 1, 4, 2, 4) and perm.images == (1, 2, 4, 3)
    ok = ok and components_of(perm) == [(1,), (2,), (3, 4)]
    record(acceptance_log, 1, "Figure 1 labels and permutation", ok, f"labels={labels} pi={perm.images}")
    assert ok


def test_2_known_link_values(acceptance_log):
    t1, t2 = t(1), t(2)
    cases = {
        # trefoil: (1 + t^3)(1 - t)/(1 - t^2) = 1 - t + t^2
        "trefoil": (BraidWord(2, (1, 1, 1)), t1 ** 2 - t1 + 1),
        # figure-eight: sympy one-variable Burau gives -(t^2 - 3t + 1)/t^2
        "figure-eight": (BraidWord(3, (1, -2, 1, -2)), t1 ** 2 - 3 * t1 + 1),
        # Hopf: (1 - t1 t2)/(1 - t1 t2)
        "Hopf": (BraidWord(2, (1, 1)), ONE),
        "unknot n=1": (BraidWord(1), ONE),
        "unknot s1": (BraidWord(2, (1,)), ONE),
        # det(I - I) = 0
        "2-unlink": (BraidWord(2), ZERO),
    }
    bad = []
    for name, (w, expected) in cases.items():
        if not units_equal(alexander_polynomial(w), expected):
            bad.append(name)
        if not units_equal(oracle_axis_polynomial(w), axis_link_polynomial(w)):
            bad.append(name + " (oracle)")
    # the oracle route for the Hopf link: 1 - x t1 t2
    if not units_equal(oracle_axis_polynomial(BraidWord(2, (1, 1))), 1 - x() * t1 * t2):
        bad.append("Hopf axis via oracle")
    record(acceptance_log, 2, "known link values", not bad, f"{len(cases)} links, failures={bad}")
    assert not bad


def test_3_oracle_agreement(acceptance_log, suites):
    r = suites["oracle"]
    record(acceptance_log, 3, "oracle agrees with coloured Burau", r.passed and r.trials >= 200,
           f"{r.trials} words, {len(r.failures)} failures")
    assert r.trials >= 200 and r.passed, r.failures[:3]


def test_4_single_variable_collapse(acceptance_log):
    rng = random.Random(f"{SEED}:collapse")
    failures = 0
    trials = 100
    for _ in range(trials):
        w = random_word(rng, rng.randint(2, 6), rng.randint(0, 20))
        B = coloured_burau(w).matrix
        collapse = {j: 1 for j in range(1, w.strands + 1)}
        got = sympy.Matrix(B.rows, B.cols, [to_sympy(substitute(e, collapse), {1: T}) for e in B.entries])
        if (got - standard_reduced_burau(w)).applyfunc(sympy.expand) != sympy.zeros(B.rows, B.cols):
            failures += 1
    record(acceptance_log, 4, "single-variable collapse to reduced Burau", failures == 0,
           f"{trials} words, {failures} failures")
    assert failures == 0


@pytest.mark.parametrize("name", ["braid-relation", "far-commutation", "conjugation", "stabilization"])
def test_5_invariance(acceptance_log, suites, name):
    r = suites[name]
    record(acceptance_log, 5, f"invariance under {name}", r.passed and r.trials >= 100,
           f"{r.trials} trials, {len(r.failures)} failures")
    assert r.trials >= 100 and r.passed, r.failures[:3]


def test_6_divisibility(acceptance_log, suites):
    total = sum(r.divisibility_failures for r in suites.values())
    trials = sum(r.trials for r in suites.values())
    record(acceptance_log, 6, "Torres-Fox divisions exact", total == 0,
           f"{trials} randomized trials, DivisibilityFailure count {total}")
    assert total == 0


def _random_poly(rng):
    terms = []
    for _ in range(rng.randint(0, 3)):
        exps = {v: rng.randint(-2, 2) for v in rng.sample((X, 1, 2), rng.randint(0, 2))}
        terms.append((exps, rng.randint(-3, 3)))
    return LaurentPoly.from_terms(terms)


def test_7_determinant_oracle(acceptance_log):
    rng = random.Random(f"{SEED}:det")
    trials, failures = 100, 0
    for k in range(trials):
        n = 1 + k % 5
        M = PolyMatrix(n, n, [_random_poly(rng) for _ in range(n * n)])
        if determinant(M) != laplace_det(M):
            failures += 1
    record(acceptance_log, 7, "Bareiss equals permutation expansion", failures == 0,
           f"{trials} matrices up to 5x5, {failures} failures")
    assert failures == 0


def test_8_fox_fundamental_formula(acceptance_log):
    rng = random.Random(f"{SEED}:fox")
    phi = {X: x(), 1: t(1), 2: t(2), 3: t(3)}
    trials, failures = 200, 0
    for _ in range(trials):
        w = FreeWord((rng.choice(list(phi)), rng.choice((1, -1))) for _ in range(rng.randint(0, 20)))
        total = sum((fox_derivative_eval(w, g, phi) * (phi[g] - 1) for g in phi), ZERO)
        if evaluate_word(w, phi) - 1 != total:
            failures += 1
    record(acceptance_log, 8, "Fox fundamental formula", failures == 0, f"{trials} words, {failures} failures")
    assert failures == 0
