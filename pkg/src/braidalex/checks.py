"""Randomized consistency suites.

Each suite draws braid words from a seeded RNG and checks one invariance or
agreement property, returning a :class:`SuiteResult`.  They back both the
``selftest`` command and the acceptance tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .alexander import (
    alexander_polynomial,
    axis_link_polynomial,
    identification_map,
)
from .braid import BraidWord, Permutation, components_of, permutation_of, random_word
from .errors import DivisibilityFailure
from .fox import oracle_axis_polynomial
from .laurent import substitute, units_equal


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: list = field(default_factory=list)
    divisibility_failures: int = 0

    @property
    def passed(self) -> bool:
        return self.trials > 0 and not self.failures and not self.divisibility_failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", divisibility failures {self.divisibility_failures}" if self.divisibility_failures else ""
        return f"{status} {self.name}: {self.trials} trials, {len(self.failures)} failures{extra}"


def _run(name: str, trials: int, trial: Callable[[], tuple | None]) -> SuiteResult:
    res = SuiteResult(name)
    for _ in range(trials):
        try:
            bad = trial()
        except DivisibilityFailure as exc:
            res.divisibility_failures += 1
            res.failures.append(str(exc))
        else:
            if bad is not None:
                res.failures.append(bad)
        res.trials += 1
    return res


def oracle_agreement(rng: random.Random, trials: int = 200, max_strands: int = 4, max_length: int = 10) -> SuiteResult:
    def trial():
        w = random_word(rng, rng.randint(1, max_strands), rng.randint(0, max_length))
        a, b = axis_link_polynomial(w), oracle_axis_polynomial(w)
        return None if units_equal(a, b) else (str(w), w.strands, str(a), str(b))

    return _run("oracle agreement", trials, trial)


def _split(rng, w: BraidWord):
    cut = rng.randint(0, len(w))
    return w.letters[:cut], w.letters[cut:]


def braid_relation(rng: random.Random, trials: int = 100, max_strands: int = 6, max_length: int = 12) -> SuiteResult:
    """``s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`` (all letters share one sign)."""
    def trial():
        n = rng.randint(3, max_strands)
        u, v = _split(rng, random_word(rng, n, rng.randint(0, max_length)))
        i = rng.randint(1, n - 2)
        e = rng.choice((1, -1))
        lhs = BraidWord(n, u + (e * i, e * (i + 1), e * i) + v)
        rhs = BraidWord(n, u + (e * (i + 1), e * i, e * (i + 1)) + v)
        a, b = axis_link_polynomial(lhs), axis_link_polynomial(rhs)
        return None if units_equal(a, b) else (str(lhs), str(rhs), n)

    return _run("braid relation", trials, trial)


def far_commutation(rng: random.Random, trials: int = 100, max_strands: int = 6, max_length: int = 12) -> SuiteResult:
    def trial():
        n = rng.randint(4, max_strands)
        u, v = _split(rng, random_word(rng, n, rng.randint(0, max_length)))
        i = rng.randint(1, n - 3)
        j = rng.randint(i + 2, n - 1)
        p, q = rng.choice((1, -1)) * i, rng.choice((1, -1)) * j
        if rng.random() < 0.5:
            p, q = q, p
        lhs = BraidWord(n, u + (p, q) + v)
        rhs = BraidWord(n, u + (q, p) + v)
        a, b = axis_link_polynomial(lhs), axis_link_polynomial(rhs)
        return None if units_equal(a, b) else (str(lhs), str(rhs), n)

    return _run("far commutation", trials, trial)


def rename_to(source: BraidWord, target: BraidWord, bottom_map: Callable[[int], int]) -> dict[int, int]:
    """Variable renaming carrying ``source`` component names onto ``target`` names.

    ``bottom_map(j)`` is the bottom position in ``target`` of a strand of the
    same component as the strand at bottom position ``j`` of ``source``.
    """
    target_ids = identification_map(permutation_of(target))
    mapping = {}
    for cycle in components_of(permutation_of(source)):
        mapping[min(cycle)] = target_ids[bottom_map(min(cycle))]
    return mapping


def markov_conjugation(rng: random.Random, trials: int = 100, max_strands: int = 6, max_length: int = 12) -> SuiteResult:
    """Axis polynomial of ``g w g^-1`` matches that of ``w`` after renaming."""
    def trial():
        n = rng.randint(2, max_strands)
        w = random_word(rng, n, rng.randint(0, max_length))
        g = rng.choice((1, -1)) * rng.randint(1, n - 1)
        conj = BraidWord(n, (g,) + w.letters + (-g,))
        i = abs(g)
        # the bottom letter g^-1 swaps positions i and i+1 before w is reached
        swap = Permutation(tuple(i + 1 if j == i else i if j == i + 1 else j for j in range(1, n + 1)))
        mapping = rename_to(conj, w, swap)
        a = axis_link_polynomial(w)
        b = substitute(axis_link_polynomial(conj), mapping)
        return None if units_equal(a, b) else (str(w), g, n)

    return _run("Markov conjugation", trials, trial)


def markov_stabilization(rng: random.Random, trials: int = 100, max_strands: int = 5, max_length: int = 12) -> SuiteResult:
    """Alexander polynomial of ``w`` in B_n equals that of ``w s_n^±1`` in B_{n+1}."""
    def trial():
        n = rng.randint(1, max_strands)
        w = random_word(rng, n, rng.randint(0, max_length))
        stab = BraidWord(n + 1, w.letters + (rng.choice((1, -1)) * n,))
        # the new strand joins the cycle through n, whose minimum is unchanged
        a, b = alexander_polynomial(w), alexander_polynomial(stab)
        return None if units_equal(a, b) else (str(w), str(stab), n)

    return _run("Markov stabilization", trials, trial)


def divisibility(rng: random.Random, trials: int = 100, max_strands: int = 6, max_length: int = 20) -> SuiteResult:
    def trial():
        w = random_word(rng, rng.randint(1, max_strands), rng.randint(0, max_length))
        alexander_polynomial(w)
        return None

    return _run("Torres-Fox divisibility", trials, trial)


SUITES = {
    "oracle": oracle_agreement,
    "braid-relation": braid_relation,
    "far-commutation": far_commutation,
    "conjugation": markov_conjugation,
    "stabilization": markov_stabilization,
    "divisibility": divisibility,
}


def run_all(seed: int = 0, trials: int | None = None) -> list[SuiteResult]:
    """Run every suite with its own RNG derived from ``seed``."""
    results = []
    for name, suite in SUITES.items():
        rng = random.Random(f"{seed}:{name}")
        results.append(suite(rng) if trials is None else suite(rng, trials=trials))
    return results

