"""Braid words, strand permutations and undercrossing labels.

A word is read left to right from the TOP of the diagram downwards, so the
first letter is the topmost crossing.  Strands are named by the bottom
position they start from.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .errors import IndexOutOfRange, ParseError


@dataclass(frozen=True)
class BraidWord:
    """Braid on ``strands`` strands; each letter is a signed generator index.

    ``k > 0`` stands for sigma_k and ``k < 0`` for sigma_|k|^-1.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise IndexOutOfRange(f"need at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(k) for k in self.letters))
        for pos, k in enumerate(self.letters):
            if k == 0 or abs(k) > self.strands - 1:
                raise IndexOutOfRange(
                    f"generator {k} out of range for {self.strands} strands",
                    token=str(k), position=pos,
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        """Yield ``(generator index, sign)`` pairs, top crossing first."""
        for k in self.letters:
            yield abs(k), (1 if k > 0 else -1)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        """Concatenation; ``self`` is stacked on top of ``other``."""
        if self.strands != other.strands:
            raise ValueError("cannot multiply braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.letters)


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace separated signed integers, e.g. ``"1 -2 1"``."""
    if strands < 1:
        raise IndexOutOfRange(f"need at least one strand, got {strands}")
    letters = []
    for pos, token in enumerate(text.split()):
        try:
            k = int(token)
        except ValueError:
            raise ParseError(
                f"token {pos + 1} ({token!r}) is not an integer", token=token, position=pos
            ) from None
        if k == 0 or abs(k) > strands - 1:
            raise IndexOutOfRange(
                f"token {pos + 1} ({token!r}): generator index must satisfy "
                f"1 <= |k| <= {strands - 1}",
                token=token, position=pos,
            )
        letters.append(k)
    return BraidWord(strands, tuple(letters))


@dataclass(frozen=True)
class Permutation:
    """``images[j-1] == pi(j)`` for ``j = 1..n``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..n: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self(other(j)) for j in range(1, other.size + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for j, pj in enumerate(self.images, start=1):
            inv[pj - 1] = j
        return Permutation(tuple(inv))


def _walk(word: BraidWord):
    """Propagate strands from the bottom, yielding the state before each crossing.

    Yields ``(r, i, sign, state)`` for r = l..1 where ``state[p-1]`` is the
    strand at position p just below crossing r.  ``state`` is mutated in place.
    """
    state = list(range(1, word.strands + 1))
    for r in range(len(word.letters), 0, -1):
        k = word.letters[r - 1]
        i = abs(k)
        yield r, i, (1 if k > 0 else -1), state
        state[i - 1], state[i] = state[i], state[i - 1]


def _final_state(word: BraidWord) -> list[int]:
    state = list(range(1, word.strands + 1))
    for k in reversed(word.letters):
        i = abs(k)
        state[i - 1], state[i] = state[i], state[i - 1]
    return state


def permutation_of(word: BraidWord) -> Permutation:
    """Strand starting at bottom position j ends at top position pi(j)."""
    top = _final_state(word)
    images = [0] * word.strands
    for pos, strand in enumerate(top, start=1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def components_of(perm: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its minimum, sorted by minimum."""
    seen = set()
    cycles = []
    for j in range(1, perm.size + 1):
        if j in seen:
            continue
        cycle = [j]
        seen.add(j)
        k = perm(j)
        while k != j:
            cycle.append(k)
            seen.add(k)
            k = perm(k)
        cycles.append(tuple(cycle))
    return cycles


def undercrossing_labels(word: BraidWord) -> tuple[int, ...]:
    """Strand label of the undercrossing string at each crossing, top first.

    For sigma_i the undercrosser is the strand entering from below at
    position i+1; for sigma_i^-1 it is the one entering at position i.
    """
    labels = [0] * len(word.letters)
    for r, i, sign, state in _walk(word):
        labels[r - 1] = state[i] if sign > 0 else state[i - 1]
    return tuple(labels)


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    """Uniformly random letters; empty when ``strands == 1``."""
    if strands < 2:
        return BraidWord(strands)
    letters = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
    return BraidWord(strands, tuple(letters))

