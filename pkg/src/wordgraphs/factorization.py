"""Splitting words into alphabet-disjoint factors, and partition irreducibility.

A split point of a word is a position after which no earlier symbol
reappears, so the prefix and suffix use disjoint alphabets.  Taking every
split point gives the finest disjoint factorization; its cardinality equals
the word graph's strong component count, and the boundaries are exactly the
graph's bridges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .words import SetPartition, Word, partition_to_word


@dataclass(frozen=True)
class DisjointFactorization:
    """The finest split of a word into contiguous, alphabet-disjoint factors."""

    word: Word
    split_points: tuple[int, ...]
    factors: tuple[tuple[int, ...], ...]

    @property
    def cardinality(self) -> int:
        return len(self.factors)


def split_points(word: Word) -> list[int]:
    """1-based positions where the prefix's alphabet is closed off.

    One left-to-right scan: position j splits the word exactly when the
    largest last-occurrence among the symbols seen so far is j itself.
    """
    last = {c: i for i, c in enumerate(word.letters, start=1)}
    out = []
    reach = 0
    for j, c in enumerate(word.letters[:-1], start=1):
        reach = max(reach, last[c])
        if reach == j:
            out.append(j)
    return out


def finest_disjoint_factorization(word: Word) -> DisjointFactorization:
    """Cut the word at every split point."""
    points = tuple(split_points(word))
    bounds = (0, *points, word.length)
    factors = tuple(
        word.letters[bounds[i] : bounds[i + 1]] for i in range(len(bounds) - 1)
    )
    return DisjointFactorization(word, points, factors)


def is_irreducible(partition: SetPartition | Iterable[Iterable[int]]) -> bool:
    """True when no proper subset of blocks unions to a prefix 1..j, j < length.

    Only prefix-shaped subsets can matter, so the test reduces to asking
    whether the partition's canonical word has a split point.
    """
    return not split_points(partition_to_word(partition))
