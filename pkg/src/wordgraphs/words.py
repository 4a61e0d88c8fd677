"""Words over exact alphabets, canonical forms, and set partitions.

A word is a sequence of symbols where the alphabet is exact: symbols are
dense 0-based integer ids and every id below the alphabet size occurs at
least once.  Textual letters ("abca") are purely a presentation of those
ids.  A canonical word is one whose ids first appear in increasing order
(a restricted growth string); there is exactly one canonical word per set
partition of the positions, which is what makes canonical enumeration a
partition enumeration.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class EmptyWordError(ValueError):
    """The empty word is not a word."""


class InvalidWordError(ValueError):
    """Symbol ids are not dense 0-based integers."""


class InvalidPartitionError(ValueError):
    """Blocks overlap, leave gaps, or are empty."""


_LETTERS_RE = re.compile(r"[a-z]+\Z")
_TOKENS_RE = re.compile(r"[0-9,]+\Z")


@dataclass(frozen=True)
class Word:
    """An immutable symbol sequence over an exact alphabet."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise EmptyWordError("word must contain at least one symbol")
        ids = set(self.letters)
        if ids != set(range(len(ids))):
            raise InvalidWordError(
                f"symbol ids must be exactly 0..{len(ids) - 1}, got {sorted(ids)}"
            )

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def alphabet_size(self) -> int:
        return len(set(self.letters))

    @property
    def is_canonical(self) -> bool:
        """True when ids first occur in increasing order (restricted growth)."""
        high = -1
        for c in self.letters:
            if c > high + 1:
                return False
            high = max(high, c)
        return True

    def text(self) -> str:
        """Presentation form: letters for alphabets up to 26, else comma-separated ids."""
        n = self.alphabet_size
        if n <= 26:
            return "".join(symbol_name(c, n) for c in self.letters)
        return ",".join(str(c) for c in self.letters)

    def __str__(self) -> str:
        return self.text()


def symbol_name(symbol: int, alphabet_size: int) -> str:
    """Text for one symbol id: 'a'..'z' for small alphabets, decimal otherwise."""
    if alphabet_size <= 26:
        return chr(ord("a") + symbol)
    return str(symbol)


def parse_word(text: str) -> Word:
    """Parse a word from text, assigning ids by first occurrence.

    Lowercase letters give one symbol per character; texts containing
    digits or commas are read as comma-separated decimal tokens.
    """
    if not text:
        raise EmptyWordError("empty input")
    if _LETTERS_RE.match(text):
        symbols: list[str] = list(text)
    elif _TOKENS_RE.match(text):
        symbols = text.split(",")
        if any(not tok.isdigit() for tok in symbols):
            raise InvalidWordError(f"malformed token list: {text!r}")
    else:
        raise InvalidWordError(f"unsupported characters in {text!r}")
    ids: dict[str, int] = {}
    letters = tuple(ids.setdefault(s, len(ids)) for s in symbols)
    return Word(letters)


def canonicalize(word: Word) -> Word:
    """Relabel symbols in first-occurrence order.

    Preserves length, alphabet size, and the equality pattern between
    positions; idempotent.
    """
    ids: dict[int, int] = {}
    return Word(tuple(ids.setdefault(c, len(ids)) for c in word.letters))


def iter_canonical_words(
    length: int, alphabet_size: int, prefix: tuple[int, ...] = ()
) -> Iterator[Word]:
    """Yield every canonical word of `length` with exactly `alphabet_size` symbols.

    Words appear in lexicographic order on their id sequences; the total
    equals the Stirling number of the second kind for (length, alphabet_size).
    A length below the alphabet size yields nothing.  `prefix` restricts the
    stream to words extending a given canonical prefix, which lets disjoint
    sub-ranges be consumed independently (e.g. from parallel workers).
    """
    if length < 1 or alphabet_size < 1:
        raise ValueError("length and alphabet size must be at least 1")
    if len(prefix) > length:
        raise ValueError("prefix longer than requested length")
    used = 0
    for c in prefix:
        if not 0 <= c <= used:
            raise ValueError(f"prefix {prefix!r} is not a canonical id sequence")
        used = max(used, c + 1)
    if used > alphabet_size:
        return

    def rec(stem: list[int], used: int) -> Iterator[Word]:
        remaining = length - len(stem)
        if used + remaining < alphabet_size:
            return
        if remaining == 0:
            if used == alphabet_size:
                yield Word(tuple(stem))
            return
        for c in range(min(used + 1, alphabet_size)):
            stem.append(c)
            yield from rec(stem, max(used, c + 1))
            stem.pop()

    yield from rec(list(prefix), used)


@dataclass(frozen=True)
class SetPartition:
    """A partition of positions 1..length into non-empty blocks.

    Blocks are kept sorted by their minimum element, so block i is the
    position set of symbol i in the corresponding canonical word.
    """

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        blocks = tuple(frozenset(b) for b in self.blocks)
        if not blocks or any(not b for b in blocks):
            raise InvalidPartitionError("blocks must be non-empty")
        seen: set[int] = set()
        total = 0
        for b in blocks:
            if b & seen:
                raise InvalidPartitionError(f"blocks overlap on {sorted(b & seen)}")
            seen |= b
            total += len(b)
        if seen != set(range(1, total + 1)):
            raise InvalidPartitionError(
                f"blocks must cover 1..{total} exactly, got {sorted(seen)}"
            )
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=min)))

    @property
    def length(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def word_to_partition(word: Word) -> SetPartition:
    """Map a canonical word to the set partition of its 1-based positions."""
    if not word.is_canonical:
        raise InvalidWordError(f"word {word.letters!r} is not canonical")
    blocks = [set() for _ in range(word.alphabet_size)]
    for pos, c in enumerate(word.letters, start=1):
        blocks[c].add(pos)
    return SetPartition(tuple(frozenset(b) for b in blocks))


def partition_to_word(partition: SetPartition | Iterable[Iterable[int]]) -> Word:
    """Map a set partition back to its canonical word (inverse of word_to_partition)."""
    if not isinstance(partition, SetPartition):
        partition = SetPartition(tuple(frozenset(b) for b in partition))
    letters = [0] * partition.length
    for symbol, block in enumerate(partition.blocks):
        for pos in block:
            letters[pos - 1] = symbol
    return Word(tuple(letters))
