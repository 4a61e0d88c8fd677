"""Exact counts: Stirling numbers, strong-word counts, and brute-force oracles.

All counts are Python integers, so they stay exact at any size.  The
central quantity is the number of canonical words of a given length and
alphabet size whose graph is strongly connected; it satisfies a recurrence
over Stirling numbers of the second kind, and multiplying by the factorial
of the alphabet size counts strong words across all labelings.  The
brute-force counters here enumerate words and inspect graphs directly,
giving an independent check of the recurrence at desk scale.
"""

from __future__ import annotations

import math
import threading
from typing import Iterator

from .connectivity import scc_decomposition
from .factorization import split_points
from .graphs import build_graph
from .words import iter_canonical_words

DEFAULT_CAP = 10_000_000


class CapExceededError(ValueError):
    """The requested enumeration is larger than the configured cap."""


class ComponentMismatchError(RuntimeError):
    """A word's component count disagreed with its factorization cardinality."""


class CountTable:
    """Memoized Stirling and strong-word counts.

    Thread-safe: cells are filled under a lock, so concurrent readers
    observe each value computed once.  `seed_strong_count` overwrites a
    memo cell and exists purely as a fault-injection hook for testing the
    verification harness; it has no legitimate production use.
    """

    def __init__(self) -> None:
        self._stirling: dict[tuple[int, int], int] = {}
        self._strong: dict[tuple[int, int], int] = {}
        self._lock = threading.RLock()

    def stirling2(self, length: int, blocks: int) -> int:
        """Stirling number of the second kind."""
        if length < 0 or blocks < 0:
            raise ValueError("arguments must be non-negative")
        with self._lock:
            return self._stirling2(length, blocks)

    def _stirling2(self, length: int, blocks: int) -> int:
        if blocks == 0 or blocks > length:
            return 1 if length == blocks else 0
        key = (length, blocks)
        got = self._stirling.get(key)
        if got is None:
            # Fill the table iteratively; the pure recurrence would recurse
            # one frame per element.
            row = {0: 1}
            for l in range(1, length + 1):
                row = {
                    n: n * row.get(n, 0) + row.get(n - 1, 0)
                    for n in range(1, min(l, blocks) + 1)
                }
                for n, value in row.items():
                    self._stirling.setdefault((l, n), value)
            got = self._stirling[key]
        return got

    def strong_partition_count(self, length: int, alphabet_size: int) -> int:
        """Canonical words of `length` over exactly `alphabet_size` symbols
        whose graph is strongly connected; equivalently, partitions of the
        positions in which no proper subset of blocks fills a prefix.

        Recurrence: count the partitions keeping first and last position
        together, then sum over ways of splitting off a reducible tail.
        Base cases, in order of precedence: nothing for non-positive
        length, one trivial word per length on a single symbol, nothing
        when the length does not exceed the alphabet size.
        """
        if alphabet_size <= 0:
            raise ValueError("alphabet size must be positive")
        with self._lock:
            return self._strong_partition_count(length, alphabet_size)

    def _strong_partition_count(self, length: int, alphabet_size: int) -> int:
        if length <= 0:
            return 0
        if alphabet_size == 1:
            return 1
        if length <= alphabet_size:
            return 0
        key = (length, alphabet_size)
        got = self._strong.get(key)
        if got is None:
            got = self._stirling2(length - 1, alphabet_size)
            for j in range(0, length - 1):
                for m in range(0, alphabet_size - 1):
                    s = self._stirling2(j, m)
                    if s == 0:
                        continue
                    t = self._strong_partition_count(length - j - 1, alphabet_size - m)
                    if t:
                        got += s * t * (alphabet_size - m - 1)
            self._strong[key] = got
        return got

    def strong_word_count(self, length: int, alphabet_size: int) -> int:
        """Strongly connected words of `length` over `alphabet_size` labeled symbols."""
        return math.factorial(alphabet_size) * self.strong_partition_count(
            length, alphabet_size
        )

    def family_cardinality(self, length: int, alphabet_size: int) -> int:
        """All exact-alphabet words of `length` over `alphabet_size` labeled symbols."""
        if not 1 <= alphabet_size <= length:
            raise ValueError("need 1 <= alphabet_size <= length")
        return math.factorial(alphabet_size) * self.stirling2(length, alphabet_size)

    def bell(self, length: int) -> int:
        """Set partitions of `length` elements: the canonical words of that length."""
        return sum(self.stirling2(length, n) for n in range(length + 1))

    def seed_strong_count(self, length: int, alphabet_size: int, value: int) -> None:
        """Overwrite one strong-count memo cell (fault-injection test hook)."""
        with self._lock:
            self._strong[(length, alphabet_size)] = value

    def rows(self, max_length: int, max_alphabet: int) -> Iterator[tuple[int, int, int, int, int]]:
        """(length, alphabet, stirling, strong partitions, strong words) per pair."""
        if max_length < 1 or max_alphabet < 1:
            raise ValueError("bounds must be at least 1")
        for length in range(1, max_length + 1):
            for n in range(1, min(length, max_alphabet) + 1):
                yield (
                    length,
                    n,
                    self.stirling2(length, n),
                    self.strong_partition_count(length, n),
                    self.strong_word_count(length, n),
                )


_SHARED = CountTable()


def stirling2(length: int, blocks: int) -> int:
    return _SHARED.stirling2(length, blocks)


def bell(length: int) -> int:
    return _SHARED.bell(length)


def strong_partition_count(length: int, alphabet_size: int) -> int:
    return _SHARED.strong_partition_count(length, alphabet_size)


def strong_word_count(length: int, alphabet_size: int) -> int:
    return _SHARED.strong_word_count(length, alphabet_size)


def family_cardinality(length: int, alphabet_size: int) -> int:
    return _SHARED.family_cardinality(length, alphabet_size)


def _check_cap(length: int, cap: int | None) -> None:
    if cap is not None and _SHARED.bell(length) > cap:
        raise CapExceededError(
            f"enumerating length {length} means {_SHARED.bell(length)} words, over the cap {cap}"
        )


def _strong_counts_by_alphabet(length: int) -> list[int]:
    """One exhaustive pass over all canonical words of `length`.

    Walks the restricted-growth-string tree keeping adjacency bitmasks
    updated in place, and tallies strongly connected leaves per alphabet
    size.  Strong connectivity is decided by bitset reachability from
    symbol 0 in both edge directions.
    """
    counts = [0] * (length + 1)
    adj = [0] * length
    radj = [0] * length

    def leaf_is_strong(n: int) -> bool:
        full = (1 << n) - 1
        for rows in (adj, radj):
            reach = 1
            frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= rows[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~reach
                reach |= frontier
            if reach != full:
                return False
        return True

    def rec(pos: int, prev: int, used: int) -> None:
        if pos == length:
            if leaf_is_strong(used):
                counts[used] += 1
            return
        for c in range(used + 1):
            if c == prev:
                rec(pos + 1, c, used + (c == used))
            else:
                a0 = adj[prev]
                r0 = radj[c]
                adj[prev] = a0 | (1 << c)
                radj[c] = r0 | (1 << prev)
                rec(pos + 1, c, used + (c == used))
                adj[prev] = a0
                radj[c] = r0

    rec(1, 0, 1)
    return counts


_BRUTE_CACHE: dict[int, list[int]] = {}
_BRUTE_LOCK = threading.Lock()


def brute_force_strong_count(
    length: int, alphabet_size: int, cap: int | None = DEFAULT_CAP
) -> int:
    """Count strongly connected canonical words by exhaustive enumeration.

    Independent of the recurrence: every canonical word is generated and
    its graph checked.  Guarded by `cap` on the total number of canonical
    words of the length (pass None to lift the guard).
    """
    if not 1 <= alphabet_size <= length:
        raise ValueError("need 1 <= alphabet_size <= length")
    _check_cap(length, cap)
    with _BRUTE_LOCK:
        counts = _BRUTE_CACHE.get(length)
        if counts is None:
            counts = _strong_counts_by_alphabet(length)
            _BRUTE_CACHE[length] = counts
    return counts[alphabet_size]


def scc_histogram(
    length: int, alphabet_size: int, cap: int | None = DEFAULT_CAP
) -> dict[int, int]:
    """Canonical words bucketed by their graph's strong component count.

    Cross-checks every word on the way: the component count must equal the
    cardinality of the word's finest disjoint factorization.
    """
    if not 1 <= alphabet_size <= length:
        raise ValueError("need 1 <= alphabet_size <= length")
    _check_cap(length, cap)
    histogram: dict[int, int] = {}
    for word in iter_canonical_words(length, alphabet_size):
        components = scc_decomposition(build_graph(word)).count
        factors = len(split_points(word)) + 1
        if components != factors:
            raise ComponentMismatchError(
                f"word {word.text()}: {components} components but {factors} factors"
            )
        histogram[components] = histogram.get(components, 0) + 1
    return dict(sorted(histogram.items()))


def csv_lines(max_length: int, max_alphabet: int, table: CountTable | None = None) -> list[str]:
    """Count-table rows in the interchange CSV form, header included."""
    table = table if table is not None else _SHARED
    lines = ["l,n,stirling,T,phi"]
    for length, n, s, t, phi in table.rows(max_length, max_alphabet):
        lines.append(f"{length},{n},{s},{t},{phi}")
    return lines
