"""Permutations of [n] in one-line notation, the inverse/reverse/complement
operators, canonical cycle decompositions and lexicographic enumeration.

Everything visible from outside is 1-indexed: ``p[1]`` is the first letter.
"""

from __future__ import annotations

import itertools
import math
import os
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Sequence

if TYPE_CHECKING:
    from .codes import CodeVector

DEFAULT_MAX_N = 10
DEFAULT_SET_MAX_N = 8


class PermutationError(ValueError):
    """Raised when input does not describe a valid permutation or code."""


class DegreeCapError(RuntimeError):
    """Raised when an enumeration would exceed the configured degree cap."""


def max_degree(default: int = DEFAULT_MAX_N) -> int:
    """The numeric degree cap, honouring ``PERMSTAT_MAX_N``."""
    env = os.environ.get("PERMSTAT_MAX_N")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise PermutationError(f"PERMSTAT_MAX_N must be an integer, got {env!r}")
        if value < 1:
            raise PermutationError("PERMSTAT_MAX_N must be >= 1")
        return value
    return default


def check_degree(n: int, cap: int | None = None) -> None:
    if n < 1:
        raise PermutationError(f"degree must be >= 1, got {n}")
    cap = max_degree() if cap is None else cap
    if n > cap:
        raise DegreeCapError(f"degree {n} exceeds the cap {cap}")


def _validate_word(word: Sequence[int]) -> None:
    n = len(word)
    if n == 0:
        raise PermutationError("a permutation needs at least one letter")
    seen = set()
    for v in word:
        if v in seen:
            raise PermutationError(f"not a permutation: value {v} is repeated")
        seen.add(v)
    missing = [v for v in range(1, n + 1) if v not in seen]
    if missing:
        raise PermutationError(f"not a permutation of 1..{n}: value {missing[0]} is missing")


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of [n] stored as its one-line word."""

    word: tuple[int, ...]

    def __init__(self, word: Sequence[int], check: bool = True):
        word = tuple(int(v) for v in word)
        if check:
            _validate_word(word)
        object.__setattr__(self, "word", word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1), check=False)

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, i: int) -> int:
        """sigma_i, 1-indexed."""
        if not 1 <= i <= len(self.word):
            raise IndexError(i)
        return self.word[i - 1]

    def __call__(self, i: int) -> int:
        return self[i]

    def __lt__(self, other: "Permutation") -> bool:
        return self.word < other.word

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Permutation({list(self.word)})"


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles with their minimum first, sorted by increasing minimum."""

    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def to_permutation(self) -> Permutation:
        n = sum(len(c) for c in self.cycles)
        word = [0] * n
        for c in self.cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                word[a - 1] = b
        return Permutation(word)

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


def parse(text: str) -> Permutation:
    """Parse ``"2 4 1 3"``, ``"2,4,1,3"`` or the compact ``"2413"`` (n <= 9)."""
    text = text.strip()
    if not text:
        raise PermutationError("empty permutation")
    if re.fullmatch(r"\d+", text) and len(text) > 1:
        word = [int(ch) for ch in text]
        if len(word) > 9:
            raise PermutationError("compact digit form is only legal for n <= 9")
    else:
        parts = [p for p in re.split(r"[\s,]+", text.strip("()[]")) if p]
        try:
            word = [int(p) for p in parts]
        except ValueError:
            raise PermutationError(f"cannot parse permutation {text!r}")
    return Permutation(word)


def format_perm(p: Permutation) -> str:
    return " ".join(map(str, p.word))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.n
    for i, v in enumerate(p.word, 1):
        out[v - 1] = i
    return Permutation(out, check=False)


def reverse(p: Permutation) -> Permutation:
    return Permutation(p.word[::-1], check=False)


def complement(p: Permutation) -> Permutation:
    m = p.n + 1
    return Permutation([m - v for v in p.word], check=False)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The function p o q, i.e. i -> p(q(i))."""
    if p.n != q.n:
        raise PermutationError("degrees differ")
    return Permutation([p.word[v - 1] for v in q.word], check=False)


def cycles(p: Permutation) -> CycleDecomposition:
    word = p.word
    seen = [False] * (len(word) + 1)
    out = []
    for start in range(1, len(word) + 1):
        if seen[start]:
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = word[v - 1]
        out.append(tuple(cyc))
    # scanning starts in increasing order, so each cycle begins at its minimum
    return CycleDecomposition(tuple(out))


def unrank(n: int, rank: int) -> Permutation:
    """The permutation at 0-based position ``rank`` in lexicographic order."""
    if not 0 <= rank < math.factorial(n):
        raise PermutationError(f"rank {rank} out of range for n={n}")
    pool = list(range(1, n + 1))
    word = []
    for k in range(n - 1, -1, -1):
        f = math.factorial(k)
        d, rank = divmod(rank, f)
        word.append(pool.pop(d))
    return Permutation(word, check=False)


def _next_lex(word: list[int]) -> bool:
    i = len(word) - 2
    while i >= 0 and word[i] > word[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(word) - 1
    while word[j] < word[i]:
        j -= 1
    word[i], word[j] = word[j], word[i]
    word[i + 1:] = reversed(word[i + 1:])
    return True


def all_perms(n: int, start: int = 0, stop: int | None = None,
              cap: int | None = None) -> Iterator[Permutation]:
    """Yield S_n in lexicographic order, optionally only ranks [start, stop).

    Disjoint rank ranges can be consumed independently and concatenated.
    """
    check_degree(n, cap)
    total = math.factorial(n)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    word = list(unrank(n, start).word)
    for _ in range(stop - start):
        yield Permutation(word, check=False)
        _next_lex(word)


def split_ranges(n: int, parts: int) -> list[tuple[int, int]]:
    """Partition [0, n!) into at most ``parts`` contiguous rank ranges."""
    total = math.factorial(n)
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for k in range(parts):
        hi = lo + step + (1 if k < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def all_codes(n: int, cap: int | None = None) -> Iterator["CodeVector"]:
    from .codes import CodeVector

    check_degree(n, cap)
    for entries in itertools.product(*(range(1, i + 1) for i in range(1, n + 1))):
        yield CodeVector(entries, check=False)
