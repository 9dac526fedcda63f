"""Subexceedant codes of permutations and the induced-set construction."""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import Permutation, PermutationError, inverse

PairSet = frozenset  # frozenset[tuple[int, int]], every pair (i, j) has i < j
PositionSet = frozenset  # frozenset[int], a subset of [n]


@dataclass(frozen=True, slots=True)
class CodeVector:
    """A sequence (l_1, ..., l_n) with 1 <= l_i <= i."""

    entries: tuple[int, ...]

    def __init__(self, entries: Sequence[int], check: bool = True):
        entries = tuple(int(v) for v in entries)
        if check:
            if not entries:
                raise PermutationError("a code vector needs at least one entry")
            for i, v in enumerate(entries, 1):
                if not 1 <= v <= i:
                    raise PermutationError(
                        f"entry {i} of a code vector must lie in 1..{i}, got {v}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        """l_i, 1-indexed."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(i)
        return self.entries[i - 1]

    def __str__(self) -> str:
        return format_code(self)


def parse_code(text: str) -> CodeVector:
    parts = [p for p in re.split(r"[\s,]+", text.strip().strip("()[]")) if p]
    try:
        return CodeVector([int(p) for p in parts])
    except ValueError:
        raise PermutationError(f"cannot parse code vector {text!r}")


def format_code(c: CodeVector) -> str:
    return "(" + ",".join(map(str, c.entries)) + ")"


def format_pairs(pairs: Iterable[tuple[int, int]]) -> str:
    return "{" + ",".join(f"({i},{j})" for i, j in sorted(pairs)) + "}"


def format_positions(members: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(members))) + "}"


def lehmer(p: Permutation) -> CodeVector:
    w = p.word
    seen: list[int] = []
    out = []
    for v in w:
        bisect.insort(seen, v)
        out.append(bisect.bisect_right(seen, v))
    return CodeVector(out, check=False)


def lehmer_inverse(c: CodeVector) -> Permutation:
    """The unique permutation whose Lehmer code is ``c``.

    Reading right to left, sigma_i is the l_i-th smallest value not yet used.
    """
    if not isinstance(c, CodeVector):
        c = CodeVector(c)
    pool = list(range(1, c.n + 1))
    word = [0] * c.n
    for i in range(c.n, 0, -1):
        word[i - 1] = pool.pop(c.entries[i - 1] - 1)
    return Permutation(word, check=False)


def a_code(p: Permutation) -> CodeVector:
    return lehmer(inverse(p))


def a_code_inverse(c: CodeVector) -> Permutation:
    return inverse(lehmer_inverse(c))


def b_code(p: Permutation) -> CodeVector:
    """b_i = sigma^{-k}(i) for the least k >= 1 with sigma^{-k}(i) <= i."""
    inv = inverse(p).word
    out = []
    for i in range(1, p.n + 1):
        j = inv[i - 1]
        while j > i:
            j = inv[j - 1]
        out.append(j)
    return CodeVector(out, check=False)


def b_code_inverse(c: CodeVector) -> Permutation:
    """Rebuild the cycles: i opens a new cycle when b_i = i, otherwise it is
    spliced into b_i's cycle right after b_i."""
    if not isinstance(c, CodeVector):
        c = CodeVector(c)
    succ = [0] * (c.n + 1)
    for i, b in enumerate(c.entries, 1):
        if b == i:
            succ[i] = i
        else:
            succ[i] = succ[b]
            succ[b] = i
    return Permutation(succ[1:], check=False)


def induced_set(c: CodeVector) -> PairSet:
    """The ordered-pair set produced by rank selection and deletion.

    For i = n down to 1: take the l_i-th smallest survivor s of {1..n}, record
    (s, j) for every surviving j > s, then delete s.
    """
    if not isinstance(c, CodeVector):
        c = CodeVector(c)
    survivors = list(range(1, c.n + 1))
    pairs = []
    for i in range(c.n, 0, -1):
        k = c.entries[i - 1] - 1
        s = survivors[k]
        pairs.extend((s, j) for j in survivors[k + 1:])
        del survivors[k]
    return frozenset(pairs)


def ones_set(c: CodeVector) -> PositionSet:
    return frozenset(i for i, v in enumerate(c.entries, 1) if v == 1)
