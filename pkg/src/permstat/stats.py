"""Ordinary and set-valued permutation statistics.

Ordinary statistics are addressed by lowercase names (``inv``, ``sor``, ...),
set-valued ones by capitalised names (``Inv``, ``Rmil``, ...). A trailing
``*`` on a position/letter set reflects it through i -> n+1-i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import codes
from .codes import PairSet, PositionSet
from .perm import Permutation, PermutationError, complement, cycles, inverse, reverse


# -- letter / place families ------------------------------------------------

def _left_minima(w):
    best = None
    for i, v in enumerate(w, 1):
        if best is None or v < best:
            best = v
            yield i, v


def _left_maxima(w):
    best = 0
    for i, v in enumerate(w, 1):
        if v > best:
            best = v
            yield i, v


def _right_minima(w):
    best = None
    n = len(w)
    for k in range(n - 1, -1, -1):
        v = w[k]
        if best is None or v < best:
            best = v
            yield k + 1, v


def _right_maxima(w):
    best = 0
    for k in range(len(w) - 1, -1, -1):
        v = w[k]
        if v > best:
            best = v
            yield k + 1, v


def Lmil(p: Permutation) -> PositionSet:
    return frozenset(v for _, v in _left_minima(p.word))


def Lmip(p: Permutation) -> PositionSet:
    return frozenset(i for i, _ in _left_minima(p.word))


def Lmal(p: Permutation) -> PositionSet:
    return frozenset(v for _, v in _left_maxima(p.word))


def Lmap(p: Permutation) -> PositionSet:
    return frozenset(i for i, _ in _left_maxima(p.word))


def Rmil(p: Permutation) -> PositionSet:
    return frozenset(v for _, v in _right_minima(p.word))


def Rmip(p: Permutation) -> PositionSet:
    return frozenset(i for i, _ in _right_minima(p.word))


def Rmal(p: Permutation) -> PositionSet:
    return frozenset(v for _, v in _right_maxima(p.word))


def Rmap(p: Permutation) -> PositionSet:
    return frozenset(i for i, _ in _right_maxima(p.word))


def Cyc(p: Permutation) -> PositionSet:
    return frozenset(c[0] for c in cycles(p))


def Des(p: Permutation) -> PositionSet:
    w = p.word
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def Inv(p: Permutation) -> PairSet:
    w = p.word
    n = len(w)
    return frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def Sor(p: Permutation) -> PairSet:
    return codes.induced_set(codes.b_code(p))


def Lmic1(p: Permutation) -> PositionSet:
    return codes.ones_set(codes.b_code(p))


def star(s: PositionSet, n: int) -> PositionSet:
    return frozenset(n + 1 - i for i in s)


def shifted_cycle_1(p: Permutation) -> tuple[int, ...]:
    """The cycle through 1, rotated so that 1 comes last."""
    w = p.word
    seq = []
    v = w[0]
    while v != 1:
        seq.append(v)
        v = w[v - 1]
    seq.append(1)
    return tuple(seq)


# -- ordinary statistics ----------------------------------------------------

def inv(p: Permutation) -> int:
    w = p.word
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def sorting_transpositions(p: Permutation) -> list[tuple[int, int]]:
    """The factorization sigma = (i_1 j_1)...(i_k j_k) with j_1 < ... < j_k.

    Found by selection sort: for j = n..1 swap the value j into place j.
    Applying the returned position swaps in order to the identity word
    reproduces sigma.
    """
    w = list(p.word)
    pos = [0] * (len(w) + 1)
    for i, v in enumerate(w, 1):
        pos[v] = i
    out = []
    for j in range(len(w), 0, -1):
        i = pos[j]
        if i != j:
            u = w[j - 1]
            w[i - 1], w[j - 1] = u, j
            pos[u], pos[j] = i, j
            out.append((i, j))
    out.reverse()
    return out


def apply_transpositions(n: int, transpositions) -> Permutation:
    w = list(range(1, n + 1))
    for i, j in transpositions:
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return Permutation(w)


def sor(p: Permutation) -> int:
    return sum(j - i for i, j in sorting_transpositions(p))


def sor_from_b_code(p: Permutation) -> int:
    return sum(i - b for i, b in enumerate(codes.b_code(p).entries, 1))


def cyc(p: Permutation) -> int:
    return len(cycles(p))


def maj(p: Permutation) -> int:
    return sum(Des(p))


def imaj(p: Permutation) -> int:
    return maj(inverse(p))


def rmaj(p: Permutation) -> int:
    return maj(complement(reverse(p)))


def chg(p: Permutation) -> int:
    n = p.n
    return sum(n - i for i in Des(inverse(p)))


def cochg(p: Permutation) -> int:
    n = p.n
    d = Des(inverse(p))
    return sum(n - i for i in range(1, n + 1) if i not in d)


def lmin(p: Permutation) -> int:
    return sum(1 for _ in _left_minima(p.word))


def lmax(p: Permutation) -> int:
    return sum(1 for _ in _left_maxima(p.word))


def rmin(p: Permutation) -> int:
    return sum(1 for _ in _right_minima(p.word))


def rmax(p: Permutation) -> int:
    return sum(1 for _ in _right_maxima(p.word))


def lmic1(p: Permutation) -> int:
    return len(Lmic1(p))


def coinv(p: Permutation) -> int:
    """binom(n, 2) - inv."""
    return p.n * (p.n - 1) // 2 - inv(p)


def cosor(p: Permutation) -> int:
    """binom(n, 2) - sor."""
    return p.n * (p.n - 1) // 2 - sor(p)


ORDINARY: dict[str, Callable[[Permutation], int]] = {
    "inv": inv, "sor": sor, "cyc": cyc, "maj": maj, "imaj": imaj, "rmaj": rmaj,
    "chg": chg, "cochg": cochg, "lmin": lmin, "lmax": lmax, "rmin": rmin,
    "rmax": rmax, "lmic1": lmic1, "coinv": coinv, "cosor": cosor,
}

SET_VALUED: dict[str, Callable[[Permutation], frozenset]] = {
    "Inv": Inv, "Sor": Sor, "Cyc": Cyc, "Des": Des, "Lmil": Lmil, "Lmip": Lmip,
    "Lmal": Lmal, "Lmap": Lmap, "Rmil": Rmil, "Rmip": Rmip, "Rmal": Rmal,
    "Rmap": Rmap, "Lmic1": Lmic1,
}

PAIR_KINDS = frozenset({"Inv", "Sor"})

INT, POSITIONS, PAIRS = "int", "positions", "pairs"


@dataclass(frozen=True)
class StatKind:
    """A resolved statistic name."""

    name: str
    base: str
    starred: bool
    category: str

    def __call__(self, p: Permutation):
        return evaluate(p, self)

    def __str__(self) -> str:
        return self.name


def kind(name: str) -> StatKind:
    """Resolve ``"inv"``, ``"Rmil"``, ``"Rmap*"``, ... to a :class:`StatKind`."""
    if isinstance(name, StatKind):
        return name
    name = name.strip()
    starred = name.endswith("*")
    base = name[:-1] if starred else name
    if base in ORDINARY:
        if starred:
            raise PermutationError(f"ordinary statistic {base!r} cannot be starred")
        return StatKind(name, base, False, INT)
    if base in SET_VALUED:
        if starred and base in PAIR_KINDS:
            raise PermutationError(f"pair-set statistic {base!r} cannot be starred")
        return StatKind(name, base, starred, PAIRS if base in PAIR_KINDS else POSITIONS)
    raise PermutationError(f"unknown statistic {name!r}")


def evaluate(p: Permutation, k: StatKind | str):
    k = kind(k)
    if k.category == INT:
        return ORDINARY[k.base](p)
    value = SET_VALUED[k.base](p)
    return star(value, p.n) if k.starred else value


def ordinary_stat(p: Permutation, name: str) -> int:
    k = kind(name)
    if k.category != INT:
        raise PermutationError(f"{name!r} is not an ordinary statistic")
    return ORDINARY[k.base](p)


def set_stat(p: Permutation, name: str) -> frozenset:
    k = kind(name)
    if k.category == INT:
        raise PermutationError(f"{name!r} is not a set-valued statistic")
    return evaluate(p, k)


def format_value(value) -> str:
    if isinstance(value, frozenset):
        if value and isinstance(next(iter(value)), tuple):
            return codes.format_pairs(value)
        return codes.format_positions(value)
    return str(value)
