"""Bijections of S_n: phi = B^{-1} o A, its inverse, Foata's psi, and a
small registry of named maps (``phi``, ``phi-inv``, ``psi``, ``i``, ``r``,
``c``) that can be chained left to right with ``.``.
"""

from __future__ import annotations

from typing import Callable

from . import codes
from .perm import Permutation, PermutationError, complement, inverse, reverse


def phi(p: Permutation) -> Permutation:
    return codes.b_code_inverse(codes.a_code(p))


def phi_inverse(p: Permutation) -> Permutation:
    return codes.a_code_inverse(codes.b_code(p))


def foata(p: Permutation) -> Permutation:
    """Foata's second fundamental transformation, with maj(p) == inv(foata(p)).

    The image is grown one letter at a time. Before appending a letter ``a``
    to the current word, whose last letter is ``b``, the word is cut after
    every letter that is < a (when b < a) or > a (when b > a); each block
    then has its last letter moved to its front.
    """
    w = p.word
    gamma = [w[0]]
    for a in w[1:]:
        big = gamma[-1] > a
        blocks, block = [], []
        for v in gamma:
            block.append(v)
            if (v > a) == big:
                blocks.append(block)
                block = []
        # the last letter always closes a block, so nothing is left over
        gamma = [v for blk in blocks for v in (blk[-1:] + blk[:-1])]
        gamma.append(a)
    return Permutation(gamma, check=False)


def identity_map(p: Permutation) -> Permutation:
    return p


MAPS: dict[str, Callable[[Permutation], Permutation]] = {
    "id": identity_map,
    "phi": phi,
    "phi-inv": phi_inverse,
    "psi": foata,
    "i": inverse,
    "r": reverse,
    "c": complement,
}


def resolve_map(expr: str) -> Callable[[Permutation], Permutation]:
    """Compile ``"i.r.c"`` into p -> c(r(i(p)))."""
    names = [part.strip() for part in expr.split(".")]
    if not names or any(not part for part in names):
        raise PermutationError(f"malformed map expression {expr!r}")
    for name in names:
        if name not in MAPS:
            raise PermutationError(
                f"unknown map {name!r}; expected one of {', '.join(sorted(MAPS))}")
    funcs = [MAPS[name] for name in names]
    if len(funcs) == 1:
        return funcs[0]

    def chained(p: Permutation) -> Permutation:
        for f in funcs:
            p = f(p)
        return p

    return chained


def apply_map(p: Permutation, expr: str) -> Permutation:
    return resolve_map(expr)(p)
