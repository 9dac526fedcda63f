"""Exhaustive enumeration over S_n: joint distributions and the transfer,
equidistribution and symmetry checks that theorems are built from.

An :class:`Engine` owns one degree ``n``. It evaluates statistics column by
column (one value per permutation, in lexicographic order) and caches the
columns, so a theorem touching the same statistic many times pays once.
With ``workers > 1`` a column is computed over contiguous rank ranges in
separate processes and the pieces are concatenated in range order, so
results never depend on the worker count.
"""

from __future__ import annotations

import math
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import codes, stats
from .bijections import resolve_map
from .perm import (DEFAULT_MAX_N, DEFAULT_SET_MAX_N, DegreeCapError, Permutation,
                   PermutationError, all_perms, check_degree, format_perm, split_ranges,
                   unrank)
from .qpoly import VARIABLES, Poly

GAP = "-"

MAHONIAN = frozenset({"inv", "sor", "maj", "imaj", "rmaj", "chg", "cochg", "coinv", "cosor"})


def _shifted_lmil(p: Permutation) -> frozenset:
    return stats.Lmil(Permutation(stats.shifted_cycle_1(p), check=False))


# Derived evaluators used by the lemma checks; addressable like statistics.
AUXILIARY: dict[str, tuple[Callable[[Permutation], object], str]] = {
    "O(Leh)": (lambda p: codes.ones_set(codes.lehmer(p)), stats.POSITIONS),
    "O(A)": (lambda p: codes.ones_set(codes.a_code(p)), stats.POSITIONS),
    "<A>": (lambda p: codes.induced_set(codes.a_code(p)), stats.PAIRS),
    "|<A>|": (lambda p: len(codes.induced_set(codes.a_code(p))), stats.INT),
    "sor[B]": (stats.sor_from_b_code, stats.INT),
    "Lmil(c1)": (_shifted_lmil, stats.POSITIONS),
    "word": (lambda p: p.word, "word"),
}


def misprinted_inv(p: Permutation) -> int:
    """inv with the inequality flipped (counts non-inversions)."""
    w = p.word
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] < w[j])


MUTATIONS: dict[str, dict[str, Callable[[Permutation], object]]] = {
    "inv-misprint": {"inv": misprinted_inv},
}


def category(name: str) -> str:
    if name in AUXILIARY:
        return AUXILIARY[name][1]
    return stats.kind(name).category


def _evaluator(name: str, map_expr: str | None, overrides=None):
    if overrides and name in overrides:
        base = overrides[name]
    elif name in AUXILIARY:
        base = AUXILIARY[name][0]
    else:
        k = stats.kind(name)
        if overrides and k.base in overrides:
            f = overrides[k.base]
            base = (lambda p: stats.star(f(p), p.n)) if k.starred else f
        else:
            base = k
    if map_expr is None or map_expr == "id":
        return base
    chi = resolve_map(map_expr)
    return lambda p: base(chi(p))


def _column_chunk(n: int, name: str, map_expr: str | None, start: int, stop: int) -> list:
    fn = _evaluator(name, map_expr)
    return [fn(p) for p in all_perms(n, start, stop, cap=n)]


@dataclass(frozen=True)
class StatTuple:
    """An ordered tuple of statistic names; ``None`` marks a gap."""

    slots: tuple[str | None, ...]

    @classmethod
    def parse(cls, text) -> "StatTuple":
        if isinstance(text, StatTuple):
            return text
        if isinstance(text, str):
            text = text.strip()
            if text in AUXILIARY:
                text = [text]
            else:
                if text.startswith("(") and text.endswith(")"):
                    text = text[1:-1]
                text = text.split(",")
        slots = []
        for s in text:
            s = s.strip() if s is not None else GAP
            if s in (GAP, ""):
                slots.append(None)
            else:
                category(s)  # validates the name
                slots.append(s)
        if not any(slots):
            raise PermutationError("a statistic tuple needs at least one non-gap slot")
        return cls(tuple(slots))

    @property
    def arity(self) -> int:
        return len(self.slots)

    def positions(self) -> list[int]:
        return [k for k, s in enumerate(self.slots) if s is not None]

    def categories(self) -> list[str | None]:
        return [None if s is None else category(s) for s in self.slots]

    def __str__(self) -> str:
        return "(" + ",".join(GAP if s is None else s for s in self.slots) + ")"


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class VerificationReport:
    theorem: str
    n: int
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def counterexample(self) -> dict | None:
        for c in self.checks:
            if not c.passed:
                return {"check": c.name, **(c.counterexample or {"detail": c.detail})}
        return None

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "n": self.n,
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if not self.passed:
            out["counterexample"] = self.counterexample
        return out


class Engine:
    """Cached lexicographic columns of statistic values over S_n."""

    def __init__(self, n: int, workers: int = 1, overrides=None, cap: int | None = None):
        check_degree(n, cap)
        self.n = n
        self.size = math.factorial(n)
        self.workers = (os.cpu_count() or 1) if workers == 0 else max(1, workers)
        self.overrides = dict(overrides or {})
        self._columns: dict[tuple[str, str | None], list] = {}
        self._pool: ProcessPoolExecutor | None = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None

    def perm(self, rank: int) -> Permutation:
        return unrank(self.n, rank)

    def column(self, name: str, map_expr: str | None = None) -> list:
        """Values of ``name`` at chi(sigma) for every sigma, in lexicographic order."""
        if map_expr == "id":
            map_expr = None
        key = (name, map_expr)
        col = self._columns.get(key)
        if col is not None:
            return col
        overridden = name in self.overrides or (
            name not in AUXILIARY and stats.kind(name).base in self.overrides)
        if self.workers == 1 or overridden or self.size < 2 * self.workers:
            fn = _evaluator(name, map_expr, self.overrides)
            col = [fn(p) for p in all_perms(self.n, cap=self.n)]
        else:
            if self._pool is None:
                self._pool = ProcessPoolExecutor(max_workers=self.workers)
            ranges = split_ranges(self.n, self.workers)
            futures = [self._pool.submit(_column_chunk, self.n, name, map_expr, lo, hi)
                       for lo, hi in ranges]
            col = []
            for fut in futures:
                col.extend(fut.result())
        self._columns[key] = col
        return col

    def rows(self, t: StatTuple, positions: Sequence[int] | None = None,
             map_expr: str | None = None) -> list[tuple]:
        positions = t.positions() if positions is None else positions
        cols = [self.column(t.slots[k], map_expr) for k in positions]
        return list(zip(*cols))


def _engine(n_or_engine, **kw) -> Engine:
    return n_or_engine if isinstance(n_or_engine, Engine) else Engine(n_or_engine, **kw)


def _canonical(value) -> str:
    return stats.format_value(value)


def variable_slots(t: StatTuple) -> list[int]:
    """Which variable (index into q, x, y, z) each slot of ``t`` feeds.

    q is reserved for a Mahonian first slot; a tuple that opens with a
    Stirling-type statistic starts at x instead, so ``(cyc)`` gives a
    polynomial in x and ``(rmin, lmin)`` one in x and y.
    """
    first = t.slots[0]
    offset = 1 if first is not None and first not in MAHONIAN else 0
    if t.arity + offset > len(VARIABLES):
        raise PermutationError(f"too many numeric slots in {t}")
    return [k + offset for k in range(t.arity)]


def dist_numeric(t, n_or_engine, **kw) -> Poly:
    """sum over S_n of prod_k var_k ** slot_k(sigma), gaps contributing nothing."""
    t = StatTuple.parse(t)
    if any(c not in (None, stats.INT) for c in t.categories()):
        raise PermutationError(f"{t} mixes in set-valued statistics")
    eng = _engine(n_or_engine, **kw)
    vars_ = variable_slots(t)
    nvars = max(3, vars_[-1] + 1)
    positions = t.positions()
    counts = Counter(eng.rows(t, positions))
    terms = {}
    for row, c in counts.items():
        exps = [0] * nvars
        for k, v in zip(positions, row):
            exps[vars_[k]] += v
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + c
    return Poly(terms, nvars)


def dist_setvalued(t, n_or_engine, **kw) -> Counter:
    """Multiset of canonically serialised value tuples over the non-gap slots."""
    t = StatTuple.parse(t)
    eng = _engine(n_or_engine, **kw)
    return Counter(tuple(_canonical(v) for v in row) for row in eng.rows(t))


def check_transfer(lhs, rhs, map_name: str, n_or_engine, name: str | None = None,
                   **kw) -> Check:
    """lhs_k(sigma) == rhs_k(chi(sigma)) for every sigma and non-gap slot k."""
    lhs, rhs = StatTuple.parse(lhs), StatTuple.parse(rhs)
    resolve_map(map_name)
    if lhs.arity != rhs.arity:
        raise PermutationError(f"{lhs} and {rhs} have different arities")
    positions = [k for k in range(lhs.arity)
                 if lhs.slots[k] is not None and rhs.slots[k] is not None]
    for k in positions:
        if category(lhs.slots[k]) != category(rhs.slots[k]):
            raise PermutationError(f"slot {k + 1} of {lhs} and {rhs} differ in kind")
    eng = _engine(n_or_engine, **kw)
    name = name or f"{lhs} -{map_name}-> {rhs}"
    a = eng.rows(lhs, positions)
    b = eng.rows(rhs, positions, map_expr=map_name)
    for idx, (u, v) in enumerate(zip(a, b)):
        if u != v:
            sigma = eng.perm(idx)
            image = resolve_map(map_name)(sigma)
            return Check(name, False, counterexample={
                "permutation": format_perm(sigma),
                "image": format_perm(image),
                "lhs": [_canonical(x) for x in u],
                "rhs": [_canonical(x) for x in v],
            })
    return Check(name, True, f"{eng.size} permutations")


def _compare_counters(name: str, eng: Engine, ca: Counter, cb: Counter,
                      rows_a: list, rows_b: list) -> Check:
    if ca == cb:
        return Check(name, True, f"{len(ca)} fibers")
    bad = sorted((k for k in set(ca) | set(cb) if ca[k] != cb[k]),
                 key=lambda k: [_canonical(v) for v in k])[0]
    example = {
        "fiber": [_canonical(v) for v in bad],
        "lhs_count": ca[bad],
        "rhs_count": cb[bad],
    }
    for side, rows in (("lhs_witness", rows_a), ("rhs_witness", rows_b)):
        for idx, row in enumerate(rows):
            if row == bad:
                example[side] = format_perm(eng.perm(idx))
                break
    return Check(name, False, counterexample=example)


def check_equidist(lhs, rhs, n_or_engine, name: str | None = None, **kw) -> Check:
    """Equal joint distributions on the slots where neither tuple has a gap."""
    lhs, rhs = StatTuple.parse(lhs), StatTuple.parse(rhs)
    width = min(lhs.arity, rhs.arity)
    positions = [k for k in range(width)
                 if lhs.slots[k] is not None and rhs.slots[k] is not None]
    if not positions:
        raise PermutationError(f"{lhs} and {rhs} share no non-gap slot")
    for k in positions:
        if category(lhs.slots[k]) != category(rhs.slots[k]):
            raise PermutationError(f"slot {k + 1} of {lhs} and {rhs} differ in kind")
    eng = _engine(n_or_engine, **kw)
    name = name or f"{lhs} ~ {rhs}"
    a = eng.rows(lhs, positions)
    b = eng.rows(rhs, positions)
    return _compare_counters(name, eng, Counter(a), Counter(b), a, b)


def check_symmetric_pair(a: str, b: str, n_or_engine, name: str | None = None,
                         **kw) -> Check:
    """The joint distribution of (a, b) is invariant under swapping a and b."""
    if category(a) != category(b):
        raise PermutationError(f"{a} and {b} differ in kind")
    eng = _engine(n_or_engine, **kw)
    name = name or f"({a},{b}) symmetric"
    ab = list(zip(eng.column(a), eng.column(b)))
    ba = [(v, u) for u, v in ab]
    return _compare_counters(name, eng, Counter(ab), Counter(ba), ab, ba)


def check_poly(name: str, got: Poly, want: Poly) -> Check:
    if got == want:
        return Check(name, True, str(want) if len(want) <= 6 else f"{len(want)} terms")
    return Check(name, False, counterexample={"got": str(got), "expected": str(want)})


def check_injective(name: str, map_expr: str, eng: Engine) -> Check:
    images = eng.column("word", map_expr)
    distinct = len(set(images))
    if distinct == eng.size:
        return Check(name, True, f"image size {distinct}")
    seen = {}
    for idx, w in enumerate(images):
        if w in seen:
            return Check(name, False, counterexample={
                "permutations": [format_perm(eng.perm(seen[w])), format_perm(eng.perm(idx))],
                "image": " ".join(map(str, w)),
            })
        seen[w] = idx
    raise AssertionError("unreachable")


def caps(max_n: int | None = None) -> tuple[int, int]:
    """(numeric cap, set-valued cap); an explicit or environment cap governs both."""
    if max_n is None and os.environ.get("PERMSTAT_MAX_N"):
        from .perm import max_degree
        max_n = max_degree()
    if max_n is not None:
        return max_n, max_n
    return DEFAULT_MAX_N, DEFAULT_SET_MAX_N


def timed(theorem: str, n: int, build: Callable[[], list[Check]]) -> VerificationReport:
    t0 = time.perf_counter()
    checks = build()
    return VerificationReport(theorem, n, checks, (time.perf_counter() - t0) * 1000.0)


__all__ = [
    "AUXILIARY", "Check", "DegreeCapError", "Engine", "GAP", "MUTATIONS", "StatTuple",
    "VerificationReport", "caps", "check_equidist", "check_injective", "check_poly",
    "check_symmetric_pair", "check_transfer", "dist_numeric", "dist_setvalued",
    "variable_slots",
]
