"""Sparse integer polynomials in the formal variables q, x, y (optionally z).

Terms live in a dict from exponent tuples to nonzero integer coefficients.
Exponent tuple slot k belongs to variable ``VARIABLES[k]``; shorter tuples
are padded with zeros so that polynomials in q, x and in q, x, y mix freely.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Mapping

VARIABLES = ("q", "x", "y", "z")


class Poly:
    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | Iterable = (), nvars: int = 3):
        if isinstance(terms, Mapping):
            terms = terms.items()
        terms = [(tuple(e), c) for e, c in terms]
        nvars = max([nvars] + [len(e) for e, _ in terms])
        if nvars > len(VARIABLES):
            raise ValueError(f"at most {len(VARIABLES)} variables are supported")
        acc: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms:
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            key = exps + (0,) * (nvars - len(exps))
            acc[key] = acc.get(key, 0) + int(coeff)
        self.nvars = nvars
        self.terms = {k: v for k, v in acc.items() if v}

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int, nvars: int = 3) -> "Poly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, name: str, power: int = 1, nvars: int = 3) -> "Poly":
        k = VARIABLES.index(name)
        nvars = max(nvars, k + 1)
        exps = [0] * nvars
        exps[k] = power
        return cls({tuple(exps): 1}, nvars)

    # -- ring operations ----------------------------------------------------

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Poly(list(self.terms.items()) + list(other.terms.items()),
                    max(self.nvars, other.nvars))

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        nvars = max(self.nvars, other.nvars)
        a = self._padded(nvars)
        b = other._padded(nvars)
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return Poly(out, nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def _padded(self, nvars: int) -> dict:
        if nvars == self.nvars:
            return self.terms
        pad = (0,) * (nvars - self.nvars)
        return {k + pad: v for k, v in self.terms.items()}

    def _trimmed(self) -> dict:
        """Terms with trailing all-zero variable slots dropped, for comparisons."""
        nv = self.nvars
        while nv > 1 and all(k[nv - 1] == 0 for k in self.terms):
            nv -= 1
        return {k[:nv]: v for k, v in self.terms.items()}

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._trimmed() == other._trimmed()

    def __hash__(self):
        return hash(frozenset(self._trimmed().items()))

    # -- inspection ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def coefficient(self, *exps: int) -> int:
        key = tuple(exps) + (0,) * (self.nvars - len(exps))
        return self.terms.get(key, 0)

    def total(self) -> int:
        return sum(self.terms.values())

    def degree(self, name: str) -> int:
        k = VARIABLES.index(name)
        if k >= self.nvars:
            return 0
        return max((e[k] for e in self.terms), default=0)

    def eval(self, *values: int) -> int:
        """Exact evaluation; missing trailing values default to 1."""
        values = tuple(values) + (1,) * (self.nvars - len(values))
        total = 0
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(values, exps):
                term *= v ** e
            total += term
        return total

    def subs(self, name: str, value: int) -> "Poly":
        """Substitute an integer for one variable."""
        k = VARIABLES.index(name)
        if k >= self.nvars:
            return self
        out: dict[tuple[int, ...], int] = {}
        for exps, c in self.terms.items():
            key = exps[:k] + (0,) + exps[k + 1:]
            out[key] = out.get(key, 0) + c * value ** exps[k]
        return Poly(out, self.nvars)

    def swap(self, a: str, b: str) -> "Poly":
        """Exchange two variables."""
        i, j = VARIABLES.index(a), VARIABLES.index(b)
        nvars = max(self.nvars, i + 1, j + 1)
        out = {}
        for exps, c in self._padded(nvars).items():
            e = list(exps)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return Poly(out, nvars)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def format_poly(p: Poly) -> str:
    """Canonical text, terms ordered by exponent tuple: ``x^2*y + q*x*y^2``."""
    if not p.terms:
        return "0"
    pieces = []
    for exps, coeff in p.items():
        factors = []
        for name, e in zip(VARIABLES, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        pieces.append((coeff < 0, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def poly_to_csv(p: Poly, nvars: int | None = None) -> str:
    nvars = p.nvars if nvars is None else nvars
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"{v}_exp" for v in VARIABLES[:nvars]] + ["coeff"])
    for exps, c in sorted(p._padded(nvars).items()):
        writer.writerow(list(exps) + [c])
    return buf.getvalue()


def poly_to_json(p: Poly) -> dict:
    return {
        "variables": list(VARIABLES[:p.nvars]),
        "terms": [{"exponents": list(e), "coeff": c} for e, c in p.items()],
        "text": format_poly(p),
    }


def poly_from_json(doc: dict | str) -> Poly:
    if isinstance(doc, str):
        doc = json.loads(doc)
    nvars = len(doc["variables"])
    return Poly({tuple(t["exponents"]): t["coeff"] for t in doc["terms"]}, nvars)


def q_integer(r: int) -> Poly:
    """[r]_q = 1 + q + ... + q^(r-1)."""
    if r < 1:
        raise ValueError(f"q-integer needs r >= 1, got {r}")
    return Poly({(t, 0, 0): 1 for t in range(r)})


def closed_form_main(n: int) -> Poly:
    """xy * prod_{r=2..n} (x + [r]_q + y q^(r-1) - 1 - q^(r-1))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x, y = Poly.var("x"), Poly.var("y")
    result = x * y
    for r in range(2, n + 1):
        qr = Poly.var("q", r - 1)
        result = result * (x + q_integer(r) + y * qr - 1 - qr)
    return result


def closed_form_petersen(n: int) -> Poly:
    """x * prod_{r=2..n} (x + [r]_q - 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = Poly.var("x")
    result = x
    for r in range(2, n + 1):
        result = result * (x + q_integer(r) - 1)
    return result
