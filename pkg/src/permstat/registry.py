"""Named results and the checks that reproduce them at a given degree."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .perm import DegreeCapError, PermutationError
from .qpoly import closed_form_main, closed_form_petersen
from .verify import (MUTATIONS, Check, Engine, VerificationReport, caps, check_equidist,
                     check_injective, check_poly, check_symmetric_pair, check_transfer,
                     dist_numeric, timed)

# -- the tables -------------------------------------------------------------

SET_TRIPLES: dict[int, tuple[str | None, ...]] = {
    1: ("Rmil", "Lmil", "Lmap"),
    2: ("Cyc", "Lmic1", "Lmap"),
    3: ("Lmap", "Lmip", "Rmil"),
    4: ("Rmip*", "Rmap*", "Lmal*"),
    5: ("Lmal*", "Rmal*", "Rmip*"),
    6: ("Lmil", "Rmil", "Rmap*"),
    7: ("Rmal*", "Lmal*", "Lmip"),
    8: ("Rmap*", "Rmip*", "Lmil"),
    9: ("Lmip", "Lmap", "Rmal*"),
    10: ("Lmap", None, "Cyc"),
    11: ("Lmic1", "Cyc", None),
    12: ("Cyc", None, "Rmil"),
    13: ("Rmil", None, "Cyc"),
}

# (source, map, target) for the pointwise arrows that derive the triples.
SET_ARROWS = [
    (1, "i", 3), (1, "i.r.c", 4), (1, "r.c", 5), (1, "r", 6), (1, "c", 7),
    (1, "i.r", 8), (1, "i.c", 9), (1, "phi", 2), (3, "phi", 10), (6, "phi", 11),
    (2, "i", 12), (10, "i", 13),
]

QUADRUPLES: dict[int, tuple[str | None, ...]] = {
    1: ("inv", "rmin", "lmin", "lmax"),
    2: ("sor", "cyc", "lmic1", "lmax"),
    3: ("inv", "lmax", "lmin", "rmin"),
    4: ("inv", "rmin", "rmax", "lmax"),
    5: ("inv", "lmax", "rmax", "rmin"),
    6: ("coinv", "lmin", "rmin", "rmax"),
    7: ("coinv", "rmax", "lmax", "lmin"),
    8: ("coinv", "rmax", "rmin", "lmin"),
    9: ("coinv", "lmin", "lmax", "rmax"),
    10: ("sor", "lmax", "lmic1", "cyc"),
    11: ("cosor", "lmic1", "cyc", None),
    12: ("cosor", None, "lmax", "lmic1"),
    13: ("cosor", None, "cyc", "lmic1"),
    14: ("cosor", "lmic1", "lmax", None),
    15: (None, "cyc", None, "rmin"),
    16: (None, "rmin", None, "cyc"),
    17: ("maj", "rmin", "rmax", None),
    18: ("imaj", "lmax", "rmax", None),
    19: ("rmaj", "lmax", "lmin", None),
    20: ("chg", "rmin", "lmin", None),
    21: ("cochg", "lmin", "rmin", None),
}

# (4) -psi-> (17) is taken in the direction psi actually goes,
# (17)(sigma) = (4)(psi(sigma)). Quadruple (12) comes from (7) under phi;
# (6) -phi-> (12) does not hold pointwise.
QUADRUPLE_ARROWS = [
    (1, "phi", 2), (1, "i", 3), (1, "i.r.c", 4), (1, "r.c", 5), (1, "r", 6),
    (1, "c", 7), (1, "i.r", 8), (1, "i.c", 9), (3, "phi", 10), (6, "phi", 11),
    (7, "phi", 12), (8, "phi", 13), (9, "phi", 14), (2, "i", 15), (10, "i", 16),
    (17, "psi", 4), (17, "i", 18), (17, "r.c", 19), (19, "i", 20), (20, "r", 21),
]

SET_PAIR_GROUPS = [
    [("Rmil", "Lmap"), ("Rmip*", "Lmal*"), ("Rmal*", "Lmip"), ("Rmap*", "Lmil"),
     ("Cyc", "Rmil"), ("Cyc", "Lmap")],
    [("Rmil", "Lmil"), ("Lmap", "Lmip"), ("Rmip*", "Rmap*"), ("Rmal*", "Lmal*"),
     ("Cyc", "Lmic1")],
]

NUMERIC_PAIR_GROUPS = [
    [("rmax", "rmin"), ("rmax", "lmax"), ("rmin", "lmin"), ("lmax", "lmin"),
     ("cyc", "lmic1"), ("lmic1", "lmax")],
    [("rmax", "lmin"), ("rmin", "lmax"), ("cyc", "lmax"), ("cyc", "rmin")],
]

IRC_EDGES = [
    # (map, a, b, dotted)
    ("i", "Lmil", "Lmip", False), ("i", "Rmil", "Lmap", False),
    ("i", "Lmal", "Rmip", False), ("i", "Rmal", "Rmap", False),
    ("r", "Lmil", "Rmil", False), ("r", "Lmal", "Rmal", False),
    ("r", "Lmip", "Rmip", True), ("r", "Lmap", "Rmap", True),
    ("c", "Lmip", "Lmap", False), ("c", "Rmip", "Rmap", False),
    ("c", "Lmil", "Lmal", True), ("c", "Rmil", "Rmal", True),
]

MAJ_FAMILY = [("maj", "i", "imaj"), ("maj", "r.c", "rmaj"), ("rmaj", "i", "chg"),
              ("chg", "r", "cochg")]


def _fmt(t) -> str:
    return "(" + ",".join("-" if s is None else s for s in t) + ")"


# -- check builders -----------------------------------------------------------

def _petersen(e: Engine) -> list[Check]:
    want = closed_form_petersen(e.n)
    return [
        check_equidist("inv,rmin", "sor,cyc", e),
        check_poly("sum q^inv x^rmin = x prod(x+[r]_q-1)", dist_numeric("inv,rmin", e), want),
        check_poly("sum q^sor x^cyc = x prod(x+[r]_q-1)", dist_numeric("sor,cyc", e), want),
    ]


def _foata_han_1(e: Engine) -> list[Check]:
    return [check_transfer("Rmil,Lmap", "Cyc,Lmap", "phi", e)]


def _foata_han_2(e: Engine) -> list[Check]:
    pairs = [("Cyc", "Rmil"), ("Cyc", "Lmap"), ("Rmil", "Lmap")]
    out = [check_symmetric_pair(a, b, e) for a, b in pairs]
    for a, b in pairs[1:]:
        out.append(check_equidist(",".join(pairs[0]), f"{a},{b}", e))
    return out


def _main_1(e: Engine) -> list[Check]:
    return [check_transfer("Inv,Rmil,Lmap,Lmil", "Sor,Cyc,Lmap,Lmic1", "phi", e)]


def _main_2(e: Engine) -> list[Check]:
    want = closed_form_main(e.n)
    return [
        check_equidist("inv,rmin,lmax,lmin", "sor,cyc,lmax,lmic1", e),
        check_poly("sum q^inv x^rmin y^lmin = F_n", dist_numeric("inv,rmin,lmin", e), want),
        check_poly("sum q^sor x^cyc y^lmic1 = F_n", dist_numeric("sor,cyc,lmic1", e), want),
    ]


def _lmip_acode(e: Engine) -> list[Check]:
    return [
        check_transfer("Lmip", "O(Leh)", "id", e, name="Lmip = O(Leh)"),
        check_transfer("Lmil", "O(A)", "id", e, name="Lmil = O(A)"),
        check_transfer("Lmil", "Lmip", "i", e, name="Lmil = Lmip o inverse"),
    ]


def _lmic1_shifted(e: Engine) -> list[Check]:
    return [check_transfer("Lmic1", "Lmil(c1)", "id", e, name="Lmic1 = Lmil(shifted cycle)")]


def _sor_bcode(e: Engine) -> list[Check]:
    return [check_transfer("sor", "sor[B]", "id", e, name="sor = sum(i - b_i)")]


def _inv_acode(e: Engine) -> list[Check]:
    return [
        check_transfer("Inv", "<A>", "id", e, name="Inv = <A>"),
        check_transfer("inv", "|<A>|", "id", e, name="inv = |<A>|"),
    ]


def _phi_sets(e: Engine) -> list[Check]:
    return [
        check_transfer("Inv", "Sor", "phi", e, name="Inv = Sor o phi"),
        check_transfer("Lmil", "Lmic1", "phi", e, name="Lmil = Lmic1 o phi"),
        check_transfer("inv", "sor", "phi", e, name="inv = sor o phi"),
    ]


def _irc(e: Engine) -> list[Check]:
    out = []
    for chi, a, b, dotted in IRC_EDGES:
        s = "*" if dotted else ""
        out.append(check_transfer(a, b + s, chi, e, name=f"{a} -{chi}-> {b}{s}"))
        out.append(check_transfer(b, a + s, chi, e, name=f"{b} -{chi}-> {a}{s}"))
    return out


def _set_all(e: Engine) -> list[Check]:
    ref = SET_TRIPLES[1]
    return [check_equidist(ref, t, e, name=f"({k}) {_fmt(t)} ~ (1)")
            for k, t in SET_TRIPLES.items()]


def _set_arrows(e: Engine) -> list[Check]:
    return [check_transfer(SET_TRIPLES[a], SET_TRIPLES[b], chi, e,
                           name=f"({a}) -{chi}-> ({b})")
            for a, chi, b in SET_ARROWS]


def _pair_groups(e: Engine, groups, label: str) -> list[Check]:
    out = []
    for g, group in enumerate(groups, 1):
        for a, b in group:
            out.append(check_symmetric_pair(a, b, e, name=f"{label}{g}: ({a},{b}) symmetric"))
        ref = group[0]
        for a, b in group[1:]:
            out.append(check_equidist(ref, (a, b), e,
                                      name=f"{label}{g}: ({a},{b}) ~ ({ref[0]},{ref[1]})"))
    return out


def _set_pairs(e: Engine) -> list[Check]:
    return _pair_groups(e, SET_PAIR_GROUPS, "group ")


def _maj_family(e: Engine) -> list[Check]:
    return [check_transfer(a, b, chi, e, name=f"{a} -{chi}-> {b}") for a, chi, b in MAJ_FAMILY]


def _sta_all(e: Engine) -> list[Check]:
    ref = QUADRUPLES[1]
    want = closed_form_main(e.n)
    out = [check_equidist(ref, t, e, name=f"({k}) {_fmt(t)} ~ (1)")
           for k, t in QUADRUPLES.items()]
    for k, t in QUADRUPLES.items():
        if all(s is not None for s in t[:3]):
            out.append(check_poly(f"({k}) first three -> F_n", dist_numeric(t[:3], e), want))
    return out


def _sta_arrows(e: Engine) -> list[Check]:
    return [check_transfer(QUADRUPLES[a], QUADRUPLES[b], chi, e,
                           name=f"({a}) -{chi}-> ({b})")
            for a, chi, b in QUADRUPLE_ARROWS]


def _sta_pairs(e: Engine) -> list[Check]:
    out = _pair_groups(e, NUMERIC_PAIR_GROUPS, "group ")
    want = closed_form_main(e.n).subs("q", 1)
    for a, b in NUMERIC_PAIR_GROUPS[0]:
        out.append(check_poly(f"group 1: sum x^{a} y^{b} = F_n(1,x,y)",
                              dist_numeric((a, b), e), want))
    return out


def _foata_psi(e: Engine) -> list[Check]:
    return [
        check_transfer("maj", "inv", "psi", e, name="maj = inv o psi"),
        check_transfer("rmax,rmin", "rmax,rmin", "psi", e, name="(rmax,rmin) = (rmax,rmin) o psi"),
        check_injective("psi injective", "psi", e),
    ]


def _bijective(e: Engine) -> list[Check]:
    out = [check_injective(f"{name} injective", expr, e) for name, expr in
           [("phi", "phi"), ("phi-inv", "phi-inv")]]
    out.append(check_transfer("word", "word", "phi.phi-inv", e, name="phi-inv o phi = id"))
    out.append(check_transfer("word", "word", "phi-inv.phi", e, name="phi o phi-inv = id"))
    return out


@dataclass(frozen=True)
class Theorem:
    id: str
    title: str
    setvalued: bool
    build: Callable[[Engine], list[Check]]


THEOREMS: dict[str, Theorem] = {t.id: t for t in [
    Theorem("thm-petersen", "(inv,rmin) ~ (sor,cyc) with product formula", False, _petersen),
    Theorem("thm-foata-han-1", "(Rmil,Lmap) -phi-> (Cyc,Lmap)", True, _foata_han_1),
    Theorem("thm-foata-han-2", "(Cyc,Rmil), (Cyc,Lmap), (Rmil,Lmap) symmetric and equidistributed",
            True, _foata_han_2),
    Theorem("thm-main-1", "(Inv,Rmil,Lmap,Lmil) -phi-> (Sor,Cyc,Lmap,Lmic1)", True, _main_1),
    Theorem("thm-main-2", "quadruple equidistribution and F_n(q,x,y)", False, _main_2),
    Theorem("lem-lmip-acode", "Lmip = O(Leh), Lmil = O(A)", True, _lmip_acode),
    Theorem("lem-lmic1-shifted", "Lmic1 = Lmil of the shifted cycle of 1", True, _lmic1_shifted),
    Theorem("eq-sor-bcode", "sor = sum(i - b_i)", False, _sor_bcode),
    Theorem("prop-inv-acode", "Inv = <A>", True, _inv_acode),
    Theorem("lem-phi-sor", "Inv = Sor o phi and Lmil = Lmic1 o phi", True, _phi_sets),
    Theorem("prop-irc", "relation graph of the eight letter/place statistics", True, _irc),
    Theorem("thm-set-all", "13 equidistributed triples of set-valued statistics", True, _set_all),
    Theorem("thm-set-arrows", "pointwise maps between the set-valued triples", True, _set_arrows),
    Theorem("cor-set-pairs", "symmetric pairs of set-valued statistics", True, _set_pairs),
    Theorem("lem-maj-family", "maj, imaj, rmaj, chg, cochg transfers", False, _maj_family),
    Theorem("thm-sta-all", "21 equidistributed quadruples and F_n", False, _sta_all),
    Theorem("thm-sta-arrows", "pointwise maps between the quadruples", False, _sta_arrows),
    Theorem("cor-sta-pairs", "symmetric pairs of ordinary statistics and F_n(1,x,y)", False,
            _sta_pairs),
    Theorem("foata-psi", "maj = inv o psi, (rmax,rmin) preserved", False, _foata_psi),
    Theorem("bij-phi", "phi is a bijection with the stated inverse", False, _bijective),
]}


def resolve_ids(text: str | list[str]) -> list[str]:
    ids = text.split(",") if isinstance(text, str) else list(text)
    ids = [s.strip() for s in ids if s.strip()]
    if ids == ["all"]:
        return list(THEOREMS)
    for tid in ids:
        if tid not in THEOREMS:
            raise PermutationError(f"unknown theorem {tid!r}")
    return ids


def run_theorem(tid: str, n_or_engine, workers: int = 1, mutation: str | None = None,
                max_n: int | None = None) -> VerificationReport:
    if tid not in THEOREMS:
        raise PermutationError(f"unknown theorem {tid!r}")
    thm = THEOREMS[tid]
    if isinstance(n_or_engine, Engine):
        engine, owned = n_or_engine, False
    else:
        overrides = MUTATIONS[mutation] if mutation else None
        engine, owned = Engine(n_or_engine, workers=workers, overrides=overrides,
                               cap=caps(max_n)[0]), True
    numeric_cap, set_cap = caps(max_n)
    cap = set_cap if thm.setvalued else numeric_cap
    if engine.n > cap:
        raise DegreeCapError(f"{tid} needs n <= {cap}, got {engine.n}")
    try:
        return timed(tid, engine.n, lambda: thm.build(engine))
    finally:
        if owned:
            engine.close()


def run_many(ids, degrees, workers: int = 1, mutation: str | None = None,
             max_n: int | None = None) -> list[VerificationReport]:
    """Run every id at every degree, sharing one engine per degree."""
    ids = resolve_ids(ids)
    overrides = MUTATIONS[mutation] if mutation else None
    reports = []
    for n in degrees:
        with Engine(n, workers=workers, overrides=overrides, cap=caps(max_n)[0]) as engine:
            for tid in ids:
                reports.append(run_theorem(tid, engine, max_n=max_n))
    return reports
