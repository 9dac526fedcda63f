"""Acceptance criteria for the package, one test per criterion.

Every test prints a single ``PASS`` or ``FAIL`` line (outside pytest's output
capture) before asserting. Run ``python3 tests/test_acceptance.py`` to get the
ten lines without pytest.
"""

import contextlib
import io
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from permstat import stats  # noqa: E402
from permstat.bijections import foata, phi, phi_inverse  # noqa: E402
from permstat.cli import main  # noqa: E402
from permstat.codes import (a_code, a_code_inverse, b_code, b_code_inverse,  # noqa: E402
                            CodeVector, induced_set, lehmer, lehmer_inverse)
from permstat.perm import all_perms, parse  # noqa: E402
from permstat.qpoly import closed_form_main, closed_form_petersen  # noqa: E402
from permstat.registry import NUMERIC_PAIR_GROUPS, SET_PAIR_GROUPS  # noqa: E402
from permstat.verify import Engine, check_symmetric_pair, dist_numeric  # noqa: E402

import oracles  # noqa: E402

S7 = list(all_perms(7))


def ac1():
    start = time.perf_counter()
    bad = []
    for n in range(1, 8):
        want = closed_form_main(n)
        lhs, rhs = dist_numeric("inv,rmin,lmin", n), dist_numeric("sor,cyc,lmic1", n)
        if not (lhs == rhs == want and oracles.to_sympy(want) == oracles.F(n)):
            bad.append(n)
    elapsed = time.perf_counter() - start
    where = f"mismatch at n={bad}" if bad else "exact for n=1..7"
    return not bad and elapsed < 10, f"{where}, {elapsed:.2f} s (limit 10 s)"


def ac2():
    bad = [n for n in range(1, 8)
           if not (dist_numeric("inv,rmin", n) == dist_numeric("sor,cyc", n)
                   == closed_form_petersen(n)
                   and oracles.to_sympy(closed_form_petersen(n)) == oracles.petersen(n))]
    return not bad, f"mismatch at n={bad}" if bad else "exact for n=1..7"


def ac3():
    lhs = ("Inv", "Rmil", "Lmap", "Lmil")
    rhs = ("Sor", "Cyc", "Lmap", "Lmic1")
    violations = 0
    for n in range(1, 8):
        for p in all_perms(n):
            f = phi(p)
            violations += any(stats.set_stat(p, a) != stats.set_stat(f, b)
                              for a, b in zip(lhs, rhs))
    return violations == 0, f"{violations} violations over S_1..S_7"


def ac4():
    c = CodeVector((1, 1, 3, 2, 5, 5, 5))
    checks = {
        "A(2413765)": a_code(parse("2413765")) == c,
        "B(2431756)": b_code(parse("2431756")) == c,
        "<(1,1,3,2,5,5,5)>": induced_set(c) == {(5, 6), (5, 7), (6, 7), (2, 3), (2, 4), (1, 3)},
        "sor(2431756)": stats.sor(parse("2431756")) == 6,
        "Lmic1(579328164)": stats.Lmic1(parse("579328164")) == {1, 2, 5},
        "B(579328164)": b_code(parse("579328164")).entries == (1, 1, 3, 3, 1, 6, 2, 6, 3),
    }
    wrong = [k for k, ok in checks.items() if not ok]
    return not wrong, f"{len(checks) - len(wrong)}/{len(checks)} goldens, wrong: {wrong}"


def _verify_all(workers):
    sink = io.StringIO()
    with contextlib.redirect_stdout(sink):
        set_code = main(["verify", "--theorem", "all", "--n", "1..6", "--workers", str(workers)])
        num_code = main(["verify", "--theorem", "all", "--n", "7", "--workers", str(workers)])
    return set_code, num_code, sink.getvalue()


def ac5():
    start = time.perf_counter()
    runs = {w: _verify_all(w) for w in (1, 4)}
    elapsed = time.perf_counter() - start
    ok = all(s == 0 and n == 0 for s, n, _ in runs.values()) and elapsed < 120
    summary = ", ".join(f"workers={w}: exit {s}/{n}" for w, (s, n, _) in runs.items())
    return ok, f"{summary}, {elapsed:.1f} s for both (limit 120 s)"


def ac6():
    sizes = {
        "Leh": len({lehmer(p) for p in S7}),
        "A": len({a_code(p) for p in S7}),
        "B": len({b_code(p) for p in S7}),
        "phi": len({phi(p) for p in S7}),
        "psi": len({foata(p) for p in S7}),
    }
    trips = all(lehmer_inverse(lehmer(p)) == p and a_code_inverse(a_code(p)) == p
                and b_code_inverse(b_code(p)) == p and phi_inverse(phi(p)) == p for p in S7)
    ok = trips and all(v == 5040 for v in sizes.values())
    return ok, f"image sizes {sizes}, round trips exact={trips}"


def ac7():
    sor_bad = sum(stats.sor(p) != sum(i - b for i, b in enumerate(b_code(p), 1)) for p in S7)
    inv_bad = sum(oracles.inv(p.word) != len(induced_set(a_code(p))) for p in S7)
    return sor_bad == inv_bad == 0, f"sor mismatches {sor_bad}, inv mismatches {inv_bad}"


def ac8():
    bad = 0
    for p in S7:
        f = foata(p)
        bad += (oracles.maj(p.word) != oracles.inv(f.word)
                or (stats.rmax(p), stats.rmin(p)) != (stats.rmax(f), stats.rmin(f)))
    return bad == 0, f"{bad} violations over S_7"


def ac9():
    failed = []
    for n in range(1, 7):
        e = Engine(n)
        for group in SET_PAIR_GROUPS + NUMERIC_PAIR_GROUPS:
            failed += [(a, b, n) for a, b in group if not check_symmetric_pair(a, b, e).passed]
        want = closed_form_main(n).subs("q", 1)
        failed += [(a, b, n, "F(1,x,y)") for a, b in NUMERIC_PAIR_GROUPS[0]
                   if dist_numeric((a, b), e) != want]
    pairs = sum(map(len, SET_PAIR_GROUPS + NUMERIC_PAIR_GROUPS))
    return not failed, f"{pairs} pairs for n<=6, failures: {failed}"


def ac10():
    sink = io.StringIO()
    with contextlib.redirect_stdout(sink):
        code = main(["--format", "json", "verify", "--theorem", "thm-main-2", "--n", "3",
                     "--mutate", "inv-misprint"])
    out = sink.getvalue()
    ok = code == 1 and '"counterexample"' in out and '"status": "fail"' in out
    return ok, f"exit {code} with a reported counterexample={'counterexample' in out}"


CRITERIA = [
    ("AC1 closed form, main product", ac1),
    ("AC2 closed form, two-variable product", ac2),
    ("AC3 pointwise quadruple transfer under phi", ac3),
    ("AC4 worked-example goldens", ac4),
    ("AC5 full theorem suite via CLI", ac5),
    ("AC6 bijectivity on S_7", ac6),
    ("AC7 cross-formula consistency", ac7),
    ("AC8 Foata transform properties", ac8),
    ("AC9 symmetric pairs", ac9),
    ("AC10 negative control", ac10),
]


def run_criterion(label, fn):
    ok, detail = fn()
    return ok, f"{'PASS' if ok else 'FAIL'}  {label}: {detail}"


@pytest.mark.parametrize("label, fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, fn, capsys):
    ok, line = run_criterion(label, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(label, fn) for label, fn in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
