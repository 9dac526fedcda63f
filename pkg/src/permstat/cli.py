"""``permstat`` command line.

Exit codes: 0 success (or every verification passed), 1 a verification
failed, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import codes, stats
from .bijections import resolve_map
from .perm import DegreeCapError, PermutationError, check_degree, format_perm, parse
from .qpoly import (closed_form_main, closed_form_petersen, format_poly,
                    poly_to_csv, poly_to_json)
from .registry import THEOREMS, resolve_ids, run_many
from .verify import MUTATIONS, Engine, StatTuple, caps, dist_numeric, dist_setvalued, variable_slots

FORMATS = ("text", "csv", "json")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CODE_KINDS = {
    "leh": (codes.lehmer, codes.lehmer_inverse),
    "a": (codes.a_code, codes.a_code_inverse),
    "b": (codes.b_code, codes.b_code_inverse),
}


@dataclass
class CliConfig:
    max_n: int | None = None
    output_format: str = "text"
    parallelism: int = 1

    def __post_init__(self):
        if self.max_n is not None and self.max_n < 1:
            raise PermutationError("--max-n must be >= 1")
        if self.output_format not in FORMATS:
            raise PermutationError(f"unknown format {self.output_format!r}")

    @property
    def numeric_cap(self) -> int:
        return caps(self.max_n)[0]

    @property
    def set_cap(self) -> int:
        return caps(self.max_n)[1]


class UsageError(Exception):
    pass


def parse_degrees(text: str) -> list[int]:
    """``"5"``, ``"1..6"`` or ``"2,4,6"``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise UsageError(f"bad degree range {part!r}")
            if lo > hi:
                raise UsageError(f"empty degree range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            try:
                out.append(int(part))
            except ValueError:
                raise UsageError(f"bad degree {part!r}")
    if not out or min(out) < 1:
        raise UsageError(f"degrees must be positive integers, got {text!r}")
    return out


def _split_names(text: str) -> list[str]:
    return [s.strip() for s in text.split(",") if s.strip()]


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# -- commands -------------------------------------------------------------

def cmd_stats(args, cfg: CliConfig) -> int:
    p = parse(args.perm)
    names = _split_names(args.kinds) if args.kinds else list(stats.ORDINARY) + list(stats.SET_VALUED)
    values = [(name, stats.format_value(stats.evaluate(p, name))) for name in names]
    if cfg.output_format == "json":
        print(json.dumps({"permutation": format_perm(p), "stats": dict(values)}, indent=2))
    elif cfg.output_format == "csv":
        print(_csv([("stat", "value")] + values), end="")
    else:
        for name, v in values:
            print(f"{name}={v}")
    return EXIT_OK


def cmd_code(args, cfg: CliConfig) -> int:
    forward, backward = CODE_KINDS[args.kind]
    if args.invert:
        result = format_perm(backward(codes.parse_code(args.value)))
    else:
        result = codes.format_code(forward(parse(args.value)))
    if cfg.output_format == "json":
        print(json.dumps({"kind": args.kind, "invert": args.invert, "input": args.value,
                          "result": result}))
    else:
        print(result)
    return EXIT_OK


def cmd_map(args, cfg: CliConfig) -> int:
    p = parse(args.perm)
    image = resolve_map(args.map_expr)(p)
    if cfg.output_format == "json":
        print(json.dumps({"permutation": format_perm(p), "map": args.map_expr,
                          "image": format_perm(image)}))
    else:
        print(format_perm(image))
    return EXIT_OK


def _print_poly(poly, cfg: CliConfig, nvars: int = 3) -> None:
    if cfg.output_format == "csv":
        print(poly_to_csv(poly, nvars), end="")
    elif cfg.output_format == "json":
        print(json.dumps(poly_to_json(poly), indent=2))
    else:
        print(format_poly(poly))


def cmd_dist(args, cfg: CliConfig) -> int:
    t = StatTuple.parse(args.kinds)
    numeric = all(c in (None, stats.INT) for c in t.categories())
    cap = cfg.numeric_cap if numeric else cfg.set_cap
    check_degree(args.n, cap)
    with Engine(args.n, workers=cfg.parallelism, cap=cap) as engine:
        if numeric:
            poly = dist_numeric(t, engine)
            _print_poly(poly, cfg, max(3, variable_slots(t)[-1] + 1))
            return EXIT_OK
        counts = dist_setvalued(t, engine)
    names = [s for s in t.slots if s is not None]
    rows = sorted(counts.items())
    if cfg.output_format == "csv":
        print(_csv([names + ["count"]] + [list(k) + [c] for k, c in rows]), end="")
    elif cfg.output_format == "json":
        print(json.dumps({"stats": names, "n": args.n,
                          "counts": [{"values": list(k), "count": c} for k, c in rows]},
                         indent=2))
    else:
        for key, c in rows:
            print(f"{c}\t" + " ".join(key))
    return EXIT_OK


def cmd_verify(args, cfg: CliConfig) -> int:
    degrees = parse_degrees(args.n)
    ids = resolve_ids(args.theorem)
    if args.mutate and args.mutate not in MUTATIONS:
        raise UsageError(f"unknown mutation {args.mutate!r}")
    every = args.theorem.strip() == "all"
    reports, skipped = [], []
    for n in degrees:
        check_degree(n, cfg.numeric_cap)
        todo = []
        for tid in ids:
            if THEOREMS[tid].setvalued and n > cfg.set_cap:
                if not every:
                    raise DegreeCapError(f"{tid} needs n <= {cfg.set_cap}, got {n}")
                skipped.append((tid, n))
            else:
                todo.append(tid)
        reports.extend(run_many(todo, [n], workers=cfg.parallelism, mutation=args.mutate,
                                max_n=cfg.numeric_cap))
    ok = all(r.passed for r in reports)
    if cfg.output_format == "json":
        print(json.dumps({"status": "pass" if ok else "fail",
                          "reports": [r.to_dict() for r in reports],
                          "skipped": [{"theorem": t, "n": n} for t, n in skipped]}, indent=2))
    elif cfg.output_format == "csv":
        rows = [("theorem", "n", "status", "checks", "failed", "elapsed_ms")]
        rows += [(r.theorem, r.n, r.status, len(r.checks),
                  sum(not c.passed for c in r.checks), f"{r.elapsed_ms:.3f}") for r in reports]
        print(_csv(rows), end="")
    else:
        for r in reports:
            print(f"{r.status.upper():4}  {r.theorem:18} n={r.n:<2}  "
                  f"{len(r.checks)} checks  {r.elapsed_ms:9.1f} ms")
            for c in r.checks:
                if not c.passed:
                    print(f"      FAIL {c.name}: {json.dumps(c.counterexample, sort_keys=True)}")
        for tid, n in skipped:
            print(f"SKIP  {tid:18} n={n:<2}  above set-valued cap {cfg.set_cap}")
        total = len(reports)
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{total} passed")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_closed_form(args, cfg: CliConfig) -> int:
    check_degree(args.n, cfg.numeric_cap)
    poly = closed_form_main(args.n) if args.which == "main" else closed_form_petersen(args.n)
    _print_poly(poly, cfg)
    return EXIT_OK


# -- argument parsing -------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _global_flags(parser, defaults: bool) -> None:
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    parser.add_argument("--format", choices=FORMATS, dest="output_format",
                        **({"default": "text"} if defaults else kw))
    parser.add_argument("--max-n", type=int, **({"default": None} if defaults else kw),
                        help="degree cap (overrides PERMSTAT_MAX_N)")
    parser.add_argument("--workers", type=int, **({"default": 1} if defaults else kw),
                        help="worker processes for enumeration, 0 = one per CPU")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="permstat",
                     description="Exact permutation statistics and equidistribution checks.")
    _global_flags(parser, defaults=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stats", help="statistics of one permutation")
    p.add_argument("perm")
    p.add_argument("--kinds", help="comma-separated statistic names (default: all)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("code", help="Lehmer, A- or B-code, or its inverse")
    p.add_argument("value", help="a permutation, or a code vector with --invert")
    p.add_argument("--kind", choices=sorted(CODE_KINDS), default="leh")
    p.add_argument("--invert", action="store_true")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("map", help="apply maps such as phi, psi, i, r, c (joined by '.')")
    p.add_argument("perm")
    p.add_argument("map_expr")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("dist", help="joint distribution over S_n")
    p.add_argument("--kinds", required=True, help="e.g. sor,cyc,lmic1 or Rmil,Lmap ('-' = gap)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", help="check registered theorems by enumeration")
    p.add_argument("--theorem", required=True, help="comma-separated ids or 'all'")
    p.add_argument("--n", required=True, help="degree, range a..b, or list")
    p.add_argument("--mutate", help=f"inject a deliberate error ({', '.join(MUTATIONS)})")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("closed-form", help="expand a product formula")
    p.add_argument("--which", choices=("main", "petersen"), default="main")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_closed_form)

    for sp in sub.choices.values():
        _global_flags(sp, defaults=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = CliConfig(max_n=args.max_n, output_format=args.output_format,
                        parallelism=args.workers)
        return args.func(args, cfg)
    except (PermutationError, DegreeCapError, UsageError) as exc:
        print(f"permstat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream reader (e.g. ``head``) closed early; not an error
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
