"""Command-line front end.

    tanglekh compute FILE [--field Q|GF2] [--format text|json] [--max-crossings N]
    tanglekh reduce FILE [--trace]
    tanglekh verify-tables [--table 1|2|all]
    tanglekh euler-check FILE...
    tanglekh expand N N_PLUS N_MINUS

Exit codes: 0 ok, 1 input error, 2 crossing cap exceeded, 3 verification failure.
``TANGLEKH_WORKERS`` sets the process count for batch commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .complex import DEFAULT_MAX_CROSSINGS, CrossingCapError, build_complex
from .diagram import DiagramError, crossing_counts, load_diagram
from .homology import betti, graded_euler_state_sum, jones_specialization, poincare_polynomial
from .linalg import GF2
from .reduction import generator_expansion, reduce, simple_poincare
from .tables import GoldenEntry, golden_entries, load_fixture

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3
WORKERS_ENV = "TANGLEKH_WORKERS"


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map(fn, items):
    """Ordered map, in parallel when ``TANGLEKH_WORKERS`` > 1."""
    n = _workers()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(n) as pool:
        return list(pool.map(fn, items))


def cmd_compute(args, out) -> int:
    d = load_diagram(args.path)
    b = betti(build_complex(d, args.field, args.max_crossings))
    p = poincare_polynomial(b)
    if args.format == "json":
        payload = json.loads(b.to_json())
        payload["poincare"] = str(p)
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        n_plus, n_minus = crossing_counts(d)
        out.write(f"crossings: {d.n} (n+ = {n_plus}, n- = {n_minus}), field {b.field.name}\n")
        out.write(b.format() + "\n")
        out.write(f"{p}\n")
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    d = load_diagram(args.path)
    trace, p = reduce(d)
    if args.trace:
        for line in trace.lines():
            out.write(line + "\n")
    out.write(f"{p}\n")
    return EXIT_OK


def _verify_one(e: GoldenEntry):
    d = load_fixture(e)
    got = poincare_polynomial(betti(build_complex(d)))
    mod2 = poincare_polynomial(betti(build_complex(d, GF2)))
    return e, got, crossing_counts(d), mod2


def cmd_verify_tables(args, out) -> int:
    entries = golden_entries(args.table)
    failed = 0
    flagged = []
    gf2_notes = []
    for e, got, counts, mod2 in _map(_verify_one, entries):
        if mod2 != got:
            gf2_notes.append(f"NOTE  {e.name}: over GF2 the polynomial is {mod2} (2-torsion)\n")
        ok = got == e.expected and counts == e.sign_counts
        if e.flagged:
            flagged.append((e, got, ok))
            if not ok:
                failed += 1
            continue
        if ok:
            out.write(f"PASS  {e.name}: {got}\n")
        else:
            failed += 1
            out.write(f"FAIL  {e.name}: expected {e.expected}, got {got}"
                      f" (signs n+={counts[0]}, n-={counts[1]})\n")
    for e, got, ok in flagged:
        tag = "PASS" if ok else "FAIL"
        out.write(f"FLAG  {e.name}: printed {e.printed_poly}, computed {got}; "
                  f"closed form gives {e.expected} [{tag}, suspected typo in printed row]\n")
    out.writelines(gf2_notes)
    out.write(f"{len(entries) - failed}/{len(entries)} rows ok, {len(flagged)} flagged\n")
    return EXIT_VERIFY if failed else EXIT_OK


def _euler_one(path):
    d = load_diagram(path)
    p = poincare_polynomial(betti(build_complex(d)))
    return path, jones_specialization(p), graded_euler_state_sum(d)


def cmd_euler_check(args, out) -> int:
    failed = 0
    for path, lhs, rhs in _map(_euler_one, list(args.paths)):
        ok = lhs == rhs
        failed += not ok
        out.write(f"{'PASS' if ok else 'FAIL'}  {path}: P(-1, y) = {lhs}; state sum = {rhs}\n")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_expand(args, out) -> int:
    out.write(f"{simple_poincare(args.n, args.n_plus, args.n_minus)}\n")
    out.write(f"{generator_expansion(args.n, args.n_plus, args.n_minus)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tanglekh", description="Khovanov homology of tangle diagrams")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="Betti table and Poincare polynomial of a diagram file")
    c.add_argument("path")
    c.add_argument("--field", choices=["Q", "GF2"], default="Q")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    c.set_defaults(func=cmd_compute)

    r = sub.add_parser("reduce", help="closed-form polynomial of a simple tangle by arc reduction")
    r.add_argument("path")
    r.add_argument("--trace", action="store_true")
    r.set_defaults(func=cmd_reduce)

    v = sub.add_parser("verify-tables", help="recompute the golden table rows")
    v.add_argument("--table", choices=["1", "2", "all"], default="all")
    v.set_defaults(func=cmd_verify_tables)

    e = sub.add_parser("euler-check", help="compare P(-1, y) with the state-sum Euler characteristic")
    e.add_argument("paths", nargs="+")
    e.set_defaults(func=cmd_euler_check)

    x = sub.add_parser("expand", help="closed form and generator bigradings for N arcs, n+ and n- crossings")
    x.add_argument("n", type=int)
    x.add_argument("n_plus", type=int)
    x.add_argument("n_minus", type=int)
    x.set_defaults(func=cmd_expand)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CrossingCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DiagramError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
