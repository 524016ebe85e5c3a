"""Command-line interface.

Exit codes: 0 success, 2 usage or parse error, 3 points not in general
position, 4 a bound check failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import configfile
from .census import is_mixed, run_census, verify_bounds, verify_lemma_bounds
from .diagram import Cycle
from .geometry import Configuration, GeneralPositionError
from .reduction import trivial_triples
from .search import (BoundViolation, DEFAULT_BOUND, DEFAULT_MAGNITUDE, DEFAULT_STALL,
                     derive_seed, random_configuration, reference_relabeling, search_max_fig8)
from .tables import table_matches

EXIT_OK, EXIT_USAGE, EXIT_GEOMETRY, EXIT_BOUND = 0, 2, 3, 4


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str) -> Configuration:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise _Fail(EXIT_USAGE, f"cannot read {path}: {e.strerror}") from None
    try:
        return configfile.loads(text)
    except configfile.ConfigParseError as e:
        raise _Fail(EXIT_USAGE, f"{path}: {e}") from None
    except GeneralPositionError as e:
        raise _Fail(EXIT_GEOMETRY, f"{path}: not in general position: {e}") from None


def cmd_check(args, out) -> int:
    c = _load(args.path)
    report = run_census(c)
    verdicts = verify_bounds(report) + verify_lemma_bounds(c, report)
    ok = all(v.passed for v in verdicts)
    if args.format == "json":
        doc = report.to_dict(with_records=args.records)
        doc["verdicts"] = [{"check": v.check, "passed": v.passed, "detail": v.detail} for v in verdicts]
        doc["mixed_types"] = is_mixed(verdicts)
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        _write_csv(out, [_summary_row(0, None, report, ok)])
    else:
        s = report.summary()
        out.write(f"n={s['n']} cycles={s['cycles']} direction={report.direction}\n")
        out.write(f"unknot={s['unknot']} trefoil={s['trefoil']} figure8={s['figure8']} "
                  f"arf_sum_mod2={s['arf_sum_mod2']}\n")
        out.write(f"trivial_triples={s['trivial_triples']} excluded_cycles={s['excluded_cycles']}\n")
        for r in report.figure8:
            types = ", ".join(f"{t}@{''.join(map(str, L))}(s={s:+d})" for t, L, s in r.table_types)
            out.write(f"figure8 {r.cycle} det={r.determinant} crossings={r.crossings} types: {types or '-'}\n")
        for r in report.trefoils:
            out.write(f"trefoil {r.cycle}\n")
        for v in verdicts:
            out.write(v.line() + "\n")
    if not ok:
        sys.stderr.write("bound violation; counterexample:\n")
        sys.stderr.write(configfile.dumps(c, ["counterexample dumped by k7knots check"]))
        return EXIT_BOUND
    return EXIT_OK


def _parse_cycle(text: str, n: int) -> Cycle:
    try:
        cycle = Cycle.parse(text)
    except ValueError as e:
        raise _Fail(EXIT_USAGE, str(e)) from None
    if sorted(cycle.vertices) != list(range(1, n + 1)):
        raise _Fail(EXIT_USAGE, f"cycle {text!r} is not a Hamiltonian cycle on 1..{n}")
    return cycle


def cmd_tables(args, out) -> int:
    c = _load(args.path)
    if c.n != 7:
        raise _Fail(EXIT_USAGE, "tables need a 7-point configuration")
    cycle = _parse_cycle(args.cycle, 7)
    matches = table_matches(c, cycle)
    if args.format == "json":
        doc = {"cycle": "".join(map(str, cycle.vertices)),
               "matches": [{"labeling": "".join(map(str, m.labeling)), "type": m.type_name,
                            "sign": m.sign, "entries": list(m.table.entries)} for m in matches]}
        out.write(json.dumps(doc, indent=2) + "\n")
        return EXIT_OK
    if not matches:
        out.write("no match\n")
    for m in matches:
        out.write(f"labeling {''.join(map(str, m.labeling))} type {m.type_name} s={m.sign:+d}\n")
        out.write(m.table.format() + "\n")
    return EXIT_OK


def cmd_triples(args, out) -> int:
    c = _load(args.path)
    triples = sorted(trivial_triples(c))
    if args.format == "json":
        out.write(json.dumps([list(t) for t in triples]) + "\n")
    else:
        for t in triples:
            out.write(" ".join(map(str, t)) + "\n")
    return EXIT_OK


def cmd_search(args, out) -> int:
    try:
        res = search_max_fig8(args.budget, args.seed, args.bound, stall=args.stall,
                              magnitude=args.magnitude)
    except BoundViolation as e:
        sys.stderr.write(f"{e}\n")
        sys.stderr.write(configfile.dumps(e.configuration, ["figure-eight bound violated"]))
        return EXIT_BOUND
    c = res.configuration
    report = run_census(c)
    perm = reference_relabeling([r.cycle for r in report.figure8]) if report.figure8_count == 3 else None
    if perm is not None:
        c = c.relabel(perm)
        report = run_census(c)
    header = [
        f"search seed={args.seed} budget={args.budget} bound={args.bound} "
        f"stall={args.stall} magnitude={args.magnitude}",
        f"evaluations={res.evaluations} figure8={report.figure8_count} trefoil={report.trefoil_count}",
        "figure8 cycles: " + " ".join(str(r.cycle) for r in report.figure8),
    ]
    if perm is not None:
        header.append("relabelled by " + "".join(map(str, perm)) + " onto <1234567> <1236754> <1276345>")
    text = configfile.dumps(c, header)
    if args.out:
        Path(args.out).write_text(text)
        out.write(f"figure8={report.figure8_count} trefoil={report.trefoil_count} "
                  f"evaluations={res.evaluations} written to {args.out}\n")
    else:
        out.write(text)
    return EXIT_OK


CSV_FIELDS = ["index", "seed", "n", "unknot", "trefoil", "figure8", "arf_sum_mod2",
              "trivial_triples", "excluded_cycles", "all_pass"]


def _summary_row(index, seed, report, ok) -> dict:
    row = {"index": index, "seed": "" if seed is None else seed}
    row.update({k: v for k, v in report.summary().items() if k in CSV_FIELDS})
    row["all_pass"] = int(ok)
    return row


def _write_csv(out, rows) -> None:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    out.write(buf.getvalue())


def cmd_batch(args, out) -> int:
    rows = []
    all_ok = True
    for i in range(args.count):
        s = derive_seed(args.seed, 2, i)
        c = random_configuration(s, args.bound, n=args.n)
        report = run_census(c, with_tables=args.tables)
        verdicts = verify_bounds(report) + verify_lemma_bounds(c, report)
        ok = all(v.passed for v in verdicts)
        all_ok &= ok
        rows.append(_summary_row(i, s, report, ok))
        if not ok:
            sys.stderr.write(configfile.dumps(c, [f"batch row {i} failed"]))
    if args.out:
        with open(args.out, "w") as fh:
            _write_csv(fh, rows)
    else:
        _write_csv(out, rows)
    return EXIT_OK if all_ok else EXIT_BOUND


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="k7knots", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="text"):
        sp.add_argument("--format", choices=("text", "json", "csv"), default=default)

    sp = sub.add_parser("check", help="census + bound checks for one configuration file")
    sp.add_argument("path")
    sp.add_argument("--records", action="store_true", help="include per-cycle records in JSON")
    fmt(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("tables", help="epsilon tables of one heptagon")
    sp.add_argument("path")
    sp.add_argument("cycle", help='vertex sequence such as "1234567"')
    fmt(sp)
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("triples", help="list trivial triples")
    sp.add_argument("path")
    fmt(sp)
    sp.set_defaults(func=cmd_triples)

    sp = sub.add_parser("search", help="hill-climb towards three figure-eight cycles")
    sp.add_argument("--budget", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    sp.add_argument("--stall", type=int, default=DEFAULT_STALL)
    sp.add_argument("--magnitude", type=int, default=DEFAULT_MAGNITUDE)
    sp.add_argument("--out")
    fmt(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("batch", help="CSV census summaries of random configurations")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    sp.add_argument("--n", type=int, choices=(6, 7), default=7)
    sp.add_argument("--no-tables", dest="tables", action="store_false",
                    help="skip epsilon-table matching (faster)")
    sp.add_argument("--out")
    fmt(sp, default="csv")
    sp.set_defaults(func=cmd_batch)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    if getattr(args, "budget", 1) < 1 or getattr(args, "count", 0) < 0 or getattr(args, "bound", 4) < 4:
        sys.stderr.write("invalid numeric argument\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except _Fail as e:
        sys.stderr.write(f"error: {e}\n")
        return e.code


if __name__ == "__main__":
    sys.exit(main())
