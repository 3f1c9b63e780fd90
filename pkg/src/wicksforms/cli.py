"""
Command line interface.

Exit codes: 0 success, 1 invalid input word, 2 usage error, 3 budget exceeded.
"""

import argparse
import json
import sys

from . import census
from .automorphisms import aut_group, classify
from .enumeration import (DEFAULT_MAX_NODES, DEFAULT_MAX_SECONDS, BudgetExceeded, UnsupportedGenus,
                          enumerate_nonoriented_maximal, enumerate_oriented_maximal)
from .gluing import glue
from .words import MODES, ORIENTED, WordError, canonicalize, is_maximal, read_word, render_word, validate

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_input(args):
    if args.file:
        with open(args.file) as fh:
            text = fh.read()
    elif args.word is None or args.word == "-":
        text = sys.stdin.read()
    else:
        text = args.word
    if not text.strip():
        raise UsageError("no word given")
    return text


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_validate(args):
    word = read_word(_read_input(args), args.mode)
    report = validate(word)
    if args.format == "json":
        _emit(args, _dump(report.to_json()))
    elif report.ok:
        _emit(args, "ok\n")
    else:
        lines = ["violation (%s) at positions %s: %s" % (v.condition, v.positions, v.message)
                 for v in report.violations]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if report.ok else EXIT_INVALID


def analyze(word):
    report = validate(word)
    if not report.ok:
        return {"ok": False, "validation": report.to_json()}
    graph = glue(word, check=False)
    aut = aut_group(word, graph)
    maximal = is_maximal(word, graph.genus)
    out = {
        "ok": True,
        "word": render_word(word),
        "mode": word.mode,
        "genus": graph.genus,
        "v": graph.vertex_count,
        "e": graph.edge_count,
        "chi": graph.euler_characteristic,
        "degrees": list(graph.degrees),
        "maximal": maximal,
        "aut": aut.to_json(),
    }
    if word.mode == ORIENTED:
        out["signs"] = [v.sign for v in graph.vertices]
        if maximal:
            out["classes"] = classify(word, graph, aut).labels()
    return out


def cmd_analyze(args):
    word = read_word(_read_input(args), args.mode)
    info = analyze(word)
    if args.format == "json":
        _emit(args, _dump(info))
    elif not info["ok"]:
        _emit(args, "invalid: violates %s\n" % ", ".join(validate(word).conditions()))
    else:
        lines = ["%s: %s" % (k, info[k]) for k in
                 ("word", "mode", "genus", "v", "e", "chi", "degrees", "maximal", "aut", "signs", "classes")
                 if k in info]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if info["ok"] else EXIT_INVALID


def cmd_canon(args):
    word = read_word(_read_input(args), args.mode)
    report = validate(word)
    if not report.ok:
        sys.stderr.write("invalid: violates %s\n" % ", ".join(report.conditions()))
        return EXIT_INVALID
    cf = canonicalize(word, reflections=args.reflections)
    if args.format == "json":
        _emit(args, _dump({"canonical": list(cf.symbols), "text": str(cf), "mode": cf.mode,
                           "rotation": cf.rotation, "reflected": cf.reflected}))
    else:
        _emit(args, str(cf) + "\n")
    return EXIT_OK


def _genus_range(args):
    lo, hi = args.genus_range
    if lo < 1 or hi < lo:
        raise UsageError("genus range must satisfy 1 <= lo <= hi")
    return lo, hi


def cmd_table(args):
    lo, hi = _genus_range(args)
    rows = census.census_table(lo, hi)
    if args.format == "csv":
        _emit(args, census.table_csv(rows))
    elif args.format == "json":
        _emit(args, census.table_json(rows) + "\n")
    else:
        lines = []
        for row in rows:
            note = ""
            if row.bijection_status == census.OPEN:
                note = "  (bijection open)"
            elif row.bijection_status == census.NOT_COUNTING:
                note = "  (not a surface count)"
            lines.append("%-3d %s%s" % (row.genus, row.M1, note))
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_masses(args):
    lo, hi = _genus_range(args)
    out = []
    for g in range(lo, hi + 1):
        a, b, c, d = census.masses(g)
        out.append({
            "genus": g,
            "m1": str(a), "m2": str(b), "m3": str(c), "m6": str(d),
            "m2_terms": {str(r): str(census.m2_term(g, r)) for r in census.m2_support(g)},
            "m3_terms": {"%d,%d" % st: str(census.m3_term(g, *st)) for st in census.m3_support(g)},
            "m6_terms": {"%d;%d,%d" % census.m6_label(*p): str(census.m6_term(g, *p))
                         for p in census.m6_support(g)},
        })
    if args.format == "json":
        _emit(args, _dump(out))
    elif args.format == "csv":
        lines = ["genus,m1,m2,m3,m6"] + ["%d,%s,%s,%s,%s" % (o["genus"], o["m1"], o["m2"], o["m3"], o["m6"])
                                          for o in out]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, "\n".join("g=%d m1=%s m2=%s m3=%s m6=%s" % (o["genus"], o["m1"], o["m2"], o["m3"], o["m6"])
                              for o in out) + "\n")
    return EXIT_OK


def cmd_radii(args):
    lo, hi = _genus_range(args)
    if lo < 2:
        raise UsageError("radii need genus >= 2")
    rows = []
    for g in range(lo, hi + 1):
        beta, R, C = census.disk_radii(g, dps=args.precision)
        rows.append((g, _num(beta, args.precision), _num(R, args.precision), _num(C, args.precision)))
    if args.format == "json":
        _emit(args, _dump([{"genus": g, "beta": b, "R": r, "C": c} for g, b, r, c in rows]))
    else:
        sep = "," if args.format == "csv" else " "
        head = [["genus", "beta", "R", "C"]] if args.format == "csv" else []
        _emit(args, "\n".join(sep.join(map(str, row)) for row in head + rows) + "\n")
    return EXIT_OK


def _num(x, digits):
    import mpmath
    return mpmath.nstr(x, digits)


def cmd_enumerate(args):
    budget = {"max_nodes": args.budget_nodes, "max_seconds": args.budget_seconds, "workers": args.workers}
    fn = enumerate_oriented_maximal if args.mode == ORIENTED else enumerate_nonoriented_maximal
    try:
        result = fn(args.genus, expensive=args.expensive, **budget)
    except UnsupportedGenus as exc:
        raise UsageError(str(exc))
    summary = _dump(result.summary())
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(result.jsonl())
        with open(args.output + ".summary.json", "w") as fh:
            fh.write(summary)
    elif args.format == "json":
        sys.stdout.write(summary)
    else:
        sys.stdout.write(result.jsonl())
        sys.stdout.write(summary)
    if result.mass_report and not all(c.passed for c in result.mass_report):
        return EXIT_INVALID
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="wicks", description="Wicks forms: validation, gluing, "
                                     "automorphisms, exact census formulas and exhaustive enumeration.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def word_cmd(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("word", nargs="?", help="word, e.g. \"a b c a' b' c'\" or \"1 2 3 -1 -2 -3\"; '-' reads stdin")
        p.add_argument("--file", help="read the word from FILE")
        p.add_argument("--mode", choices=MODES, default=ORIENTED)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write to FILE instead of stdout")
        p.set_defaults(func=fn)
        return p

    word_cmd("validate", cmd_validate, "check the Wicks conditions")
    word_cmd("analyze", cmd_analyze, "genus, vertices, automorphisms and classes")
    p = word_cmd("canon", cmd_canon, "canonical form")
    p.add_argument("--reflections", action="store_true", help="also identify a word with its reversal")

    def range_cmd(name, fn, help, default):
        p = sub.add_parser(name, help=help)
        p.add_argument("genus_range", nargs="*", type=int, metavar="G", help="lo [hi]")
        p.add_argument("--genus-range", dest="genus_range_opt", nargs=2, type=int, metavar=("LO", "HI"))
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", help="write to FILE instead of stdout")
        p.set_defaults(func=fn, default_range=default)
        return p

    range_cmd("table", cmd_table, "census table of counts per genus", (2, 15))
    range_cmd("masses", cmd_masses, "exact masses per genus", (1, 15))
    p = range_cmd("radii", cmd_radii, "disk radii per genus", (2, 15))
    p.add_argument("--precision", type=int, default=15, help="significant digits")

    p = sub.add_parser("enumerate", help="exhaustive census of maximal forms")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default=ORIENTED)
    p.add_argument("--expensive", action="store_true", help="allow genus beyond the supported range")
    p.add_argument("--budget-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--budget-seconds", type=float, default=DEFAULT_MAX_SECONDS)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", help="write JSON lines to FILE and the summary to FILE.summary.json")
    p.set_defaults(func=cmd_enumerate)
    return parser


def _resolve_range(args):
    if not hasattr(args, "default_range"):
        return
    if args.genus_range_opt:
        args.genus_range = tuple(args.genus_range_opt)
    elif not args.genus_range:
        args.genus_range = args.default_range
    elif len(args.genus_range) == 1:
        args.genus_range = (args.genus_range[0], args.genus_range[0])
    elif len(args.genus_range) == 2:
        args.genus_range = tuple(args.genus_range)
    else:
        raise UsageError("give at most two genus values")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        _resolve_range(args)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return EXIT_USAGE
    except WordError as exc:
        sys.stderr.write("invalid word: %s\n" % exc)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        sys.stderr.write("budget exceeded: %s after %d nodes, %d words found so far\n"
                         % (exc, exc.nodes, len(exc.partial)))
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
