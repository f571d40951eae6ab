"""Command-line front end: every operation, with machine-readable output.

Formats: ``plain`` (human-oriented, default), ``json`` (one well-formed
document per invocation), ``csv`` (fixed header row per subcommand).
Fields holding subsequence counts or Euclidean-pair components print as
decimal strings in JSON because they outgrow 64-bit integers quickly.

Exit codes: 0 success, 2 usage or domain error, 3 budget error, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .approx import BoundedQuotientTarget, approx_experiment, bound_sweep
from .errors import BudgetError
from .euclid import RunLengthWord, cf_of_rational, euclid_word, word_to_cf, word_to_pair
from .extremal import (
    alternating_count,
    alternating_word,
    best_extension,
    mean_subseq_exact,
    min_length_lower_bound,
)
from .search import (
    brute_force_shortest,
    count_words,
    quotient_sum_stats,
    shortest_word,
    zaremba_scan,
    zaremba_witness,
)
from .words import A, complement, profile

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4

#: Words longer than this print as run-length form unless --expand is given.
EXPAND_LIMIT = 10**6


# ---------------------------------------------------------------------------
# rendering

def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def _render(fmt: str, doc, columns: list[str], plain_lines: list[str] | None) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    rows = doc if isinstance(doc, list) else [doc]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in columns])
        return buf.getvalue()
    if plain_lines is not None:
        return "".join(line + "\n" for line in plain_lines)
    if isinstance(doc, list):
        lines = [" ".join(f"{c}={_cell(row.get(c))}" for c in columns) for row in rows]
    else:
        lines = [f"{c}: {_cell(doc.get(c))}" for c in columns]
    return "".join(line + "\n" for line in lines)


def _word_fields(rlw: RunLengthWord, expand: bool) -> dict:
    d: dict = {"first": rlw.first, "runs": list(rlw.runs), "length": rlw.length}
    d["word"] = rlw.expand() if (expand or rlw.length <= EXPAND_LIMIT) else None
    return d


def _word_plain(fields: dict) -> str:
    if fields["word"] is not None:
        return fields["word"]
    letter = fields["first"]
    parts = []
    for r in fields["runs"]:
        parts.append(f"{letter}^{r}")
        letter = complement(letter)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (doc, csv columns, plain lines or None)

def _cmd_count(args):
    p = profile(args.word)
    doc = {
        "word": args.word,
        "length": len(args.word),
        "pA_start": str(p.start_a),
        "pB_start": str(p.start_b),
        "pA_end": str(p.end_a),
        "pB_end": str(p.end_b),
        "total": str(p.total),
    }
    return doc, list(doc), None


def _cmd_gen(args):
    rlw = euclid_word(args.a, args.b)
    doc = {"a": str(args.a), "b": str(args.b), **_word_fields(rlw, args.expand)}
    return doc, list(doc), [_word_plain(doc)]


def _cmd_pair(args):
    pair = word_to_pair(args.word)
    doc = {"word": args.word, "a": str(pair.a), "b": str(pair.b)}
    return doc, list(doc), [f"{pair.a} {pair.b}"]


def _cmd_cf(args):
    if args.word is not None:
        if args.a is not None or args.b is not None:
            raise ValueError("give either a pair a b or --word, not both")
        cf = word_to_cf(args.word)
        doc = {"word": args.word, "quotients": list(cf.quotients)}
    else:
        if args.a is None or args.b is None:
            raise ValueError("cf needs two integers a b, or --word WORD")
        cf = cf_of_rational(args.a, args.b)
        doc = {"a": str(args.a), "b": str(args.b), "quotients": list(cf.quotients)}
    return doc, list(doc), [" ".join(str(q) for q in cf.quotients)]


def _cmd_shortest(args):
    r = shortest_word(args.n)
    doc = {
        "n": str(r.n),
        "best_a": str(r.best_a),
        **_word_fields(r.word, args.expand),
        "word_length": r.word_length,
        "lower_bound": r.lower_bound,
        "candidates_scanned": r.candidates_scanned,
    }
    if args.verify:
        brute = brute_force_shortest(args.n)
        doc["verify_word"] = brute
        doc["verify_length"] = len(brute)
        assert len(brute) == r.word_length
    return doc, list(doc), None


def _cmd_countwords(args):
    doc = {"N": str(args.N), "count": str(count_words(args.N))}
    return doc, list(doc), [doc["count"]]


def _cmd_zaremba(args):
    r = zaremba_witness(args.N, args.bound)
    doc = {
        "N": r.n,
        "bound": r.bound,
        "witness": r.witness,
        "quotients": list(r.cf.quotients) if r.cf is not None else None,
    }
    return doc, ["N", "bound", "witness", "quotients"], None


def _cmd_zaremba_scan(args):
    results = zaremba_scan(
        args.lo, args.hi, bound=args.bound, jobs=args.jobs, chunk_size=args.chunk_size
    )
    rows = [
        {
            "N": r.n,
            "witness_a": r.witness,
            "cf": list(r.cf.quotients) if r.cf is not None else None,
        }
        for r in results
    ]
    return rows, ["N", "witness_a", "cf"], None


def _cmd_stats(args):
    s = quotient_sum_stats(args.N)
    doc = {
        "N": s.n,
        "min_S": s.min_sum,
        "median_S": s.median_sum,
        "mean_S": f"{s.mean_sum.numerator}/{s.mean_sum.denominator}",
        "argmin_a": s.argmin_a,
        "reference": s.reference,
        "sample_size": s.sample_size,
    }
    return doc, list(doc), None


def _cmd_zword(args):
    if args.n > EXPAND_LIMIT and not args.expand:
        raise ValueError(
            f"the alternating word of length {args.n} exceeds {EXPAND_LIMIT} letters; "
            "pass --expand to print it anyway"
        )
    w = alternating_word(args.n)
    doc = {"n": args.n, "word": w, "length": len(w)}
    return doc, list(doc), [w]


def _cmd_zcount(args):
    doc = {"n": args.n, "count": str(alternating_count(args.n))}
    return doc, list(doc), [doc["count"]]


def _cmd_lowerbound(args):
    doc = {"n": str(args.n), "lower_bound": min_length_lower_bound(args.n)}
    return doc, list(doc), [str(doc["lower_bound"])]


def _cmd_extend(args):
    base = args.base
    if base and base.endswith(A):
        report = best_extension(complement(base), args.n)
        best_t = complement(report.best_t)
        reflected = True
    else:
        report = best_extension(base, args.n)
        best_t = report.best_t
        reflected = False
    doc = {
        "base": base,
        "n": args.n,
        "best_t": best_t,
        "best_count": str(report.best_count),
        "unique": report.unique,
        "reflected": reflected,
    }
    return doc, list(doc), None


def _cmd_mean(args):
    m = mean_subseq_exact(args.n)
    doc = {
        "n": args.n,
        "mean": f"{m.numerator}/{m.denominator}",
        "mean_decimal": float(m),
    }
    return doc, list(doc), [doc["mean"]]


def _load_target(source: str) -> BoundedQuotientTarget:
    text = source.strip()
    if not text.startswith("{"):
        text = Path(source).read_text()
    try:
        raw = json.loads(text)
        prefix = raw["prefix"]
        tail = raw.get("tail")
        bound = raw["C"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValueError(f"bad target (want {{\"prefix\":[0,...],\"tail\":[...]|null,\"C\":int}}): {exc}")
    return BoundedQuotientTarget(
        prefix=tuple(prefix), tail=tuple(tail) if tail else None, bound=int(bound)
    )


def _approx_row(report) -> dict:
    return {
        "N": report.denominator,
        "a": report.numerator,
        "delta": f"{report.delta.numerator}/{report.delta.denominator}",
        "delta_decimal": float(report.delta),
        "word_length": report.word_length,
        "term1": report.bound_term1,
        "term2": report.bound_term2,
        "ratio": report.ratio,
    }


_APPROX_COLUMNS = ["N", "a", "delta", "delta_decimal", "word_length", "term1", "term2", "ratio"]


def _cmd_approx(args):
    target = _load_target(args.target)
    doc = _approx_row(approx_experiment(target, args.N))
    return doc, _APPROX_COLUMNS, None


def _cmd_approx_sweep(args):
    target = _load_target(args.target)
    try:
        n_values = [int(tok) for tok in args.n_list.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"bad --N-list (want comma-separated integers): {args.n_list!r}")
    rows = [_approx_row(r) for r in bound_sweep(target, n_values)]
    return rows, _APPROX_COLUMNS, None


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("plain", "json", "csv"), default="plain",
        help="output format (default plain)",
    )
    common.add_argument("--output", default=None, help="write output to this path")

    parser = argparse.ArgumentParser(
        prog="euclidwords",
        description="Binary words, distinct-subsequence counts, and their continued fractions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("count", parents=[common], help="subsequence profile of a word")
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("gen", parents=[common], help="Euclidean word of a coprime pair")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("--expand", action="store_true", help="expand even very long words")
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("pair", parents=[common], help="coprime pair of a word")
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_pair)

    sp = sub.add_parser("cf", parents=[common], help="continued fraction of a/b or of a word")
    sp.add_argument("a", type=int, nargs="?")
    sp.add_argument("b", type=int, nargs="?")
    sp.add_argument("--word", default=None)
    sp.set_defaults(func=_cmd_cf)

    sp = sub.add_parser("shortest", parents=[common], help="shortest word with n subsequences")
    sp.add_argument("n", type=int)
    sp.add_argument("--verify", action="store_true", help="cross-check with brute force")
    sp.add_argument("--expand", action="store_true")
    sp.set_defaults(func=_cmd_shortest)

    sp = sub.add_parser("countwords", parents=[common], help="number of words with N subsequences")
    sp.add_argument("N", type=int)
    sp.set_defaults(func=_cmd_countwords)

    sp = sub.add_parser("zaremba", parents=[common], help="bounded-quotient witness for one N")
    sp.add_argument("N", type=int)
    sp.add_argument("--bound", type=int, default=5)
    sp.set_defaults(func=_cmd_zaremba)

    sp = sub.add_parser("zaremba-scan", parents=[common], help="witness scan over an N range")
    sp.add_argument("lo", type=int)
    sp.add_argument("hi", type=int)
    sp.add_argument("--bound", type=int, default=5)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--chunk-size", type=int, default=None)
    sp.set_defaults(func=_cmd_zaremba_scan)

    sp = sub.add_parser("stats", parents=[common], help="quotient-sum statistics over units mod N")
    sp.add_argument("N", type=int)
    sp.set_defaults(func=_cmd_stats)

    sp = sub.add_parser("zword", parents=[common], help="alternating word of length n")
    sp.add_argument("n", type=int)
    sp.add_argument("--expand", action="store_true", help="print even very long words")
    sp.set_defaults(func=_cmd_zword)

    sp = sub.add_parser("zcount", parents=[common], help="subsequence count of the alternating word")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_zcount)

    sp = sub.add_parser("lowerbound", parents=[common], help="length lower bound for n subsequences")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_lowerbound)

    sp = sub.add_parser("extend", parents=[common], help="best n-letter extension of a base word")
    sp.add_argument("base")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_extend)

    sp = sub.add_parser("mean", parents=[common], help="exact mean subsequence count at length n")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_mean)

    sp = sub.add_parser("approx", parents=[common], help="approximation experiment at one denominator")
    sp.add_argument("--target", required=True, help="inline JSON or a path to a JSON file")
    sp.add_argument("--N", type=int, required=True)
    sp.set_defaults(func=_cmd_approx)

    sp = sub.add_parser("approx-sweep", parents=[common], help="approximation experiments over denominators")
    sp.add_argument("--target", required=True)
    sp.add_argument("--N-list", dest="n_list", required=True, help="comma-separated denominators")
    sp.set_defaults(func=_cmd_approx_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        doc, columns, plain_lines = args.func(args)
        text = _render(args.format, doc, columns, plain_lines)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"error: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def app() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    app()
