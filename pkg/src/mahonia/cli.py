"""Command-line front end.

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 resource guard.
Every number written is an exact decimal integer; JSON carries them as strings.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from mahonia import compositions as C
from mahonia import hilbert as Hb
from mahonia import inversions as I
from mahonia import posets as P
from mahonia.bench import TARGETS, BenchMismatch, run_bench
from mahonia.errors import DomainError, ResourceGuardError
from mahonia.polycore import coeff
from mahonia.verify import SUITES, report_dict, run_suites

EXIT_OK, EXIT_IDENTITY, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


@dataclass
class OutputRecord:
    kind: str  # inversion | composition | hilbert | poset
    params: dict[str, int]
    values: list[tuple[int, int]] = field(default_factory=list)
    index_name: str = "t"
    single: bool = False

    def to_json(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "params": self.params,
                "values": [[i, str(v)] for i, v in self.values],
            }
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([self.index_name, "value"])
        for i, v in self.values:
            w.writerow([i, str(v)])
        return buf.getvalue().rstrip("\n")

    def to_text(self) -> str:
        if self.single:
            return str(self.values[0][1])
        return "[" + ",".join(str(v) for _, v in self.values) + "]"

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}[fmt]()


def parse_record_json(text: str) -> OutputRecord:
    """Inverse of ``OutputRecord.to_json``."""
    obj = json.loads(text)
    return OutputRecord(obj["kind"], dict(obj["params"]), [(int(i), int(v)) for i, v in obj["values"]])


def _row_record(kind, params, row, t, index_name="t"):
    if t is None:
        return OutputRecord(kind, params, list(enumerate(row)), index_name)
    value = row[t] if 0 <= t < len(row) else 0
    return OutputRecord(kind, {**params, index_name: t}, [(t, value)], index_name, single=True)


INV_ALGOS = ("recurrence", "genfun", "closed", "pentagonal", "brute")
COMP_ALGOS = ("recurrence", "genfun", "closed", "brute")


def cmd_inversions(args) -> OutputRecord:
    n, t, algo = args.n, args.t, args.algo
    if n < 1:
        raise DomainError(f"n={n} < 1")
    top = I.max_inversions(n)
    params = {"n": n}
    if algo == "pentagonal":
        if t is None:
            return OutputRecord("inversion", params, [(s, I.inv_pentagonal(n, s)) for s in range(min(n, top) + 1)])
        return OutputRecord("inversion", {**params, "t": t}, [(t, I.inv_pentagonal(n, t))], single=True)
    if algo == "closed":
        if t is None:
            return _row_record("inversion", params, I.inv_closed_row(n).values, None)
        return OutputRecord("inversion", {**params, "t": t}, [(t, I.inv_closed(n, t))], single=True)
    if algo == "recurrence":
        if t is None:
            return _row_record("inversion", params, I.inv_recurrence_row(n), None)
        return OutputRecord("inversion", {**params, "t": t}, [(t, I.inv_recurrence(n, t))], single=True)
    if algo == "genfun":
        g = I.inv_genfun(n).as_poly()
        if t is None:
            return _row_record("inversion", params, g.coeffs, None)
        return OutputRecord("inversion", {**params, "t": t}, [(t, coeff(g, t))], single=True)
    return _row_record("inversion", params, I.inv_bruteforce(n).values, t)


def cmd_compositions(args) -> OutputRecord:
    n, d, t, algo = args.n, args.d, args.t, args.algo
    params = {"n": n, "d": d}
    if algo == "closed":
        if t is None:
            return _row_record("composition", params, C.comp_closed_row(n, d).values, None)
        return OutputRecord("composition", {**params, "t": t}, [(t, C.comp_closed(n, d, t))], single=True)
    if algo == "recurrence":
        if t is None:
            return _row_record("composition", params, C.comp_recurrence_row(n, d), None)
        return OutputRecord("composition", {**params, "t": t}, [(t, C.comp_recurrence(n, d, t))], single=True)
    if algo == "genfun":
        return _row_record("composition", params, C.comp_genfun(n, d).values, t)
    return _row_record("composition", params, C.comp_bruteforce(n, d).values, t)


def cmd_hilbert(args) -> OutputRecord:
    degs = Hb.DegreeSequence(tuple(args.degrees))
    max_t = args.max_t if args.max_t is not None else sum(d - 1 for d in degs.degrees) + 1
    params = {"n": len(degs), "max_t": max_t}
    params.update({f"d{i}": d for i, d in enumerate(degs.degrees, start=1)})
    if args.t is not None:
        params["t"] = args.t
        return OutputRecord("hilbert", params, [(args.t, Hb.koszul_hilbert(degs, args.t))], single=True)
    return OutputRecord("hilbert", params, [(t, Hb.koszul_hilbert(degs, t)) for t in range(max_t + 1)])


def cmd_posets(args) -> OutputRecord:
    if args.family == "divisors":
        N = args.value
        g = P.brute_divisor_rank_genfun(N) if args.brute else P.divisor_rank_genfun(P.factorize(N))
        params = {"N": N}
    else:
        g = P.involution_rank_genfun(args.value)
        params = {"n": args.value}
    return OutputRecord("poset", params, list(enumerate(g.coeffs)), index_name="rank")


def cmd_verify(args, out) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    results = run_suites(suites, args.max_n)
    if args.format == "json":
        out.write(json.dumps(report_dict(suites, args.max_n, results), indent=2) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
    failed = [r for r in results if not r.ok]
    if failed:
        print(f"identity failed: {failed[0].suite}/{failed[0].name}: {failed[0].detail}", file=sys.stderr)
        return EXIT_IDENTITY
    return EXIT_OK


def cmd_bench(args, out) -> int:
    pos = tuple(args.params)
    need = 1 if args.target == "inv-row" else 2
    if len(pos) != need:
        raise DomainError(f"{args.target} takes {need} integer argument(s), got {len(pos)}")
    algos = [a for a in args.algos.split(",") if a]
    unknown = [a for a in algos if a not in TARGETS[args.target]]
    if not algos or unknown:
        raise DomainError(f"unknown algorithm(s) for {args.target}: {', '.join(unknown) or '(none)'}")
    try:
        timings = run_bench(args.target, pos, algos, args.repeat)
    except BenchMismatch as exc:
        print(f"output mismatch: {exc}", file=sys.stderr)
        return EXIT_IDENTITY
    if args.format == "json":
        out.write(
            json.dumps(
                {
                    "target": args.target,
                    "params": list(pos),
                    "outputs_equal": True,
                    "timings": [
                        {"algo": t.algo, "median_ns": str(t.median_ns), "repeat": t.repeat} for t in timings
                    ],
                }
            )
            + "\n"
        )
    elif args.format == "csv":
        out.write("algo,median_ns,repeat\n")
        for t in timings:
            out.write(f"{t.algo},{t.median_ns},{t.repeat}\n")
    else:
        for t in timings:
            out.write(f"{t.algo:<12} {t.median_ns:>14} ns  (median of {t.repeat})\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mahonia", description="Exact inversion and composition counts.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("csv", "json", "text"), default="text")
        sp.add_argument("--out", metavar="FILE")

    sp = sub.add_parser("inversions", help="I_n(t) or the whole row")
    sp.add_argument("n", type=int)
    sp.add_argument("t", type=int, nargs="?")
    sp.add_argument("--algo", choices=INV_ALGOS, default="recurrence")
    common(sp)

    sp = sub.add_parser("compositions", help="H(n,d,t) or the whole row")
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("t", type=int, nargs="?")
    sp.add_argument("--algo", choices=COMP_ALGOS, default="recurrence")
    common(sp)

    sp = sub.add_parser("hilbert", help="Hilbert function of a complete intersection")
    sp.add_argument("degrees", type=int, nargs="+")
    sp.add_argument("--t", type=int)
    sp.add_argument("--max-t", type=int)
    common(sp)

    sp = sub.add_parser("posets", help="rank generating functions")
    sp.add_argument("family", choices=("divisors", "involutions"))
    sp.add_argument("value", type=int)
    sp.add_argument("--brute", action="store_true", help="enumerate divisors instead of factoring")
    common(sp)

    sp = sub.add_parser("verify", help="run identity suites")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--max-n", type=int, default=30)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--out", metavar="FILE")

    sp = sub.add_parser("bench", help="time row algorithms")
    sp.add_argument("--target", choices=tuple(TARGETS), required=True)
    sp.add_argument("params", type=int, nargs="+", metavar="N")
    sp.add_argument("--algos", default="recurrence,genfun")
    sp.add_argument("--repeat", type=int, default=3)
    common(sp)
    return p


RECORD_COMMANDS = {
    "inversions": cmd_inversions,
    "compositions": cmd_compositions,
    "hilbert": cmd_hilbert,
    "posets": cmd_posets,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    with contextlib.ExitStack() as stack:
        out = stack.enter_context(open(args.out, "w")) if args.out else sys.stdout
        try:
            if args.command == "verify":
                return cmd_verify(args, out)
            if args.command == "bench":
                return cmd_bench(args, out)
            record = RECORD_COMMANDS[args.command](args)
        except DomainError as exc:
            print(f"mahonia: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except ResourceGuardError as exc:
            print(f"mahonia: {exc}", file=sys.stderr)
            return EXIT_GUARD
        out.write(record.render(args.format) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
