"""Command-line front end.

Exit codes: 0 when the condition holds (or the oracle answers TRUE, or a
scan finds nothing unexpected), 1 when it fails, 2 on any input or
parameter error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import conditions, enumeration, explorer, oracle
from .errors import FactorSeqError, TooFewVertices
from .graph import SmallGraph, read_graph
from .report import SCHEMA_VERSION, error_record, verdict_record
from .seqcore import DegreeSequence, parse_sequence, render

EXIT_HOLDS, EXIT_FAILS, EXIT_ERROR = 0, 1, 2

# condition -> parameters it requires
CONDITIONS: dict[str, tuple[str, ...]] = {
    "chvatal": (),
    "one-factor": (),
    "two-factor": (),
    "k-factor": ("k",),
    "deficiency": ("beta",),
    "tough": ("t",),
    "kundu": ("k",),
}

PROPERTIES = ("k-factor", "hamiltonian", "deficiency", "tough")


class UsageError(FactorSeqError):
    pass


def parse_t(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational t={text!r}; use an integer or p/q") from None


@dataclass(frozen=True)
class CheckRequest:
    sequence: DegreeSequence
    condition: str
    params: dict = field(default_factory=dict)
    naive: bool = False

    def __post_init__(self):
        if self.condition not in CONDITIONS:
            raise UsageError(f"unknown condition {self.condition!r}")
        need = set(CONDITIONS[self.condition])
        have = set(self.params)
        if need != have:
            missing = ", ".join(sorted(need - have)) or "none"
            extra = ", ".join(sorted(have - need)) or "none"
            raise UsageError(f"{self.condition} takes parameters {sorted(need)}; missing {missing}, unexpected {extra}")
        if self.naive and self.condition != "k-factor":
            raise UsageError("--naive only applies to k-factor")

    @classmethod
    def from_record(cls, record: dict) -> CheckRequest:
        params = dict(record["params"])
        if "t" in params:
            params["t"] = parse_t(str(params["t"]))
        return cls(DegreeSequence(record["sequence"]), record["condition"], params)


def evaluate(req: CheckRequest) -> conditions.Verdict:
    pi, p = req.sequence, req.params
    c = req.condition
    if c == "chvatal":
        return conditions.chvatal_hamiltonian(pi)
    if c == "one-factor":
        return conditions.forcibly_one_factor(pi)
    if c == "two-factor":
        return conditions.forcibly_two_factor(pi)
    if c == "k-factor":
        return conditions.forcibly_k_factor(pi, p["k"], naive=req.naive)
    if c == "deficiency":
        return conditions.deficiency_at_most(pi, p["beta"])
    if c == "tough":
        return conditions.forcibly_t_tough(pi, p["t"])
    return conditions.potentially_k_factor(pi, p["k"])


def run_request(req: CheckRequest) -> dict:
    t0 = time.perf_counter()
    verdict = evaluate(req)
    return verdict_record(req.sequence, req.condition, req.params, verdict, 1000 * (time.perf_counter() - t0))


def _params_from_args(args) -> dict:
    params = {}
    for name in ("k", "beta", "t"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = parse_t(value) if name == "t" else value
    return params


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("FACTORSEQ_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"FACTORSEQ_JOBS={env!r} is not an integer") from None
    return os.cpu_count() or 1


def _text_line(rec: dict) -> str:
    if rec["verdict"] == "holds":
        return "HOLDS"
    return "FAILS " + str(conditions.Witness.from_dict(rec["witness"]))


def _batch_one(item: tuple[int, str, str, dict, bool]) -> dict:
    line_no, text, condition, params, naive = item
    try:
        req = CheckRequest(parse_sequence(text), condition, params, naive)
        rec = run_request(req)
        rec["line"] = line_no
        return rec
    except FactorSeqError as exc:
        return error_record(line_no, text, exc)


def cmd_check(args, out, err) -> int:
    params = _params_from_args(args)
    if args.batch is None:
        if args.sequence is None:
            raise UsageError("give a sequence or --batch FILE")
        req = CheckRequest(parse_sequence(args.sequence), args.condition, params, args.naive)
        rec = run_request(req)
        print(json.dumps(rec) if args.json else _text_line(rec), file=out)
        return EXIT_HOLDS if rec["verdict"] == "holds" else EXIT_FAILS

    if args.sequence is not None:
        raise UsageError("--batch and a positional sequence are exclusive")
    # Validate the condition/parameter combination once, up front.
    CheckRequest(DegreeSequence(()), args.condition, params, args.naive)
    text = sys.stdin.read() if args.batch == "-" else open(args.batch).read()
    lines = [(no, line.split("#", 1)[0].strip()) for no, line in enumerate(text.splitlines(), 1)]
    items = [(no, text, args.condition, params, args.naive) for no, text in lines if text]
    jobs = _jobs(args)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_batch_one, items, chunksize=max(1, len(items) // (4 * jobs))))
    else:
        records = [_batch_one(x) for x in items]
    code = EXIT_HOLDS
    for rec in records:
        if "error" in rec:
            code = EXIT_ERROR
            if args.json:
                print(json.dumps(rec), file=out)
            else:
                print(f"line {rec['line']}: error: {rec['error']}: {rec['message']}", file=out)
            continue
        if rec["verdict"] == "fails" and code == EXIT_HOLDS:
            code = EXIT_FAILS
        if args.json:
            print(json.dumps(rec), file=out)
        else:
            print(f"line {rec['line']}: {render(DegreeSequence(rec['sequence']))}: {_text_line(rec)}", file=out)
    return code


def edges_1based(g: SmallGraph) -> list[list[int]]:
    return [[u + 1, v + 1] for u, v in g.edges()]


def describe_edges(g: SmallGraph) -> str:
    if not g.edge_count:
        return "no edges"
    return "edges " + " ".join(f"{u + 1}-{v + 1}" for u, v in g.edges())


def _property(args):
    name = args.property
    if name == "k-factor":
        if args.k is None:
            raise UsageError("k-factor needs -k")
        return enumeration.KFactor(args.k)
    if name == "hamiltonian":
        return enumeration.Hamiltonian()
    if name == "deficiency":
        if args.beta is None:
            raise UsageError("deficiency needs --beta")
        return enumeration.DeficiencyAtMost(args.beta)
    if args.t is None:
        raise UsageError("tough needs -t")
    return enumeration.Toughness(parse_t(args.t))


def cmd_oracle(args, out, err) -> int:
    pi = parse_sequence(args.sequence)
    prop = _property(args)
    if isinstance(prop, enumeration.Hamiltonian) and pi.n < 3:
        raise TooFewVertices("hamiltonicity needs n >= 3")
    run = enumeration.forcibly_oracle if args.quantifier == "forcibly" else enumeration.potentially_oracle
    t0 = time.perf_counter()
    res = run(pi, prop, cap=args.cap)
    count = enumeration.count_realizations(pi, cap=args.cap)
    elapsed = 1000 * (time.perf_counter() - t0)
    if args.json:
        rec = {
            "schema_version": SCHEMA_VERSION,
            "sequence": list(pi.degrees),
            "n": pi.n,
            "quantifier": args.quantifier,
            "property": str(prop),
            "value": res.value,
            "realizations": count,
            "graph": None if res.graph is None else {"n": res.graph.n, "edges": edges_1based(res.graph)},
            "elapsed_ms": round(elapsed, 3),
        }
        print(json.dumps(rec), file=out)
    else:
        noun = "realization" if count == 1 else "realizations"
        text = f"{'TRUE' if res.value else 'FALSE'} ({count} {noun})"
        if res.graph is not None:
            label = "example" if res.value else "counterexample"
            text += f"; {label}: {describe_edges(res.graph)}"
        print(text, file=out)
    return EXIT_HOLDS if res.value else EXIT_FAILS


def _family_json(inst: explorer.FamilyInstance) -> dict:
    g = inst.realization
    return {
        "family": inst.family.value,
        "parameters": inst.parameters,
        "sequence": list(inst.sequence.degrees),
        "compact": render(inst.sequence),
        "realization": None if g is None else {"n": g.n, "edges": edges_1based(g)},
    }


def cmd_family(args, out, err) -> int:
    if args.family == "pi-n":
        pi, prime, k = explorer.family_pi_n(args.n)
        rows = [(f"pi_{args.n}", pi), (f"pi'_{args.n}", prime)]
        extra = {"k": k}
    elif args.family == "deficiency":
        if args.i is None or args.beta is None:
            raise UsageError("deficiency family needs -i and --beta")
        rows = [("pi'", explorer.family_deficiency(args.n, args.i, args.beta))]
        extra = {}
    else:
        if args.clause is None:
            raise UsageError("two-factor family needs --clause")
        rows = [("pi'", explorer.family_two_factor(args.n, args.clause, args.i))]
        extra = {}
    if args.json:
        doc = {"schema_version": SCHEMA_VERSION, "instances": [_family_json(inst) for _, inst in rows], **extra}
        print(json.dumps(doc), file=out)
        return EXIT_HOLDS
    for label, inst in rows:
        print(f"{label} = {render(inst.sequence)}", file=out)
        g = inst.realization
        print(f"  realization: {describe_edges(g) if g is not None else 'not built (n > 16)'}", file=out)
    for key, value in extra.items():
        print(f"{key} = {value}", file=out)
    return EXIT_HOLDS


def cmd_scan(args, out, err) -> int:
    if args.scan == "pi-n":
        report = explorer.scan_pi_n(args.max, jobs=_jobs(args), checkpoint=args.checkpoint)
        bad = report.summary["failures"]
    else:
        if args.k is None:
            raise UsageError("tough-factor scan needs -k")
        report = explorer.scan_tough_implies_factor(args.max, args.k, jobs=_jobs(args))
        bad = report.summary["counterexamples"]
    if args.json:
        print(report.to_json(), file=out)
    elif args.summary_only:
        print(report.summary_line, file=out)
    else:
        print(report.to_text(), file=out)
    return EXIT_HOLDS if bad == 0 else EXIT_FAILS


def cmd_graph(args, out, err) -> int:
    text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    g = read_graph(text)
    pi = DegreeSequence(g.degrees())
    info = {
        "n": g.n,
        "edges": g.edge_count,
        "sequence": render(pi),
        "deficiency": oracle.deficiency(g),
        "hamiltonian": oracle.is_hamiltonian(g) if g.n >= 3 else None,
    }
    tau = oracle.toughness(g)
    info["toughness"] = "inf" if tau is None else str(tau)
    code = EXIT_HOLDS
    if args.k is not None:
        has = oracle.has_k_factor(g, args.k)
        info[f"{args.k}-factor"] = has
        if args.k >= 1 and g.n <= oracle.TUTTE_LIMIT:
            cert = oracle.find_tutte_pair(g, args.k)
            if cert is not None:
                info["tutte_pair"] = {
                    "A": sorted(v + 1 for v in cert.A),
                    "B": sorted(v + 1 for v in cert.B),
                    "theta": cert.theta,
                }
        code = EXIT_HOLDS if has else EXIT_FAILS
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, **info}), file=out)
    else:
        for key, value in info.items():
            print(f"{key}: {value}", file=out)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="factorseq", description="Degree-sequence conditions for factors and hamiltonicity.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="evaluate a degree condition")
    check.add_argument("sequence", nargs="?", help='e.g. "4^4 6^3 10^4" or "2,2,2"')
    check.add_argument("--condition", required=True, choices=sorted(CONDITIONS))
    check.add_argument("-k", type=int)
    check.add_argument("--beta", type=int)
    check.add_argument("-t", help="rational, e.g. 3/2")
    check.add_argument("--naive", action="store_true", help="unpruned triple loop (k-factor)")
    check.add_argument("--batch", metavar="FILE", help="one sequence per line, - for stdin")
    check.add_argument("--json", action="store_true")
    check.add_argument("--jobs", type=int)
    check.set_defaults(func=cmd_check)

    orc = sub.add_parser("oracle", help="decide by enumerating realizations")
    q = orc.add_mutually_exclusive_group(required=True)
    q.add_argument("--forcibly", dest="quantifier", action="store_const", const="forcibly")
    q.add_argument("--potentially", dest="quantifier", action="store_const", const="potentially")
    orc.add_argument("property", choices=PROPERTIES)
    orc.add_argument("sequence")
    orc.add_argument("-k", type=int)
    orc.add_argument("--beta", type=int)
    orc.add_argument("-t")
    orc.add_argument("--cap", type=int, help="override the enumeration size cap")
    orc.add_argument("--json", action="store_true")
    orc.set_defaults(func=cmd_oracle)

    fam = sub.add_parser("family", help="extremal constructions")
    fam.add_argument("family", choices=("pi-n", "deficiency", "two-factor"))
    fam.add_argument("-n", type=int, required=True)
    fam.add_argument("-i", type=int)
    fam.add_argument("--beta", type=int)
    fam.add_argument("--clause", choices=("i", "ii", "iii", "iv"))
    fam.add_argument("--json", action="store_true")
    fam.set_defaults(func=cmd_family)

    scan = sub.add_parser("scan", help="long-running sweeps")
    scan.add_argument("scan", choices=("pi-n", "tough-factor"))
    scan.add_argument("--max", type=int, required=True)
    scan.add_argument("-k", type=int)
    scan.add_argument("--jobs", type=int)
    scan.add_argument("--checkpoint", metavar="FILE")
    scan.add_argument("--summary-only", action="store_true")
    scan.add_argument("--json", action="store_true")
    scan.set_defaults(func=cmd_scan)

    gr = sub.add_parser("graph", help="inspect a graph (edge list or graph6)")
    gr.add_argument("file", help="path, or - for stdin")
    gr.add_argument("-k", type=int)
    gr.add_argument("--json", action="store_true")
    gr.set_defaults(func=cmd_graph)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_HOLDS if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args, out, err)
    except (FactorSeqError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
