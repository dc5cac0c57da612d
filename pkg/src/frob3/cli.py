"""Command-line interface.

Subcommands expose the library pieces one-to-one: `frobenius` the dispatcher,
`tau`/`phi`/`lvalues` the quotient first-element sets, `fgaps` fundamental
gaps, `quotient-member` the closed-form quotient test, `verify` the property
sweeps and `batch` bulk evaluation.

Exit codes: 0 success, 1 verification failure (a sweep or crosscheck found a
mismatch), 2 bad usage or invalid input.  JSON and text output never include
timing, so identical inputs give byte-identical output regardless of --jobs;
wall-clock goes to stderr.
"""

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .engine import frobenius, product_reduction_audit
from .modular import NotInvertibleError
from .quotients import CoprimeTriple, l_values, phi_set, tau_direct, tau_from_correspondence
from .semigroup import (
    NotCoprimeError,
    QuotientDescriptor,
    TwoGenSemigroup,
    fundamental_gaps,
    member_quotient,
)
from .verify import DEFAULT_PROPERTIES, PROPERTY_ORDER, run_verify

GEN_MAX = 2**31 - 1
ENUMERATION_WARNING = 10**8


def _generator(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 1 <= value <= GEN_MAX:
        raise argparse.ArgumentTypeError(f"generator must be in [1, {GEN_MAX}], got {text}")
    return value


def _index(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value not in (1, 2, 3):
        raise argparse.ArgumentTypeError(f"index must be 1, 2 or 3, got {text}")
    return value


def _nonnegative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return value


def _positive(text):
    value = _nonnegative(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _values_line(values):
    return " ".join(map(str, values))


def _frobenius_record(input_gens, res):
    return {
        "input": list(input_gens),
        "sorted": sorted(input_gens, reverse=True),
        "g": res.value,
        "branch": res.branch,
        "L": list(res.l_values.as_tuple()) if res.l_values else None,
        "tie": res.tie,
        "chain": [list(step) for step in res.reduction_chain] if res.reduction_chain else None,
    }


def cmd_frobenius(args):
    gens = args.generators
    if args.paper_reduction:
        audit = product_reduction_audit(gens)
        if args.format == "json":
            print(json.dumps(audit))
        else:
            print(f"product form: {audit['product_value']}")
            print(f"iterated rule: {audit['iterated_value']}")
            print(f"oracle: {audit['oracle_value']}")
            print(f"match: {'yes' if audit['match'] else 'NO'}")
        return 0 if audit["match"] else 1
    res = frobenius(gens)
    if args.format == "json":
        print(json.dumps(_frobenius_record(gens, res)))
        return 0
    print(res.value)
    if args.witness:
        print(f"branch: {res.branch}")
        if res.l_values is not None:
            print(f"L: {_values_line(res.l_values.as_tuple())}")
        if res.coefficients:
            print("coefficients: " + " ".join(f"{k}={v}" for k, v in res.coefficients.items()))
        if res.reduction_chain:
            print("chain: " + " ".join(f"(d={d}, keep={z})" for d, z in res.reduction_chain))
        print(f"tie: {'true' if res.tie else 'false'}")
    return 0


def _tau_triple(args):
    t = CoprimeTriple.from_unordered(args.generators)
    if args.i == args.j:
        raise ValueError("indices i and j must differ")
    return t


def cmd_tau(args):
    t = _tau_triple(args)
    i, j = args.i, args.j
    if t.gen(j) > ENUMERATION_WARNING:
        print(
            f"warning: enumerating {t.gen(j)} candidates, this may take a while",
            file=sys.stderr,
        )
    results = {}
    if args.method in ("direct", "both"):
        results["direct"] = tau_direct(t, i, j).values
    if args.method in ("correspondence", "both"):
        if (i, j) not in ((2, 3), (3, 2)):
            raise ValueError("method 'correspondence' needs (i, j) = (2, 3) or (3, 2)")
        results["correspondence"] = tau_from_correspondence(tau_direct(t, 1, j), t, i).values
    if args.method == "both":
        match = results["direct"] == results["correspondence"]
        if args.format == "json":
            record = {
                "triple": list(t.as_tuple()),
                "i": i,
                "j": j,
                "direct": list(results["direct"]),
                "correspondence": list(results["correspondence"]),
                "match": match,
            }
            print(json.dumps(record))
        else:
            print(f"direct: {_values_line(results['direct'])}")
            print(f"correspondence: {_values_line(results['correspondence'])}")
            print(f"match: {'yes' if match else 'NO'}")
        return 0 if match else 1
    values = results[args.method]
    if args.format == "json":
        record = {
            "triple": list(t.as_tuple()),
            "i": i,
            "j": j,
            "method": args.method,
            "values": list(values),
        }
        print(json.dumps(record))
    else:
        print(_values_line(values))
    return 0


def cmd_phi(args):
    t = _tau_triple(args)
    values = phi_set(t, args.i, args.j)
    if args.format == "json":
        print(json.dumps({"triple": list(t.as_tuple()), "i": args.i, "j": args.j, "values": list(values)}))
    else:
        print(_values_line(values))
    return 0


def cmd_lvalues(args):
    t = CoprimeTriple.from_unordered(args.generators)
    l = l_values(t)
    if args.format == "json":
        print(json.dumps({"triple": list(t.as_tuple()), "L": list(l.as_tuple())}))
    else:
        print(_values_line(l.as_tuple()))
    return 0


def cmd_fgaps(args):
    s = TwoGenSemigroup(args.a, args.b)
    gaps = fundamental_gaps(s)
    if args.format == "json":
        print(json.dumps({"generators": [s.a, s.b], "fundamental_gaps": gaps}))
    else:
        print(_values_line(gaps))
    return 0


def cmd_quotient_member(args):
    q = QuotientDescriptor(TwoGenSemigroup(args.a, args.b), args.divisor)
    member = member_quotient(q, args.x)
    if args.format == "json":
        record = {
            "generators": [q.base.a, q.base.b],
            "divisor": args.divisor,
            "x": args.x,
            "member": member,
        }
        print(json.dumps(record))
    else:
        print("true" if member else "false")
    return 0


def cmd_verify(args):
    if args.properties:
        names = [p.strip() for p in args.properties.split(",") if p.strip()]
    else:
        names = list(DEFAULT_PROPERTIES)
    if args.reduction and "reduction" not in names:
        names.append("reduction")
    start = time.perf_counter()
    report = run_verify(args.max_a1, names, jobs=args.jobs)
    elapsed = time.perf_counter() - start
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    else:
        print(report.to_text())
    print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


def _parse_batch_gens(line):
    tokens = line.split()
    if len(tokens) != 3:
        return None, "expected 3 integers"
    values = []
    for token in tokens:
        try:
            value = int(token)
        except ValueError:
            return None, f"invalid integer {token!r}"
        if not 1 <= value <= GEN_MAX:
            return None, f"generator must be in [1, {GEN_MAX}], got {token}"
        values.append(value)
    return values, None


def _batch_line(task):
    lineno, line, timing = task
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    gens, error = _parse_batch_gens(stripped)
    if error is None:
        start = time.perf_counter_ns()
        try:
            record = _frobenius_record(gens, frobenius(gens))
        except ValueError as exc:
            error = str(exc)
        else:
            record = {"line": lineno, **record}
            if timing:
                record["us"] = (time.perf_counter_ns() - start) // 1000
            return record
    return {"line": lineno, "raw": stripped, "error": error}


def cmd_batch(args):
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        try:
            lines = Path(args.input).read_text().splitlines()
        except OSError as exc:
            print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
            return 2
    tasks = [(n, line, args.timing) for n, line in enumerate(lines, 1)]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_batch_line, tasks, chunksize=16))
    else:
        records = [_batch_line(task) for task in tasks]
    records = [r for r in records if r is not None]
    if args.format == "json":
        for record in records:
            print(json.dumps(record))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["line", "a", "b", "c", "g", "branch", "error"])
        for r in records:
            if "error" in r:
                writer.writerow([r["line"], "", "", "", "", "", r["error"]])
            else:
                writer.writerow([r["line"], *r["input"], r["g"], r["branch"], ""])
    else:
        for r in records:
            if "error" in r:
                print(f"{r['raw']} -> error: {r['error']}")
            else:
                print(f"{_values_line(r['input'])} -> {r['g']}")
    return 0


def _add_format(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text", help="output format")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="frob3",
        description="Frobenius numbers of three-generator numerical semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frobenius", help="Frobenius number of three generators")
    p.add_argument("generators", type=_generator, nargs=3, metavar="GEN")
    p.add_argument("--witness", action="store_true", help="show branch, L values and coefficients")
    p.add_argument(
        "--paper-reduction",
        action="store_true",
        help="audit the product form of the gcd reduction instead (exit 1 on mismatch)",
    )
    _add_format(p)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("tau", help="first elements of a quotient, strictly inside (0, a_j)")
    p.add_argument("generators", type=_generator, nargs=3, metavar="GEN")
    p.add_argument("i", type=_index, help="quotient index (divides by a_i)")
    p.add_argument("j", type=_index, help="bound index (interval (0, a_j))")
    p.add_argument(
        "--method",
        choices=("direct", "correspondence", "both"),
        default="direct",
        help="enumeration route; 'both' compares them and exits 1 on mismatch",
    )
    _add_format(p)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("phi", help="tau plus the interval endpoints 0 and a_j")
    p.add_argument("generators", type=_generator, nargs=3, metavar="GEN")
    p.add_argument("i", type=_index)
    p.add_argument("j", type=_index)
    _add_format(p)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("lvalues", help="minimal multipliers (L1, L2, L3)")
    p.add_argument("generators", type=_generator, nargs=3, metavar="GEN")
    _add_format(p)
    p.set_defaults(func=cmd_lvalues)

    p = sub.add_parser("fgaps", help="fundamental gaps of a two-generator semigroup")
    p.add_argument("a", type=_generator)
    p.add_argument("b", type=_generator)
    _add_format(p)
    p.set_defaults(func=cmd_fgaps)

    p = sub.add_parser("quotient-member", help="is x in <a, b> / d?")
    p.add_argument("a", type=_generator)
    p.add_argument("b", type=_generator)
    p.add_argument("divisor", type=_positive)
    p.add_argument("x", type=_nonnegative)
    _add_format(p)
    p.set_defaults(func=cmd_quotient_member)

    p = sub.add_parser("verify", help="sweep identities against the brute-force oracle")
    p.add_argument("--max-a1", type=_nonnegative, required=True, help="largest generator to sweep")
    p.add_argument(
        "--properties",
        help="comma-separated subset of: " + ", ".join(PROPERTY_ORDER),
    )
    p.add_argument("--reduction", action="store_true", help="also sweep the gcd reduction rule")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    p.add_argument(
        "--seed",
        type=int,
        default=0,
        help="accepted for interface stability; sweeps are exhaustive and ignore it",
    )
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="evaluate one generator triple per input line")
    p.add_argument("input", help="path to input file, or - for stdin")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    p.add_argument(
        "--timing",
        action="store_true",
        help="add per-record wall time (JSON only; makes output nondeterministic)",
    )
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 1
    except (ValueError, NotInvertibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
