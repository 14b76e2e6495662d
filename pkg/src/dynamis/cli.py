"""``dynamis`` command line: generate, replay and fit update streams.

Exit codes: 0 on success, 1 when continuous verification fails, 2 on usage
errors (bad arguments, incompatible stream, generator preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bench import ALGORITHMS, ReplaySession, scaling
from .errors import (
    DynamisError,
    GeneratorParameterError,
    IncompatibleStreamError,
    StreamParseError,
    VerificationFailedError,
)
from .generators import FAMILIES, GenSpec
from .stream import QueryInMis, parse_stream, serialize_stream


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynamis", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="replay a stream file through one algorithm")
    p_run.add_argument("algorithm", choices=ALGORITHMS)
    p_run.add_argument("stream", help="stream file path, or - for stdin")
    p_run.add_argument("--verify", action="store_true", help="audit after every event")
    p_run.add_argument("--report", metavar="FILE", help="also write the JSON report here")

    p_gen = sub.add_parser("gen", help="write a generated stream")
    p_gen.add_argument("--family", choices=FAMILIES, required=True)
    p_gen.add_argument("--m", type=int, default=0, help="edge budget")
    p_gen.add_argument("--delta", type=int, default=0, help="max degree (arbitrary-removal)")
    p_gen.add_argument("--n", type=int, default=10, help="vertex budget (random families)")
    p_gen.add_argument("--events", type=int, default=100)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--p-insert", type=float, default=0.7)
    p_gen.add_argument("--query-rate", type=float, default=0.0)
    p_gen.add_argument("--vertex-rate", type=float, default=0.0)
    p_gen.add_argument("--out", metavar="FILE", help="output path (default stdout)")

    p_sc = sub.add_parser("scaling", help="fit a log-log work slope over stream sizes")
    p_sc.add_argument("algorithm", choices=ALGORITHMS)
    p_sc.add_argument("family", choices=FAMILIES)
    p_sc.add_argument(
        "--sizes",
        default="4096,8192,16384,32768,65536",
        help="comma-separated edge budgets",
    )
    p_sc.add_argument("--seed", type=int, default=0)
    p_sc.add_argument("--report", metavar="FILE", help="also write the JSON report here")
    return parser


def cmd_run(args: argparse.Namespace) -> int:
    if args.stream == "-":
        text = sys.stdin.read()
    else:
        with open(args.stream) as fh:
            text = fh.read()
    stream = parse_stream(text)
    # stream the query answers as they are produced, then the report
    session = ReplaySession(args.algorithm, stream)
    start = time.perf_counter()
    verified = True if args.verify else None
    if args.verify:
        session.check(-1)
    for i, event in enumerate(stream.events):
        session.step(event)
        if isinstance(event, QueryInMis):
            v, answer = session.query_results[-1]
            print(f"{v} {answer}")
        if args.verify:
            session.check(i)
    wall = time.perf_counter() - start
    n, m = session.final_shape()
    meter = session.meter
    report = {
        "algorithm": args.algorithm,
        "stream": {"events": len(stream.events), "final_n": n, "final_m": m},
        "totals": dict(meter.totals(), wall_time_s=round(wall, 6)),
        "per_update_max": {
            "edges_touched": meter.max_op_edges_touched,
            "adjustments": meter.max_op_adjustments,
        },
        "verified": verified,
        "result": session.result(),
    }
    if session.query_results:
        report["query_results"] = [list(q) for q in session.query_results]
    _emit(report, args.report)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(
        family=args.family,
        m=args.m,
        delta=args.delta,
        n=args.n,
        events=args.events,
        seed=args.seed,
        p_insert=args.p_insert,
        query_rate=args.query_rate,
        vertex_rate=args.vertex_rate,
    )
    text = serialize_stream(spec.generate())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_scaling(args: argparse.Namespace) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    if not sizes:
        raise GeneratorParameterError("empty size list")
    report = scaling(args.algorithm, args.family, sizes, seed=args.seed)
    _emit(report, args.report)
    return 0


def _emit(report: dict, path: str | None) -> None:
    text = json.dumps(report, indent=2)
    print(text)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(args)
        if args.command == "gen":
            return cmd_gen(args)
        return cmd_scaling(args)
    except VerificationFailedError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (IncompatibleStreamError, GeneratorParameterError, StreamParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DynamisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
