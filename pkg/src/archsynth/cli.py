"""Command-line front end: synthesize, validate, bench, serve.

Exit codes: 0 success, 1 invalid input (syntax, schema, or validation), 2
infeasible scenario, 3 I/O errors. "-" as a path means standard in/out; all
file I/O is UTF-8.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import bench as bench_mod
from . import io as docs
from .catalog import default_catalog
from .costs import CostModel
from .scenario import InvalidScenarioError
from .synthesis import InfeasibleNodeError, synthesize

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3

DEFAULT_PORT = 8787

logger = logging.getLogger(__name__)


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _write_text(path: str, text: str) -> None:
    _write(path, text.encode("utf-8"))


def _load_levels(path: str | None) -> docs.LevelMap:
    if path is None:
        return docs.DEFAULT_LEVELS
    return docs.parse_levels(_read(path))


def _cmd_synthesize(args: argparse.Namespace) -> int:
    try:
        levels = _load_levels(args.levels)
        scenario_data = _read(args.scenario)
        if args.costs is not None:
            model = docs.parse_cost_model(_read(args.costs))
        else:
            model = CostModel()
            logger.warning("no cost model given, using the default (identity cost functions)")
        catalog = docs.parse_catalog(_read(args.catalog)) if args.catalog is not None else default_catalog()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (docs.ParseError, docs.SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    try:
        scenario = docs.parse_scenario(scenario_data, levels)
        result = synthesize(scenario, model=model, catalog=catalog)
    except (docs.ParseError, docs.SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvalidScenarioError as exc:
        print("error: scenario is invalid:", file=sys.stderr)
        for violation in exc.report.violations:
            where = violation.element or "<scenario>"
            print(f"  {violation.rule} {where}: {violation.message}", file=sys.stderr)
        return EXIT_INVALID
    except InfeasibleNodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE

    try:
        _write(args.out, docs.serialize_result(result))
        if args.dot is not None:
            _write_text(args.dot, docs.export_dot(result.architecture))
        if args.decision_log is not None:
            _write_text(args.decision_log, docs.render_decision_log(result))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    try:
        levels = _load_levels(args.levels)
        data = _read(args.scenario)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        _, report = docs.parse_scenario_lenient(data, levels)
    except (docs.ParseError, docs.SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if report.valid:
        print("OK: scenario is valid")
        return EXIT_OK
    for violation in report.violations:
        where = violation.element or "<scenario>"
        print(f"{violation.rule} {where}: {violation.message}")
    return EXIT_INVALID


def _cmd_bench(args: argparse.Namespace) -> int:
    reports = []
    try:
        if args.chain is not None:
            scenario = bench_mod.gen_chain(args.chain, seed=args.seed)
            shape = f"chain({args.chain})"
        else:
            scenario = bench_mod.gen_fanout(args.fanout, args.consumers, seed=args.seed)
            shape = f"fanout({args.fanout}x{args.consumers})"
        reports.append(bench_mod.time_synthesis(scenario, repeats=args.repeats, shape=shape))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        _write_text(args.csv, bench_mod.reports_to_csv(reports))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    try:
        model = docs.parse_cost_model(_read(args.costs)) if args.costs is not None else None
        catalog = docs.parse_catalog(_read(args.catalog)) if args.catalog is not None else None
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (docs.ParseError, docs.SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    port = args.port if args.port is not None else int(os.environ.get("ARCHSYNTH_PORT", DEFAULT_PORT))
    app = create_app(cost_model=model, catalog=catalog)
    uvicorn.run(app, host=args.host, port=port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="archsynth",
        description="Translate data-intensive application scenarios into explained component architectures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_syn = sub.add_parser("synthesize", help="derive an architecture from a scenario document")
    p_syn.add_argument("--scenario", required=True, help="scenario document path ('-' for stdin)")
    p_syn.add_argument("--costs", help="cost model document path (default: identity costs)")
    p_syn.add_argument("--catalog", help="catalog document path (default: bundled catalog)")
    p_syn.add_argument("--out", default="-", help="result document path ('-' for stdout, default)")
    p_syn.add_argument("--dot", help="also write the architecture as Graphviz DOT")
    p_syn.add_argument("--decision-log", help="also write the decision log as Markdown")
    p_syn.add_argument("--levels", help="level map overrides document")
    p_syn.set_defaults(func=_cmd_synthesize)

    p_val = sub.add_parser("validate", help="validate a scenario document")
    p_val.add_argument("--scenario", required=True, help="scenario document path ('-' for stdin)")
    p_val.add_argument("--levels", help="level map overrides document")
    p_val.set_defaults(func=_cmd_validate)

    p_bench = sub.add_parser("bench", help="time the pipeline on synthetic scenarios")
    shape = p_bench.add_mutually_exclusive_group(required=True)
    shape.add_argument("--chain", type=int, help="chain scenario with N action nodes")
    shape.add_argument("--fanout", type=int, help="fan-out scenario with N action nodes")
    p_bench.add_argument("--consumers", type=int, default=1, help="consumer count for --fanout")
    p_bench.add_argument("--repeats", type=int, default=3, help="runs per measurement (default 3)")
    p_bench.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    p_bench.add_argument("--csv", default="-", help="CSV output path ('-' for stdout, default)")
    p_bench.set_defaults(func=_cmd_bench)

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--port", type=int, help=f"port (default: $ARCHSYNTH_PORT or {DEFAULT_PORT})")
    p_serve.add_argument("--host", default="127.0.0.1", help="bind address (default 127.0.0.1)")
    p_serve.add_argument("--costs", help="cost model document used for all requests without inline costs")
    p_serve.add_argument("--catalog", help="catalog document served and used at synthesis")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
