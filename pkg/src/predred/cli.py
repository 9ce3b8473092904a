"""Command line entry point: ``predred reduce|batch|features|adversarial|compare``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import harness
from .adversarial import SET_KINDS
from .features import DEFAULT_THRESHOLD, write_features_json, write_summary_csv
from .grammar import GrammarError
from .lexer import LexError
from .oracle import DEFAULT_QUERY_TIMEOUT, ModelFileError, ReductionProblem
from .parser import ParseError

EXIT_OK, EXIT_CONFIG, EXIT_PARTIAL = 0, 2, 3

log = logging.getLogger("predred")


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="predred", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reduce", help="reduce one program while its prediction holds")
    r.add_argument("program", type=Path)
    r.add_argument("--grammar", type=Path, help="grammar file (default: bundled)")
    who = r.add_mutually_exclusive_group()
    who.add_argument("--model", type=Path, help="signature model file (default: bundled)")
    who.add_argument("--oracle-cmd", help="external command; exit 0 means the property holds")
    r.add_argument("--algo", choices=harness.REDUCERS, default=harness.PERSES)
    r.add_argument("--no-replacement", action="store_true", help="perses: deletion only")
    r.add_argument("--max-queries", type=_positive_int, default=50_000)
    r.add_argument("--timeout-ms", type=_positive_int, default=int(DEFAULT_QUERY_TIMEOUT * 1000))
    r.add_argument("--stall-timeout", type=float, default=None, help="ddmin seconds per round (default: off)")
    r.add_argument("-o", "--output", type=Path, help="write the reduced program here")
    r.add_argument("--trace", type=Path, help="write the trace record (JSON) here")

    b = sub.add_parser("batch", help="reduce a corpus and derive features and adversarial sets")
    b.add_argument("--config", type=Path, required=True)
    b.add_argument("-j", "--jobs", type=_positive_int)
    b.add_argument("--reducer", choices=harness.REDUCERS)
    b.add_argument("--output", type=Path)
    b.add_argument("--canonical", action="store_true", help="zero wall-clock fields for byte-stable output")

    f = sub.add_parser("features", help="key and sparse features from one or more batch outputs")
    f.add_argument("--traces", type=Path, action="append", required=True)
    f.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    f.add_argument("--out", type=Path, help="output directory (default: first --traces)")

    a = sub.add_parser("adversarial", help="rename variables and measure mispredictions")
    a.add_argument("--traces", type=Path, required=True)
    a.add_argument("--set", dest="sets", choices=SET_KINDS + ("all",), action="append")

    c = sub.add_parser("compare", help="per-input-type comparison of two batch outputs")
    c.add_argument("a", type=Path)
    c.add_argument("b", type=Path)
    c.add_argument("--out", type=Path, help="output directory (default: b)")
    return p


def _cmd_reduce(args) -> int:
    grammar = harness.load_grammar_for(args.grammar)
    oracle, model_id = harness.make_oracle(args.model, args.oracle_cmd, args.timeout_ms / 1000.0)
    source = args.program.read_text()
    problem = ReductionProblem.create(
        source, oracle, grammar, max_queries=args.max_queries, per_query_timeout=args.timeout_ms / 1000.0
    )
    outcome = harness.reduce_with(
        problem, grammar, args.algo, replacement=not args.no_replacement, stall_timeout=args.stall_timeout
    )
    trace = harness.make_trace(
        problem, outcome, program_id=args.program.stem, label=problem.baseline, model_id=model_id,
        reducer_id=args.algo,
    )
    if args.output:
        args.output.write_text(outcome.reduced_text + "\n")
    if args.trace:
        args.trace.write_text(trace.to_json() + "\n")
    print(outcome.reduced_text)
    print(
        f"# {trace.tokens_before} -> {trace.tokens_after} tokens, {trace.queries} queries"
        + (", truncated" if trace.truncated else ""),
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_batch(args) -> int:
    config = harness.JobConfig.from_toml(args.config, jobs=args.jobs, reducer=args.reducer, output_dir=args.output)
    result = harness.run_batch(config, canonical=args.canonical)
    print(
        f"{len(result.traces)} reduced, {len(result.skipped)} skipped, {len(result.failed)} failed"
        f" -> {config.output_dir}"
    )
    for pid, reason in result.failed.items():
        print(f"failed: {pid}: {reason}", file=sys.stderr)
    return EXIT_PARTIAL if result.failed else EXIT_OK


def _cmd_features(args) -> int:
    if not 0 < args.threshold <= 1:
        raise harness.ConfigError("threshold must be in (0, 1]")
    out = args.out or args.traces[0]
    out.mkdir(parents=True, exist_ok=True)
    reports = []
    for d in args.traces:
        reports += harness.feature_reports(d, args.threshold)
    pooled = harness.pooled_reports(args.traces, args.threshold) if len(args.traces) > 1 else []
    write_features_json(reports, out / "features.json", pooled)
    write_summary_csv(reports, out / "features.csv")
    print(f"{len(reports)} feature reports -> {out}")
    return EXIT_OK


def _cmd_adversarial(args) -> int:
    sets = SET_KINDS if not args.sets or "all" in args.sets else tuple(dict.fromkeys(args.sets))
    rows = harness.write_adversarial(args.traces, sets)
    for reducer, model, rep in rows:
        print(f"{reducer}\t{model}\t{rep.set_kind}\t{rep.n_transformed}\t{rep.n_mispredicted}\t{100 * rep.rate:.2f}%")
    return EXIT_OK


def _cmd_compare(args) -> int:
    rows = harness.compare_report(harness.read_traces(args.a), harness.read_traces(args.b))
    harness.write_compare(rows, args.out or args.b)
    for row in rows:
        if row["input_type"] == "all":
            print(f"{row['metric']:>16}  {row['mean_a']:>12}  {row['mean_b']:>12}  {row['delta']:>+12}")
    return EXIT_OK


COMMANDS = {
    "reduce": _cmd_reduce,
    "batch": _cmd_batch,
    "features": _cmd_features,
    "adversarial": _cmd_adversarial,
    "compare": _cmd_compare,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (harness.ConfigError, harness.MismatchedCorpus, GrammarError, ModelFileError, OSError) as exc:
        print(f"predred: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (LexError, ParseError) as exc:
        print(f"predred: input does not parse: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"predred: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
