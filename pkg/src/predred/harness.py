"""Batch runs over a corpus: reduction traces, features, adversarial sets, comparisons."""

from __future__ import annotations

import csv
import functools
import json
import logging
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

try:
    import tomllib as tomli
except ModuleNotFoundError:  # Python < 3.11
    import tomli

from .adversarial import SET_KINDS, AdversarialReport, build_sets, misprediction_stats, write_adversarial_csv
from .ddmin import CHAR, TOKEN, DdConfig, dd_reduce
from .features import (
    DEFAULT_THRESHOLD,
    FeatureReport,
    aggregate_by_label,
    read_features_json,
    write_features_json,
    write_summary_csv,
)
from .grammar import Grammar, bundled_grammar, load_grammar_file
from .lexer import LexError, tokenize, tokenize_prefix
from .oracle import (
    DEFAULT_MAX_QUERIES,
    DEFAULT_QUERY_TIMEOUT,
    ExternalOracle,
    NoBaseline,
    Oracle,
    ReductionProblem,
    bundled_model,
    load_model,
)
from .parser import ParseError, parse
from .perses import perses_reduce
from .trace import ReductionOutcome

log = logging.getLogger(__name__)

PERSES, DD_TOKEN, DD_CHAR = "perses", "dd-token", "dd-char"
REDUCERS = (PERSES, DD_TOKEN, DD_CHAR)
BUILTIN = "builtin"
MANIFEST = "corpus.tsv"
TRACES = "traces.jsonl"


class ConfigError(ValueError):
    pass


class MismatchedCorpus(ValueError):
    pass


@dataclass
class TraceRecord:
    program_id: str
    label: str
    model_id: str
    reducer_id: str
    input_type: str
    tokens_before: int
    tokens_after: int
    reduction_ratio: float
    queries: int
    accepted_steps: int
    iterations: int
    candidates_total: int
    candidates_valid: int
    wall_ms: float
    truncated: bool
    stall_skips: int = 0
    oracle_failures: int = 0
    step_log: List[dict] = field(default_factory=list)

    @property
    def validity_rate(self) -> float:
        return self.candidates_valid / self.candidates_total if self.candidates_total else 0.0

    def to_json(self, canonical: bool = False) -> str:
        d = asdict(self)
        if canonical:
            d["wall_ms"] = 0
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "TraceRecord":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})


@dataclass(frozen=True)
class CorpusEntry:
    path: Path
    label: str
    input_type: str = ""

    @property
    def program_id(self) -> str:
        return self.path.stem


def builtin_corpus_dir() -> Path:
    return Path(str(resources.files("predred.data").joinpath("corpus")))


def read_manifest(corpus_dir: Path) -> List[CorpusEntry]:
    manifest = Path(corpus_dir) / MANIFEST
    if not manifest.is_file():
        raise ConfigError(f"no {MANIFEST} in {corpus_dir}")
    entries = []
    with open(manifest, newline="") as fh:
        for row in csv.DictReader(fh, delimiter="\t"):
            entries.append(CorpusEntry(Path(corpus_dir) / row["path"], row["label"], row.get("input_type") or ""))
    return entries


@dataclass
class JobConfig:
    corpus_dir: Path
    output_dir: Path
    reducer: str = PERSES
    grammar_path: Optional[Path] = None  # None: bundled grammar
    model_path: Optional[Path] = None  # None with no oracle_cmd: bundled model
    oracle_cmd: Optional[str] = None
    max_queries: int = DEFAULT_MAX_QUERIES
    per_query_timeout: float = DEFAULT_QUERY_TIMEOUT
    stall_timeout: float = 30.0
    deterministic: bool = True
    replacement: bool = True
    threshold: float = DEFAULT_THRESHOLD
    jobs: int = 1

    def validate(self) -> "JobConfig":
        if self.reducer not in REDUCERS:
            raise ConfigError(f"reducer must be one of {', '.join(REDUCERS)}")
        if self.model_path is not None and self.oracle_cmd:
            raise ConfigError("give either a model file or an oracle command, not both")
        for what, path in (("corpus", self.corpus_dir), ("grammar", self.grammar_path), ("model", self.model_path)):
            if path is not None and not Path(path).exists():
                raise ConfigError(f"{what} path does not exist: {path}")
        if self.max_queries <= 0 or self.per_query_timeout <= 0 or self.stall_timeout <= 0 or self.jobs <= 0:
            raise ConfigError("budgets and worker counts must be positive")
        if not 0 < self.threshold <= 1:
            raise ConfigError("threshold must be in (0, 1]")
        return self

    @property
    def effective_stall_timeout(self) -> Optional[float]:
        # the stall timer is wall-clock based, so deterministic runs go without it
        return None if self.deterministic else self.stall_timeout

    @classmethod
    def from_toml(cls, path: Path, **overrides) -> "JobConfig":
        path = Path(path)
        try:
            raw = tomli.loads(path.read_text())
        except (OSError, tomli.TOMLDecodeError) as exc:
            raise ConfigError(f"cannot read {path}: {exc}") from exc
        base = path.parent

        def resolve(key: str) -> Optional[Path]:
            value = raw.get(key)
            if value is None or value == BUILTIN:
                return None
            return (base / value).resolve()

        known = {"corpus", "output", "reducer", "grammar", "model", "oracle_cmd", "max_queries",
                 "query_timeout_ms", "stall_timeout_s", "deterministic", "replacement", "threshold", "jobs"}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        if "output" not in raw:
            raise ConfigError("config needs an 'output' directory")
        config = cls(
            corpus_dir=resolve("corpus") or builtin_corpus_dir(),
            output_dir=(base / raw["output"]).resolve(),
            reducer=raw.get("reducer", PERSES),
            grammar_path=resolve("grammar"),
            model_path=resolve("model"),
            oracle_cmd=raw.get("oracle_cmd"),
            max_queries=int(raw.get("max_queries", DEFAULT_MAX_QUERIES)),
            per_query_timeout=raw.get("query_timeout_ms", DEFAULT_QUERY_TIMEOUT * 1000) / 1000.0,
            stall_timeout=float(raw.get("stall_timeout_s", 30.0)),
            deterministic=bool(raw.get("deterministic", True)),
            replacement=bool(raw.get("replacement", True)),
            threshold=float(raw.get("threshold", DEFAULT_THRESHOLD)),
            jobs=int(raw.get("jobs", 1)),
        )
        for key, value in overrides.items():
            if value is not None:
                setattr(config, key, value)
        return config.validate()

    def describe(self) -> dict:
        return {
            "corpus_dir": str(self.corpus_dir),
            "grammar": str(self.grammar_path) if self.grammar_path else BUILTIN,
            "model": str(self.model_path) if self.model_path else (None if self.oracle_cmd else BUILTIN),
            "oracle_cmd": self.oracle_cmd,
            "reducer": self.reducer,
            "max_queries": self.max_queries,
            "replacement": self.replacement,
            "threshold": self.threshold,
        }


def load_grammar_for(path: Optional[Path]) -> Grammar:
    return bundled_grammar() if path is None else _load_grammar_cached(str(path))


@functools.lru_cache(maxsize=None)
def _load_grammar_cached(path: str) -> Grammar:
    return load_grammar_file(path)


def make_oracle(model_path: Optional[Path], oracle_cmd: Optional[str], timeout: float) -> Tuple[Oracle, str]:
    """Build the oracle and its id. Model loading happens here, outside any timed region."""
    if oracle_cmd:
        oracle = ExternalOracle(oracle_cmd, timeout)
        return oracle, oracle.name
    model = bundled_model() if model_path is None else load_model(model_path)
    return model, model.name


def count_tokens(text: str) -> int:
    return len(tokenize_prefix(text)[0])


def reduce_with(
    problem: ReductionProblem,
    grammar: Grammar,
    reducer: str,
    *,
    replacement: bool = True,
    stall_timeout: Optional[float] = None,
) -> ReductionOutcome:
    if reducer == PERSES:
        return perses_reduce(problem, grammar, replacement=replacement)
    granularity = TOKEN if reducer == DD_TOKEN else CHAR
    return dd_reduce(problem, DdConfig(granularity, problem.max_queries, stall_timeout))


def make_trace(
    problem: ReductionProblem, outcome: ReductionOutcome, *, program_id: str, label: str, model_id: str,
    reducer_id: str, input_type: str = "",
) -> TraceRecord:
    before = count_tokens(problem.program)
    after = count_tokens(outcome.reduced_text)
    ratio = 1 - after / before if before else 0.0
    return TraceRecord(
        program_id=program_id,
        label=label,
        model_id=model_id,
        reducer_id=reducer_id,
        input_type=input_type,
        tokens_before=before,
        tokens_after=after,
        reduction_ratio=round(ratio, 6),
        queries=problem.queries,
        accepted_steps=outcome.counters.accepted_steps,
        iterations=outcome.counters.iterations,
        candidates_total=problem.candidates_total,
        candidates_valid=problem.candidates_valid,
        wall_ms=round(outcome.wall_seconds * 1000, 3),
        truncated=outcome.truncated,
        stall_skips=outcome.counters.stall_skips,
        oracle_failures=problem.oracle_failures,
        step_log=problem.step_log,
    )


def _reduce_entry(config: JobConfig, entry: CorpusEntry):
    """Worker body: returns ("ok", trace, reduced text) | ("skip", reason) | ("error", reason)."""
    try:
        grammar = load_grammar_for(config.grammar_path)
        oracle, model_id = make_oracle(config.model_path, config.oracle_cmd, config.per_query_timeout)
        source = entry.path.read_text()
        try:
            parse(grammar, tokenize(source))
        except (LexError, ParseError) as exc:
            return ("skip", f"does not parse: {exc}")
        try:
            problem = ReductionProblem.create(
                source, oracle, grammar, max_queries=config.max_queries, per_query_timeout=config.per_query_timeout
            )
        except NoBaseline as exc:
            return ("skip", str(exc))
        outcome = reduce_with(
            problem, grammar, config.reducer, replacement=config.replacement,
            stall_timeout=config.effective_stall_timeout,
        )
        trace = make_trace(
            problem, outcome, program_id=entry.program_id, label=entry.label, model_id=model_id,
            reducer_id=config.reducer, input_type=entry.input_type,
        )
        return ("ok", trace, outcome.reduced_text)
    except Exception as exc:  # one bad program must not sink the job
        log.exception("reduction of %s failed", entry.path)
        return ("error", f"{type(exc).__name__}: {exc}")


@dataclass
class JobResult:
    traces: List[TraceRecord]
    reduced: Dict[str, str]
    skipped: Dict[str, str] = field(default_factory=dict)
    failed: Dict[str, str] = field(default_factory=dict)


def run_job(config: JobConfig, *, canonical: bool = False) -> JobResult:
    """Reduce every corpus program and persist traces.jsonl and reduced/*.java."""
    config.validate()
    entries = read_manifest(config.corpus_dir)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_reduce_entry, [config] * len(entries), entries))
    else:
        results = [_reduce_entry(config, e) for e in entries]

    out = Path(config.output_dir)
    reduced_dir = out / "reduced"
    reduced_dir.mkdir(parents=True, exist_ok=True)
    for stale in reduced_dir.glob("*.java"):
        stale.unlink()
    result = JobResult([], {})
    for entry, res in zip(entries, results):
        if res[0] == "ok":
            _, trace, text = res
            result.traces.append(trace)
            result.reduced[entry.program_id] = text
            (reduced_dir / f"{entry.program_id}.java").write_text(text + "\n")
        elif res[0] == "skip":
            log.info("skipping %s: %s", entry.program_id, res[1])
            result.skipped[entry.program_id] = res[1]
        else:
            result.failed[entry.program_id] = res[1]
    with open(out / TRACES, "w") as fh:
        for trace in result.traces:
            fh.write(trace.to_json(canonical) + "\n")
    meta = config.describe()
    meta["skipped"] = result.skipped
    meta["failed"] = result.failed
    (out / "job.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return result


def read_traces(directory: Path) -> List[TraceRecord]:
    path = Path(directory) / TRACES
    if not path.is_file():
        raise ConfigError(f"no {TRACES} in {directory}")
    return [TraceRecord.from_dict(json.loads(line)) for line in path.read_text().splitlines() if line.strip()]


def read_reduced(directory: Path, program_id: str) -> str:
    return (Path(directory) / "reduced" / f"{program_id}.java").read_text().rstrip("\n")


def read_job(directory: Path) -> dict:
    path = Path(directory) / "job.json"
    if not path.is_file():
        raise ConfigError(f"no job.json in {directory}")
    return json.loads(path.read_text())


def _job_grammar(meta: dict) -> Grammar:
    return load_grammar_for(None if meta["grammar"] == BUILTIN else Path(meta["grammar"]))


def _job_oracle(meta: dict) -> Tuple[Oracle, str]:
    model = meta.get("model")
    return make_oracle(None if model in (None, BUILTIN) else Path(model), meta.get("oracle_cmd"), DEFAULT_QUERY_TIMEOUT)


def feature_reports(directory: Path, threshold: float = DEFAULT_THRESHOLD) -> List[FeatureReport]:
    traces = read_traces(directory)
    grammar = _job_grammar(read_job(directory))
    if not traces:
        return []
    pairs = [(t.label, read_reduced(directory, t.program_id)) for t in traces]
    return aggregate_by_label(
        pairs, threshold, grammar=grammar, model_id=traces[0].model_id, reducer_id=traces[0].reducer_id
    )


def pooled_reports(directories: Sequence[Path], threshold: float = DEFAULT_THRESHOLD) -> List[FeatureReport]:
    """Re-threshold over the union of reduced programs from several runs."""
    grammar = _job_grammar(read_job(directories[0]))
    pairs = []
    for d in directories:
        pairs += [(t.label, read_reduced(d, t.program_id)) for t in read_traces(d)]
    return aggregate_by_label(pairs, threshold, grammar=grammar, model_id="pooled", reducer_id="pooled")


def write_features(directory: Path, threshold: float = DEFAULT_THRESHOLD) -> List[FeatureReport]:
    reports = feature_reports(directory, threshold)
    write_features_json(reports, Path(directory) / "features.json")
    write_summary_csv(reports, Path(directory) / "features.csv")
    return reports


def adversarial_reports(
    directory: Path, set_kinds: Sequence[str] = SET_KINDS, reports: Optional[List[FeatureReport]] = None
) -> List[Tuple[str, str, AdversarialReport]]:
    """Per-set misprediction rows (reducer, model, report) for one traces directory."""
    meta = read_job(directory)
    grammar = _job_grammar(meta)
    oracle, model_id = _job_oracle(meta)
    traces = read_traces(directory)
    if reports is None:
        features_path = Path(directory) / "features.json"
        reports = read_features_json(features_path) if features_path.is_file() else feature_reports(directory)
    by_label = {r.label: r for r in reports}
    corpus = {e.program_id: e for e in read_manifest(Path(meta["corpus_dir"]))}
    totals = {kind: AdversarialReport(kind, 0, 0, 0) for kind in set_kinds}
    for trace in traces:
        original = corpus[trace.program_id].path.read_text()
        reduced = read_reduced(directory, trace.program_id)
        sets = build_sets(original, reduced, by_label[trace.label], grammar)
        baseline = oracle.label(original)
        for kind in set_kinds:
            totals[kind] += misprediction_stats(oracle, baseline, sets[kind], kind, n_base=1)
    reducer = traces[0].reducer_id if traces else meta.get("reducer", "")
    return [(reducer, model_id, totals[kind]) for kind in set_kinds]


def write_adversarial(directory: Path, set_kinds: Sequence[str] = SET_KINDS, reports=None):
    rows = adversarial_reports(directory, set_kinds, reports)
    write_adversarial_csv(rows, Path(directory) / "adversarial.csv")
    return rows


def run_batch(config: JobConfig, *, canonical: bool = False) -> JobResult:
    """Reduce, then write features.json/features.csv and adversarial.csv next to the traces."""
    result = run_job(config, canonical=canonical)
    reports = write_features(config.output_dir, config.threshold)
    write_adversarial(config.output_dir, SET_KINDS, reports)
    return result


COMPARE_METRICS = ("reduction_ratio", "queries", "wall_ms", "validity_rate", "tokens_after", "accepted_steps")


def _mean(values: Iterable[float]) -> float:
    values = list(values)
    return statistics.fmean(values) if values else 0.0


def compare_report(a: Sequence[TraceRecord], b: Sequence[TraceRecord]) -> List[dict]:
    """Per input type (plus "all") means of each metric for two runs, and b - a."""
    ids_a = {t.program_id for t in a}
    ids_b = {t.program_id for t in b}
    if ids_a != ids_b:
        raise MismatchedCorpus(f"programs differ: {sorted(ids_a ^ ids_b)[:5]}")
    if {t.model_id for t in a} != {t.model_id for t in b}:
        raise MismatchedCorpus("runs used different models")
    name_a = a[0].reducer_id if a else "a"
    name_b = b[0].reducer_id if b else "b"
    if name_a == name_b:
        name_a, name_b = f"{name_a} (a)", f"{name_b} (b)"
    groups = sorted({t.input_type for t in a}) + ["all"]
    rows = []
    for group in groups:
        sel_a = [t for t in a if group == "all" or t.input_type == group]
        sel_b = [t for t in b if group == "all" or t.input_type == group]
        for metric in COMPARE_METRICS:
            mean_a = _mean(getattr(t, metric) for t in sel_a)
            mean_b = _mean(getattr(t, metric) for t in sel_b)
            rows.append(
                {
                    "input_type": group,
                    "metric": metric,
                    "n": len(sel_a),
                    "a": name_a,
                    "b": name_b,
                    "mean_a": round(mean_a, 6),
                    "mean_b": round(mean_b, 6),
                    "delta": round(mean_b - mean_a, 6),
                }
            )
    return rows


def write_compare(rows: List[dict], out_dir: Path) -> None:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "compare.json").write_text(json.dumps(rows, indent=2) + "\n")
    with open(out_dir / "compare.csv", "w", newline="") as fh:
        cols = ["input_type", "metric", "n", "a", "b", "mean_a", "mean_b", "delta"]
        w = csv.DictWriter(fh, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
