import json

import pytest

from planted import generate, write_corpus, write_model
from predred.harness import (
    ConfigError,
    JobConfig,
    MismatchedCorpus,
    TraceRecord,
    compare_report,
    read_traces,
    run_batch,
    run_job,
)


@pytest.fixture
def corpus(tmp_path):
    programs = generate()[:6] + generate()[10:13]
    write_corpus(tmp_path / "corpus", programs)
    write_model(tmp_path / "planted.sig")
    return tmp_path


def config_file(root, reducer="perses", **extra):
    lines = [
        'corpus = "corpus"',
        'model = "planted.sig"',
        f'reducer = "{reducer}"',
        f'output = "out-{reducer}"',
    ] + [f"{k} = {json.dumps(v)}" for k, v in extra.items()]
    path = root / f"{reducer}.toml"
    path.write_text("\n".join(lines) + "\n")
    return path


def test_config_paths_are_relative_to_file(corpus):
    cfg = JobConfig.from_toml(config_file(corpus, query_timeout_ms=2500))
    assert cfg.corpus_dir == (corpus / "corpus").resolve()
    assert cfg.per_query_timeout == 2.5 and cfg.grammar_path is None
    assert cfg.effective_stall_timeout is None


@pytest.mark.parametrize(
    "extra",
    [{"reducer": "hdd"}, {"oracle_cmd": "true"}, {"grammar": "missing.g"}, {"max_queries": 0}, {"threshold": 1.5},
     {"colour": "red"}],
)
def test_config_errors(corpus, extra):
    path = config_file(corpus)
    text = path.read_text()
    if "reducer" in extra:
        text = text.replace('reducer = "perses"', f'reducer = "{extra["reducer"]}"')
    else:
        text += "".join(f"{k} = {json.dumps(v)}\n" for k, v in extra.items())
    path.write_text(text)
    with pytest.raises(ConfigError):
        JobConfig.from_toml(path)


def test_run_job_outputs(corpus):
    cfg = JobConfig.from_toml(config_file(corpus))
    result = run_job(cfg)
    assert len(result.traces) == 9 and not result.failed
    out = corpus / "out-perses"
    assert sorted(p.stem for p in (out / "reduced").glob("*.java")) == sorted(t.program_id for t in result.traces)
    back = read_traces(out)
    assert back == result.traces
    for t in back:
        assert t.queries >= 1
        assert t.candidates_valid == t.candidates_total
        assert 0 <= t.reduction_ratio <= 1 and t.tokens_after <= t.tokens_before
        assert t.input_type == "planted" and t.model_id == "planted"


def test_skips_are_logged_and_not_written(corpus):
    (corpus / "corpus" / "bad_00.java").write_text("void f ( ) {")
    (corpus / "corpus" / "none_00.java").write_text("void f ( ) { }")
    with open(corpus / "corpus" / "corpus.tsv", "a") as fh:
        fh.write("bad_00.java\tarea\tplanted\nnone_00.java\tarea\tplanted\n")
    cfg = JobConfig.from_toml(config_file(corpus))
    result = run_job(cfg)
    assert set(result.skipped) == {"bad_00", "none_00"}
    assert not (corpus / "out-perses" / "reduced" / "none_00.java").exists()
    assert json.loads((corpus / "out-perses" / "job.json").read_text())["skipped"].keys() == {"bad_00", "none_00"}


def test_failures_are_isolated(corpus):
    with open(corpus / "corpus" / "corpus.tsv", "a") as fh:
        fh.write("missing.java\tarea\tplanted\n")
    result = run_job(JobConfig.from_toml(config_file(corpus)))
    assert list(result.failed) == ["missing"] and len(result.traces) == 9


def test_already_minimal_program(tmp_path):
    (tmp_path / "c").mkdir()
    (tmp_path / "c" / "m.java").write_text("int f ( int width , int height ) { }")
    (tmp_path / "c" / "corpus.tsv").write_text("path\tlabel\tinput_type\nm.java\tarea\tsmall\n")
    write_model(tmp_path / "planted.sig")
    cfg = JobConfig(tmp_path / "c", tmp_path / "o", model_path=tmp_path / "planted.sig")
    (trace,) = run_job(cfg).traces
    assert trace.tokens_before == trace.tokens_after and trace.reduction_ratio == 0


def test_parallel_matches_serial(corpus):
    serial = run_job(JobConfig.from_toml(config_file(corpus)), canonical=True)
    cfg = JobConfig.from_toml(config_file(corpus), jobs=3)
    parallel = run_job(cfg, canonical=True)
    strip = lambda ts: [t.to_json(canonical=True) for t in ts]
    assert strip(serial.traces) == strip(parallel.traces)


def test_batch_writes_everything(corpus):
    run_batch(JobConfig.from_toml(config_file(corpus)))
    out = corpus / "out-perses"
    for name in ("traces.jsonl", "features.json", "features.csv", "adversarial.csv", "job.json"):
        assert (out / name).is_file(), name


def test_compare(corpus):
    a = run_job(JobConfig.from_toml(config_file(corpus, "perses"))).traces
    b = run_job(JobConfig.from_toml(config_file(corpus, "dd-token"))).traces
    rows = compare_report(a, a)
    assert all(r["delta"] == 0 for r in rows)
    rows = compare_report(a, b)
    assert {r["input_type"] for r in rows} == {"planted", "all"}
    assert {r["metric"] for r in rows} >= {"reduction_ratio", "queries", "wall_ms", "validity_rate"}
    with pytest.raises(MismatchedCorpus):
        compare_report(a, b[1:])


def test_trace_roundtrip_and_canonical():
    t = TraceRecord("p", "l", "m", "r", "small", 10, 5, 0.5, 3, 1, 1, 3, 3, 12.5, False)
    assert json.loads(t.to_json(canonical=True))["wall_ms"] == 0
    assert TraceRecord.from_dict(json.loads(t.to_json())) == t
    assert t.validity_rate == 1.0
