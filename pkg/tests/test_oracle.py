import os
import stat
import sys

import pytest

from conftest import DUBBO_MAIN
from predred.oracle import (
    CHANGED,
    PRESERVED,
    BudgetExhausted,
    ExternalOracle,
    ModelFileError,
    NoBaseline,
    Outcome,
    ReductionProblem,
    SignatureModel,
    external_oracle,
    load_model,
    parse_model,
    predict,
)


def test_signature_present(main_model):
    assert predict(main_model, "void f ( String args ) { }") == "main"


def test_nothing_matches(main_model):
    assert predict(main_model, "int x ;") == "unknown"


def test_larger_signature_wins():
    model = SignatureModel({"equals": frozenset({"boolean", "Object"}), "main": frozenset({"void", "String", "args"})})
    assert predict(model, "boolean Object void String args") == "main"


def test_equal_sizes_break_ties_by_label():
    model = SignatureModel({"b": frozenset({"x"}), "a": frozenset({"y"})})
    assert predict(model, "x y") == "a"


def test_tokens_not_substrings(main_model):
    assert predict(main_model, 'void f ( String argsX ) { "args" }') == "unknown"


def test_model_file_format(tmp_path):
    path = tmp_path / "m.sig"
    path.write_text("# comment\nmain = void, String,args  # trailing\n\n@fallback = none\nget = T\n")
    model = load_model(path)
    assert model.name == "m" and model.fallback_label == "none"
    assert model.signature("main") == frozenset({"void", "String", "args"})


@pytest.mark.parametrize("text", ["main void", "main =", "a = x\na = y", " = x"])
def test_bad_model_files(text):
    with pytest.raises(ModelFileError):
        parse_model(text)


def test_bundled_model_predicts_dubbo_main(model):
    assert model.label(DUBBO_MAIN) == "main"


class TestPreserved:
    def problem(self, main_model, grammar, **kw):
        return ReductionProblem.create("void f ( String args ) { int x = 0 ; }", main_model, grammar, **kw)

    def test_program_itself_passes(self, main_model, grammar):
        p = self.problem(main_model, grammar)
        assert p.baseline == "main"
        assert p.preserved(p.program).outcome is Outcome.PASS

    def test_empty_candidate_fails(self, main_model, grammar):
        v = self.problem(main_model, grammar).preserved("")
        assert v.outcome is Outcome.FAIL and v.predicted == "unknown"

    def test_missing_signature_token_fails(self, main_model, grammar):
        assert not self.problem(main_model, grammar).passes("void f ( String ) { }")

    def test_cache_hits_are_not_queries(self, main_model, grammar):
        p = self.problem(main_model, grammar)
        p.passes("void f ( ) { }")
        v = p.preserved("void f ( ) { }")
        assert v.from_cache and p.queries == 1 and p.candidates_total == 2
        assert [e["cached"] for e in p.step_log] == [False, True]

    def test_validity_is_tracked(self, main_model, grammar):
        p = self.problem(main_model, grammar)
        p.passes("void String args")
        p.passes("void f ( String args ) { }")
        assert p.candidates_valid == 1
        assert [e["valid_parse"] for e in p.step_log] == [False, True]

    def test_budget(self, main_model, grammar):
        p = self.problem(main_model, grammar, max_queries=2)
        p.passes("a")
        p.passes("b")
        p.passes("a")  # cached, free
        with pytest.raises(BudgetExhausted):
            p.passes("c")

    def test_fresh_resets_counters(self, main_model, grammar):
        p = self.problem(main_model, grammar)
        p.passes("x")
        q = p.fresh()
        assert q.queries == 0 and q.baseline == p.baseline and not q.step_log


def script(tmp_path, body):
    path = tmp_path / "oracle.py"
    path.write_text(f"#!{sys.executable}\nimport sys, time\n{body}\n")
    path.chmod(path.stat().st_mode | stat.S_IEXEC)
    return str(path)


def test_external_exit_zero_passes(tmp_path):
    v = external_oracle(script(tmp_path, "sys.exit(0)"), "void f ( ) { }", timeout=5)
    assert v.outcome is Outcome.PASS and v.predicted == PRESERVED


def test_external_exit_one_fails(tmp_path):
    v = external_oracle(script(tmp_path, "sys.exit(1)"), "void f ( ) { }", timeout=5)
    assert v.outcome is Outcome.FAIL and v.predicted == CHANGED and v.error is None


def test_external_timeout_fails_with_flag(tmp_path):
    v = external_oracle(script(tmp_path, "time.sleep(5)"), "x", timeout=0.3)
    assert v.outcome is Outcome.FAIL and v.error == "timeout"


def test_external_receives_candidate_file(tmp_path):
    cmd = script(tmp_path, "sys.exit(0 if 'args' in open(sys.argv[1]).read() else 1)")
    oracle = ExternalOracle(cmd, timeout=5)
    p = ReductionProblem.create("void f ( String args ) { }", oracle)
    assert p.baseline == PRESERVED
    assert p.passes("args") and not p.passes("void")


def test_external_missing_command_is_a_failure(tmp_path):
    v = external_oracle(str(tmp_path / "nope"), "x", timeout=5)
    assert v.outcome is Outcome.FAIL and v.error == "spawn"


def test_timeout_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("PREDRED_ORACLE_TIMEOUT_MS", "200")
    assert ExternalOracle("true", timeout=60).timeout == pytest.approx(0.2)
    v = external_oracle(script(tmp_path, "time.sleep(5)"), "x", timeout=60)
    assert v.error == "timeout"


def test_fallback_baseline_is_rejected(main_model, tmp_path):
    with pytest.raises(NoBaseline):
        ReductionProblem.create("int x ;", main_model)
    with pytest.raises(NoBaseline):
        ReductionProblem.create("x", ExternalOracle(script(tmp_path, "sys.exit(3)"), timeout=5))
