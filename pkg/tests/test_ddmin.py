import pytest

from bruteforce import one_minimal_subsequences
from conftest import SMALL
from predred.ddmin import CHAR, TOKEN, DdConfig, dd_reduce, ddmin
from predred.oracle import BudgetExhausted, ReductionProblem
from predred.trace import StepCounters


def test_always_true_keeps_first_element():
    assert ddmin(["x", "y"], lambda s: True) == ["x"]


def test_two_needles():
    items = list("abcdefgh")
    pred = lambda s: "c" in s and "f" in s
    assert ddmin(items, pred) == ["c", "f"]
    assert one_minimal_subsequences(items, pred) == [("c", "f")]


def test_only_full_list_passes():
    items = list("abcde")
    assert ddmin(items, lambda s: len(s) == 5) == items


def test_single_item_is_untouched():
    calls = []
    assert ddmin(["a"], lambda s: calls.append(s) or True) == ["a"]
    assert calls == []


def test_order_of_queries_is_chunks_then_complements():
    seen = []

    def pred(s):
        seen.append("".join(s))
        return "b" in s and "d" in s

    assert ddmin(list("abcd"), pred) == ["b", "d"]
    # n=2 chunks fail; n=4 chunks fail, complement "bcd" passes; n=3 over "bcd"
    assert seen[:10] == ["ab", "cd", "a", "b", "c", "d", "bcd", "b", "c", "d"]


def test_budget_keeps_best_so_far():
    count = 0

    def pred(s):
        nonlocal count
        count += 1
        if count > 8:
            raise BudgetExhausted()
        return "a" in s and "e" in s

    with pytest.raises(BudgetExhausted) as exc:
        ddmin(list("abcdefgh"), pred)
    # the 8th query is the complement dropping "cd"
    assert exc.value.best == list("abefgh")


def test_stall_timer_skips_rounds():
    ticks = iter(range(0, 10_000, 100))
    counters = StepCounters()
    out = ddmin(list("abcdefgh"), lambda s: "h" in s, stall_timeout=50, counters=counters, clock=lambda: next(ticks))
    assert "h" in out and counters.stall_skips > 0


def test_token_mode_example(main_model, grammar):
    p = ReductionProblem.create(SMALL, main_model, grammar)
    out = dd_reduce(p, DdConfig(TOKEN, stall_timeout=None))
    assert out.reduced_items == ["void", "String", "args"]
    assert out.reduced_text == "void String args"
    assert out.reduced_tree is None and not out.truncated
    assert p.queries >= 1 and p.step_log[0]["verdict"] == "Pass"


def test_char_mode(main_model, grammar):
    p = ReductionProblem.create("void f(String args) {}", main_model, grammar)
    out = dd_reduce(p, DdConfig(CHAR, stall_timeout=None))
    assert main_model.label(out.reduced_text) == "main"
    assert len(out.reduced_text) < len(p.program)


def test_char_mode_falls_back_to_raw_text_when_unlexable(main_model, grammar):
    p = ReductionProblem.create("void String args #", main_model, grammar)
    out = dd_reduce(p, DdConfig(CHAR, stall_timeout=None))
    assert out.reduced_text == "void String args"


def test_dd_truncation(main_model, grammar):
    p = ReductionProblem.create(SMALL, main_model, grammar, max_queries=3)
    out = dd_reduce(p, DdConfig(TOKEN, max_queries=3, stall_timeout=None))
    assert out.truncated and main_model.label(out.reduced_text) == "main"


def test_config_validation():
    with pytest.raises(ValueError):
        DdConfig("line")
    with pytest.raises(ValueError):
        DdConfig(TOKEN, max_queries=0)
