import pytest

from bruteforce import min_tree_form
from conftest import DUBBO_MAIN, SMALL
from predred.grammar import load_grammar
from predred.lexer import tokenize
from predred.oracle import ReductionProblem, SignatureModel
from predred.parser import ParseError, parse, parse_text
from predred.perses import (
    apply_mutation,
    check_one_tree_minimal,
    compatible_descendants,
    perses_reduce,
    single_mutations,
)
from predred.tree import render


def reduce(text, oracle, grammar, **kw):
    p = ReductionProblem.create(text, oracle, grammar)
    return p, perses_reduce(p, grammar, **kw)


def test_always_pass_empties_lists(always_pass, grammar):
    p, out = reduce(SMALL, always_pass, grammar)
    assert out.reduced_text == "void f ( ) { }"
    assert min_tree_form(parse_text(grammar, SMALL), lambda s: True) == 6


def test_main_signature_keeps_parameter(main_model, grammar):
    p, out = reduce(SMALL, main_model, grammar)
    assert out.reduced_text == "void f ( String args ) { }"
    assert min_tree_form(parse_text(grammar, SMALL), lambda s: main_model.label(s) == "main") == 8


def test_dubbo_main_reduces_to_signature(model, grammar):
    p, out = reduce(DUBBO_MAIN, model, grammar)
    assert out.reduced_text == "void f ( String args ) { }"
    assert render(out.reduced_tree) == out.reduced_text
    assert check_one_tree_minimal(p, grammar, out.reduced_tree)


def test_unreduced_dubbo_main_is_not_minimal(main_model, grammar):
    p = ReductionProblem.create(DUBBO_MAIN, main_model, grammar)
    assert not check_one_tree_minimal(p, grammar, parse_text(grammar, DUBBO_MAIN))


def test_no_mutations_is_vacuously_minimal(always_pass):
    g = load_grammar('start := "a" "b" ;')
    p = ReductionProblem.create("a b", always_pass, g)
    tree = parse(g, tokenize("a b"))
    assert list(single_mutations(tree)) == []
    assert check_one_tree_minimal(p, g, tree)


def test_checker_leaves_problem_untouched(main_model, grammar):
    p = ReductionProblem.create(SMALL, main_model, grammar)
    check_one_tree_minimal(p, grammar, parse_text(grammar, SMALL))
    assert p.queries == 0 and p.step_log == []


def test_replacement_shrinks_nested_expressions(always_pass, grammar):
    src = "void f ( ) { return ( ( ( a + b ) ) ) ; }"
    _, out = reduce(src, always_pass, grammar)
    assert out.reduced_text == "void f ( ) { }"
    keep_return = SignatureModel({"r": frozenset({"return", "a"})})
    _, out = reduce(src, keep_return, grammar)
    assert out.reduced_text == "void f ( ) { return a ; }"
    # deletion alone can drop "+ b" but not the parentheses
    _, out = reduce(src, keep_return, grammar, replacement=False)
    assert out.reduced_text == "void f ( ) { return ( ( ( a ) ) ) ; }"


def test_plus_keeps_one_child(always_pass):
    g = load_grammar('start := "(" item+ ")" ; item := IDENT ;')
    _, out = reduce("( a b c )", always_pass, g)
    assert out.reduced_text == "( a )"


def test_compatible_descendants_order(grammar):
    tree = parse_text(grammar, "void f ( ) { x = ( a + ( b ) ) * g ( c , d ) ; }")
    expr = next(n for n in tree.preorder() if n.name == "expr")
    found = [render(d) for d in compatible_descendants(expr)]
    # smallest first; equal sizes in breadth-first order
    assert found == ["c", "b", "d", "a + ( b )"]


def test_every_candidate_parses(model, grammar):
    p, out = reduce(DUBBO_MAIN, model, grammar)
    assert p.candidates_valid == p.candidates_total


def test_accepted_steps_never_grow(model, grammar):
    p, _ = reduce(DUBBO_MAIN, model, grammar)
    seen = [e for e in p.step_log if e["verdict"] == "Pass"]
    assert seen[0]["candidate_hash"]  # baseline confirmation first
    assert p.step_log[0]["verdict"] == "Pass"


def test_determinism(model, grammar):
    a, out_a = reduce(DUBBO_MAIN, model, grammar)
    b, out_b = reduce(DUBBO_MAIN, model, grammar)
    assert out_a.reduced_text == out_b.reduced_text and a.step_log == b.step_log


def test_truncation_returns_passing_best(model, grammar):
    p = ReductionProblem.create(DUBBO_MAIN, model, grammar, max_queries=3)
    out = perses_reduce(p, grammar)
    assert out.truncated and model.label(out.reduced_text) == "main"
    assert p.queries == 3


def test_unparseable_program(main_model, grammar):
    p = ReductionProblem.create("void String args", main_model, grammar)
    with pytest.raises(ParseError):
        perses_reduce(p, grammar)


def test_apply_mutation_copies(grammar):
    tree = parse_text(grammar, SMALL)
    before = tree.structure()
    for m in single_mutations(tree):
        mutated = apply_mutation(tree, m)
        assert mutated.token_count < tree.token_count
        assert parse_text(grammar, render(mutated)) is not None
    assert tree.structure() == before
