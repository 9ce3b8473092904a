import pytest

from conftest import DUBBO_MAIN
from predred.grammar import load_grammar
from predred.lexer import tokenize
from predred.parser import ParseError, is_valid, parse, parse_text, recognizes
from predred.tree import Node, render


def test_small_method(grammar):
    tree = parse_text(grammar, "void f(String args) { }")
    assert tree.name == "method_decl"
    assert tree.token_count == 8
    assert render(tree) == "void f ( String args ) { }"


def test_dubbo_main_has_30_tokens(grammar):
    tree = parse_text(grammar, DUBBO_MAIN)
    assert tree.token_count == 30
    assert render(tree).startswith("public static void f ( String [ ] args ) {")


def test_unbalanced_parameter_list(grammar):
    src = "void f( { }"
    with pytest.raises(ParseError) as exc:
        parse_text(grammar, src)
    assert exc.value.index == 3 and src[exc.value.offset] == "{"


def test_truncated_input_reports_end(grammar):
    with pytest.raises(ParseError) as exc:
        parse_text(grammar, "void f ( ) {")
    assert "end of input" in str(exc.value)


def test_is_valid_handles_lex_errors(grammar):
    assert is_valid(grammar, "void f ( ) { }")
    assert not is_valid(grammar, "void f ( ) { # }")
    assert not is_valid(grammar, "void String args")


def test_recognizer_and_builder_agree_on_ambiguity():
    g = load_grammar('start := a* "x"? ; a := "x" ;')
    tree = parse(g, tokenize("x x"))
    # greedy: the star takes every x it can while the whole parse still succeeds
    assert tree.structure() == (
        "rule", "start", (("star", "a*", (("rule", "a", (("IDENT", "x"),)),) * 2), ("optional", '"x"?', ())),
    )
    assert recognizes(g, tokenize("x x"))


def test_nullable_rules():
    g = load_grammar('start := "(" opt ")" ; opt := "a"? ;')
    assert render(parse(g, tokenize("( )"))) == "( )"
    assert render(parse(g, tokenize("( a )"))) == "( a )"


def test_plus_needs_one():
    g = load_grammar('start := "a"+ ;')
    with pytest.raises(ParseError):
        parse(g, [])
    assert parse(g, tokenize("a a a")).children[0].kind == "plus"


def test_deep_nesting_does_not_overflow(grammar):
    depth = 300
    src = "void f ( ) { x = " + "( " * depth + "1" + " )" * depth + " ; }"
    assert parse_text(grammar, src).token_count == len(tokenize(src))


def test_tree_bookkeeping(grammar):
    tree = parse_text(grammar, "void f ( String args ) { int x = 0 ; }")
    stmts = next(n for n in tree.preorder() if n.name == "stmt*")
    before = tree.token_count
    removed = stmts.children[0]
    stmts.set_children([])
    assert removed.parent is None
    assert tree.token_count == before - 5
    assert render(tree) == "void f ( String args ) { }"
    copy = tree.copy()
    assert copy.structure() == tree.structure() and copy is not tree


def test_replace_with_keeps_counts(grammar):
    tree = parse_text(grammar, "void f ( ) { x = ( ( 1 ) ) ; }")
    # "=" is a binary operator, so "( ( 1 ) )" is the right-hand unary operand
    outer = next(n for n in tree.preorder() if n.name == "unary" and n.token_count == 5)
    inner = min((n for n in outer.preorder() if n.name == "unary" and n is not outer), key=lambda n: n.token_count)
    inner.parent.set_children([c for c in inner.parent.children if c is not inner])  # detach
    outer.replace_with(inner)
    assert render(tree) == "void f ( ) { x = 1 ; }"
    assert tree.token_count == 10


def test_single_leaf_render():
    from predred.lexer import Token

    assert render(Node.leaf(Token("IDENT", "a", 0))) == "a"
