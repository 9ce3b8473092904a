"""Grammar-guided reduction of inputs to a code-model's prediction."""

from .ddmin import DdConfig, dd_reduce, ddmin
from .features import FeatureReport, aggregate
from .grammar import Grammar, GrammarError, bundled_grammar, load_grammar, load_grammar_file
from .lexer import LexError, Token, tokenize
from .oracle import ExternalOracle, ReductionProblem, SignatureModel, bundled_model, load_model
from .parser import ParseError, is_valid, parse, parse_text
from .perses import check_one_tree_minimal, perses_reduce
from .tree import Node, render

__version__ = "0.1.0"

__all__ = [
    "DdConfig", "ExternalOracle", "FeatureReport", "Grammar", "GrammarError", "LexError", "Node",
    "ParseError", "ReductionProblem", "SignatureModel", "Token", "aggregate", "bundled_grammar",
    "bundled_model", "check_one_tree_minimal", "dd_reduce", "ddmin", "is_valid", "load_grammar",
    "load_grammar_file", "load_model", "parse", "parse_text", "perses_reduce", "render", "tokenize",
]
