"""Variable-renaming adversarial sets and misprediction rates."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Sequence

from .features import FeatureReport
from .grammar import Grammar
from .lexer import IDENT, LexError, tokenize, tokenize_prefix
from .oracle import Oracle, OracleFailure
from .parser import ParseError, parse
from .tree import RULE, Node

REPLACEMENT = "var"
VARIABLE_RULE = "var_name"
SET_KINDS = ("original", "key", "reduced")


class UnknownVariable(KeyError):
    pass


def collect_variables(tree: Node) -> List[str]:
    """Declared parameter and local names in first-occurrence order."""
    names: List[str] = []
    for node in tree.preorder():
        if node.kind == RULE and node.name == VARIABLE_RULE:
            text = node.children[0].token.text
            if text not in names:
                names.append(text)
    return names


def _substitute(texts_and_classes, name: str) -> str:
    return " ".join(REPLACEMENT if cls == IDENT and text == name else text for cls, text in texts_and_classes)


def rename_variable(tree: Node, name: str) -> str:
    """Rename every identifier spelled ``name`` to ``var``; scopes are not modeled."""
    if name not in collect_variables(tree):
        raise UnknownVariable(name)
    return _substitute(((t.cls, t.text) for t in tree.leaves()), name)


def _variables_and_renamer(text: str, grammar: Grammar, fallback_names: Sequence[str]):
    try:
        tree = parse(grammar, tokenize(text))
    except (LexError, ParseError):
        # unparseable (ddmin) output: reuse the original's declarations that survive
        tokens, _ = tokenize_prefix(text)
        present = {t.text for t in tokens if t.cls == IDENT}
        names = [n for n in fallback_names if n in present]
        return names, lambda n: _substitute(((t.cls, t.text) for t in tokens), n)
    return collect_variables(tree), lambda n: rename_variable(tree, n)


def build_sets(original: str, reduced: str, report: FeatureReport, grammar: Grammar) -> Dict[str, List[str]]:
    """Transformed programs for the original, key and reduced adversarial sets."""
    tree = parse(grammar, tokenize(original))
    original_vars = collect_variables(tree)
    key = set(report.key)
    reduced_vars, rename_reduced = _variables_and_renamer(reduced, grammar, original_vars)
    return {
        "original": [rename_variable(tree, v) for v in original_vars],
        "key": [rename_variable(tree, v) for v in original_vars if v in key],
        "reduced": [rename_reduced(v) for v in reduced_vars],
    }


@dataclass
class AdversarialReport:
    set_kind: str
    n_base: int
    n_transformed: int
    n_mispredicted: int

    @property
    def rate(self) -> float:
        return self.n_mispredicted / self.n_transformed if self.n_transformed else 0.0

    def __add__(self, other: "AdversarialReport") -> "AdversarialReport":
        if other.set_kind != self.set_kind:
            raise ValueError("cannot add reports of different sets")
        return AdversarialReport(
            self.set_kind,
            self.n_base + other.n_base,
            self.n_transformed + other.n_transformed,
            self.n_mispredicted + other.n_mispredicted,
        )


def misprediction_stats(
    model: Oracle, baseline: str, candidates: Sequence[str], set_kind: str = "", n_base: int = 1
) -> AdversarialReport:
    wrong = 0
    for text in candidates:
        try:
            wrong += model.label(text) != baseline
        except OracleFailure:
            wrong += 1
    return AdversarialReport(set_kind, n_base, len(candidates), wrong)


CSV_HEADER = ["reducer", "model", "set", "#original", "#transformed", "#mispredictions", "%"]


def write_adversarial_csv(rows: Iterable[tuple], path: Path) -> None:
    """Rows are (reducer, model, AdversarialReport)."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for reducer, model, rep in rows:
            w.writerow(
                [reducer, model, rep.set_kind, rep.n_base, rep.n_transformed, rep.n_mispredicted, f"{100 * rep.rate:.2f}"]
            )
