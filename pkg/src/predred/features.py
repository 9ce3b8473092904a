"""Per-label candidate / key / sparse feature sets from reduced programs."""

from __future__ import annotations

import csv
import json
import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .grammar import Grammar
from .lexer import PUNCT, LexError, tokenize, tokenize_prefix
from .parser import ParseError, parse

DEFAULT_THRESHOLD = 0.5


class EmptyInput(ValueError):
    pass


def extract_elements(reduced: str, grammar: Grammar) -> Set[Tuple[str, str]]:
    """(node type, token value) pairs for every non-punctuation token.

    The node type is the name of the leaf's parent rule or quantifier node.
    Text that does not parse falls back to (lexer class, text) pairs.
    """
    try:
        tree = parse(grammar, tokenize(reduced))
    except (LexError, ParseError):
        tokens, _ = tokenize_prefix(reduced)
        return {(t.cls, t.text) for t in tokens if t.cls != PUNCT}
    pairs = set()
    for node in tree.preorder():
        for child in node.children:
            if child.is_terminal and child.token.cls != PUNCT:
                pairs.add((node.name, child.token.text))
    return pairs


def key_cutoff(threshold: float, n_programs: int) -> int:
    """Smallest presence count that makes a token key ("at least" the threshold)."""
    # rounding first keeps 0.7 * 10 from turning into 8
    return math.ceil(round(threshold * n_programs, 9))


@dataclass
class FeatureReport:
    label: str
    model_id: str
    reducer_id: str
    n_programs: int
    candidate: Dict[str, int]
    key: List[str]
    sparse: List[str]
    threshold: float = DEFAULT_THRESHOLD

    def to_dict(self) -> dict:
        d = asdict(self)
        d["candidate"] = dict(sorted(self.candidate.items()))
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "FeatureReport":
        return cls(**d)


def aggregate(
    label: str,
    reduced_set: Sequence[str],
    threshold: float = DEFAULT_THRESHOLD,
    *,
    grammar: Grammar,
    model_id: str = "",
    reducer_id: str = "",
) -> FeatureReport:
    if not reduced_set:
        raise EmptyInput(f"no reduced programs for label {label!r}")
    if not 0 < threshold <= 1:
        raise ValueError("threshold must be in (0, 1]")
    presence: Counter = Counter()
    for program in reduced_set:
        presence.update({value for _, value in extract_elements(program, grammar)})
    cutoff = key_cutoff(threshold, len(reduced_set))
    key = sorted((t for t, c in presence.items() if c >= cutoff), key=lambda t: (-presence[t], t))
    sparse = sorted(t for t, c in presence.items() if c < cutoff)
    return FeatureReport(label, model_id, reducer_id, len(reduced_set), dict(presence), key, sparse, threshold)


def aggregate_by_label(
    reduced: Iterable[Tuple[str, str]],
    threshold: float = DEFAULT_THRESHOLD,
    *,
    grammar: Grammar,
    model_id: str = "",
    reducer_id: str = "",
) -> List[FeatureReport]:
    """One report per label from (label, reduced text) pairs, labels sorted."""
    groups: Dict[str, List[str]] = {}
    for label, text in reduced:
        groups.setdefault(label, []).append(text)
    return [
        aggregate(label, groups[label], threshold, grammar=grammar, model_id=model_id, reducer_id=reducer_id)
        for label in sorted(groups)
    ]


def write_features_json(reports: Sequence[FeatureReport], path: Path, pooled: Sequence[FeatureReport] = ()) -> None:
    payload = {"reports": [r.to_dict() for r in reports]}
    if pooled:
        # pooled reports re-threshold over the union of all runs' programs
        payload["pooled"] = [r.to_dict() for r in pooled]
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def read_features_json(path: Path) -> List[FeatureReport]:
    data = json.loads(Path(path).read_text())
    return [FeatureReport.from_dict(d) for d in data["reports"]]


def write_summary_csv(reports: Sequence[FeatureReport], path: Path) -> None:
    """Candidate and key counts per method and model, one column pair per reducer."""
    reducers = sorted({r.reducer_id for r in reports})
    rows: Dict[Tuple[str, str], Dict[str, FeatureReport]] = {}
    for r in reports:
        rows.setdefault((r.label, r.model_id), {})[r.reducer_id] = r
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        header = ["method", "model"]
        for red in reducers:
            header += [f"{red} candidate", f"{red} key"]
        w.writerow(header)
        for (label, model), by_red in sorted(rows.items()):
            row = [label, model]
            for red in reducers:
                rep: Optional[FeatureReport] = by_red.get(red)
                row += [len(rep.candidate), len(rep.key)] if rep else ["", ""]
            w.writerow(row)
