"""Prediction oracles and the per-job query bookkeeping around them.

An oracle is anything with ``label(text) -> str`` and a ``fallback_label``
attribute. Two are provided: :class:`SignatureModel`, a deterministic
token-set classifier, and :class:`ExternalOracle`, which runs a command on a
temp file and maps its exit status to preserved / changed.
"""

from __future__ import annotations

import hashlib
import logging
import os
import subprocess
import tempfile
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Protocol, Union

from .grammar import Grammar
from .lexer import token_texts
from .parser import is_valid

log = logging.getLogger(__name__)

TIMEOUT_ENV = "PREDRED_ORACLE_TIMEOUT_MS"
DEFAULT_MAX_QUERIES = 50_000
DEFAULT_QUERY_TIMEOUT = 10.0


class Oracle(Protocol):
    fallback_label: str

    def label(self, text: str) -> str: ...


class OracleFailure(RuntimeError):
    def __init__(self, reason: str, timed_out: bool = False):
        super().__init__(reason)
        self.timed_out = timed_out


class BudgetExhausted(RuntimeError):
    """Raised when a job runs out of oracle queries; ``best`` is the best result so far."""

    def __init__(self, best=None):
        super().__init__("query budget exhausted")
        self.best = best


class NoBaseline(ValueError):
    """The original program has nothing to preserve."""


class ModelFileError(ValueError):
    pass


@dataclass(frozen=True)
class SignatureModel:
    """Predicts the label whose required token set is fully present.

    Among matching labels the one with the largest set wins, ties going to the
    lexicographically smallest label. Nothing matching gives ``fallback_label``.
    """

    signatures: Mapping[str, frozenset]
    fallback_label: str = "unknown"
    name: str = "signature"

    def __post_init__(self) -> None:
        for label, required in self.signatures.items():
            if not required:
                raise ValueError(f"label {label!r} has an empty signature")
        if self.fallback_label in self.signatures:
            raise ValueError("fallback label collides with a signature label")
        ranked = sorted(self.signatures.items(), key=lambda kv: (-len(kv[1]), kv[0]))
        object.__setattr__(self, "_ranked", ranked)

    def label(self, text: str) -> str:
        present = set(token_texts(text))
        for label, required in self._ranked:
            if required <= present:
                return label
        return self.fallback_label

    def signature(self, label: str) -> frozenset:
        return self.signatures[label]


def predict(model: SignatureModel, candidate: str) -> str:
    return model.label(candidate)


def parse_model(text: str, name: str = "signature") -> SignatureModel:
    """Read the ``label = tok1,tok2`` model format."""
    signatures: Dict[str, frozenset] = {}
    fallback = "unknown"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ModelFileError(f"line {lineno}: expected 'label = tok,tok'")
        label, _, toks = (part.strip() for part in line.partition("="))
        if label == "@fallback":
            fallback = toks
            continue
        required = frozenset(t.strip() for t in toks.split(",") if t.strip())
        if not label or not required:
            raise ModelFileError(f"line {lineno}: empty label or signature")
        if label in signatures:
            raise ModelFileError(f"line {lineno}: duplicate label {label!r}")
        signatures[label] = required
    return SignatureModel(signatures, fallback, name)


def load_model(path: Union[str, Path]) -> SignatureModel:
    path = Path(path)
    return parse_model(path.read_text(), name=path.stem)


def bundled_model() -> SignatureModel:
    text = resources.files("predred.data").joinpath("methods.sig").read_text()
    return parse_model(text, name="methods")


PRESERVED = "<preserved>"
CHANGED = "<changed>"


def _timeout_from_env(default: float) -> float:
    raw = os.environ.get(TIMEOUT_ENV)
    if raw:
        return int(raw) / 1000.0
    return default


class ExternalOracle:
    """``<command> <candidate-file>``; exit status 0 means the prediction is preserved."""

    fallback_label = CHANGED

    def __init__(self, command: str, timeout: float = DEFAULT_QUERY_TIMEOUT, suffix: str = ".java"):
        self.command = command
        self.timeout = _timeout_from_env(timeout)
        self.suffix = suffix
        self.name = Path(command.split()[0]).name if command.strip() else "external"

    def label(self, text: str) -> str:
        with tempfile.TemporaryDirectory(prefix="predred-") as tmp:
            path = Path(tmp) / f"candidate{self.suffix}"
            path.write_text(text)
            try:
                proc = subprocess.run(
                    [*self.command.split(), str(path)],
                    stdout=subprocess.DEVNULL,
                    stderr=subprocess.DEVNULL,
                    timeout=self.timeout,
                )
            except subprocess.TimeoutExpired as exc:
                raise OracleFailure(f"timed out after {self.timeout}s", timed_out=True) from exc
            except OSError as exc:
                raise OracleFailure(f"could not run {self.command!r}: {exc}") from exc
        return PRESERVED if proc.returncode == 0 else CHANGED


class Outcome(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"


@dataclass
class Verdict:
    outcome: Outcome
    predicted: str
    valid_parse: bool
    from_cache: bool = False
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS


def external_oracle(command: str, candidate: str, timeout: float = DEFAULT_QUERY_TIMEOUT) -> Verdict:
    oracle = ExternalOracle(command, timeout)
    try:
        predicted = oracle.label(candidate)
    except OracleFailure as exc:
        return Verdict(Outcome.FAIL, CHANGED, False, error="timeout" if exc.timed_out else "spawn")
    outcome = Outcome.PASS if predicted == PRESERVED else Outcome.FAIL
    return Verdict(outcome, predicted, False)


def text_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class ReductionProblem:
    """One program, the oracle judging it and the prediction to preserve.

    Owns the job-local query cache and counters; not safe to share between
    threads.
    """

    program: str
    oracle: Oracle
    baseline: str
    grammar: Optional[Grammar] = None
    max_queries: int = DEFAULT_MAX_QUERIES
    per_query_timeout: float = DEFAULT_QUERY_TIMEOUT
    queries: int = 0
    candidates_total: int = 0
    candidates_valid: int = 0
    oracle_failures: int = 0
    step_log: List[dict] = field(default_factory=list)
    _cache: Dict[str, tuple] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if self.max_queries <= 0 or self.per_query_timeout <= 0:
            raise ValueError("budgets must be positive")

    @classmethod
    def create(cls, program: str, oracle: Oracle, grammar: Optional[Grammar] = None, **budgets) -> "ReductionProblem":
        """Record the oracle's prediction on ``program`` as the baseline.

        Raises NoBaseline when that prediction is the oracle's fallback: an
        external command rejecting the original, or no signature matching.
        """
        baseline = oracle.label(program)
        if baseline == oracle.fallback_label:
            raise NoBaseline(f"the original program gets the fallback prediction {baseline!r}")
        return cls(program, oracle, baseline, grammar, **budgets)

    def fresh(self) -> "ReductionProblem":
        """Same program, oracle and baseline with an empty cache and zeroed counters."""
        return ReductionProblem(
            self.program, self.oracle, self.baseline, self.grammar, self.max_queries, self.per_query_timeout
        )

    def preserved(self, candidate: str) -> Verdict:
        """Ask whether ``candidate`` keeps the baseline prediction."""
        cached = self._cache.get(candidate)
        if cached is not None:
            predicted, valid, error = cached
            verdict = self._verdict(predicted, valid, True, error)
            self._record(candidate, verdict)
            return verdict
        if self.queries >= self.max_queries:
            raise BudgetExhausted()
        self.queries += 1
        valid = is_valid(self.grammar, candidate) if self.grammar is not None else False
        error = None
        try:
            predicted = self.oracle.label(candidate)
        except OracleFailure as exc:
            predicted = self.oracle.fallback_label
            error = "timeout" if exc.timed_out else "spawn"
            self.oracle_failures += 1
            log.warning("oracle failure on candidate %s: %s", text_hash(candidate), exc)
        self._cache[candidate] = (predicted, valid, error)
        verdict = self._verdict(predicted, valid, False, error)
        self._record(candidate, verdict)
        return verdict

    def passes(self, candidate: str) -> bool:
        return self.preserved(candidate).passed

    def _verdict(self, predicted: str, valid: bool, from_cache: bool, error: Optional[str]) -> Verdict:
        ok = error is None and predicted == self.baseline
        return Verdict(Outcome.PASS if ok else Outcome.FAIL, predicted, valid, from_cache, error)

    def _record(self, candidate: str, verdict: Verdict) -> None:
        self.candidates_total += 1
        self.candidates_valid += verdict.valid_parse
        entry = {
            "candidate_hash": text_hash(candidate),
            "verdict": verdict.outcome.value,
            "valid_parse": verdict.valid_parse,
            "cached": verdict.from_cache,
        }
        if verdict.error:
            entry["error"] = verdict.error
        self.step_log.append(entry)
