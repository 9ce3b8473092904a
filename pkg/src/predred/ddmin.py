"""Syntax-unaware reduction: Zeller's ddmin over tokens or characters."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, TypeVar

from .lexer import LexError, tokenize
from .oracle import BudgetExhausted, ReductionProblem
from .parser import ParseError, parse
from .trace import ReductionOutcome, StepCounters

log = logging.getLogger(__name__)

T = TypeVar("T")

TOKEN, CHAR = "token", "char"
DEFAULT_STALL_TIMEOUT = 30.0


@dataclass
class DdConfig:
    granularity: str = TOKEN
    max_queries: int = 50_000
    # seconds per granularity round; None disables the stall timer
    stall_timeout: Optional[float] = DEFAULT_STALL_TIMEOUT

    def __post_init__(self) -> None:
        if self.granularity not in (TOKEN, CHAR):
            raise ValueError(f"unknown granularity {self.granularity!r}")
        if self.max_queries <= 0 or (self.stall_timeout is not None and self.stall_timeout <= 0):
            raise ValueError("budgets must be positive")


def _split(items: Sequence[T], n: int) -> List[List[T]]:
    size = len(items)
    bounds = [i * size // n for i in range(n + 1)]
    return [list(items[bounds[i] : bounds[i + 1]]) for i in range(n)]


def ddmin(
    items: Sequence[T],
    predicate: Callable[[List[T]], bool],
    *,
    stall_timeout: Optional[float] = None,
    counters: Optional[StepCounters] = None,
    clock: Callable[[], float] = time.monotonic,
) -> List[T]:
    """Return a 1-minimal subsequence of ``items`` that satisfies ``predicate``.

    ``predicate(items)`` must hold on entry. Chunks are tried before
    complements, left to right. If ``predicate`` raises
    :class:`BudgetExhausted`, it is re-raised with ``best`` set to the
    smallest passing list seen so far.
    """
    current = list(items)
    counters = counters if counters is not None else StepCounters()
    n = 2
    try:
        while len(current) >= 2 and n <= len(current):
            counters.iterations += 1
            chunks = _split(current, n)
            deadline = clock() + stall_timeout if stall_timeout is not None else None
            reduced_to = None
            stalled = False
            for chunk in chunks:
                if deadline is not None and clock() > deadline:
                    stalled = True
                    break
                if predicate(chunk):
                    reduced_to, next_n = chunk, 2
                    break
            if reduced_to is None and not stalled and n > 2:
                for i in range(n):
                    if deadline is not None and clock() > deadline:
                        stalled = True
                        break
                    complement = [x for j, c in enumerate(chunks) if j != i for x in c]
                    if predicate(complement):
                        reduced_to, next_n = complement, max(n - 1, 2)
                        break
            if reduced_to is not None:
                counters.accepted_steps += 1
                current, n = reduced_to, next_n
                continue
            if stalled:
                counters.stall_skips += 1
                log.info("ddmin round at granularity %d stalled; moving on", n)
            if n >= len(current):
                break
            n = min(2 * n, len(current))
    except BudgetExhausted as exc:
        exc.best = current
        raise
    return current


def _program_tokens(problem: ReductionProblem) -> List[str]:
    return [t.text for t in tokenize(problem.program)]


def dd_reduce(problem: ReductionProblem, config: DdConfig = DdConfig()) -> ReductionOutcome:
    """Reduce ``problem.program`` with ddmin at token or character granularity.

    Token candidates are the surviving lexemes joined by single spaces;
    character candidates are the surviving characters of that rendering
    (or of the raw program if it does not lex).
    """
    counters = StepCounters()
    if config.granularity == TOKEN:
        items: List[str] = _program_tokens(problem)
        joiner = " "
    else:
        try:
            items = list(" ".join(_program_tokens(problem)))
        except LexError:
            items = list(problem.program)
        joiner = ""
    if problem.max_queries > config.max_queries:
        problem.max_queries = config.max_queries

    def predicate(subset: List[str]) -> bool:
        return problem.passes(joiner.join(subset))

    truncated = False
    started = time.monotonic()
    try:
        if not predicate(items):
            raise ValueError("the starting candidate does not preserve the baseline prediction")
        result = ddmin(items, predicate, stall_timeout=config.stall_timeout, counters=counters)
    except BudgetExhausted as exc:
        result = exc.best if exc.best is not None else items
        truncated = True
    wall = time.monotonic() - started
    text = joiner.join(result)
    tree = None
    if problem.grammar is not None:
        try:
            tree = parse(problem.grammar, tokenize(text))
        except (LexError, ParseError):
            tree = None
    return ReductionOutcome(
        reduced_text=text,
        reduced_tree=tree,
        reduced_items=result,
        counters=counters,
        truncated=truncated,
        wall_seconds=wall,
    )
