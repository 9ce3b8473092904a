"""Reducer results and the counters both reducers share."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .tree import Node


@dataclass
class StepCounters:
    # passes for Perses, granularity rounds for ddmin
    iterations: int = 0
    accepted_steps: int = 0
    stall_skips: int = 0


@dataclass
class ReductionOutcome:
    reduced_text: str
    reduced_tree: Optional[Node]
    counters: StepCounters = field(default_factory=StepCounters)
    truncated: bool = False
    wall_seconds: float = 0.0
    reduced_items: Optional[List[str]] = None
