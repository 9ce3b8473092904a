"""Syntax-guided reduction over quantifier-annotated parse trees.

Nodes are visited largest first (ties: leftmost). Star and plus nodes shrink
their child lists with ddmin (plus keeps at least one child), optional nodes
try dropping their child, and rule nodes try being replaced by a strictly
smaller descendant of the same nonterminal. Passes repeat until one makes no
change, so every result is 1-tree-minimal with respect to those mutations.
"""

from __future__ import annotations

import heapq
import logging
import time
from collections import deque
from typing import Iterator, List, Optional, Tuple

from .ddmin import ddmin
from .grammar import OPTIONAL, PLUS, STAR, Grammar
from .lexer import tokenize
from .oracle import BudgetExhausted, ReductionProblem
from .parser import parse
from .trace import ReductionOutcome, StepCounters
from .tree import RULE, Node, render

log = logging.getLogger(__name__)

MAX_PASSES = 10


def compatible_descendants(node: Node) -> List[Node]:
    """Strictly smaller descendants rooted at ``node``'s nonterminal, smallest first.

    Equal sizes keep breadth-first order.
    """
    found = []
    queue = deque(node.children)
    order = 0
    while queue:
        cur = queue.popleft()
        if cur.kind == RULE and cur.name == node.name and cur.token_count < node.token_count:
            found.append((cur.token_count, order, cur))
            order += 1
        queue.extend(cur.children)
    return [n for _, _, n in sorted(found, key=lambda t: t[:2])]


class _Reducer:
    def __init__(self, problem: ReductionProblem, root: Node, replacement: bool, counters: StepCounters):
        self.problem = problem
        self.root = root
        self.replacement = replacement
        self.counters = counters

    def test(self) -> bool:
        return self.problem.passes(render(self.root))

    def alive(self, node: Node) -> bool:
        return node.root() is self.root

    def run(self, max_passes: int) -> None:
        if not self.test():
            raise ValueError("the rendered program does not preserve the baseline prediction")
        for _ in range(max_passes):
            self.counters.iterations += 1
            if not self.one_pass():
                return
        log.warning("no fixpoint after %d passes; stopping", max_passes)

    def one_pass(self) -> bool:
        heap = [
            (-n.token_count, i, n) for i, n in enumerate(self.root.preorder()) if not n.is_terminal and n.token_count
        ]
        heapq.heapify(heap)
        changed = False
        while heap:
            _, _, node = heapq.heappop(heap)
            if self.alive(node) and self.reduce_node(node):
                changed = True
        return changed

    def reduce_node(self, node: Node) -> bool:
        if node.kind in (STAR, PLUS):
            return self.shrink_list(node, keep_one=node.kind == PLUS)
        if node.kind == OPTIONAL:
            return bool(node.children) and self.try_children(node, [])
        if node.kind == RULE and self.replacement:
            for cand in compatible_descendants(node):
                if self.try_replace(node, cand):
                    return True
        return False

    def try_children(self, node: Node, kids: List[Node], keep: bool = True) -> bool:
        old = node.children
        node.set_children(kids)
        ok = False
        try:
            ok = self.test()
        finally:
            if not (ok and keep):
                node.set_children(old)
        if ok and keep:
            self.counters.accepted_steps += 1
        return ok

    def shrink_list(self, node: Node, keep_one: bool) -> bool:
        kids = list(node.children)
        if not keep_one and kids and self.try_children(node, []):
            return True
        if len(kids) < 2:
            return False
        inner = StepCounters()
        kept = ddmin(kids, lambda subset: self.try_children(node, subset, keep=False), counters=inner)
        if len(kept) == len(kids):
            return False
        node.set_children(kept)
        self.counters.accepted_steps += inner.accepted_steps
        return True

    def try_replace(self, node: Node, cand: Node) -> bool:
        home = cand.parent
        parent = node.parent
        old = list(parent.children) if parent is not None else None
        if parent is None:
            self.root = cand
            cand.parent = None
        else:
            node.replace_with(cand)
        ok = False
        try:
            ok = self.test()
        finally:
            if not ok:
                if parent is None:
                    self.root = node
                else:
                    parent.set_children(old)
                cand.parent = home
        if ok:
            self.counters.accepted_steps += 1
        return ok


def perses_reduce(
    problem: ReductionProblem,
    grammar: Grammar,
    *,
    replacement: bool = True,
    max_passes: int = MAX_PASSES,
) -> ReductionOutcome:
    """Reduce ``problem.program`` to a 1-tree-minimal program with the same prediction.

    Raises ParseError (or LexError) if the program is not in the grammar,
    and ValueError if its rendering loses the baseline prediction.
    """
    tree = parse(grammar, tokenize(problem.program))
    counters = StepCounters()
    reducer = _Reducer(problem, tree, replacement, counters)
    truncated = False
    started = time.monotonic()
    try:
        if not problem.passes(render(tree)):
            raise ValueError("the parsed program does not preserve the baseline prediction")
        reducer.run(max_passes)
    except BudgetExhausted:
        truncated = True
    wall = time.monotonic() - started
    root = reducer.root
    return ReductionOutcome(render(root), root, counters, truncated, wall)


Mutation = Tuple[str, int, int]


def single_mutations(tree: Node, replacement: bool = True) -> Iterator[Mutation]:
    """Every single mutation the reducer may apply to ``tree``.

    ``("delete", k, i)`` drops child ``i`` of preorder node ``k``;
    ``("replace", k, d)`` swaps node ``k`` for preorder node ``d``.
    """
    nodes = list(tree.preorder())
    index = {id(n): i for i, n in enumerate(nodes)}
    for k, node in enumerate(nodes):
        if node.kind in (STAR, OPTIONAL) or (node.kind == PLUS and len(node.children) > 1):
            for i in range(len(node.children)):
                yield ("delete", k, i)
        elif node.kind == RULE and replacement:
            for cand in compatible_descendants(node):
                yield ("replace", k, index[id(cand)])


def apply_mutation(tree: Node, mutation: Mutation) -> Node:
    """Return a mutated copy of ``tree``; the input is untouched."""
    op, k, arg = mutation
    clone = tree.copy()
    nodes = list(clone.preorder())
    node = nodes[k]
    if op == "delete":
        node.set_children(node.children[:arg] + node.children[arg + 1 :])
        return clone
    cand = nodes[arg]
    if node.parent is None:
        cand.parent = None
        return cand
    node.replace_with(cand)
    return clone


def check_one_tree_minimal(
    problem: ReductionProblem, grammar: Grammar, tree: Node, *, replacement: bool = True
) -> bool:
    """True iff no single reducer mutation of ``tree`` keeps the prediction.

    Uses a fresh copy of ``problem`` so the caller's counters are untouched.
    """
    probe = problem.fresh()
    for mutation in single_mutations(tree, replacement):
        if probe.passes(render(apply_mutation(tree, mutation))):
            return False
    return True
