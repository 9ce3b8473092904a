"""Exhaustive reference searches, written independently of the reducers."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, FrozenSet, List, Sequence, Tuple

from predred.tree import Node

Form = Tuple[str, ...]


def _concat(parts: Sequence[FrozenSet[Form]]) -> FrozenSet[Form]:
    out = {()}
    for part in parts:
        out = {a + b for a in out for b in part}
    return frozenset(out)


def tree_forms(root: Node) -> FrozenSet[Form]:
    """Token sequences of every tree reachable from ``root`` by pruning.

    Star lists keep any subsequence of children, plus lists any non-empty
    one, optionals may drop their child, and a rule node may be swapped for
    any smaller descendant rooted at the same rule.
    """

    memo = {}

    def forms(node: Node) -> FrozenSet[Form]:
        if id(node) in memo:
            return memo[id(node)]
        if node.children == [] and node.kind == "terminal":
            result = frozenset({(node.token.text,)})
        elif node.kind in ("star", "plus"):
            child_forms = [forms(c) for c in node.children]
            result = set()
            for mask in itertools.product((False, True), repeat=len(child_forms)):
                if node.kind == "plus" and not any(mask):
                    continue
                result |= _concat([f for f, keep in zip(child_forms, mask) if keep])
            result = frozenset(result)
        elif node.kind == "optional":
            result = frozenset({()}) | (forms(node.children[0]) if node.children else frozenset())
        else:
            result = set(_concat([forms(c) for c in node.children]))
            stack = list(node.children)
            while stack:
                d = stack.pop()
                if d.kind == "rule" and d.name == node.name and d.token_count < node.token_count:
                    result |= forms(d)
                stack.extend(d.children)
            result = frozenset(result)
        memo[id(node)] = result
        return result

    return forms(root)


def min_tree_form(root: Node, passes: Callable[[str], bool]) -> int:
    return min(len(f) for f in tree_forms(root) if passes(" ".join(f)))


def one_minimal_subsequences(items: Sequence[str], predicate: Callable[[List[str]], bool]) -> List[Tuple[str, ...]]:
    """Every passing subsequence (by index) from which no single element can be dropped."""
    n = len(items)
    passing = {}
    for mask in range(1 << n):
        passing[mask] = predicate([items[i] for i in range(n) if mask >> i & 1])
    result = []
    for mask, ok in passing.items():
        if not ok:
            continue
        if all(not passing[mask & ~(1 << i)] for i in range(n) if mask >> i & 1):
            result.append(tuple(items[i] for i in range(n) if mask >> i & 1))
    return result
