"""General context-free parsing (Earley) into quantifier-annotated trees.

Recognition is a plain Earley pass with the Aycock-Horspool nullable fix.
Tree extraction walks the completed-span table top down and is deterministic:
alternatives are tried in the order they are listed, and every symbol (which
includes quantifier rules) takes the longest span that still lets the rest of
the sequence match.
"""

from __future__ import annotations

import sys
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .grammar import OPTIONAL, Grammar, NonTerminal, Terminal
from .lexer import LexError, Token, tokenize
from .tree import RULE, Node


class ParseError(ValueError):
    def __init__(self, offset: int, index: int, reason: str = "unexpected token"):
        super().__init__(f"{reason} at offset {offset} (token {index})")
        self.offset = offset
        self.index = index
        self.reason = reason


class _Compiled:
    def __init__(self, grammar: Grammar):
        names = list(grammar.rules) + list(grammar.quantifiers)
        self.names = names
        self.ids = {n: i for i, n in enumerate(names)}
        self.alts: List[Tuple[int, tuple]] = []
        self.alts_of: List[List[int]] = [[] for _ in names]
        self.quant: Dict[int, Tuple[str, object]] = {}

        def enc(sym):
            return self.ids[sym.name] if isinstance(sym, NonTerminal) else sym

        def add(lhs: int, syms: tuple) -> None:
            self.alts_of[lhs].append(len(self.alts))
            self.alts.append((lhs, syms))

        for name, alts in grammar.rules.items():
            for alt in alts:
                add(self.ids[name], tuple(enc(s) for s in alt))
        for name, (kind, inner) in grammar.quantifiers.items():
            me, x = self.ids[name], enc(inner)
            self.quant[me] = (kind, x)
            if kind == OPTIONAL:
                add(me, ())
                add(me, (x,))
            else:
                add(me, () if kind == "star" else (x,))
                add(me, (me, x))
        self.nullable: Set[int] = set()
        changed = True
        while changed:
            changed = False
            for lhs, syms in self.alts:
                if lhs not in self.nullable and all(isinstance(s, int) and s in self.nullable for s in syms):
                    self.nullable.add(lhs)
                    changed = True
        self.start = self.ids[grammar.start]


def compile_grammar(grammar: Grammar) -> _Compiled:
    return _Compiled(grammar)


def _recognize(c: _Compiled, tokens: Sequence[Token]):
    """Run Earley; return (completed spans, index of first failing token or None)."""
    n = len(tokens)
    sets: List[list] = [[] for _ in range(n + 1)]
    seen: List[set] = [set() for _ in range(n + 1)]
    waiting: List[Dict[int, list]] = [defaultdict(list) for _ in range(n + 1)]
    predicted: List[set] = [set() for _ in range(n + 1)]
    completed: Dict[Tuple[int, int], Set[int]] = defaultdict(set)
    alts, alts_of, nullable = c.alts, c.alts_of, c.nullable

    def add(j: int, item) -> None:
        if item not in seen[j]:
            seen[j].add(item)
            sets[j].append(item)

    for a in alts_of[c.start]:
        add(0, (a, 0, 0))
    predicted[0].add(c.start)
    for j in range(n + 1):
        items = sets[j]
        tok = tokens[j] if j < n else None
        k = 0
        while k < len(items):
            item = items[k]
            k += 1
            a, dot, origin = item
            lhs, syms = alts[a]
            if dot == len(syms):
                ends = completed[(lhs, origin)]
                if j not in ends:
                    ends.add(j)
                    for wa, wd, wo in waiting[origin].get(lhs, ()):
                        add(j, (wa, wd + 1, wo))
                continue
            sym = syms[dot]
            if isinstance(sym, int):
                waiting[j][sym].append(item)
                if sym not in predicted[j]:
                    predicted[j].add(sym)
                    for b in alts_of[sym]:
                        add(j, (b, 0, j))
                if sym in nullable:
                    completed[(sym, j)].add(j)
                    add(j, (a, dot + 1, origin))
                else:
                    ends = completed.get((sym, j))
                    if ends and j in ends:
                        add(j, (a, dot + 1, origin))
            elif tok is not None and sym.matches(tok):
                add(j + 1, (a, dot + 1, origin))
        if j < n and not sets[j + 1]:
            return completed, j
    if n not in completed.get((c.start, 0), ()):
        return completed, n
    return completed, None


class _Builder:
    def __init__(self, c: _Compiled, tokens: Sequence[Token], completed):
        self.c = c
        self.tokens = tokens
        self.completed = completed
        self.feasible_memo: Dict[tuple, bool] = {}
        self.rep_memo: Dict[tuple, bool] = {}
        self.active: Set[tuple] = set()

    def ends(self, sym, i: int) -> List[int]:
        if isinstance(sym, int):
            return sorted(self.completed.get((sym, i), ()), reverse=True)
        if i < len(self.tokens) and sym.matches(self.tokens[i]):
            return [i + 1]
        return []

    def feasible(self, a: int, k: int, i: int, j: int) -> bool:
        key = (a, k, i, j)
        hit = self.feasible_memo.get(key)
        if hit is None:
            syms = self.c.alts[a][1]
            if k == len(syms):
                hit = i == j
            else:
                hit = any(e <= j and self.feasible(a, k + 1, e, j) for e in self.ends(syms[k], i))
            self.feasible_memo[key] = hit
        return hit

    def repeatable(self, sym, i: int, j: int) -> bool:
        key = (sym, i, j)
        hit = self.rep_memo.get(key)
        if hit is None:
            hit = i == j or any(i < e <= j and self.repeatable(sym, e, j) for e in self.ends(sym, i))
            self.rep_memo[key] = hit
        return hit

    def build_symbol(self, sym, i: int, j: int) -> Optional[Node]:
        if isinstance(sym, Terminal):
            if j == i + 1 and sym.matches(self.tokens[i]):
                return Node.leaf(self.tokens[i])
            return None
        return self.build(sym, i, j)

    def build(self, nt: int, i: int, j: int) -> Optional[Node]:
        key = (nt, i, j)
        if key in self.active:
            return None
        self.active.add(key)
        try:
            if nt in self.c.quant:
                return self.build_quant(nt, i, j)
            for a in self.c.alts_of[nt]:
                if self.feasible(a, 0, i, j):
                    kids = self.build_seq(a, 0, i, j)
                    if kids is not None:
                        return Node(RULE, self.c.names[nt], kids)
            return None
        finally:
            self.active.discard(key)

    def build_seq(self, a: int, k: int, i: int, j: int) -> Optional[List[Node]]:
        syms = self.c.alts[a][1]
        if k == len(syms):
            return [] if i == j else None
        for e in self.ends(syms[k], i):
            if e <= j and self.feasible(a, k + 1, e, j):
                child = self.build_symbol(syms[k], i, e)
                if child is None:
                    continue
                rest = self.build_seq(a, k + 1, e, j)
                if rest is not None:
                    return [child] + rest
        return None

    def build_quant(self, nt: int, i: int, j: int) -> Optional[Node]:
        kind, inner = self.c.quant[nt]
        name = self.c.names[nt]
        if kind == OPTIONAL:
            if i == j:
                return Node(kind, name, [])
            child = self.build_symbol(inner, i, j)
            return Node(kind, name, [child]) if child is not None else None
        kids: List[Node] = []
        pos = i
        while pos < j:
            for e in self.ends(inner, pos):
                if pos < e <= j and self.repeatable(inner, e, j):
                    child = self.build_symbol(inner, pos, e)
                    if child is not None:
                        kids.append(child)
                        pos = e
                        break
            else:
                return None
        return Node(kind, name, kids)


def _error_at(tokens: Sequence[Token], index: int) -> ParseError:
    if index < len(tokens):
        return ParseError(tokens[index].offset, index)
    end = tokens[-1].offset + len(tokens[-1].text) if tokens else 0
    return ParseError(end, index, "unexpected end of input")


def parse(grammar: Grammar, tokens: Sequence[Token]) -> Node:
    """Parse ``tokens`` into a tree rooted at the grammar's start rule."""
    c = grammar.compiled
    completed, fail = _recognize(c, tokens)
    if fail is not None:
        raise _error_at(tokens, fail)
    if sys.getrecursionlimit() < 20000:
        sys.setrecursionlimit(20000)
    tree = _Builder(c, tokens, completed).build(c.start, 0, len(tokens))
    if tree is None:  # only reachable through cyclic unit rules
        raise ParseError(0, 0, "no acyclic derivation")
    return tree


def parse_text(grammar: Grammar, source: str) -> Node:
    return parse(grammar, tokenize(source))


def recognizes(grammar: Grammar, tokens: Sequence[Token]) -> bool:
    return _recognize(grammar.compiled, tokens)[1] is None


def is_valid(grammar: Grammar, source: str) -> bool:
    """True iff ``source`` lexes and parses under ``grammar``."""
    try:
        tokens = tokenize(source)
    except LexError:
        return False
    return recognizes(grammar, tokens)
