"""Grammar DSL loading and normalization.

DSL summary::

    // comment
    name := alt1 | alt2 ;      // alternatives are sequences of symbols
    lhs  := "literal" IDENT other_rule ( group | "x" )* item+ item? ;

Inline ``*``, ``+`` and ``?`` are hoisted into dedicated quantifier rules and
parenthesized groups into synthetic rules, so a loaded :class:`Grammar` holds
only plain sequences. The start rule is ``start`` if defined, else the first
rule in the file.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .lexer import TOKEN_CLASSES, Token

STAR, PLUS, OPTIONAL = "star", "plus", "optional"
_QUANT_OPS = {"*": STAR, "+": PLUS, "?": OPTIONAL}


class GrammarError(ValueError):
    def __init__(self, line: int, reason: str):
        # line 0: the problem is global rather than tied to one rule
        super().__init__(f"line {line}: {reason}" if line else reason)
        self.line = line
        self.reason = reason


@dataclass(frozen=True)
class Terminal:
    """A literal lexeme (``text``) or a whole token class (``cls``)."""

    text: Optional[str] = None
    cls: Optional[str] = None

    def matches(self, token: Token) -> bool:
        if self.text is not None:
            return token.text == self.text
        return token.cls == self.cls

    def __str__(self) -> str:
        return f'"{self.text}"' if self.text is not None else str(self.cls)


@dataclass(frozen=True)
class NonTerminal:
    name: str

    def __str__(self) -> str:
        return self.name


Symbol = Union[Terminal, NonTerminal]
Alternative = Tuple[Symbol, ...]


@dataclass
class Grammar:
    rules: Dict[str, List[Alternative]]
    start: str
    # quantifier rule name -> (kind, repeated symbol)
    quantifiers: Dict[str, Tuple[str, Symbol]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self._compiled = None

    def kind_of(self, name: str) -> str:
        """``"rule"`` for ordinary nonterminals, else the quantifier kind."""
        q = self.quantifiers.get(name)
        return q[0] if q else "rule"

    def is_defined(self, name: str) -> bool:
        return name in self.rules or name in self.quantifiers

    @property
    def compiled(self):
        # lazily built recognizer tables, see parser.py
        if self._compiled is None:
            from .parser import compile_grammar

            self._compiled = compile_grammar(self)
        return self._compiled

    def __repr__(self) -> str:
        return f"Grammar(start={self.start!r}, rules={len(self.rules)}, quantifiers={len(self.quantifiers)})"


_DSL_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+|//[^\n]*)
  | (?P<nl>\n)
  | (?P<define>:=)
  | (?P<op>[|;()*+?])
  | (?P<string>"(?:\\.|[^"\\\n])*")
  | (?P<cls>[A-Z][A-Z0-9_]*\b)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.X,
)


def _lex_dsl(text: str) -> List[Tuple[str, str, int]]:
    out = []
    line, pos = 1, 0
    while pos < len(text):
        m = _DSL_TOKEN.match(text, pos)
        if m is None:
            raise GrammarError(line, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind == "nl":
            line += 1
        elif kind != "ws":
            value = m.group()
            if kind == "string":
                value = bytes(value[1:-1], "utf-8").decode("unicode_escape")
                if not value:
                    raise GrammarError(line, "empty literal")
            out.append((kind, value, line))
        pos = m.end()
    return out


class _DslParser:
    def __init__(self, text: str):
        self.toks = _lex_dsl(text)
        self.i = 0
        self.raw: Dict[str, Tuple[int, list]] = {}
        self.order: List[str] = []

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", self.toks[-1][2] if self.toks else 1)

    def take(self, kind: str, value: Optional[str] = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            raise GrammarError(tok[2], f"expected {want!r}, found {tok[1] or tok[0]!r}")
        self.i += 1
        return tok

    def parse(self):
        while self.peek()[0] != "eof":
            _, name, line = self.take("name")
            self.take("define")
            alts = self.alternatives()
            self.take("op", ";")
            if name in self.raw:
                raise GrammarError(line, f"rule {name!r} defined twice")
            self.raw[name] = (line, alts)
            self.order.append(name)
        return self

    def alternatives(self) -> list:
        alts = [self.sequence()]
        while self.peek()[:2] == ("op", "|"):
            self.i += 1
            alts.append(self.sequence())
        return alts

    def sequence(self) -> list:
        items = []
        while True:
            kind, value, line = self.peek()
            if kind == "string":
                atom = ("lit", value, line)
            elif kind == "cls":
                if value not in TOKEN_CLASSES:
                    raise GrammarError(line, f"unknown token class {value}")
                atom = ("cls", value, line)
            elif kind == "name":
                atom = ("ref", value, line)
            elif (kind, value) == ("op", "("):
                self.i += 1
                atom = ("group", self.alternatives(), line)
                self.take("op", ")")
            else:
                break
            if atom[0] != "group":
                self.i += 1
            while self.peek()[0] == "op" and self.peek()[1] in _QUANT_OPS:
                atom = ("quant", (atom, _QUANT_OPS[self.peek()[1]]), line)
                self.i += 1
            items.append(atom)
        if not items:
            raise GrammarError(self.peek()[2], "empty alternative (use ? for an optional part)")
        return items


class _Normalizer:
    def __init__(self, parsed: _DslParser):
        self.parsed = parsed
        self.rules: Dict[str, List[Alternative]] = {}
        self.quantifiers: Dict[str, Tuple[str, Symbol]] = {}
        self.group_count: Dict[str, int] = {}

    def run(self) -> None:
        for name in self.parsed.order:
            line, alts = self.parsed.raw[name]
            self.rules[name] = [self.sequence(name, alt) for alt in alts]

    def sequence(self, owner: str, items: list) -> Alternative:
        return tuple(self.symbol(owner, item) for item in items)

    def symbol(self, owner: str, item) -> Symbol:
        kind, value, line = item
        if kind == "lit":
            return Terminal(text=value)
        if kind == "cls":
            return Terminal(cls=value)
        if kind == "ref":
            if value not in self.parsed.raw:
                raise GrammarError(line, f"undefined nonterminal {value!r}")
            return NonTerminal(value)
        if kind == "group":
            n = self.group_count.get(owner, 0) + 1
            self.group_count[owner] = n
            name = f"{owner}__grp{n}"
            self.rules[name] = [self.sequence(owner, alt) for alt in value]
            return NonTerminal(name)
        inner_item, qkind = value
        inner = self.symbol(owner, inner_item)
        op = {STAR: "*", PLUS: "+", OPTIONAL: "?"}[qkind]
        name = f"{inner}{op}"
        self.quantifiers.setdefault(name, (qkind, inner))
        return NonTerminal(name)


def _nullable(grammar: Grammar) -> set:
    nullable = {n for n, (k, _) in grammar.quantifiers.items() if k in (STAR, OPTIONAL)}
    changed = True
    while changed:
        changed = False
        for name, alts in grammar.rules.items():
            if name in nullable:
                continue
            for alt in alts:
                if all(isinstance(s, NonTerminal) and s.name in nullable for s in alt):
                    nullable.add(name)
                    changed = True
                    break
        for name, (kind, inner) in grammar.quantifiers.items():
            if name not in nullable and isinstance(inner, NonTerminal) and inner.name in nullable:
                nullable.add(name)
                changed = True
    return nullable


def load_grammar(text: str) -> Grammar:
    parsed = _DslParser(text).parse()
    if not parsed.order:
        raise GrammarError(1, "missing start rule: grammar defines no rules")
    norm = _Normalizer(parsed)
    norm.run()
    start = "start" if "start" in parsed.raw else parsed.order[0]
    grammar = Grammar(rules=norm.rules, start=start, quantifiers=norm.quantifiers)
    nullable = _nullable(grammar)
    for name, (kind, inner) in grammar.quantifiers.items():
        if isinstance(inner, NonTerminal) and inner.name in nullable:
            raise GrammarError(0, f"quantified symbol {inner} is nullable (it can derive the empty string)")
    return grammar


def load_grammar_file(path: Union[str, Path]) -> Grammar:
    return load_grammar(Path(path).read_text())


@functools.lru_cache(maxsize=None)
def bundled_grammar() -> Grammar:
    """The shipped MiniJava subset grammar."""
    return load_grammar(resources.files("predred.data").joinpath("minijava.g").read_text())
