"""MiniJava lexer.

Longest-match tokenizer with a fixed token table. Whitespace and comments are
dropped; Java keywords are reserved and never lex as identifiers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

KEYWORD = "KEYWORD"
IDENT = "IDENT"
INT_LIT = "INT_LIT"
STRING_LIT = "STRING_LIT"
PUNCT = "PUNCT"
ANNOT = "ANNOT"

TOKEN_CLASSES = frozenset({KEYWORD, IDENT, INT_LIT, STRING_LIT, PUNCT, ANNOT})

JAVA_KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null
    """.split()
)

# Shift operators are deliberately absent: ">>" would break nested generics.
_PUNCTUATION = sorted(
    """
    ... -> :: ++ -- && || == != <= >= += -= *= /= %= &= |= ^=
    ( ) { } [ ] ; , . = < > ! ~ ? : + - * / & | ^ %
    """.split(),
    key=len,
    reverse=True,
)

_SKIP = re.compile(r"(?:\s+|//[^\n]*|/\*.*?\*/)+", re.S)
_RULES = [
    (STRING_LIT, re.compile(r'"(?:\\.|[^"\\\n])*"')),
    # character literals share the string class; there is no CHAR_LIT
    (STRING_LIT, re.compile(r"'(?:\\.|[^'\\\n])+'")),
    (INT_LIT, re.compile(r"0[xX][0-9a-fA-F_]+[lL]?|\d[\d_]*(?:\.\d+)?(?:[eE][+-]?\d+)?[fFdDlL]?")),
    (IDENT, re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")),
    (ANNOT, re.compile(r"@")),
    (PUNCT, re.compile("|".join(re.escape(p) for p in _PUNCTUATION))),
]


class LexError(ValueError):
    def __init__(self, offset: int, reason: str = "unlexable input"):
        super().__init__(f"{reason} at offset {offset}")
        self.offset = offset
        self.reason = reason


@dataclass(frozen=True)
class Token:
    cls: str
    text: str
    offset: int

    def __repr__(self) -> str:
        return f"{self.cls} {self.text!r}@{self.offset}"


TokenSeq = List[Token]


def tokenize_prefix(source: str) -> Tuple[TokenSeq, Optional[LexError]]:
    """Lex as far as possible; return the tokens and the error that stopped lexing, if any."""
    tokens: TokenSeq = []
    pos, end = 0, len(source)
    while True:
        skip = _SKIP.match(source, pos)
        if skip:
            pos = skip.end()
        if pos >= end:
            return tokens, None
        if source.startswith("/*", pos):
            return tokens, LexError(pos, "unterminated comment")
        best = None
        for cls, rx in _RULES:
            m = rx.match(source, pos)
            if m and (best is None or m.end() > best[1].end()):
                best = (cls, m)
        if best is None:
            reason = "unterminated string" if source[pos] in "\"'" else "unexpected character"
            return tokens, LexError(pos, reason)
        cls, m = best
        text = m.group()
        if cls == IDENT and text in JAVA_KEYWORDS:
            cls = KEYWORD
        tokens.append(Token(cls, text, pos))
        pos = m.end()


def tokenize(source: str) -> TokenSeq:
    tokens, err = tokenize_prefix(source)
    if err is not None:
        raise err
    return tokens


def token_texts(source: str) -> List[str]:
    """Texts of the successfully lexed prefix of ``source``; never raises."""
    return [t.text for t in tokenize_prefix(source)[0]]
