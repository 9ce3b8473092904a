"""Quantifier-annotated parse trees."""

from __future__ import annotations

from typing import Iterator, List, Optional, Sequence

from .lexer import Token

TERMINAL = "terminal"
RULE = "rule"


class Node:
    """A parse-tree node.

    ``kind`` is ``"terminal"``, ``"rule"`` or one of the quantifier kinds
    (``"star"``, ``"plus"``, ``"optional"``). ``name`` is the nonterminal or
    quantifier-rule name (``None`` for terminals). ``token_count`` caches the
    number of terminal leaves below the node and is kept current by
    :meth:`set_children`.
    """

    __slots__ = ("kind", "name", "token", "children", "parent", "token_count")

    def __init__(
        self,
        kind: str,
        name: Optional[str] = None,
        children: Sequence["Node"] = (),
        token: Optional[Token] = None,
    ):
        self.kind = kind
        self.name = name
        self.token = token
        self.parent: Optional[Node] = None
        self.children: List[Node] = []
        self.token_count = 1 if kind == TERMINAL else 0
        if kind != TERMINAL:
            self.children = list(children)
            for child in self.children:
                child.parent = self
            self.token_count = sum(c.token_count for c in self.children)

    @classmethod
    def leaf(cls, token: Token) -> "Node":
        return cls(TERMINAL, token=token)

    @property
    def is_terminal(self) -> bool:
        return self.kind == TERMINAL

    @property
    def is_quantifier(self) -> bool:
        return self.kind not in (TERMINAL, RULE)

    def set_children(self, children: Sequence["Node"]) -> None:
        """Replace the child list in place and refresh ancestor token counts."""
        kept = {id(c) for c in children}
        for child in self.children:
            if id(child) not in kept and child.parent is self:
                child.parent = None
        self.children = list(children)
        for child in self.children:
            child.parent = self
        node: Optional[Node] = self
        while node is not None:
            node.token_count = sum(c.token_count for c in node.children)
            node = node.parent

    def replace_with(self, other: "Node") -> None:
        """Put ``other`` where this node sits under its parent."""
        parent = self.parent
        if parent is None:
            raise ValueError("cannot replace the root in place")
        parent.set_children([other if c is self else c for c in parent.children])

    def root(self) -> "Node":
        node = self
        while node.parent is not None:
            node = node.parent
        return node

    def preorder(self) -> Iterator["Node"]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self) -> Iterator[Token]:
        for node in self.preorder():
            if node.kind == TERMINAL:
                yield node.token

    def copy(self) -> "Node":
        if self.kind == TERMINAL:
            return Node.leaf(self.token)
        return Node(self.kind, self.name, [c.copy() for c in self.children])

    def structure(self) -> tuple:
        """Hashable structural fingerprint (kinds, names and lexemes)."""
        if self.kind == TERMINAL:
            return (self.token.cls, self.token.text)
        return (self.kind, self.name, tuple(c.structure() for c in self.children))

    def __repr__(self) -> str:
        if self.kind == TERMINAL:
            return f"Leaf({self.token.text!r})"
        return f"Node({self.kind}, {self.name!r}, tokens={self.token_count})"


ParseTree = Node


def render(tree: Node) -> str:
    """Lexemes of the leaves in order, joined by single spaces."""
    return " ".join(tok.text for tok in tree.leaves())


def leaf_texts(tree: Node) -> List[str]:
    return [tok.text for tok in tree.leaves()]
