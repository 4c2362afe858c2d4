"""
Core data structures for propositional formulas
"""

from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Dict, Iterator, Mapping, Optional, Tuple


class Formula:
    """Base class for every formula tree node"""

    __slots__ = ()

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def rebuild(self, children: Tuple["Formula", ...]) -> "Formula":
        """Return a node of the same kind over new children"""
        return self

    def token(self) -> str:
        """Printed text of a leaf"""
        raise NotImplementedError

    def prefix(self) -> str:
        """Printed operator of a unary node, placed before its child"""
        raise NotImplementedError

    def walk(self) -> Iterator["Formula"]:
        """Preorder traversal, the node itself first"""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children()))

    def __str__(self) -> str:
        from logickernel.core.printer import print_atomic
        return print_atomic(self)


@dataclass(frozen=True)
class Atom(Formula):
    """Propositional atom (P, Q, P1, ...)"""
    name: str

    def token(self) -> str:
        return self.name


@dataclass(frozen=True)
class Not(Formula):
    child: Formula
    SYMBOL: ClassVar[str] = "~"

    def children(self) -> Tuple[Formula, ...]:
        return (self.child,)

    def prefix(self) -> str:
        return self.SYMBOL

    def rebuild(self, children: Tuple[Formula, ...]) -> Formula:
        return Not(children[0])


@dataclass(frozen=True)
class Binary(Formula):
    left: Formula
    right: Formula
    SYMBOL: ClassVar[str] = "?"

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)

    def rebuild(self, children: Tuple[Formula, ...]) -> Formula:
        return type(self)(children[0], children[1])


@dataclass(frozen=True)
class And(Binary):
    SYMBOL: ClassVar[str] = "&"


@dataclass(frozen=True)
class Or(Binary):
    SYMBOL: ClassVar[str] = "|"


@dataclass(frozen=True)
class Implies(Binary):
    SYMBOL: ClassVar[str] = "->"


@dataclass(frozen=True)
class Iff(Binary):
    SYMBOL: ClassVar[str] = "<->"


class Connective(Enum):
    """The five connectives of L with their ASCII spellings"""
    NOT = "~"
    AND = "&"
    OR = "|"
    IMPLIES = "->"
    IFF = "<->"

    @property
    def node_type(self) -> type:
        return _CONNECTIVE_TYPES[self]

    @property
    def is_binary(self) -> bool:
        return self is not Connective.NOT

    @classmethod
    def parse(cls, text: str) -> "Connective":
        """Accept ASCII, Unicode or the enum name"""
        key = text.strip()
        if key in UNICODE_ALIASES:
            key = UNICODE_ALIASES[key]
        for connective in cls:
            if key == connective.value or key.upper() == connective.name:
                return connective
        raise ValueError(f"unknown connective {text!r}")


_CONNECTIVE_TYPES: Dict[Connective, type] = {
    Connective.NOT: Not,
    Connective.AND: And,
    Connective.OR: Or,
    Connective.IMPLIES: Implies,
    Connective.IFF: Iff,
}

UNICODE_ALIASES: Mapping[str, str] = {
    "¬": "~",
    "∧": "&",
    "∨": "|",
    "→": "->",
    "↔": "<->",
}

# Metavariables used by axiom schemata and lemma templates
META_A = Atom("A")
META_B = Atom("B")
META_C = Atom("C")


def connective_of(f: Formula) -> Optional[Connective]:
    """Connective at the root of f, None for leaves"""
    for connective, node_type in _CONNECTIVE_TYPES.items():
        if type(f) is node_type:
            return connective
    return None
