"""
Terms, predicates and quantifiers of the first-order language Pd
"""

import re
from dataclasses import dataclass
from typing import ClassVar, Tuple, Union

from logickernel.core.models import Formula

VARIABLE = re.compile(r"^[u-z][0-9]*$")
CONSTANT = re.compile(r"^[a-t][0-9]*$")


@dataclass(frozen=True)
class Var:
    """Variable: u..z with an optional numeric subscript"""
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    """Constant: a..t with an optional numeric subscript, or a minted element name"""
    name: str

    def __str__(self) -> str:
        return self.name


Term = Union[Var, Const]


def is_variable_name(name: str) -> bool:
    return VARIABLE.match(name) is not None


def make_term(name: str) -> Term:
    return Var(name) if is_variable_name(name) else Const(name)


@dataclass(frozen=True)
class Pred(Formula):
    """n-place predicate with its terms inserted; n may be 0"""
    name: str
    args: Tuple[Term, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def key(self) -> Tuple[str, int]:
        return (self.name, len(self.args))

    def token(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({','.join(t.name for t in self.args)})"


@dataclass(frozen=True)
class Quantified(Formula):
    var: Var
    body: Formula
    WORD: ClassVar[str] = "?"

    def children(self) -> Tuple[Formula, ...]:
        return (self.body,)

    def rebuild(self, children: Tuple[Formula, ...]) -> Formula:
        return type(self)(self.var, children[0])

    def prefix(self) -> str:
        return f"{self.WORD} {self.var.name} "


@dataclass(frozen=True)
class Forall(Quantified):
    WORD: ClassVar[str] = "forall"


@dataclass(frozen=True)
class Exists(Quantified):
    WORD: ClassVar[str] = "exists"
