"""
Lark grammar for Pd: the propositional grammar plus predicates and quantifiers
"""

from typing import Any, Dict, Tuple

from lark import Transformer

from logickernel.core.models import Formula
from logickernel.core.parser import FormulaParser, FormulaTransformer, parser_for
from logickernel.core.printer import print_atomic
from logickernel.errors import ArityMismatch, QuantifierOverConstant
from logickernel.fol.models import Exists, Forall, Pred, Var, is_variable_name, make_term

# Quantifiers bind as tightly as ~: "forall x P(x) -> Q" is (forall x P(x)) -> Q.
PD_GRAMMAR = r"""
    ?start: iff

    ?iff: imp
        | iff _IFF imp          -> biconditional

    ?imp: or_
        | or_ _IMP imp          -> implication

    ?or_: and_
        | or_ _OR and_          -> disjunction

    ?and_: unary
         | and_ _AND unary      -> conjunction

    ?unary: _NOT unary          -> negation
          | _FORALL LOWER unary -> universal
          | _EXISTS LOWER unary -> existential
          | "(" iff ")"
          | PRED "(" term ("," term)* ")" -> predicate
          | PRED                -> predicate

    term: LOWER

    _IFF: "<->" | "↔"
    _IMP: "->" | "→"
    _OR: "|" | "∨"
    _AND: "&" | "∧"
    _NOT: "~" | "¬"
    _FORALL: "forall" | "∀"
    _EXISTS: "exists" | "∃"
    PRED: /[A-Z][A-Za-z0-9_]*/
    LOWER: /[a-z][0-9]*/

    %import common.WS
    %ignore WS
"""


class PdTransformer(FormulaTransformer):
    """Builds Pd trees, checking quantified names and predicate arities"""

    def __init__(self, strict_arity: bool = True):
        super().__init__()
        self.strict_arity = strict_arity
        self.arities: Dict[str, int] = {}

    def term(self, children):
        return make_term(str(children[0]))

    def predicate(self, children):
        name = str(children[0])
        args: Tuple = tuple(children[1:])
        if self.strict_arity:
            expected = self.arities.setdefault(name, len(args))
            if expected != len(args):
                raise ArityMismatch(name, expected, len(args))
        return Pred(name, args)

    def universal(self, children):
        return Forall(self._bound(children[0]), children[1])

    def existential(self, children):
        return Exists(self._bound(children[0]), children[1])

    @staticmethod
    def _bound(token) -> Var:
        name = str(token)
        if not is_variable_name(name):
            raise QuantifierOverConstant(name)
        return Var(name)


class PdParser(FormulaParser):
    GRAMMAR = PD_GRAMMAR

    def make_transformer(self, strict_arity: bool = True, **options: Any) -> Transformer:
        return PdTransformer(strict_arity)


def parse_pd(text: str, strict_arity: bool = True) -> Formula:
    """
    Parse a Pd formula.

    Args:
        text: Formula text using "forall x" / "exists x" (or the symbols)
        strict_arity: Reject a predicate letter used at two arities

    Raises:
        ParseError, ArityMismatch, QuantifierOverConstant
    """
    return parser_for(PdParser).parse(text, strict_arity=strict_arity)


def print_pd(f: Formula) -> str:
    """Atomic form with quantifiers written as "forall x " / "exists x " prefixes"""
    return print_atomic(f)
