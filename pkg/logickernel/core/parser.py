"""
Lark grammar and transformer for propositional formulas
"""

from typing import Any, Dict, Optional

from lark import Lark, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from logickernel.core.models import And, Atom, Formula, Iff, Implies, Not, Or
from logickernel.errors import KernelError, ParseError

# Precedence, loosest first: <->, -> (right associative), |, &, ~.
# Unicode connectives are accepted as aliases.
PROP_GRAMMAR = r"""
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
          | "(" iff ")"
          | ATOM                -> atom

    _IFF: "<->" | "↔"
    _IMP: "->" | "→"
    _OR: "|" | "∨"
    _AND: "&" | "∧"
    _NOT: "~" | "¬"
    ATOM: /[A-Z][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


class FormulaTransformer(Transformer):
    """Builds formula trees from the parse tree"""

    def atom(self, children):
        return Atom(str(children[0]))

    def negation(self, children):
        return Not(children[0])

    def conjunction(self, children):
        return And(children[0], children[1])

    def disjunction(self, children):
        return Or(children[0], children[1])

    def implication(self, children):
        return Implies(children[0], children[1])

    def biconditional(self, children):
        return Iff(children[0], children[1])


class FormulaParser:
    """Parses formula text; rejects malformed input without repair"""

    GRAMMAR = PROP_GRAMMAR

    def __init__(self):
        self._lark = Lark(self.GRAMMAR, parser="lalr", maybe_placeholders=False)

    def make_transformer(self, **options: Any) -> Transformer:
        return FormulaTransformer()

    def parse(self, text: str, **options: Any) -> Formula:
        """
        Parse one formula.

        Args:
            text: Formula string, outermost parentheses optional

        Returns:
            The formula tree denoted by the text
        """
        try:
            tree = self._lark.parse(text)
        except UnexpectedInput as e:
            raise ParseError(_error_position(e, text), _error_message(e)) from None
        try:
            return self.make_transformer(**options).transform(tree)
        except VisitError as e:
            if isinstance(e.orig_exc, KernelError):
                raise e.orig_exc from None
            raise


def _error_position(e: UnexpectedInput, text: str) -> int:
    if isinstance(e, UnexpectedEOF):
        return len(text)
    position = getattr(e, "pos_in_stream", None)
    if position is None or position < 0:
        return len(text)
    return position


def _error_message(e: UnexpectedInput) -> str:
    if isinstance(e, UnexpectedCharacters):
        return f"unexpected character {e.char!r}"
    if isinstance(e, UnexpectedEOF):
        return "unexpected end of input"
    token = getattr(e, "token", None)
    if token is not None and token.type == "$END":
        return "unexpected end of input"
    return f"unexpected token {str(token)!r}"


_parsers: Dict[type, FormulaParser] = {}


def parser_for(kind: type) -> FormulaParser:
    """Shared parser instance per parser class"""
    parser: Optional[FormulaParser] = _parsers.get(kind)
    if parser is None:
        parser = kind()
        _parsers[kind] = parser
    return parser


def parse(text: str) -> Formula:
    """Parse a propositional formula"""
    return parser_for(FormulaParser).parse(text)
