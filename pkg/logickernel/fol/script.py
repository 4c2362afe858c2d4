"""
Proof scripts for Pd': the propositional format plus P4, P5 and GEN reasons
"""

import re
from typing import Callable, List, Optional, Sequence, Tuple

from logickernel.core.models import Formula
from logickernel.errors import ParseError
from logickernel.fol.models import Var, is_variable_name, make_term
from logickernel.fol.parser import PdParser
from logickernel.fol.proofs import AxiomP4, AxiomP5, Gen
from logickernel.proofs.models import Justification, Proof
from logickernel.proofs.script import ProofScript

GEN = re.compile(r"^GEN\((\d+),\s*([a-z][0-9]*)\)$")
NAME = re.compile(r"^[a-z][0-9]*$")


class PdProofScript(ProofScript):
    parser_kind = PdParser

    def __init__(self, strict_arity: bool = True):
        super().__init__(strict_arity=strict_arity)

    def format_reason(self, j: Justification) -> str:
        if isinstance(j, AxiomP4):
            return f"P4[{self.format_formula(j.a)};{self.format_formula(j.b)};{j.x}]"
        if isinstance(j, AxiomP5):
            return f"P5[{self.format_formula(j.a)};{j.x};{j.lam}]"
        if isinstance(j, Gen):
            return f"GEN({j.i},{j.x})"
        return super().format_reason(j)

    def parse_axiom(self, name: str, texts: Sequence[str], offset: int) -> Justification:
        if name == "P4":
            if len(texts) != 3:
                raise ParseError(offset, "P4 takes A;B;x")
            a, b = (self.parse_formula(t, offset) for t in texts[:2])
            return AxiomP4(a, b, self._variable(texts[2], offset))
        if name == "P5":
            if len(texts) != 3:
                raise ParseError(offset, "P5 takes A;x;term")
            lam = texts[2].strip()
            if NAME.match(lam) is None:
                raise ParseError(offset, f"bad term {lam!r}")
            return AxiomP5(self.parse_formula(texts[0], offset), self._variable(texts[1], offset), make_term(lam))
        return super().parse_axiom(name, texts, offset)

    def extra_reasons(self) -> List[Tuple["re.Pattern", Callable[["re.Match", int], Justification]]]:
        return [(GEN, self._gen)]

    def _gen(self, match: "re.Match", offset: int) -> Justification:
        return Gen(int(match.group(1)), self._variable(match.group(2), offset))

    @staticmethod
    def _variable(text: str, offset: int) -> Var:
        name = text.strip()
        if not is_variable_name(name):
            raise ParseError(offset, f"{name!r} is not a variable")
        return Var(name)


def format_pd_proof(proof: Proof) -> str:
    return PdProofScript().format(proof)


def parse_pd_proof(text: str, premises: Optional[Sequence[Formula]] = None,
                   strict_arity: bool = True) -> Proof:
    """
    Parse a Pd' script.

    Args:
        text: One "<n>. <formula> ; <reason>" line per step
        premises: Premise set; defaults to the formulas marked premise
        strict_arity: Reject a predicate letter used at two arities within one formula
    """
    return PdProofScript(strict_arity).parse(text, premises)
