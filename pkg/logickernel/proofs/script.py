"""
Line-based proof script format: "<n>. <formula> ; <reason>"
"""

import re
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from logickernel.core.models import Formula
from logickernel.core.parser import FormulaParser, parser_for
from logickernel.core.printer import print_atomic
from logickernel.errors import ParseError
from logickernel.proofs.axioms import ARITY, axiom_justification
from logickernel.proofs.models import (
    HS, MP, AxiomP1, AxiomP2, AxiomP3, Justification, Lemma, Premise, Proof, Step,
)

LINE = re.compile(r"^\s*(\d+)\.\s+(.*?)\s+;\s+(.*)$")
AXIOM = re.compile(r"^(P\d)\[(.*)\]$")
CITATION = re.compile(r"^(MP|HS)\((\d+),\s*(\d+)\)$")
LEMMA = re.compile(r"^LEMMA\s+([A-Za-z0-9_-]+)(?:\[(.*)\])?$")
BINDING = re.compile(r"^\s*([A-Z][A-Za-z0-9_]*)\s*:=\s*(.+?)\s*$")


class ProofScript:
    """
    Formats and parses proof scripts. Subclasses add rules by overriding
    format_reason, parse_axiom and extra_reasons.
    """

    parser_kind = FormulaParser

    def __init__(self, **parse_options):
        self.parse_options = parse_options

    # formatting

    def format(self, proof: Proof) -> str:
        lines = [
            f"{k}. {self.format_formula(step.formula)} ; {self.format_reason(step.justification)}"
            for k, step in enumerate(proof.steps, start=1)
        ]
        return "\n".join(lines) + "\n"

    def format_formula(self, f: Formula) -> str:
        return print_atomic(f)

    def format_reason(self, j: Justification) -> str:
        if isinstance(j, Premise):
            return "premise"
        if isinstance(j, AxiomP1):
            return self._axiom("P1", j.a, j.b)
        if isinstance(j, AxiomP2):
            return self._axiom("P2", j.a, j.b, j.c)
        if isinstance(j, AxiomP3):
            return self._axiom("P3", j.a, j.b)
        if isinstance(j, MP):
            return f"MP({j.i},{j.j})"
        if isinstance(j, HS):
            return f"HS({j.i},{j.j})"
        if isinstance(j, Lemma):
            if not j.instantiation:
                return f"LEMMA {j.name}"
            bindings = ",".join(f"{name}:={self.format_formula(f)}" for name, f in j.instantiation)
            return f"LEMMA {j.name}[{bindings}]"
        raise TypeError(f"no script form for {type(j).__name__}")

    def _axiom(self, name: str, *parts: Formula) -> str:
        return f"{name}[{';'.join(self.format_formula(p) for p in parts)}]"

    # parsing

    def parse(self, text: str, premises: Optional[Sequence[Formula]] = None) -> Proof:
        steps: List[Step] = []
        offset = 0
        for raw in text.splitlines(keepends=True):
            line = raw.strip()
            if line and not line.startswith("#"):
                steps.append(self._parse_line(raw.rstrip("\r\n"), offset, len(steps) + 1))
            offset += len(raw)
        if premises is None:
            found: Dict[Formula, None] = {}
            for step in steps:
                if isinstance(step.justification, Premise):
                    found.setdefault(step.formula, None)
            premises = list(found)
        return Proof(tuple(premises), tuple(steps))

    def _parse_line(self, line: str, offset: int, expected: int) -> Step:
        match = LINE.match(line)
        if match is None:
            raise ParseError(offset, "expected '<n>. <formula> ; <reason>'")
        number = int(match.group(1))
        if number != expected:
            raise ParseError(offset + match.start(1), f"step {number} out of sequence, expected {expected}")
        formula = self.parse_formula(match.group(2), offset + match.start(2))
        reason = self.parse_reason(match.group(3).strip(), offset + match.start(3))
        return Step(formula, reason)

    def parse_formula(self, text: str, offset: int) -> Formula:
        try:
            return parser_for(self.parser_kind).parse(text, **self.parse_options)
        except ParseError as e:
            raise ParseError(offset + e.position, e.message) from None

    def parse_reason(self, text: str, offset: int) -> Justification:
        if text.lower() == "premise":
            return Premise()
        match = CITATION.match(text)
        if match:
            kind = MP if match.group(1) == "MP" else HS
            return kind(int(match.group(2)), int(match.group(3)))
        match = LEMMA.match(text)
        if match:
            return Lemma(match.group(1), self._bindings(match.group(2), offset))
        match = AXIOM.match(text)
        if match:
            return self.parse_axiom(match.group(1), split_top_level(match.group(2), ";"), offset)
        for pattern, handler in self.extra_reasons():
            match = pattern.match(text)
            if match:
                return handler(match, offset)
        raise ParseError(offset, f"unknown reason {text!r}")

    def parse_axiom(self, name: str, texts: Sequence[str], offset: int) -> Justification:
        if name not in ARITY:
            raise ParseError(offset, f"unknown axiom schema {name}")
        parts = [self.parse_formula(t, offset) for t in texts]
        return axiom_justification(name, parts)

    def extra_reasons(self) -> List[Tuple["re.Pattern", Callable[["re.Match", int], Justification]]]:
        return []

    def _bindings(self, text: Optional[str], offset: int) -> Tuple[Tuple[str, Formula], ...]:
        if not text:
            return ()
        pairs = []
        for item in split_top_level(text, ","):
            match = BINDING.match(item)
            if match is None:
                raise ParseError(offset, f"bad lemma binding {item!r}")
            pairs.append((match.group(1), self.parse_formula(match.group(2), offset)))
        return tuple(sorted(pairs, key=lambda pair: pair[0]))


def format_proof(proof: Proof) -> str:
    """
    Render a proof as a script.

    Returns:
        One line per step, e.g. "5. P -> P ; MP(3,4)"
    """
    return ProofScript().format(proof)


def parse_proof(text: str, premises: Optional[Sequence[Formula]] = None) -> Proof:
    """Parse a script; without explicit premises, the steps marked premise supply them"""
    return ProofScript().parse(text, premises)


def split_top_level(text: str, separator: str) -> List[str]:
    """Split on separator outside parentheses"""
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == separator and depth == 0:
            parts.append(text[start:k])
            start = k + 1
    parts.append(text[start:])
    return parts
