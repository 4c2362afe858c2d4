"""
Data structures for Hilbert-style proofs
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Optional, Tuple

from logickernel.core.models import Formula, Implies, Not


class RejectReason(Enum):
    NOT_PREMISE = "NotPremise"
    BAD_AXIOM_INSTANCE = "BadAxiomInstance"
    BAD_MP_SHAPE = "BadMpShape"
    FORWARD_REFERENCE = "ForwardReference"
    UNKNOWN_LEMMA = "UnknownLemma"
    EMPTY_PROOF = "EmptyProof"
    SIDE_CONDITION_VIOLATION = "SideConditionViolation"
    NOT_IN_PD_PRIME = "NotInPdPrime"


class Justification:
    """Reason column of a proof step"""

    __slots__ = ()

    def cites(self) -> Tuple[int, ...]:
        """Earlier step numbers this justification refers to"""
        return ()

    def renumber(self, mapping: Dict[int, int]) -> "Justification":
        return self

    def axiom_formula(self) -> Optional[Formula]:
        """The axiom instance, for axiom justifications"""
        return None


@dataclass(frozen=True)
class Premise(Justification):
    pass


@dataclass(frozen=True)
class AxiomP1(Justification):
    """A -> (B -> A)"""
    a: Formula
    b: Formula

    def axiom_formula(self) -> Formula:
        return Implies(self.a, Implies(self.b, self.a))


@dataclass(frozen=True)
class AxiomP2(Justification):
    """(A -> (B -> C)) -> ((A -> B) -> (A -> C))"""
    a: Formula
    b: Formula
    c: Formula

    def axiom_formula(self) -> Formula:
        a, b, c = self.a, self.b, self.c
        return Implies(Implies(a, Implies(b, c)), Implies(Implies(a, b), Implies(a, c)))


@dataclass(frozen=True)
class AxiomP3(Justification):
    """((~A) -> (~B)) -> (B -> A)"""
    a: Formula
    b: Formula

    def axiom_formula(self) -> Formula:
        return Implies(Implies(Not(self.a), Not(self.b)), Implies(self.b, self.a))


@dataclass(frozen=True)
class MP(Justification):
    """Modus ponens from steps i and j, in either order"""
    i: int
    j: int

    def cites(self) -> Tuple[int, ...]:
        return (self.i, self.j)

    def renumber(self, mapping: Dict[int, int]) -> Justification:
        return MP(mapping[self.i], mapping[self.j])


@dataclass(frozen=True)
class HS(Justification):
    """Hypothetical syllogism: X -> Y and Y -> Z give X -> Z"""
    i: int
    j: int

    def cites(self) -> Tuple[int, ...]:
        return (self.i, self.j)

    def renumber(self, mapping: Dict[int, int]) -> Justification:
        return HS(mapping[self.i], mapping[self.j])


@dataclass(frozen=True)
class Lemma(Justification):
    """Instance of a named theorem; instantiation pairs map formula variables to formulas"""
    name: str
    instantiation: Tuple[Tuple[str, Formula], ...] = ()

    @property
    def mapping(self) -> Dict[str, Formula]:
        return dict(self.instantiation)


@dataclass(frozen=True)
class Step:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Proof:
    """Numbered steps (1-based) and the premises they may cite"""
    premises: Tuple[Formula, ...]
    steps: Tuple[Step, ...]

    @property
    def conclusion(self) -> Formula:
        return self.steps[-1].formula

    def __len__(self) -> int:
        return len(self.steps)

    def step(self, k: int) -> Step:
        return self.steps[k - 1]

    def restricted_to(self, premises: Iterable[Formula]) -> "Proof":
        return Proof(tuple(premises), self.steps)

    def uses_lemmas(self) -> bool:
        return any(isinstance(s.justification, (Lemma, HS)) for s in self.steps)


@dataclass(frozen=True)
class ProofVerdict:
    accepted: bool
    step: Optional[int] = None
    reason: Optional[RejectReason] = None
    used_premises: Tuple[Formula, ...] = ()
    detail: str = ""

    def __str__(self) -> str:
        if self.accepted:
            return "accepted"
        why = self.reason.value if self.reason is not None else self.detail
        return f"rejected at step {self.step}: {why}"
